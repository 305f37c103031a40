#include "depcat/instances.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include "depcat/serialize.hpp"
#include "depcat/suites.hpp"

namespace depcat {

RingTables ring_mod(std::size_t modulus) {
  if (modulus == 0) throw NotARing("modulus must be positive");
  RingTables R;
  R.n = modulus;
  R.add.resize(modulus * modulus);
  R.mul.resize(modulus * modulus);
  for (std::uint32_t a = 0; a < modulus; ++a)
    for (std::uint32_t b = 0; b < modulus; ++b) {
      R.add[a * modulus + b] = static_cast<std::uint32_t>((a + b) % modulus);
      R.mul[a * modulus + b] = static_cast<std::uint32_t>((a * b) % modulus);
    }
  R.zero = 0;
  R.one = modulus == 1 ? 0 : 1;
  return R;
}

RingTables ring_from_tables(std::vector<std::vector<std::uint32_t>> add,
                            std::vector<std::vector<std::uint32_t>> mul) {
  const std::size_t n = add.size();
  if (n == 0 || mul.size() != n) throw NotARing("tables must be square and same-sized");
  RingTables R;
  R.n = n;
  for (const auto& rows : {std::cref(add), std::cref(mul)})
    for (const auto& row : rows.get()) {
      if (row.size() != n) throw NotARing("tables must be square");
      for (auto v : row)
        if (v >= n) throw NotARing("table entry out of range");
    }
  R.add.resize(n * n);
  R.mul.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      R.add[i * n + j] = add[i][j];
      R.mul[i * n + j] = mul[i][j];
    }

  auto scan_unit = [&](const std::vector<std::uint32_t>& t) -> std::uint32_t {
    for (std::uint32_t e = 0; e < n; ++e) {
      bool ok = true;
      for (std::uint32_t a = 0; a < n && ok; ++a)
        ok = (t[e * n + a] == a && t[a * n + e] == a);
      if (ok) return e;
    }
    return kNone;
  };
  R.zero = scan_unit(R.add);
  if (R.zero == kNone) throw NotARing("no additive unit");
  R.one = scan_unit(R.mul);
  if (R.one == kNone) throw NotARing("no multiplicative unit");
  for (std::uint32_t a = 0; a < n; ++a) {
    bool has_inverse = false;
    for (std::uint32_t b = 0; b < n && !has_inverse; ++b)
      has_inverse = (R.plus(a, b) == R.zero);
    if (!has_inverse) throw NotARing("no additive inverse for element " + std::to_string(a));
  }
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) {
      if (R.plus(a, b) != R.plus(b, a)) throw NotARing("addition not commutative");
      if (R.times(a, b) != R.times(b, a)) throw NotARing("multiplication not commutative");
      for (std::uint32_t c = 0; c < n; ++c) {
        if (R.plus(R.plus(a, b), c) != R.plus(a, R.plus(b, c)))
          throw NotARing("addition not associative");
        if (R.times(R.times(a, b), c) != R.times(a, R.times(b, c)))
          throw NotARing("multiplication not associative");
        if (R.times(a, R.plus(b, c)) != R.plus(R.times(a, b), R.times(a, c)))
          throw NotARing("multiplication does not distribute over addition");
      }
    }
  return R;
}

FinCat ring_category(const RingTables& R) {
  std::vector<Arrow> arrows(R.n, Arrow{0, 0});
  std::vector<std::string> names;
  for (std::uint32_t a = 0; a < R.n; ++a) names.push_back(std::to_string(a));
  std::vector<CompTriple> comp;
  for (std::uint32_t g = 0; g < R.n; ++g)
    for (std::uint32_t f = 0; f < R.n; ++f) comp.push_back(CompTriple{g, f, R.plus(g, f)});
  return FinCat({"∗"}, std::move(arrows), std::move(names), {R.zero}, comp);
}

FamStruct ring_fam(const RingTables& R, const FinCat& C) {
  const std::size_t n = R.n;
  FamStruct F;
  F.fam_of.resize(1);
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) {
      const FamArrowId id = static_cast<FamArrowId>(a * n + b);
      F.owner.push_back(0);
      F.fam_of[0].push_back(id);
      F.names.push_back("(" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
  F.restriction.assign(n * n, std::vector<FamArrowId>(C.num_arrows(), kNone));
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      for (std::uint32_t c = 0; c < n; ++c)
        F.restriction[a * n + b][c] = R.plus(c, a) * n + R.plus(c, b);
  return F;
}

SigmaStruct ring_sigma(const RingTables& R, const FinCat& C, const FamStruct& F) {
  const std::size_t n = R.n;
  SigmaStruct S;
  S.sigma_obj.assign(F.size(), 0);
  S.pr1.resize(F.size());
  S.sigma_arr.assign(F.size(), std::vector<ArrowId>(C.num_arrows(), kNone));
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) {
      const FamArrowId lam = a * n + b;
      S.pr1[lam] = R.times(a, b);
      for (std::uint32_t c = 0; c < n; ++c)
        S.sigma_arr[lam][c] = R.times(c, R.plus(R.one, R.plus(c, R.plus(b, a))));
    }
  return S;
}

FinCat discrete_category(std::size_t n) {
  std::vector<std::string> object_names;
  std::vector<Arrow> arrows;
  std::vector<std::string> arrow_names;
  std::vector<ArrowId> identities;
  std::vector<CompTriple> comp;
  for (std::uint32_t a = 0; a < n; ++a) {
    object_names.push_back(std::to_string(a));
    arrows.push_back(Arrow{a, a});
    arrow_names.push_back("1_" + std::to_string(a));
    identities.push_back(a);
    comp.push_back(CompTriple{a, a, a});
  }
  return FinCat(std::move(object_names), std::move(arrows), std::move(arrow_names),
                std::move(identities), comp);
}

FinCat poset_category(std::size_t n,
                      const std::vector<std::pair<std::uint32_t, std::uint32_t>>& le) {
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) rel[i][i] = true;
  for (auto [i, j] : le) {
    if (i >= n || j >= n) throw InvalidSpec("relation pair out of range");
    rel[i][j] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (rel[i][k] && rel[k][j]) rel[i][j] = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rel[i][j] && rel[j][i])
        throw InvalidSpec("relation is not antisymmetric at (" + std::to_string(i) + "," +
                          std::to_string(j) + ")");

  std::vector<std::string> object_names;
  for (std::size_t a = 0; a < n; ++a) object_names.push_back(std::to_string(a));
  std::vector<Arrow> arrows;
  std::vector<std::string> arrow_names;
  std::vector<ArrowId> identities(n, kNone);
  std::vector<std::vector<ArrowId>> arrow_of(n, std::vector<ArrowId>(n, kNone));
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) {
      if (!rel[i][j]) continue;
      const ArrowId id = static_cast<ArrowId>(arrows.size());
      arrows.push_back(Arrow{i, j});
      arrow_names.push_back(std::to_string(i) + "≤" + std::to_string(j));
      arrow_of[i][j] = id;
      if (i == j) identities[i] = id;
    }
  std::vector<CompTriple> comp;
  for (ArrowId g = 0; g < arrows.size(); ++g)
    for (ArrowId f = 0; f < arrows.size(); ++f)
      if (arrows[f].cod == arrows[g].dom)
        comp.push_back(CompTriple{g, f, arrow_of[arrows[f].dom][arrows[g].cod]});
  return FinCat(std::move(object_names), std::move(arrows), std::move(arrow_names),
                std::move(identities), comp);
}

FinCat chain_category(std::size_t n) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> le;
  for (std::uint32_t i = 0; i + 1 < n; ++i) le.emplace_back(i, i + 1);
  return poset_category(n, le);
}

FinCat monoid_category(const std::vector<std::vector<std::uint32_t>>& table) {
  const std::size_t n = table.size();
  if (n == 0) throw InvalidSpec("monoid table must be non-empty");
  for (const auto& row : table) {
    if (row.size() != n) throw InvalidSpec("monoid table must be square");
    for (auto v : row)
      if (v >= n) throw InvalidSpec("monoid table entry out of range");
  }
  ArrowId unit = kNone;
  for (std::uint32_t e = 0; e < n && unit == kNone; ++e) {
    bool ok = true;
    for (std::uint32_t a = 0; a < n && ok; ++a) ok = (table[e][a] == a && table[a][e] == a);
    if (ok) unit = e;
  }
  if (unit == kNone) throw InvalidSpec("monoid table has no unit");
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      for (std::uint32_t c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw InvalidSpec("monoid table not associative");

  std::vector<Arrow> arrows(n, Arrow{0, 0});
  std::vector<std::string> names;
  for (std::uint32_t a = 0; a < n; ++a) names.push_back("m" + std::to_string(a));
  std::vector<CompTriple> comp;
  for (std::uint32_t g = 0; g < n; ++g)
    for (std::uint32_t f = 0; f < n; ++f) comp.push_back(CompTriple{g, f, table[g][f]});
  return FinCat({"∗"}, std::move(arrows), std::move(names), {unit}, comp);
}

namespace {

Pr2Table trivial_pr2(const FamStruct& F, const SigmaStruct& S, const DepStruct& D) {
  Pr2Table pr2(F.size(), kNone);
  for (FamArrowId lam = 0; lam < F.size(); ++lam) {
    const FamArrowId mu = F.restrict_raw(lam, S.pr1[lam]);
    if (D.dep_of[mu].size() != 1)
      throw InvalidSpec("trivial pr₂ needs singleton dependent-arrow sets");
    pr2[lam] = D.dep_of[mu].front();
  }
  return pr2;
}

DepArrowId dep_with_carrier(const DepStruct& D, FamArrowId mu, ArrowId carrier) {
  for (DepArrowId phi : D.dep_of[mu])
    if (D.carrier[phi] == carrier) return phi;
  throw InvalidSpec("no dependent arrow with the requested carrier");
}

// pr₂^{a,b} := pr_b of the product witness (Ex-exds2 style, over constant dep).
Pr2Table product_pr2(const FinCat& C, const FamStruct& F, const SigmaStruct& S,
                     const DepStruct& D) {
  const std::size_t n = C.num_objects();
  Pr2Table pr2(F.size(), kNone);
  for (FamArrowId lam = 0; lam < F.size(); ++lam) {
    const ObjectId a = F.owner[lam];
    const ObjectId b = static_cast<ObjectId>(lam % n);
    auto w = binary_product(C, a, b);
    if (!w) throw MissingProduct(C.object_name(a) + " × " + C.object_name(b));
    pr2[lam] = dep_with_carrier(D, F.restrict_raw(lam, S.pr1[lam]), w->pr_right);
  }
  return pr2;
}

// pr₂ := a left-absorbing element (z∘f = z for all f), over constant dep and
// trivial sigma on a one-object category.
Pr2Table absorbing_pr2(const FinCat& C, const FamStruct& F, const SigmaStruct& S,
                       const DepStruct& D) {
  ArrowId z = kNone;
  for (ArrowId cand = 0; cand < C.num_arrows() && z == kNone; ++cand) {
    bool ok = true;
    for (ArrowId f = 0; f < C.num_arrows() && ok; ++f)
      ok = C.composable(cand, f) && C.compose_raw(cand, f) == cand;
    if (ok) z = cand;
  }
  if (z == kNone) throw InvalidSpec("no left-absorbing element for pr₂");
  Pr2Table pr2(F.size(), kNone);
  for (FamArrowId lam = 0; lam < F.size(); ++lam)
    pr2[lam] = dep_with_carrier(D, F.restrict_raw(lam, S.pr1[lam]), z);
  return pr2;
}

}  // namespace

StructureDocument generate(const InstanceSpec& spec, bool self_check) {
  StructureDocument doc;
  doc.kind = spec.kind;
  std::string fam = spec.fam, sigma = spec.sigma, dep = spec.dep, pr2 = spec.pr2;
  std::optional<FinSetSkeleton> sk;
  std::optional<FinSetFam> fsf;
  std::optional<RingTables> ring;

  if (spec.kind == "file") {
    std::ifstream in(spec.path);
    if (!in) throw InvalidSpec("cannot open " + spec.path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return deserialize(buffer.str());
  }

  if (spec.kind == "finset") {
    if (fam.empty()) fam = "sets";
    sk = finset_skeleton(spec.max_object_size);
    doc.category = sk->cat;
  } else if (spec.kind == "ring") {
    ring = spec.add.empty() ? ring_mod(spec.modulus) : ring_from_tables(spec.add, spec.mul);
    if (fam.empty()) fam = "ring";
    doc.category = ring_category(*ring);
  } else if (spec.kind == "discrete") {
    if (fam.empty()) fam = "constant";
    doc.category = discrete_category(spec.objects);
  } else if (spec.kind == "poset") {
    if (fam.empty()) fam = "constant";
    doc.category =
        spec.relation.empty() ? chain_category(spec.chain) : poset_category(spec.objects, spec.relation);
  } else if (spec.kind == "monoid") {
    if (fam.empty()) fam = "constant";
    doc.category = monoid_category(spec.table);
  } else {
    throw InvalidSpec("unknown instance kind '" + spec.kind + "'");
  }

  // pr₂ choices pin the dep (and sigma) constructions they live over.
  if (pr2 == "absorbing" && dep.empty()) dep = "constant";
  if (pr2 == "canonical" && dep.empty()) dep = "sections";
  if (pr2 == "constant") {
    if (sigma.empty()) sigma = "product";
    if (dep.empty()) dep = "constant";
  }
  // Kind-consistent layer defaults.
  if (fam == "sets") {
    if (sigma.empty()) sigma = "sets";
    if (dep.empty()) dep = "sets";
    if (pr2.empty()) pr2 = "sets";
  } else if (fam == "ring") {
    if (sigma.empty()) sigma = "ring";
    if (dep.empty()) dep = "sections";
    if (pr2.empty()) pr2 = "canonical";
  } else if (fam == "constant" && spec.kind != "finset") {
    if (sigma.empty()) sigma = "trivial";
    if (dep.empty()) dep = "trivial";
    if (pr2.empty()) pr2 = "trivial";
  } else if (fam == "constant") {  // finset constant stack
    if (sigma.empty()) sigma = "product";
    if (dep.empty()) dep = "constant";
    if (pr2.empty()) pr2 = "constant";
  }
  if (fam.empty() || fam == "none") {
    doc.fam.reset();
    fam = "none";
    sigma = dep = pr2 = "none";
  }

  if (fam == "sets") {
    fsf = finset_fam(*sk, spec.fiber_cap);
    doc.fam = fsf->fam;
    doc.finset = FinSetData{sk->max_size(), fsf->requested_cap, fsf->effective_cap, fsf->fibers};
  } else if (fam == "constant") {
    doc.fam = constant_fam(doc.category);
  } else if (fam == "coslice") {
    doc.fam = coslice_fam(doc.category);
  } else if (fam == "topos") {
    if (!sk) throw InvalidSpec("topos families need the finset kind");
    doc.fam = topos_fam(*sk, spec.budget);
  } else if (fam == "ring") {
    doc.fam = ring_fam(*ring, doc.category);
  } else if (fam != "none") {
    throw InvalidSpec("unknown fam layer '" + fam + "'");
  }
  if (spec.kind == "finset" && !doc.finset)
    doc.finset = FinSetData{sk->max_size(), spec.fiber_cap, 0, {}};

  if (sigma.empty()) sigma = "none";
  if (sigma == "sets") {
    doc.sigma = finset_sigma(*sk, *fsf);
  } else if (sigma == "product") {
    doc.sigma = product_sigma(doc.category, *doc.fam);
  } else if (sigma == "ring") {
    doc.sigma = ring_sigma(*ring, doc.category, *doc.fam);
  } else if (sigma == "trivial") {
    doc.sigma = trivial_sigma(doc.category, *doc.fam);
  } else if (sigma != "none") {
    throw InvalidSpec("unknown sigma layer '" + sigma + "'");
  }

  if (dep.empty()) dep = "none";
  if (dep == "sets") {
    doc.dep = finset_dep(*sk, *fsf);
  } else if (dep == "constant") {
    doc.dep = constant_dep(doc.category, *doc.fam);
  } else if (dep == "sections") {
    doc.dep = global_sections_dep(doc.category, *doc.fam, *doc.sigma);
  } else if (dep == "trivial") {
    doc.dep = trivial_dep(doc.category, *doc.fam);
  } else if (dep != "none") {
    throw InvalidSpec("unknown dep layer '" + dep + "'");
  }

  if (pr2.empty()) pr2 = "none";
  if (pr2 == "sets") {
    doc.pr2 = finset_pr2(*fsf, *doc.sigma, *doc.dep);
  } else if (pr2 == "constant") {
    doc.pr2 = product_pr2(doc.category, *doc.fam, *doc.sigma, *doc.dep);
  } else if (pr2 == "canonical") {
    CanonicalDepSigma cds = canonical_pr2(doc.category, *doc.fam, *doc.sigma);
    doc.dep = std::move(cds.dep);
    doc.pr2 = std::move(cds.pr2);
  } else if (pr2 == "trivial") {
    doc.pr2 = trivial_pr2(*doc.fam, *doc.sigma, *doc.dep);
  } else if (pr2 == "absorbing") {
    doc.pr2 = absorbing_pr2(doc.category, *doc.fam, *doc.sigma, *doc.dep);
  } else if (pr2 != "none") {
    throw InvalidSpec("unknown pr2 layer '" + pr2 + "'");
  }

  doc.fam_kind = fam;
  doc.sigma_kind = sigma;
  doc.dep_kind = dep;
  doc.pr2_kind = pr2;
  {
    std::ostringstream meta;
    meta << spec.kind;
    if (spec.kind == "finset") {
      meta << " max=" << spec.max_object_size << " cap=" << spec.fiber_cap;
      if (doc.finset && doc.finset->effective_cap != spec.fiber_cap)
        meta << " effective_cap=" << doc.finset->effective_cap;
    }
    if (spec.kind == "ring") meta << " n=" << (ring ? ring->n : spec.modulus);
    meta << " fam=" << fam << " sigma=" << sigma << " dep=" << dep << " pr2=" << pr2;
    doc.meta = meta.str();
  }

  if (self_check) {
    const auto reports = run_suites(doc, applicable_suites(doc), spec.budget);
    for (const auto& r : reports)
      for (const auto& e : r.entries)
        if (!e.passed)
          throw InvalidSpec("generated document fails " + e.law + ": " + e.witness);
  }
  return doc;
}

}  // namespace depcat
