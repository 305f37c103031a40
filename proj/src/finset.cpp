#include "depcat/finset.hpp"

#include <algorithm>
#include <numeric>

namespace depcat {

namespace {

std::string table_name(ObjectId dom, ObjectId cod, const std::vector<std::uint32_t>& t) {
  std::string s = "[";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t[i]);
  }
  s += "]:" + std::to_string(dom) + "→" + std::to_string(cod);
  return s;
}

// Enumerates tuples of the given length with entries < base, lexicographically.
bool next_tuple(std::vector<std::uint32_t>& t, std::uint32_t base) {
  for (std::size_t i = t.size(); i-- > 0;) {
    if (++t[i] < base) return true;
    t[i] = 0;
  }
  return false;
}

// As next_tuple but with a per-position base (mixed radix).
bool next_mixed(std::vector<std::uint32_t>& t, const std::vector<std::uint32_t>& base) {
  for (std::size_t i = t.size(); i-- > 0;) {
    if (++t[i] < base[i]) return true;
    t[i] = 0;
  }
  return false;
}

}  // namespace

FinSetSkeleton finset_skeleton(std::size_t max_size) {
  FinSetSkeleton sk;
  const std::size_t n = max_size + 1;
  std::vector<std::string> object_names;
  for (std::size_t a = 0; a < n; ++a) object_names.push_back(std::to_string(a));

  std::vector<Arrow> arrows;
  std::vector<std::string> arrow_names;
  std::vector<ArrowId> identities(n, kNone);
  std::vector<std::vector<ArrowId>> block(n, std::vector<ArrowId>(n, kNone));
  for (ObjectId m = 0; m < n; ++m)
    for (ObjectId k = 0; k < n; ++k) {
      if (m > 0 && k == 0) continue;  // no functions m→0 for m > 0
      block[m][k] = static_cast<ArrowId>(arrows.size());
      std::vector<std::uint32_t> t(m, 0);
      while (true) {
        const ArrowId id = static_cast<ArrowId>(arrows.size());
        arrows.push_back(Arrow{m, k});
        arrow_names.push_back(table_name(m, k, t));
        sk.tables.push_back(t);
        bool is_id = (m == k);
        for (std::size_t i = 0; i < t.size() && is_id; ++i) is_id = (t[i] == i);
        if (is_id) identities[m] = id;
        if (m == 0 || !next_tuple(t, k)) break;
      }
    }
  // id of a table within its (m,k) block: the table read as a base-k numeral
  auto locate = [&](ObjectId m, ObjectId k, const std::vector<std::uint32_t>& t) {
    ArrowId ix = 0;
    for (std::uint32_t v : t) ix = ix * k + v;
    return block[m][k] + ix;
  };

  std::vector<CompTriple> comp;
  std::vector<std::uint32_t> t;
  for (ArrowId g = 0; g < arrows.size(); ++g)
    for (ArrowId f = 0; f < arrows.size(); ++f) {
      if (arrows[f].cod != arrows[g].dom) continue;
      t.assign(arrows[f].dom, 0);
      for (std::size_t i = 0; i < t.size(); ++i) t[i] = sk.tables[g][sk.tables[f][i]];
      comp.push_back(CompTriple{g, f, locate(arrows[f].dom, arrows[g].cod, t)});
    }
  sk.cat = FinCat(std::move(object_names), std::move(arrows), std::move(arrow_names),
                  std::move(identities), comp);
  return sk;
}

ArrowId FinSetSkeleton::arrow_of(ObjectId dom, ObjectId cod,
                                 const std::vector<std::uint32_t>& table) const {
  for (ArrowId f : cat.hom(dom, cod))
    if (tables[f] == table) return f;
  throw UnknownArrow("no function " + table_name(dom, cod, table));
}

FinSetFam finset_fam(const FinSetSkeleton& sk, std::size_t requested_cap) {
  FinSetFam F;
  F.requested_cap = requested_cap;
  // Larger caps cannot carry a total disjoint-union sigma on a full skeleton:
  // the constant map max→1 concentrates any fiber ≥ 2 past the largest object.
  F.effective_cap = std::min<std::size_t>(requested_cap, sk.max_size() >= 1 ? 1 : requested_cap);
  const std::size_t n = sk.cat.num_objects();
  F.fam.fam_of.resize(n);
  for (ObjectId I = 0; I < n; ++I) {
    std::vector<std::uint32_t> fib(I, 0);
    while (true) {
      const FamArrowId id = static_cast<FamArrowId>(F.fam.owner.size());
      F.fam.owner.push_back(I);
      F.fam.fam_of[I].push_back(id);
      F.fam.names.push_back(table_name(I, static_cast<ObjectId>(F.effective_cap + 1), fib));
      F.fibers.push_back(fib);
      if (I == 0 || !next_tuple(fib, static_cast<std::uint32_t>(F.effective_cap + 1))) break;
    }
  }
  F.fam.restriction.assign(F.fam.size(),
                           std::vector<FamArrowId>(sk.cat.num_arrows(), kNone));
  for (FamArrowId lam = 0; lam < F.fam.size(); ++lam)
    for (ArrowId f = 0; f < sk.cat.num_arrows(); ++f) {
      if (sk.cat.cod(f) != F.fam.owner[lam]) continue;
      std::vector<std::uint32_t> fib(sk.cat.dom(f));
      for (std::size_t j = 0; j < fib.size(); ++j) fib[j] = F.fibers[lam][sk.tables[f][j]];
      F.fam.restriction[lam][f] = F.fam_of(sk.cat.dom(f), fib);
    }
  return F;
}

FamArrowId FinSetFam::fam_of(ObjectId owner_obj, const std::vector<std::uint32_t>& fib) const {
  for (FamArrowId lam : fam.fam_of[owner_obj])
    if (fibers[lam] == fib) return lam;
  throw UnknownArrow("no family with those fibers over " + std::to_string(owner_obj));
}

SigmaStruct finset_sigma(const FinSetSkeleton& sk, const FinSetFam& F) {
  SigmaStruct S;
  const std::size_t nfam = F.fam.size();
  S.sigma_obj.resize(nfam);
  S.pr1.resize(nfam);
  S.sigma_arr.assign(nfam, std::vector<ArrowId>(sk.cat.num_arrows(), kNone));

  std::vector<std::vector<std::uint32_t>> offset(nfam);
  for (FamArrowId lam = 0; lam < nfam; ++lam) {
    const auto& fib = F.fibers[lam];
    std::uint32_t total = 0;
    offset[lam].resize(fib.size());
    for (std::size_t i = 0; i < fib.size(); ++i) {
      offset[lam][i] = total;
      total += fib[i];
    }
    if (total > sk.max_size())
      throw InvalidSpec("sigma object of " + F.fam.names[lam] + " exceeds the skeleton");
    S.sigma_obj[lam] = total;
    std::vector<std::uint32_t> pr1(total);
    for (std::size_t i = 0; i < fib.size(); ++i)
      for (std::uint32_t x = 0; x < fib[i]; ++x)
        pr1[offset[lam][i] + x] = static_cast<std::uint32_t>(i);
    S.pr1[lam] = sk.arrow_of(total, F.fam.owner[lam], pr1);
  }
  for (FamArrowId lam = 0; lam < nfam; ++lam)
    for (ArrowId f = 0; f < sk.cat.num_arrows(); ++f) {
      if (sk.cat.cod(f) != F.fam.owner[lam]) continue;
      const FamArrowId lam_f = F.fam.restriction[lam][f];
      std::vector<std::uint32_t> t(S.sigma_obj[lam_f]);
      const auto& fib_f = F.fibers[lam_f];
      for (std::size_t j = 0; j < fib_f.size(); ++j)
        for (std::uint32_t x = 0; x < fib_f[j]; ++x)
          t[offset[lam_f][j] + x] = offset[lam][sk.tables[f][j]] + x;
      S.sigma_arr[lam][f] = sk.arrow_of(S.sigma_obj[lam_f], S.sigma_obj[lam], t);
    }
  return S;
}

DepStruct finset_dep(const FinSetSkeleton& sk, const FinSetFam& F) {
  DepStruct D;
  D.dep_of.resize(F.fam.size());
  std::vector<std::vector<std::uint32_t>> choices;  // per dep id: the choice tuple
  std::map<std::pair<FamArrowId, std::vector<std::uint32_t>>, DepArrowId> lookup;
  for (FamArrowId lam = 0; lam < F.fam.size(); ++lam) {
    const auto& fib = F.fibers[lam];
    if (std::find(fib.begin(), fib.end(), 0u) != fib.end()) continue;  // empty product
    std::vector<std::uint32_t> x(fib.size(), 0);
    while (true) {
      const DepArrowId id = static_cast<DepArrowId>(D.size());
      D.dep_fam.push_back(lam);
      D.dep_of[lam].push_back(id);
      D.names.push_back(table_name(F.fam.owner[lam], 0, x) + "∈Π" + F.fam.names[lam]);
      D.carrier.push_back(kNone);
      choices.push_back(x);
      lookup[{lam, x}] = id;
      if (fib.empty() || !next_mixed(x, fib)) break;
    }
  }
  D.application.assign(D.size(), std::vector<DepArrowId>(sk.cat.num_arrows(), kNone));
  for (DepArrowId phi = 0; phi < D.size(); ++phi) {
    const FamArrowId lam = D.dep_fam[phi];
    for (ArrowId f = 0; f < sk.cat.num_arrows(); ++f) {
      if (sk.cat.cod(f) != F.fam.owner[lam]) continue;
      std::vector<std::uint32_t> x(sk.cat.dom(f));
      for (std::size_t j = 0; j < x.size(); ++j) x[j] = choices[phi][sk.tables[f][j]];
      D.application[phi][f] = lookup.at({F.fam.restriction[lam][f], x});
    }
  }
  return D;
}

Pr2Table finset_pr2(const FinSetFam& F, const SigmaStruct& S, const DepStruct& D) {
  // Rebuild the (family, choice-tuple) → dep-id lookup in enumeration order.
  std::map<std::pair<FamArrowId, std::vector<std::uint32_t>>, DepArrowId> lookup;
  for (FamArrowId lam = 0; lam < F.fam.size(); ++lam) {
    const auto& fib = F.fibers[lam];
    if (std::find(fib.begin(), fib.end(), 0u) != fib.end()) continue;
    std::vector<std::uint32_t> x(fib.size(), 0);
    std::size_t k = 0;
    while (true) {
      lookup[{lam, x}] = D.dep_of[lam][k++];
      if (fib.empty() || !next_mixed(x, fib)) break;
    }
  }
  Pr2Table pr2(F.fam.size(), kNone);
  for (FamArrowId lam = 0; lam < F.fam.size(); ++lam) {
    const FamArrowId mu = F.fam.restriction[lam][S.pr1[lam]];  // λ∘pr₁ over Σλ
    // Fiber point of z = index(i,x) is x.
    const auto& fib = F.fibers[lam];
    std::vector<std::uint32_t> x;
    for (std::size_t i = 0; i < fib.size(); ++i)
      for (std::uint32_t v = 0; v < fib[i]; ++v) x.push_back(v);
    pr2[lam] = lookup.at({mu, x});
  }
  return pr2;
}

FamStruct topos_fam(const FinSetSkeleton& sk, std::size_t budget) {
  if (sk.max_size() < 2)
    throw NoSubobjectClassifier("the skeleton needs the 2-element object Ω");
  const std::size_t b_max = std::min(budget, sk.max_size());
  FamStruct F;
  F.fam_of.resize(sk.cat.num_objects());
  std::vector<std::pair<ObjectId, std::vector<std::uint32_t>>> enc;  // (b, e-table)
  std::map<std::pair<ObjectId, std::pair<ObjectId, std::vector<std::uint32_t>>>, FamArrowId>
      lookup;
  for (ObjectId a = 0; a < sk.cat.num_objects(); ++a)
    for (ObjectId b = 0; b <= b_max; ++b) {
      std::vector<std::uint32_t> e(static_cast<std::size_t>(a) * b, 0);
      while (true) {
        const FamArrowId id = static_cast<FamArrowId>(F.owner.size());
        F.owner.push_back(a);
        F.fam_of[a].push_back(id);
        F.names.push_back("(" + std::to_string(b) + "," + table_name(a * b, 2, e) + ")");
        enc.emplace_back(b, e);
        lookup[{a, {b, e}}] = id;
        if (e.empty() || !next_tuple(e, 2)) break;
      }
    }
  F.restriction.assign(F.size(), std::vector<FamArrowId>(sk.cat.num_arrows(), kNone));
  for (FamArrowId lam = 0; lam < F.size(); ++lam) {
    const auto& [b, e] = enc[lam];
    for (ArrowId g = 0; g < sk.cat.num_arrows(); ++g) {
      if (sk.cat.cod(g) != F.owner[lam]) continue;
      const ObjectId c = sk.cat.dom(g);
      // e∘(g×1_b), with (i,y) encoded as i·b + y
      std::vector<std::uint32_t> e2(static_cast<std::size_t>(c) * b);
      for (ObjectId j = 0; j < c; ++j)
        for (ObjectId y = 0; y < b; ++y) e2[j * b + y] = e[sk.tables[g][j] * b + y];
      F.restriction[lam][g] = lookup.at({c, {b, e2}});
    }
  }
  return F;
}

}  // namespace depcat
