#include "depcat/suites.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "json.hpp"

#include "depcat/serialize.hpp"

namespace depcat {

namespace {

std::uint64_t ipow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  while (exp--) r *= base;
  return r;
}

void merge(LawReport& into, const LawReport& from, const std::string& prefix = {}) {
  for (const auto& e : from.entries) {
    LawEntry& t = into.entry(e.law);
    t.checked += e.checked;
    if (!e.passed && t.passed) {
      t.passed = false;
      t.witness = prefix + e.witness;
    }
  }
}

LawReport transport_suite(const StructureDocument& doc) {
  LawReport report{"transport", {}};
  const FinCat& C = doc.category;
  const FamStruct& F = *doc.fam;
  const SigmaStruct& S = *doc.sigma;
  auto t = terminal(C);
  if (!t) throw NoTerminalObject("transport suite");
  for (FamArrowId lam = 0; lam < F.size(); ++lam)
    for (ArrowId i : C.hom(t->object, F.owner[lam])) {
      report.tally(laws::transp_mono);
      if (!C.is_mono(S.sigma_arr[lam][i]) ||
          S.pr1[F.restrict_raw(lam, i)] != t->bang[S.sigma_obj[F.restrict_raw(lam, i)]])
        report.fail(laws::transp_mono,
                    "(" + F.names[lam] + ", " + C.arrow_name(i) + ")");
      report.tally(laws::transp_iso);
      try {
        transport(C, F, S, lam, i, i);
      } catch (const Error& e) {
        report.fail(laws::transp_iso,
                    "(" + F.names[lam] + ", " + C.arrow_name(i) + "): " + e.what());
      }
    }
  return report;
}

LawReport elsigma_suite(const StructureDocument& doc) {
  LawReport report{"elsigma", {}};
  const FinCat& C = doc.category;
  const FamStruct& F = *doc.fam;
  const SigmaStruct& S = *doc.sigma;
  const DepStruct& D = *doc.dep;
  const Pr2Table& pr2 = *doc.pr2;
  auto t = terminal(C);
  if (!t) throw NoTerminalObject("elsigma suite");
  for (FamArrowId lam = 0; lam < F.size(); ++lam) {
    const auto& elems = C.hom(t->object, S.sigma_obj[lam]);
    for (ArrowId z : elems) {
      try {
        const ElementAnalysis a = analyze_element(C, F, S, D, pr2, lam, z);
        merge(report, a.report);
      } catch (const Error& e) {
        for (const char* law : {laws::elsigma_pr0, laws::elsigma_pr1, laws::elsigma_pr2})
          report.fail(law, "analysis of " + C.arrow_name(z) + ": " + e.what());
      }
    }
    for (ArrowId z : elems)
      for (ArrowId w : elems) {
        try {
          const ElementEqualityVerdict v = element_equality(C, F, S, D, pr2, lam, z, w);
          merge(report, v.report);
        } catch (const Error& e) {
          for (const char* law : {laws::elsigma_pr3, laws::elsigma_pr4})
            report.fail(law, "pair (" + C.arrow_name(z) + ", " + C.arrow_name(w) +
                                 "): " + e.what());
        }
      }
  }
  return report;
}

LawReport exdo2_suite(const StructureDocument& doc) {
  LawReport report{"exdo2", {}};
  const FinCat& C = doc.category;
  report.entry(laws::exdo2_bij);
  for (ObjectId a = 0; a < C.num_objects(); ++a)
    for (ObjectId b = 0; b < C.num_objects(); ++b) {
      try {
        const DepObjectBijection bij = dep_object_bijection(C, a, b);
        merge(report, check_dep_object_bijection(C, bij),
              "(" + C.object_name(a) + ", " + C.object_name(b) + "): ");
      } catch (const MissingProduct&) {
        // pairs without a product are out of the bijection's domain
      }
    }
  return report;
}

LawReport counting_suite(const StructureDocument& doc) {
  LawReport report{"counting", {}};
  const FinCat& C = doc.category;
  // Object ids of the skeleton are the set sizes.
  for (ObjectId m = 0; m < C.num_objects(); ++m)
    for (ObjectId k = 0; k < C.num_objects(); ++k) {
      report.tally(laws::count_hom);
      const std::uint64_t expected = (m > 0 && k == 0) ? 0 : ipow(k, m);
      if (C.hom(m, k).size() != expected)
        report.fail(laws::count_hom, "|hom(" + std::to_string(m) + "," + std::to_string(k) +
                                         ")| ≠ " + std::to_string(expected));
    }
  const bool have_fibers = doc.finset && !doc.finset->fam_fibers.empty();
  if (have_fibers && doc.sigma && doc.sigma_kind == "sets") {
    for (FamArrowId lam = 0; lam < doc.fam->size(); ++lam) {
      report.tally(laws::count_sigma);
      std::uint64_t total = 0;
      for (auto v : doc.finset->fam_fibers[lam]) total += v;
      if (doc.sigma->sigma_obj[lam] != total)
        report.fail(laws::count_sigma, "|Σ(" + doc.fam->names[lam] + ")|");
    }
  }
  if (have_fibers && doc.dep && doc.dep_kind == "sets") {
    for (FamArrowId lam = 0; lam < doc.fam->size(); ++lam) {
      report.tally(laws::count_dep);
      std::uint64_t prod = 1;
      for (auto v : doc.finset->fam_fibers[lam]) prod *= v;
      if (doc.dep->dep_of[lam].size() != prod)
        report.fail(laws::count_dep, "|dHom(" + doc.fam->names[lam] + ")|");
    }
  }
  if (have_fibers && doc.sigma && doc.sigma_kind == "sets") {
    for (FamArrowId lam = 0; lam < doc.fam->size(); ++lam) {
      report.tally(laws::count_sections);
      std::uint64_t prod = 1;
      for (auto v : doc.finset->fam_fibers[lam]) prod *= v;
      if (dependent_objects(C, *doc.fam, *doc.sigma, lam).size() != prod)
        report.fail(laws::count_sections, "|𝒟(" + doc.fam->names[lam] + ")|");
    }
  }
  if (doc.fam_kind == "constant" && doc.sigma_kind == "product" && doc.kind == "finset") {
    const std::size_t n = C.num_objects();
    for (FamArrowId lam = 0; lam < doc.fam->size(); ++lam) {
      report.tally(laws::count_sections);
      const std::uint64_t a = doc.fam->owner[lam], b = lam % n;
      if (dependent_objects(C, *doc.fam, *doc.sigma, lam).size() != ipow(b, a))
        report.fail(laws::count_sections,
                    "|𝒟(" + doc.fam->names[lam] + ")| ≠ " + std::to_string(ipow(b, a)));
    }
  }
  return report;
}

LawReport elements_suite(const StructureDocument& doc, std::size_t max_arrows) {
  LawReport report{"elements", {}};
  const FinCat& C = doc.category;
  const FamStruct& F = *doc.fam;
  const Presheaf P = fam_presheaf(C, F);
  merge(report, check_presheaf_functoriality(C, P));
  const FinCat elements = category_of_elements(C, P, max_arrows);
  merge(report, check_category_laws(elements), "elements category: ");
  // Arrows of Σ(C, fHom) satisfy μ = λ∘f by construction; re-verify.
  const ElementsIndex ix = elements_index(C, P);
  for (ArrowId i = 0; i < ix.arrows.size(); ++i) {
    report.tally(laws::elements_action);
    const auto& [f, lam] = ix.arrows[i];
    const ObjectId src = elements.dom(i);
    if (F.restrict_raw(lam, f) != ix.objects[src].second)
      report.fail(laws::elements_action, "arrow " + elements.arrow_name(i));
  }
  return report;
}

LawReport cofam_suite(const StructureDocument& doc) {
  LawReport report{"cofam", {}};
  // doc.fam lives on C = op(op C), so it is a fam structure on the opposite
  // of op(C): view it as a cofamily structure on op(C).
  const FinCat op = opposite(doc.category);
  const CofamStruct co = cofam_from_op(op, *doc.fam);
  merge(report, check_cofam_laws(op, co));
  return report;
}

LawReport weak_suite(const StructureDocument& doc) {
  LawReport report{"weak", {}};
  const FinCat& C = doc.category;
  const WeakFamStruct W = slice_wfam(C, canonical_chooser(C));
  LawReport r = check_weak_fam_laws(C, W);
  // keep only the weak side: strictness is a property of the chooser
  std::erase_if(r.entries, [](const LawEntry& e) {
    return e.law != laws::weak_fam1 && e.law != laws::weak_fam2;
  });
  merge(report, r);
  return report;
}

bool has_all_pullbacks(const FinCat& C) {
  if (C.num_arrows() > 64) return false;  // desk-scale guard
  for (ArrowId f = 0; f < C.num_arrows(); ++f)
    for (ArrowId g = 0; g < C.num_arrows(); ++g) {
      if (C.cod(f) != C.cod(g)) continue;
      if (!pullback_of(C, f, g)) return false;
    }
  return true;
}

}  // namespace

std::vector<std::string> suite_order() {
  return {"category", "fam",       "elements", "cofam", "sigma", "dep",
          "depsigma", "transport", "elsigma",  "exdo2", "counting", "weak"};
}

std::vector<std::string> applicable_suites(const StructureDocument& doc) {
  const bool has_terminal = terminal(doc.category).has_value();
  std::vector<std::string> out;
  for (const std::string& s : suite_order()) {
    if (s == "category") out.push_back(s);
    if (s == "fam" && doc.fam) out.push_back(s);
    if (s == "elements" && doc.fam) {
      std::size_t arrows = 0;
      for (ArrowId f = 0; f < doc.category.num_arrows(); ++f)
        arrows += doc.fam->fam_of[doc.category.cod(f)].size();
      if (arrows <= 4096) out.push_back(s);
    }
    if (s == "cofam" && doc.fam) out.push_back(s);
    if (s == "sigma" && doc.sigma) out.push_back(s);
    if (s == "dep" && doc.dep) out.push_back(s);
    if (s == "depsigma" && doc.pr2) out.push_back(s);
    if (s == "transport" && doc.sigma && has_terminal) out.push_back(s);
    if (s == "elsigma" && doc.pr2 && has_terminal) out.push_back(s);
    if (s == "exdo2") out.push_back(s);
    if (s == "counting" && doc.kind == "finset") out.push_back(s);
    if (s == "weak" && has_all_pullbacks(doc.category)) out.push_back(s);
  }
  return out;
}

std::vector<LawReport> run_suites(const StructureDocument& doc,
                                  const std::vector<std::string>& suites, std::size_t budget) {
  std::vector<std::string> wanted = suites.empty() ? applicable_suites(doc) : suites;
  // fixed execution order regardless of request order
  std::vector<LawReport> reports;
  for (const std::string& s : suite_order()) {
    if (std::find(wanted.begin(), wanted.end(), s) == wanted.end()) continue;
    if (s == "category") {
      reports.push_back(check_category_laws(doc.category));
    } else if (s == "fam") {
      if (!doc.fam) throw LayerMissing("fam");
      reports.push_back(check_fam_laws(doc.category, *doc.fam));
    } else if (s == "elements") {
      if (!doc.fam) throw LayerMissing("fam");
      reports.push_back(elements_suite(doc, std::max<std::size_t>(budget, 1) * 4096));
    } else if (s == "cofam") {
      if (!doc.fam) throw LayerMissing("fam");
      reports.push_back(cofam_suite(doc));
    } else if (s == "sigma") {
      if (!doc.fam || !doc.sigma) throw LayerMissing("sigma");
      reports.push_back(check_sigma_laws(doc.category, *doc.fam, *doc.sigma));
    } else if (s == "dep") {
      if (!doc.fam || !doc.dep) throw LayerMissing("dep");
      reports.push_back(check_dep_laws(doc.category, *doc.fam, *doc.dep));
    } else if (s == "depsigma") {
      if (!doc.fam || !doc.sigma || !doc.dep || !doc.pr2) throw LayerMissing("depsigma");
      reports.push_back(
          check_depsigma_laws(doc.category, *doc.fam, *doc.sigma, *doc.dep, *doc.pr2));
    } else if (s == "transport") {
      if (!doc.fam || !doc.sigma) throw LayerMissing("sigma");
      reports.push_back(transport_suite(doc));
    } else if (s == "elsigma") {
      if (!doc.fam || !doc.sigma || !doc.dep || !doc.pr2) throw LayerMissing("depsigma");
      reports.push_back(elsigma_suite(doc));
    } else if (s == "exdo2") {
      reports.push_back(exdo2_suite(doc));
    } else if (s == "counting") {
      reports.push_back(counting_suite(doc));
    } else if (s == "weak") {
      reports.push_back(weak_suite(doc));
    } else {
      throw InvalidSpec("unknown suite '" + s + "'");
    }
  }
  return reports;
}

bool all_passed(const std::vector<LawReport>& reports) {
  for (const auto& r : reports)
    if (!r.all_passed()) return false;
  return true;
}

std::string report_text(const std::vector<LawReport>& reports) {
  std::ostringstream out;
  for (const auto& r : reports) {
    out << "suite " << r.suite << ": " << (r.all_passed() ? "PASS" : "FAIL") << " ("
        << r.entries.size() << " laws)\n";
    for (const auto& e : r.entries) {
      out << "  [" << (e.passed ? "PASS" : "FAIL") << "] " << e.law << " (" << e.checked
          << " checked)";
      if (!e.passed) out << " witness: " << e.witness;
      out << "\n";
    }
  }
  out << "RESULT: " << (all_passed(reports) ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string report_json(const std::vector<LawReport>& reports) {
  nlohmann::ordered_json out;
  out["suites"] = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json suite;
    suite["suite"] = r.suite;
    suite["passed"] = r.all_passed();
    suite["entries"] = nlohmann::ordered_json::array();
    for (const auto& e : r.entries)
      suite["entries"].push_back(nlohmann::ordered_json{{"law", e.law},
                                                        {"passed", e.passed},
                                                        {"checked", e.checked},
                                                        {"witness", e.witness}});
    out["suites"].push_back(suite);
  }
  out["all_passed"] = all_passed(reports);
  return out.dump(2) + "\n";
}

namespace {

FinCat with_comp_entry(const FinCat& C, ArrowId g, ArrowId f, ArrowId gf) {
  std::vector<std::string> object_names;
  std::vector<ArrowId> identities;
  for (ObjectId a = 0; a < C.num_objects(); ++a) {
    object_names.push_back(C.object_name(a));
    identities.push_back(C.identity(a));
  }
  std::vector<Arrow> arrows;
  std::vector<std::string> arrow_names;
  for (ArrowId x = 0; x < C.num_arrows(); ++x) {
    arrows.push_back(Arrow{C.dom(x), C.cod(x)});
    arrow_names.push_back(C.arrow_name(x));
  }
  std::vector<CompTriple> comp = C.comp_triples();
  for (auto& t : comp)
    if (t.g == g && t.f == f) t.gf = gf;
  return FinCat(std::move(object_names), std::move(arrows), std::move(arrow_names),
                std::move(identities), comp);
}

bool law_fails(const StructureDocument& doc, const std::string& suite, const std::string& law) {
  try {
    for (const LawReport& r : run_suites(doc, {suite}))
      if (const LawEntry* e = r.find(law); e && !e->passed) return true;
  } catch (const Error&) {
    return false;  // mutation broke construction outright; try another
  }
  return false;
}

const std::map<std::string, std::string>& law_suite_map() {
  static const std::map<std::string, std::string> m = {
      {laws::cat_unit, "category"},     {laws::cat_assoc, "category"},
      {laws::fam1, "fam"},              {laws::fam2, "fam"},
      {laws::fam_typing, "fam"},        {laws::cofam1, "cofam"},
      {laws::cofam2, "cofam"},          {laws::sigma_square, "sigma"},
      {laws::sigma_pullback, "sigma"},  {laws::sigma_typing, "sigma"},
      {laws::s1, "sigma"},              {laws::s2, "sigma"},
      {laws::dep1, "dep"},              {laws::dep2, "dep"},
      {laws::dep_typing, "dep"},        {laws::depsigma_compat, "depsigma"},
      {laws::transp_iso, "transport"},  {laws::transp_mono, "transport"},
      {laws::elsigma_pr0, "elsigma"},   {laws::elsigma_pr1, "elsigma"},
      {laws::elsigma_pr2, "elsigma"},   {laws::elsigma_pr3, "elsigma"},
      {laws::elsigma_pr4, "elsigma"},   {laws::count_sigma, "counting"},
      {laws::count_dep, "counting"},    {laws::count_sections, "counting"},
      {laws::count_hom, "counting"},
  };
  return m;
}

}  // namespace

std::vector<std::string> mutable_laws(const StructureDocument& doc) {
  std::vector<std::string> out = {laws::cat_unit, laws::cat_assoc};
  if (doc.fam) {
    out.insert(out.end(), {laws::fam1, laws::fam2, laws::fam_typing, laws::cofam1, laws::cofam2});
  }
  if (doc.sigma)
    out.insert(out.end(),
               {laws::sigma_square, laws::sigma_pullback, laws::sigma_typing, laws::s1, laws::s2});
  if (doc.dep) out.insert(out.end(), {laws::dep1, laws::dep2, laws::dep_typing});
  if (doc.pr2) out.push_back(laws::depsigma_compat);
  if (doc.sigma && terminal(doc.category)) {
    out.insert(out.end(), {laws::transp_iso, laws::transp_mono});
    if (doc.pr2)
      out.insert(out.end(), {laws::elsigma_pr0, laws::elsigma_pr1, laws::elsigma_pr2,
                             laws::elsigma_pr3, laws::elsigma_pr4});
  }
  if (doc.finset && !doc.finset->fam_fibers.empty() && doc.sigma)
    out.push_back(laws::count_sigma);
  return out;
}

MutationOutcome mutate_for_law(const StructureDocument& doc, const std::string& law) {
  const auto& suites = law_suite_map();
  auto it = suites.find(law);
  if (it == suites.end()) throw InvalidSpec("no document mutation for law '" + law + "'");
  const std::string& suite = it->second;
  const FinCat& C = doc.category;

  auto accept = [&](StructureDocument&& cand, const std::string& desc) -> MutationOutcome {
    return MutationOutcome{desc, suite, std::move(cand)};
  };

  if (law == laws::cat_unit || law == laws::cat_assoc) {
    for (ArrowId g = 0; g < C.num_arrows(); ++g)
      for (ArrowId f = 0; f < C.num_arrows(); ++f) {
        if (!C.composable(g, f)) continue;
        const ArrowId gf = C.compose_raw(g, f);
        for (ArrowId cand : C.hom(C.dom(f), C.cod(g))) {
          if (cand == gf) continue;
          StructureDocument mutated = doc;
          mutated.category = with_comp_entry(C, g, f, cand);
          if (law_fails(mutated, suite, law))
            return accept(std::move(mutated), "comp(" + C.arrow_name(g) + ", " +
                                                  C.arrow_name(f) + ") := " + C.arrow_name(cand));
        }
      }
  } else if (law == laws::fam1 || law == laws::fam2 || law == laws::fam_typing ||
             law == laws::cofam1 || law == laws::cofam2) {
    const FamStruct& F = *doc.fam;
    for (FamArrowId lam = 0; lam < F.size(); ++lam)
      for (ArrowId f = 0; f < C.num_arrows(); ++f) {
        if (C.cod(f) != F.owner[lam]) continue;
        for (FamArrowId cand = 0; cand < F.size(); ++cand) {
          if (cand == F.restrict_raw(lam, f)) continue;
          StructureDocument mutated = doc;
          mutated.fam->restriction[lam][f] = cand;
          if (law_fails(mutated, suite, law))
            return accept(std::move(mutated), "restrict(" + F.names[lam] + ", " +
                                                  C.arrow_name(f) + ") := " + F.names[cand]);
        }
      }
  } else if (law == laws::sigma_square || law == laws::sigma_pullback ||
             law == laws::sigma_typing || law == laws::s1 || law == laws::s2 ||
             law == laws::transp_iso || law == laws::transp_mono || law == laws::elsigma_pr0 ||
             law == laws::elsigma_pr1 || law == laws::elsigma_pr2 || law == laws::elsigma_pr3 ||
             law == laws::elsigma_pr4 || law == laws::count_sigma) {
    const SigmaStruct& S = *doc.sigma;
    // pr1 value flips
    for (FamArrowId lam = 0; lam < S.pr1.size(); ++lam)
      for (ArrowId cand : C.hom(S.sigma_obj[lam], doc.fam->owner[lam])) {
        if (cand == S.pr1[lam]) continue;
        StructureDocument mutated = doc;
        mutated.sigma->pr1[lam] = cand;
        if (law_fails(mutated, suite, law))
          return accept(std::move(mutated),
                        "pr₁(" + doc.fam->names[lam] + ") := " + C.arrow_name(cand));
      }
    // sigma arrow value flips
    for (FamArrowId lam = 0; lam < S.sigma_arr.size(); ++lam)
      for (ArrowId f = 0; f < C.num_arrows(); ++f) {
        if (C.cod(f) != doc.fam->owner[lam]) continue;
        const FamArrowId lam_f = doc.fam->restrict_raw(lam, f);
        for (ArrowId cand : C.hom(S.sigma_obj[lam_f], S.sigma_obj[lam])) {
          if (cand == S.sigma_arr[lam][f]) continue;
          StructureDocument mutated = doc;
          mutated.sigma->sigma_arr[lam][f] = cand;
          if (law_fails(mutated, suite, law))
            return accept(std::move(mutated), "Σ_" + doc.fam->names[lam] + "(" +
                                                  C.arrow_name(f) + ") := " + C.arrow_name(cand));
        }
      }
    // sigma object flips (counting / typing)
    for (FamArrowId lam = 0; lam < S.sigma_obj.size(); ++lam)
      for (ObjectId cand = 0; cand < C.num_objects(); ++cand) {
        if (cand == S.sigma_obj[lam]) continue;
        StructureDocument mutated = doc;
        mutated.sigma->sigma_obj[lam] = cand;
        if (law_fails(mutated, suite, law))
          return accept(std::move(mutated),
                        "Σ-object(" + doc.fam->names[lam] + ") := " + C.object_name(cand));
      }
  } else if (law == laws::dep1 || law == laws::dep2 || law == laws::dep_typing) {
    const DepStruct& D = *doc.dep;
    for (DepArrowId phi = 0; phi < D.size(); ++phi)
      for (ArrowId f = 0; f < C.num_arrows(); ++f) {
        if (C.cod(f) != doc.fam->owner[D.dep_fam[phi]]) continue;
        for (DepArrowId cand = 0; cand < D.size(); ++cand) {
          if (cand == D.apply_raw(phi, f)) continue;
          StructureDocument mutated = doc;
          mutated.dep->application[phi][f] = cand;
          if (law_fails(mutated, suite, law))
            return accept(std::move(mutated), D.names[phi] + "(" + C.arrow_name(f) +
                                                  ") := " + D.names[cand]);
        }
      }
  } else if (law == laws::depsigma_compat) {
    const Pr2Table& pr2 = *doc.pr2;
    for (FamArrowId lam = 0; lam < pr2.size(); ++lam)
      for (DepArrowId cand : doc.dep->dep_of[doc.dep->dep_fam[pr2[lam]]]) {
        if (cand == pr2[lam]) continue;
        StructureDocument mutated = doc;
        (*mutated.pr2)[lam] = cand;
        if (law_fails(mutated, suite, law))
          return accept(std::move(mutated),
                        "pr₂(" + doc.fam->names[lam] + ") := " + doc.dep->names[cand]);
      }
  } else {
    throw InvalidSpec("no document mutation for law '" + law + "'");
  }
  throw InvalidSpec("no single-entry mutation of this document can break " + law);
}

}  // namespace depcat
