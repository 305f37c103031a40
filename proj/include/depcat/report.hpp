#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace depcat {

// Canonical law identifiers. The paper-named conditions map one-to-one;
// *.typing, transp.mono, expr22.eq and count.* are structural/auxiliary.
namespace laws {
inline constexpr const char* cat_unit = "cat.unit";
inline constexpr const char* cat_assoc = "cat.assoc";
inline constexpr const char* fam1 = "fam1";
inline constexpr const char* fam2 = "fam2";
inline constexpr const char* fam_typing = "fam.typing";
inline constexpr const char* sigma_square = "sigma.square";
inline constexpr const char* sigma_pullback = "sigma.pullback";
inline constexpr const char* sigma_typing = "sigma.typing";
inline constexpr const char* s1 = "s1";
inline constexpr const char* s2 = "s2";
inline constexpr const char* dep1 = "dep1";
inline constexpr const char* dep2 = "dep2";
inline constexpr const char* dep_typing = "dep.typing";
inline constexpr const char* depsigma_compat = "depsigma.compat";
inline constexpr const char* depsigma_typing = "depsigma.typing";
inline constexpr const char* transp_iso = "transp.iso";
inline constexpr const char* transp_mono = "transp.mono";
inline constexpr const char* elsigma_pr0 = "elsigma.pr0";
inline constexpr const char* elsigma_pr1 = "elsigma.pr1";
inline constexpr const char* elsigma_pr2 = "elsigma.pr2";
inline constexpr const char* elsigma_pr3 = "elsigma.pr3";
inline constexpr const char* elsigma_pr4 = "elsigma.pr4";
inline constexpr const char* exdo2_bij = "exdo2.bij";
inline constexpr const char* expr22_eq = "expr22.eq";
inline constexpr const char* weak_fam1 = "weak.fam1";
inline constexpr const char* weak_fam2 = "weak.fam2";
inline constexpr const char* cofam1 = "cofam1";
inline constexpr const char* cofam2 = "cofam2";
inline constexpr const char* count_sigma = "count.sigma";
inline constexpr const char* count_dep = "count.dep";
inline constexpr const char* count_sections = "count.sections";
inline constexpr const char* count_hom = "count.hom";
inline constexpr const char* cofam_typing = "cofam.typing";
inline constexpr const char* elements_action = "elements.action";
inline constexpr const char* presheaf_unit = "presheaf.unit";
inline constexpr const char* presheaf_comp = "presheaf.comp";
inline constexpr const char* functor_unit = "functor.unit";
inline constexpr const char* functor_comp = "functor.comp";
inline constexpr const char* functor_typing = "functor.typing";
inline constexpr const char* functor_fam = "functor.fam";
inline constexpr const char* nat_natural = "nat.natural";
inline constexpr const char* nat_triangle = "nat.triangle";
}  // namespace laws

struct LawEntry {
  std::string law;
  bool passed = true;
  std::uint64_t checked = 0;  // instances examined
  std::string witness;        // non-empty iff failed; first counterexample in canonical order
};

struct LawReport {
  std::string suite;
  std::vector<LawEntry> entries;

  bool all_passed() const {
    for (const auto& e : entries)
      if (!e.passed) return false;
    return true;
  }
  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& e : entries)
      if (!e.passed) ++n;
    return n;
  }
  const LawEntry* find(const std::string& law) const {
    for (const auto& e : entries)
      if (e.law == law) return &e;
    return nullptr;
  }
  // Records a pass unless a witness was already recorded for this law.
  LawEntry& entry(const std::string& law) {
    for (auto& e : entries)
      if (e.law == law) return e;
    entries.push_back(LawEntry{law, true, 0, {}});
    return entries.back();
  }
  void tally(const std::string& law) { entry(law).checked++; }
  void fail(const std::string& law, const std::string& witness) {
    auto& e = entry(law);
    e.checked++;
    if (e.passed) {
      e.passed = false;
      e.witness = witness;
    }
  }
};

}  // namespace depcat
