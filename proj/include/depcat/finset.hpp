#pragma once

// The FinSet skeleton: objects are sizes 0..n, arrows all functions between
// the canonical finite sets. Carries the disjoint-union sigma with the stable
// lexicographic encoding index(i,x) = offset(i) + x, choice-function dependent
// arrows, the second-projection pr₂, and the topos-style family structure.

#include <cstdint>
#include <map>
#include <vector>

#include "depcat/depcat.hpp"
#include "depcat/depsigma.hpp"
#include "depcat/famcat.hpp"
#include "depcat/fincat.hpp"
#include "depcat/sigmacat.hpp"

namespace depcat {

struct FinSetSkeleton {
  FinCat cat;
  std::vector<std::vector<std::uint32_t>> tables;  // per arrow: the function table

  std::size_t max_size() const { return cat.num_objects() - 1; }
  ArrowId arrow_of(ObjectId dom, ObjectId cod, const std::vector<std::uint32_t>& table) const;
};

FinSetSkeleton finset_skeleton(std::size_t max_size);

struct FinSetFam {
  FamStruct fam;
  std::vector<std::vector<std::uint32_t>> fibers;  // per family id
  std::size_t requested_cap = 0;
  std::size_t effective_cap = 0;

  FamArrowId fam_of(ObjectId owner, const std::vector<std::uint32_t>& fibers) const;
};

// Families over I are fiber tuples; restriction is reindexing. The effective
// cap is the largest value for which the disjoint-union sigma stays total on
// the skeleton (1 for max_size ≥ 1 — see the generator's --help).
FinSetFam finset_fam(const FinSetSkeleton& sk, std::size_t requested_cap);

// Σ_Iλ = the size Σᵢ|λ(i)|; Σ_λf maps index(j,x) to index(f(j),x).
SigmaStruct finset_sigma(const FinSetSkeleton& sk, const FinSetFam& F);
// dHom(I,λ) = choice functions, (x∘f)_j = x_{f(j)}.
DepStruct finset_dep(const FinSetSkeleton& sk, const FinSetFam& F);
// pr₂ sends index(i,x) to the fiber point x.
Pr2Table finset_pr2(const FinSetFam& F, const SigmaStruct& S, const DepStruct& D);

// fHom(a) = pairs (b, e: a×b → Ω) with |b| ≤ budget, Ω the 2-element object;
// restriction (b,e)∘g = (b, e∘(g×1_b)). Throws NoSubobjectClassifier when the
// skeleton has no object of size 2.
FamStruct topos_fam(const FinSetSkeleton& sk, std::size_t budget);

}  // namespace depcat
