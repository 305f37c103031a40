#pragma once

// (dep,Σ)-structures: the second-projection dependent arrow pr₂ with its
// compatibility law, the canonical construction over global sections, the
// product-sigma comparison pr₂' = ⟨1, pr_b⟩, and the element-level equations
// (pr0)–(pr4) for global elements of Sigma-objects.

#include "depcat/depcat.hpp"
#include "depcat/famcat.hpp"
#include "depcat/fincat.hpp"
#include "depcat/sigmacat.hpp"

namespace depcat {

// pr₂ assignment: per family id λ, a dep arrow in dHom(Σₐλ, λ∘pr₁).
using Pr2Table = std::vector<DepArrowId>;

LawReport check_depsigma_laws(const FinCat& C, const FamStruct& F, const SigmaStruct& S,
                              const DepStruct& D, const Pr2Table& pr2);

struct CanonicalDepSigma {
  DepStruct dep;  // global sections of S
  Pr2Table pr2;
};

// pr₂^{a,λ} := the mediator of the (λ, pr₁^{a,λ}) pullback at the cone (1, 1).
// Throws PullbackMediatorMissing when S is broken.
CanonicalDepSigma canonical_pr2(const FinCat& C, const FamStruct& F, const SigmaStruct& S);

// For a pair (a, b) with products, verifies pr₂' = ⟨1_{a×b}, pr_b⟩ and
// j(pr₂') = pr_b. Throws MissingProduct.
LawReport pr2_prime_check(const FinCat& C, ObjectId a, ObjectId b);

struct ElementAnalysis {
  ArrowId z = kNone;        // the analysed global element of Σₐλ
  ArrowId i = kNone;        // pr₁ ∘ z
  FamArrowId lam_i = kNone; // λ(i) = λ∘i
  ArrowId u = kNone;        // the unique global element of Σ₁λ(i) over z
  LawReport report;         // elsigma.pr0, elsigma.pr1, elsigma.pr2
};

ElementAnalysis analyze_element(const FinCat& C, const FamStruct& F, const SigmaStruct& S,
                                const DepStruct& D, const Pr2Table& pr2, FamArrowId lam,
                                ArrowId z);

struct ElementEqualityVerdict {
  bool equal = false;        // z = w, the direct oracle
  bool proj_equal = false;   // pr₁(z) = pr₁(w)
  bool rhs = false;          // u' = λ_ij ∘ u (computed only when proj_equal)
  TransportPair transports;  // identities in strict instances
  LawReport report;          // elsigma.pr3, elsigma.pr4
};

ElementEqualityVerdict element_equality(const FinCat& C, const FamStruct& F, const SigmaStruct& S,
                                        const DepStruct& D, const Pr2Table& pr2, FamArrowId lam,
                                        ArrowId z, ArrowId w);

}  // namespace depcat
