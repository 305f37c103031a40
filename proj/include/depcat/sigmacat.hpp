#pragma once

// Sigma-object structures on a fam-category: Σₐλ, pr₁ and Σ_λf subject to the
// pullback condition and the strictness laws (s₁),(s₂); the trivial and
// binary-product constructions; transport arrows between Σ₁λ(i) and Σ₁λ(j).

#include <optional>

#include "depcat/famcat.hpp"
#include "depcat/fincat.hpp"

namespace depcat {

struct SigmaStruct {
  std::vector<ObjectId> sigma_obj;            // per family id
  std::vector<ArrowId> pr1;                   // per family id, Σₐλ → a
  std::vector<std::vector<ArrowId>> sigma_arr;  // [fam][arrow f into owner]: Σ_b(λ∘f) → Σₐλ
  bool operator==(const SigmaStruct& other) const = default;
};

LawReport check_sigma_laws(const FinCat& C, const FamStruct& F, const SigmaStruct& S);

// Σₐλ := a, pr₁ := 1ₐ, Σ_λf := f.
SigmaStruct trivial_sigma(const FinCat& C, const FamStruct& F);

// Over a constant fam: Σₐb := a×b, pr₁ := prₐ, Σ_b f := ⟨f∘pr_c, pr_b⟩.
// Requires binary products for all pairs; throws MissingProduct.
SigmaStruct product_sigma(const FinCat& C, const FamStruct& constant);

// The Def-3.1 square for (λ, f), with its full mediator table.
// Throws PullbackMediatorMissing when the square is not a pullback.
PullbackWitness sigma_square_witness(const FinCat& C, const FamStruct& F, const SigmaStruct& S,
                                     FamArrowId lam, ArrowId f);

struct TransportPair {
  ArrowId lam_ij = kNone;  // Σ₁λ(i) → Σ₁λ(j)
  ArrowId lam_ji = kNone;  // Σ₁λ(j) → Σ₁λ(i)
};

// Transport arrows for equal global elements i = j of owner(λ); verifies they
// are mutually inverse, the triangle equations, and that Σ_λi is a mono with
// pr₁ the unique arrow to the terminal object.
// Throws NoTerminalObject / NotEqualElements / PullbackMediatorMissing.
TransportPair transport(const FinCat& C, const FamStruct& F, const SigmaStruct& S, FamArrowId lam,
                        ArrowId i, ArrowId j);

}  // namespace depcat
