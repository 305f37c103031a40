#pragma once

// Dependent-arrow structures: dHom(a,λ) with the application action and laws
// (dep₁),(dep₂); trivial/constant instances; the canonical global-sections
// structure with its defining equations; the dHom presheaf on the category of
// elements; the Hom(a,b) ≅ 𝒟ₐb bijection for constant families.

#include "depcat/famcat.hpp"
#include "depcat/fincat.hpp"
#include "depcat/sigmacat.hpp"

namespace depcat {

struct DepStruct {
  std::vector<FamArrowId> dep_fam;               // per dep id, the (a,λ) it lives over
  std::vector<std::vector<DepArrowId>> dep_of;   // per family id, ascending
  std::vector<std::vector<DepArrowId>> application;  // [dep][arrow f into owner]
  std::vector<std::string> names;
  // Underlying base arrow per dep id where one exists (global sections,
  // constant deps); kNone otherwise.
  std::vector<ArrowId> carrier;

  std::size_t size() const { return dep_fam.size(); }
  DepArrowId apply_raw(DepArrowId phi, ArrowId f) const { return application[phi][f]; }
  bool operator==(const DepStruct& other) const = default;
};

// Φ(f) with typing checks; throws TypeMismatch.
DepArrowId apply_dep(const FinCat& C, const FamStruct& F, const DepStruct& D, DepArrowId phi,
                     ArrowId f);

LawReport check_dep_laws(const FinCat& C, const FamStruct& F, const DepStruct& D);

// dHom(a,λ) := {∗}.
DepStruct trivial_dep(const FinCat& C, const FamStruct& F);
// Over the constant fam: dHom(a,b) := Hom(a,b), f(g) := f∘g.
DepStruct constant_dep(const FinCat& C, const FamStruct& constant);

// The canonical structure of a (fam,Σ)-category: dHom(a,λ) := 𝒟ₐλ, the
// sections of pr₁, with application through the verified pullback mediator.
// Equations φ∘f = (Σ_λf)∘φ(f) and pr₁∘φ(f) = 1 are re-verified; throws
// PullbackMediatorMissing when the sigma structure is broken.
DepStruct global_sections_dep(const FinCat& C, const FamStruct& F, const SigmaStruct& S);
// Sections of pr₁ for one family, in canonical order.
std::vector<ArrowId> dependent_objects(const FinCat& C, const FamStruct& F, const SigmaStruct& S,
                                       FamArrowId lam);

// For global-sections structures the dep-arrow id is the underlying arrow id.
ArrowId section_arrow(const DepStruct& D, DepArrowId phi);

struct DepObjectBijection {
  ProductWitness product;         // witness for a × b
  std::vector<ArrowId> hom_ab;    // Hom(a, b)
  std::vector<ArrowId> sections;  // 𝒟ₐb, sections of pr_a
  std::vector<ArrowId> e;         // per hom_ab index: e(f) = ⟨1ₐ, f⟩
  std::vector<ArrowId> j;         // per sections index: j(φ) = pr_b ∘ φ
};

// Throws MissingProduct when a × b does not exist.
DepObjectBijection dep_object_bijection(const FinCat& C, ObjectId a, ObjectId b);
// Verifies e and j are mutually inverse; entry id exdo2.bij.
LawReport check_dep_object_bijection(const FinCat& C, const DepObjectBijection& bij);

// dHom as a presheaf on the category of elements of fHom, plus the category
// of dependent arrows Σ(fHom(C), dHom).
Presheaf dep_presheaf(const FinCat& C, const FamStruct& F, const DepStruct& D);
FinCat category_of_dep_arrows(const FinCat& C, const FamStruct& F, const DepStruct& D,
                              std::size_t max_arrows = 8192);

}  // namespace depcat
