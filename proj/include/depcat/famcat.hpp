#pragma once

// Family-arrow structures on a FinCat: the (fam₁)/(fam₂) laws, the standard
// constructions (constant, coslice, weak slice), the fHom presheaf with its
// category of elements, fam-functors and fam-natural transformations, and the
// dual cofamily laws via the opposite category.

#include <functional>
#include <string>
#include <vector>

#include "depcat/fincat.hpp"

namespace depcat {

// Extensional family structure: per-object family-arrow sets plus the full
// restriction table. restriction[lam][f] is meaningful iff cod(f) = owner[lam].
struct FamStruct {
  std::vector<ObjectId> owner;                       // per family id, grouped by object
  std::vector<std::vector<FamArrowId>> fam_of;       // per object, ascending
  std::vector<std::vector<FamArrowId>> restriction;  // [fam][arrow]
  std::vector<std::string> names;

  std::size_t size() const { return owner.size(); }
  FamArrowId restrict_raw(FamArrowId lam, ArrowId f) const { return restriction[lam][f]; }
  bool operator==(const FamStruct& other) const = default;
};

// λ ∘ f with typing checks; throws TypeMismatch if cod(f) ≠ owner(λ).
FamArrowId restrict_fam(const FinCat& C, const FamStruct& F, FamArrowId lam, ArrowId f);

LawReport check_fam_laws(const FinCat& C, const FamStruct& F);

// fHom(a) := C₀, b∘f = b.
FamStruct constant_fam(const FinCat& C);
// fHom(a) := arrows out of a, restriction by composition.
FamStruct coslice_fam(const FinCat& C);

// Contravariant set-valued functor, elements named for reports.
struct Presheaf {
  std::vector<std::vector<std::uint32_t>> elems;   // per object: global element ids
  std::vector<std::uint32_t> owner;                // per element
  std::vector<std::vector<std::uint32_t>> action;  // [arrow f][elem of P(cod f)] -> elem of P(dom f)
  std::vector<std::string> names;
};

Presheaf fam_presheaf(const FinCat& C, const FamStruct& F);
LawReport check_presheaf_functoriality(const FinCat& C, const Presheaf& P);

// The category of elements Σ(C, P): objects (a, x), arrows the base arrows
// respecting the action. Arrow ids are dense; max_arrows guards table size.
FinCat category_of_elements(const FinCat& C, const Presheaf& P,
                            std::size_t max_arrows = 8192);
// Element-category arrow (f, x) decomposition for tests.
struct ElementsIndex {
  std::vector<std::pair<ObjectId, std::uint32_t>> objects;  // (base object, presheaf element)
  std::vector<std::pair<ArrowId, std::uint32_t>> arrows;    // (base arrow, target element)
};
ElementsIndex elements_index(const FinCat& C, const Presheaf& P);

struct FamFunctor {
  std::vector<ObjectId> object_map;   // per source object
  std::vector<ArrowId> arrow_map;     // per source arrow
  std::vector<FamArrowId> fam_map;    // per source family
};

LawReport check_fam_functor(const FinCat& Csrc, const FamStruct& Fsrc, const FinCat& Cdst,
                            const FamStruct& Fdst, const FamFunctor& F);

struct FamNatTrans {
  std::vector<ArrowId> component;  // per source object a, an arrow F(a) → G(a) in the target
};

LawReport check_fam_nat_trans(const FinCat& Csrc, const FamStruct& Fsrc, const FinCat& Cdst,
                              const FamStruct& Fdst, const FamFunctor& F, const FamFunctor& G,
                              const FamNatTrans& eta);

// Cofamily structure on C: per-object cofamily sets with a left action by
// arrows out of the owner; (cofam₁) 1_b ∘ p = p, (cofam₂) (g∘f)∘p = g∘(f∘p).
struct CofamStruct {
  std::vector<ObjectId> owner;
  std::vector<std::vector<FamArrowId>> cofam_of;
  std::vector<std::vector<FamArrowId>> action;  // [cofam p][arrow f with dom(f) = owner(p)]
  std::vector<std::string> names;
  bool operator==(const CofamStruct& other) const = default;
};

// Reinterprets a family structure on opposite(C) as a cofamily structure on C.
CofamStruct cofam_from_op(const FinCat& C, const FamStruct& F_on_op);
LawReport check_cofam_laws(const FinCat& C, const CofamStruct& F);

// Weak family structure in the slice: family-arrows over a are the arrows
// into a; restriction is the chosen pullback leg, laws hold up to slice iso.
// The other leg is the slice Sigma-arrow Σ_λf = f′, kept for the strictness
// demonstration: (s₁),(s₂) fail exactly where (fam₁),(fam₂) fail.
using PullbackChooser = std::function<PullbackWitness(ArrowId f, ArrowId lam)>;

struct WeakFamStruct {
  std::vector<std::vector<ArrowId>> wrestrict;  // [arrow-into-a lam][arrow f: b→a] -> arrow into b
  std::vector<std::vector<ArrowId>> wsigma;     // [lam][f] -> f′ : apex → dom(lam)
};

PullbackChooser canonical_chooser(const FinCat& C);
// Requires all pullbacks (verified per cospan); throws MissingPullback.
WeakFamStruct slice_wfam(const FinCat& C, const PullbackChooser& choose);
// Reports weak.fam1/weak.fam2 (iso in the slice) alongside the strict
// fam1/fam2 (arrow equality) and the slice-sigma strictness s1/s2.
LawReport check_weak_fam_laws(const FinCat& C, const WeakFamStruct& W);

}  // namespace depcat
