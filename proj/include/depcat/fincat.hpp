#pragma once

// Finite categories as explicit object/arrow sets with a total composition
// table on composable pairs, plus exhaustive limit computations: terminal
// object, binary products, pullbacks, monos, global elements, opposites.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "depcat/errors.hpp"
#include "depcat/report.hpp"

namespace depcat {

using ObjectId = std::uint32_t;
using ArrowId = std::uint32_t;
using FamArrowId = std::uint32_t;
using DepArrowId = std::uint32_t;

inline constexpr std::uint32_t kNone = 0xffffffffu;

struct Arrow {
  ObjectId dom;
  ObjectId cod;
};

struct CompTriple {
  ArrowId g;
  ArrowId f;
  ArrowId gf;  // g∘f
};

class FinCat {
 public:
  FinCat() = default;
  // Validates shape (ids in range, identity typing, composition defined
  // exactly on composable pairs with correctly typed results); throws
  // InvalidSpec. Law checking is separate: check_category_laws.
  FinCat(std::vector<std::string> object_names, std::vector<Arrow> arrows,
         std::vector<std::string> arrow_names, std::vector<ArrowId> identities,
         const std::vector<CompTriple>& comp);

  std::size_t num_objects() const { return object_names_.size(); }
  std::size_t num_arrows() const { return arrows_.size(); }

  ObjectId dom(ArrowId f) const { return arrows_[check_arrow(f)].dom; }
  ObjectId cod(ArrowId f) const { return arrows_[check_arrow(f)].cod; }
  ArrowId identity(ObjectId a) const { return identities_[check_object(a)]; }
  bool is_identity(ArrowId f) const { return identities_[dom(f)] == f; }

  bool composable(ArrowId g, ArrowId f) const;
  // comp(g: b→c, f: a→b) = g∘f : a→c
  ArrowId compose(ArrowId g, ArrowId f) const;
  ArrowId compose_raw(ArrowId g, ArrowId f) const { return comp_[g * num_arrows() + f]; }

  // Arrows a→b in canonical (ascending id) order.
  const std::vector<ArrowId>& hom(ObjectId a, ObjectId b) const;

  bool is_mono(ArrowId f) const;
  bool is_iso(ArrowId f) const;

  const std::string& object_name(ObjectId a) const { return object_names_[check_object(a)]; }
  const std::string& arrow_name(ArrowId f) const { return arrow_names_[check_arrow(f)]; }

  std::vector<CompTriple> comp_triples() const;  // sorted by (g, f)

  bool operator==(const FinCat& other) const;

  ObjectId check_object(ObjectId a) const;
  ArrowId check_arrow(ArrowId f) const;

 private:
  std::vector<std::string> object_names_;
  std::vector<Arrow> arrows_;
  std::vector<std::string> arrow_names_;
  std::vector<ArrowId> identities_;
  std::vector<ArrowId> comp_;                        // dense num_arrows², kNone off-type
  std::vector<std::vector<std::vector<ArrowId>>> hom_;  // [a][b]
};

struct TerminalWitness {
  ObjectId object = kNone;
  std::vector<ArrowId> bang;  // per object a, the unique arrow a → 1
};

struct ProductWitness {
  ObjectId left = kNone, right = kNone;
  ObjectId apex = kNone;
  ArrowId pr_left = kNone, pr_right = kNone;
  // (f: d→left, g: d→right) → ⟨f,g⟩ : d→apex
  std::map<std::pair<ArrowId, ArrowId>, ArrowId> pairing;
};

struct PullbackWitness {
  ArrowId into_left = kNone, into_right = kNone;  // cospan f: b→a, g: c→a
  ObjectId apex = kNone;
  ArrowId leg_left = kNone, leg_right = kNone;  // apex→b, apex→c
  // commuting cone (p: d→b, q: d→c) → the unique mediator d→apex
  std::map<std::pair<ArrowId, ArrowId>, ArrowId> mediators;
};

// Commuting-square candidate: left_side∘left_leg = right_side∘right_leg,
// with left_leg: P→L, right_leg: P→R, left_side: L→B, right_side: R→B.
struct Square {
  ArrowId left_leg, right_leg, left_side, right_side;
};

struct PullbackCheck {
  bool is_pullback = false;
  std::string reason;  // empty iff is_pullback
  // first violating cone (p toward left_side's domain, q toward right_side's)
  std::optional<std::pair<ArrowId, ArrowId>> cone;
};

LawReport check_category_laws(const FinCat& C);

std::optional<TerminalWitness> terminal(const FinCat& C);
// All arrows 1 → a; throws NoTerminalObject.
std::vector<ArrowId> global_elements(const FinCat& C, ObjectId a);

std::optional<ProductWitness> binary_product(const FinCat& C, ObjectId a, ObjectId b);
// ⟨f,g⟩ through the witness; throws NonCommutingCone on type mismatch.
ArrowId pairing(const FinCat& C, const ProductWitness& w, ArrowId f, ArrowId g);

std::optional<PullbackWitness> pullback_of(const FinCat& C, ArrowId f, ArrowId g);
PullbackCheck is_pullback(const FinCat& C, const Square& sq);
// Verifies the square and enumerates all mediators; throws PullbackMediatorMissing
// if the square is not a pullback.
PullbackWitness verify_pullback(const FinCat& C, const Square& sq);
// The unique arrow through the apex for the commuting cone (p, q).
ArrowId mediator(const FinCat& C, const PullbackWitness& w, ArrowId p, ArrowId q);

FinCat opposite(const FinCat& C);

}  // namespace depcat
