#pragma once

// Instance generators and the layered structure document: the operational
// surface behind `gen` and the law-suite runner.

#include <optional>
#include <string>
#include <vector>

#include "depcat/depcat.hpp"
#include "depcat/depsigma.hpp"
#include "depcat/famcat.hpp"
#include "depcat/fincat.hpp"
#include "depcat/finset.hpp"
#include "depcat/sigmacat.hpp"

namespace depcat {

struct RingTables {
  std::size_t n = 0;
  std::vector<std::uint32_t> add;  // n×n, row-major
  std::vector<std::uint32_t> mul;
  std::uint32_t zero = 0, one = 0;

  std::uint32_t plus(std::uint32_t a, std::uint32_t b) const { return add[a * n + b]; }
  std::uint32_t times(std::uint32_t a, std::uint32_t b) const { return mul[a * n + b]; }
};

RingTables ring_mod(std::size_t modulus);
// Validates the commutative-ring axioms exhaustively; throws NotARing.
RingTables ring_from_tables(std::vector<std::vector<std::uint32_t>> add,
                            std::vector<std::vector<std::uint32_t>> mul);

// One object ∗, arrows the ring elements, composition is +.
FinCat ring_category(const RingTables& R);
// fHom(∗) = R×R with (a,b)∘c = (c+a, c+b); family id of (a,b) is a·n+b.
FamStruct ring_fam(const RingTables& R, const FinCat& C);
// Σ∗(a,b) = ∗, pr₁ = a·b, Σ_{(a,b)}c = c(1+c+b+a).
SigmaStruct ring_sigma(const RingTables& R, const FinCat& C, const FamStruct& F);

FinCat discrete_category(std::size_t n);
// Thin category from a ≤ relation (reflexive-transitive closure taken,
// antisymmetry checked); chain n is 0 ≤ 1 ≤ … ≤ n−1.
FinCat poset_category(std::size_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& le);
FinCat chain_category(std::size_t n);
// One object, arrows the elements; unit detected, associativity checked.
FinCat monoid_category(const std::vector<std::vector<std::uint32_t>>& table);

struct InstanceSpec {
  std::string kind;  // finset | ring | discrete | poset | monoid | file
  // finset
  std::size_t max_object_size = 3;
  std::size_t fiber_cap = 2;
  // layer selectors; empty means the kind's default stack
  std::string fam;    // sets | constant | coslice | topos | none
  std::string sigma;  // sets | product | ring | trivial | none
  std::string dep;    // sets | constant | sections | trivial | none
  std::string pr2;    // sets | constant | canonical | trivial | absorbing | none
  // ring
  std::size_t modulus = 4;
  std::vector<std::vector<std::uint32_t>> add, mul;  // explicit tables, optional
  // discrete / poset / monoid
  std::size_t objects = 2;
  std::size_t chain = 3;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> relation;
  std::vector<std::vector<std::uint32_t>> table;
  // topos enumeration bound
  std::size_t budget = 2;
  // file
  std::string path;
};

struct FinSetData {
  std::size_t max_size = 0;
  std::size_t requested_cap = 0;
  std::size_t effective_cap = 0;
  std::vector<std::vector<std::uint32_t>> fam_fibers;  // per family id, sets fam only
  bool operator==(const FinSetData&) const = default;
};

struct StructureDocument {
  int version = 1;
  std::string kind;
  std::string meta;
  // Which construction each layer is; gates kind-specific suites (counting).
  std::string fam_kind, sigma_kind, dep_kind, pr2_kind;
  FinCat category;
  std::optional<FamStruct> fam;
  std::optional<SigmaStruct> sigma;
  std::optional<DepStruct> dep;
  std::optional<Pr2Table> pr2;
  std::optional<FinSetData> finset;

  bool operator==(const StructureDocument&) const = default;
};

// Builds the document and, by default, self-checks it against its applicable
// suites before returning (throws InvalidSpec on failure).
StructureDocument generate(const InstanceSpec& spec, bool self_check = true);

}  // namespace depcat
