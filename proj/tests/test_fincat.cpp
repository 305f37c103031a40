#include "doctest.h"

#include "depcat/fincat.hpp"
#include "depcat/finset.hpp"
#include "depcat/instances.hpp"
#include "oracle_finset.hpp"

using namespace depcat;

namespace {

FinCat broken_unit_monoid() {
  // two-element monoid {e, a} with comp(e, a) deliberately wrong
  std::vector<CompTriple> comp = {{0, 0, 0}, {0, 1, 0}, {1, 0, 1}, {1, 1, 0}};
  return FinCat({"∗"}, {Arrow{0, 0}, Arrow{0, 0}}, {"e", "a"}, {0}, comp);
}

}  // namespace

TEST_CASE("compose: unit law and ring addition") {
  const FinSetSkeleton sk = finset_skeleton(2);
  for (ArrowId f = 0; f < sk.cat.num_arrows(); ++f) {
    CHECK(sk.cat.compose(sk.cat.identity(sk.cat.cod(f)), f) == f);
    CHECK(sk.cat.compose(f, sk.cat.identity(sk.cat.dom(f))) == f);
  }

  const FinCat ring4 = ring_category(ring_mod(4));
  CHECK(ring4.compose(3, 2) == 1);  // addition mod 4

  // swap ∘ swap = id_2, against the oracle composition
  const ArrowId swap = sk.arrow_of(2, 2, {1, 0});
  CHECK(oracle::compose({1, 0}, {1, 0}) == oracle::Fn{0, 1});
  CHECK(sk.cat.compose(swap, swap) == sk.cat.identity(2));
}

TEST_CASE("compose: error paths") {
  const FinSetSkeleton sk = finset_skeleton(2);
  const ArrowId into1 = sk.arrow_of(2, 1, {0, 0});
  const ArrowId into2 = sk.arrow_of(1, 2, {1});
  CHECK_THROWS_AS((void)sk.cat.compose(into1, into1), NotComposable);
  CHECK_NOTHROW((void)sk.cat.compose(into2, into1));
  CHECK_THROWS_AS((void)sk.cat.compose(kNone - 1, into1), UnknownArrow);
}

TEST_CASE("check_category_laws") {
  CHECK(check_category_laws(finset_skeleton(3).cat).all_passed());

  const FinCat one = discrete_category(1);  // terminal category
  CHECK(check_category_laws(one).all_passed());

  const LawReport broken = check_category_laws(broken_unit_monoid());
  CHECK_FALSE(broken.all_passed());
  REQUIRE(broken.find(laws::cat_unit) != nullptr);
  CHECK_FALSE(broken.find(laws::cat_unit)->passed);
  CHECK_FALSE(broken.find(laws::cat_unit)->witness.empty());
}

TEST_CASE("hom sets") {
  const FinCat disc = discrete_category(2);
  CHECK(disc.hom(0, 1).empty());

  const FinCat ring4 = ring_category(ring_mod(4));
  CHECK(ring4.hom(0, 0).size() == 4);

  const FinSetSkeleton sk = finset_skeleton(3);
  CHECK(sk.cat.hom(2, 3).size() == 9);  // 3² functions
  CHECK_THROWS_AS((void)sk.cat.hom(9, 0), UnknownObject);
}

TEST_CASE("is_mono") {
  const FinSetSkeleton sk = finset_skeleton(2);
  CHECK(sk.cat.is_mono(sk.cat.identity(2)));
  CHECK(sk.cat.is_mono(sk.arrow_of(1, 2, {0})));       // injective
  CHECK_FALSE(sk.cat.is_mono(sk.arrow_of(2, 1, {0, 0})));  // constant collapse
  // agreement with definitional brute force on every arrow
  for (ArrowId f = 0; f < sk.cat.num_arrows(); ++f) {
    bool mono = true;
    for (ObjectId d = 0; d < sk.cat.num_objects() && mono; ++d)
      for (ArrowId g : sk.cat.hom(d, sk.cat.dom(f)))
        for (ArrowId h : sk.cat.hom(d, sk.cat.dom(f)))
          if (g != h && sk.cat.compose(f, g) == sk.cat.compose(f, h)) mono = false;
    CHECK(sk.cat.is_mono(f) == mono);
  }
}

TEST_CASE("terminal object") {
  const FinSetSkeleton sk = finset_skeleton(3);
  auto t = terminal(sk.cat);
  REQUIRE(t.has_value());
  CHECK(t->object == 1);

  CHECK_FALSE(terminal(ring_category(ring_mod(4))).has_value());

  auto one = terminal(discrete_category(1));
  REQUIRE(one.has_value());
  CHECK(one->object == 0);
}

TEST_CASE("global elements") {
  const FinSetSkeleton sk = finset_skeleton(3);
  CHECK(global_elements(sk.cat, 3).size() == 3);
  CHECK(global_elements(sk.cat, 1) == std::vector<ArrowId>{sk.cat.identity(1)});
  CHECK(global_elements(sk.cat, 0).empty());
  CHECK_THROWS_AS(global_elements(ring_category(ring_mod(4)), 0), NoTerminalObject);
}

TEST_CASE("binary products") {
  const FinSetSkeleton sk4 = finset_skeleton(4);
  auto w = binary_product(sk4.cat, 2, 2);
  REQUIRE(w.has_value());
  CHECK(w->apex == 4);

  auto unit = binary_product(sk4.cat, 3, 1);
  REQUIRE(unit.has_value());
  CHECK(unit->apex == 3);

  // 2×3 = 6 falls outside the 0..4 skeleton: no apex can carry the cones
  CHECK_FALSE(binary_product(sk4.cat, 2, 3).has_value());

  const FinCat disc = discrete_category(2);
  CHECK_FALSE(binary_product(disc, 0, 1).has_value());
  auto same = binary_product(disc, 1, 1);
  REQUIRE(same.has_value());
  CHECK(same->apex == 1);
}

TEST_CASE("pullbacks against the fiber-product oracle") {
  const FinSetSkeleton sk = finset_skeleton(3);
  const ArrowId f = sk.arrow_of(2, 2, {1, 0});
  const ArrowId g = sk.arrow_of(3, 2, {0, 0, 1});
  auto w = pullback_of(sk.cat, f, g);
  REQUIRE(w.has_value());
  CHECK(std::size_t(w->apex) == oracle::fiber_product_size({1, 0}, {0, 0, 1}));
  // every mediator satisfies both triangles (full witness re-verification)
  for (const auto& [cone, m] : w->mediators) {
    CHECK(sk.cat.compose(w->leg_left, m) == cone.first);
    CHECK(sk.cat.compose(w->leg_right, m) == cone.second);
  }

  CHECK_THROWS_AS((void)pullback_of(sk.cat, sk.arrow_of(2, 1, {0, 0}), f), NotACospan);
}

TEST_CASE("is_pullback: identity square, witness square, broken square") {
  const FinSetSkeleton sk = finset_skeleton(3);
  for (ArrowId f = 0; f < sk.cat.num_arrows(); ++f) {
    // the paper's trivially-a-pullback square over f, with identity legs
    const Square sq{sk.cat.identity(sk.cat.dom(f)), f, f, sk.cat.identity(sk.cat.cod(f))};
    CHECK(is_pullback(sk.cat, sq).is_pullback);
  }

  const ArrowId f = sk.arrow_of(2, 2, {0, 1});
  const ArrowId g = sk.arrow_of(3, 2, {0, 1, 1});
  auto w = pullback_of(sk.cat, f, g);
  REQUIRE(w.has_value());
  CHECK(is_pullback(sk.cat, Square{w->leg_left, w->leg_right, f, g}).is_pullback);

  // apex too large: two mediators for some cone
  const ArrowId bang2 = sk.arrow_of(2, 1, {0, 0});
  const PullbackCheck bad =
      is_pullback(sk.cat, Square{bang2, bang2, sk.cat.identity(1), sk.cat.identity(1)});
  CHECK_FALSE(bad.is_pullback);
  CHECK(bad.cone.has_value());
  CHECK(bad.reason.find("two mediators") != std::string::npos);

  CHECK_THROWS_AS((void)is_pullback(sk.cat, Square{bang2, bang2, f, g}), IllTypedSquare);
}

TEST_CASE("ring category: every commuting square is a pullback") {
  const FinCat C = ring_category(ring_mod(4));
  std::size_t commuting = 0;
  for (ArrowId ll = 0; ll < 4; ++ll)
    for (ArrowId rl = 0; rl < 4; ++rl)
      for (ArrowId ls = 0; ls < 4; ++ls)
        for (ArrowId rs = 0; rs < 4; ++rs) {
          const Square sq{ll, rl, ls, rs};
          if (C.compose(ls, ll) != C.compose(rs, rl)) continue;
          ++commuting;
          CHECK(is_pullback(C, sq).is_pullback);
        }
  CHECK(commuting == 64);
}

TEST_CASE("mediator") {
  const FinSetSkeleton sk = finset_skeleton(4);
  auto w = pullback_of(sk.cat, sk.arrow_of(2, 1, {0, 0}), sk.arrow_of(2, 1, {0, 0}));
  REQUIRE(w.has_value());
  CHECK(w->apex == 4);  // pullback over the terminal object = product 2×2
  // the witness's own legs mediate to the identity
  CHECK(mediator(sk.cat, *w, w->leg_left, w->leg_right) == sk.cat.identity(w->apex));
  // point cones recover pair points: mediator of (i, j) selects a point of 4
  for (ArrowId p : sk.cat.hom(1, 2))
    for (ArrowId q : sk.cat.hom(1, 2)) {
      const ArrowId m = mediator(sk.cat, *w, p, q);
      CHECK(sk.cat.compose(w->leg_left, m) == p);
      CHECK(sk.cat.compose(w->leg_right, m) == q);
    }
  CHECK_THROWS_AS((void)mediator(sk.cat, *w, sk.arrow_of(1, 2, {0}), sk.arrow_of(1, 1, {0})),
                  NonCommutingCone);
}

TEST_CASE("ring mediator solves the additive equations") {
  const RingTables R = ring_mod(4);
  const FinCat C = ring_category(R);
  const ArrowId b = 1, c = 3;
  auto w = pullback_of(C, b, c);
  REQUIRE(w.has_value());
  // commuting cones (x, y) with b + x = c + y; mediator m solves leg + m = x
  for (ArrowId x = 0; x < 4; ++x)
    for (ArrowId y = 0; y < 4; ++y) {
      if (R.plus(b, x) != R.plus(c, y)) continue;
      const ArrowId m = mediator(C, *w, x, y);
      CHECK(R.plus(w->leg_left, m) == x);
      CHECK(R.plus(w->leg_right, m) == y);
    }
}

TEST_CASE("opposite") {
  const FinCat disc = discrete_category(2);
  CHECK(opposite(disc) == disc);

  const FinCat ring4 = ring_category(ring_mod(4));
  CHECK(opposite(ring4) == ring4);  // commutative monoid composition

  const FinSetSkeleton sk = finset_skeleton(3);
  const FinCat op = opposite(sk.cat);
  CHECK(op.num_arrows() == sk.cat.num_arrows());
  CHECK(check_category_laws(op).all_passed());
  CHECK(opposite(op) == sk.cat);
}
