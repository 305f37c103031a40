#include "doctest.h"

#include "depcat/finset.hpp"
#include "depcat/instances.hpp"
#include "depcat/sigmacat.hpp"

using namespace depcat;

TEST_CASE("trivial sigma") {
  const FinSetSkeleton sk = finset_skeleton(2);
  const FamStruct F = constant_fam(sk.cat);
  const SigmaStruct S = trivial_sigma(sk.cat, F);
  for (FamArrowId lam = 0; lam < F.size(); ++lam) {
    CHECK(S.sigma_obj[lam] == F.owner[lam]);
    CHECK(S.pr1[lam] == sk.cat.identity(F.owner[lam]));
  }
  CHECK(check_sigma_laws(sk.cat, F, S).all_passed());

  const FinCat chain = chain_category(3);
  const FamStruct Fc = coslice_fam(chain);
  CHECK(check_sigma_laws(chain, Fc, trivial_sigma(chain, Fc)).all_passed());

  const RingTables r5 = ring_mod(5);
  const FinCat ring = ring_category(r5);
  const FamStruct Fr = ring_fam(r5, ring);
  CHECK(check_sigma_laws(ring, Fr, trivial_sigma(ring, Fr)).all_passed());
}

TEST_CASE("product sigma over constant families") {
  const FinSetSkeleton sk = finset_skeleton(1);
  const FamStruct F = constant_fam(sk.cat);
  const SigmaStruct S = product_sigma(sk.cat, F);
  CHECK(check_sigma_laws(sk.cat, F, S).all_passed());
  // Σ_λ 1 = 1 comes from pairing uniqueness
  for (FamArrowId lam = 0; lam < F.size(); ++lam)
    CHECK(S.sigma_arr[lam][sk.cat.identity(F.owner[lam])] == sk.cat.identity(S.sigma_obj[lam]));

  // lattice products: Σ_a b = min(a, b) on a chain
  const FinCat chain = chain_category(4);
  const FamStruct Fc = constant_fam(chain);
  const SigmaStruct Sc = product_sigma(chain, Fc);
  CHECK(check_sigma_laws(chain, Fc, Sc).all_passed());
  const std::size_t n = chain.num_objects();
  for (FamArrowId lam = 0; lam < Fc.size(); ++lam)
    CHECK(Sc.sigma_obj[lam] == std::min<ObjectId>(Fc.owner[lam], lam % n));

  // missing products are reported with the offending pair
  const FinSetSkeleton sk3 = finset_skeleton(3);
  CHECK_THROWS_AS((void)product_sigma(sk3.cat, constant_fam(sk3.cat)), MissingProduct);
}

TEST_CASE("ring sigma: the crings formulas") {
  const RingTables R = ring_mod(4);
  const FinCat C = ring_category(R);
  const FamStruct F = ring_fam(R, C);
  const SigmaStruct S = ring_sigma(R, C, F);

  // (a,b) = (1,2): pr₁ = 1·2 = 2 and Σ_{(1,2)}3 = 3·(1+3+2+1) = 1 (mod 4)
  CHECK(S.pr1[1 * 4 + 2] == 2);
  CHECK(S.sigma_arr[1 * 4 + 2][3] == 1);
  // c = 0 is the identity arrow: (s₁)
  for (FamArrowId lam = 0; lam < F.size(); ++lam) CHECK(S.sigma_arr[lam][0] == 0);

  CHECK(check_sigma_laws(C, F, S).all_passed());
  CHECK(check_fam_laws(C, F).all_passed());

  // square commutation as a ring identity, over Z/4 and Z/5
  for (std::size_t mod : {4u, 5u}) {
    const RingTables Rm = ring_mod(mod);
    for (std::uint32_t a = 0; a < mod; ++a)
      for (std::uint32_t b = 0; b < mod; ++b)
        for (std::uint32_t c = 0; c < mod; ++c) {
          const std::uint32_t lhs = Rm.plus(c, Rm.times(Rm.plus(c, a), Rm.plus(c, b)));
          const std::uint32_t rhs =
              Rm.plus(Rm.times(a, b), Rm.times(c, Rm.plus(Rm.one, Rm.plus(c, Rm.plus(b, a)))));
          CHECK(lhs == rhs);
        }
  }

  const RingTables R5 = ring_mod(5);
  const FinCat C5 = ring_category(R5);
  const FamStruct F5 = ring_fam(R5, C5);
  CHECK(check_sigma_laws(C5, F5, ring_sigma(R5, C5, F5)).all_passed());
}

TEST_CASE("finset sigma counting oracle") {
  const FinSetSkeleton sk = finset_skeleton(3);
  const FinSetFam F = finset_fam(sk, 2);
  const SigmaStruct S = finset_sigma(sk, F);
  CHECK(check_sigma_laws(sk.cat, F.fam, S).all_passed());
  for (FamArrowId lam = 0; lam < F.fam.size(); ++lam) {
    std::uint32_t total = 0;
    for (auto v : F.fibers[lam]) total += v;
    CHECK(S.sigma_obj[lam] == total);
  }
}

TEST_CASE("sigma law mutations are caught") {
  const FinSetSkeleton sk = finset_skeleton(2);
  const FinSetFam F = finset_fam(sk, 1);
  SigmaStruct S = finset_sigma(sk, F);
  // flip one Σ_λf entry to a different same-hom arrow, if one exists
  bool flipped = false;
  for (FamArrowId lam = 0; lam < F.fam.size() && !flipped; ++lam)
    for (ArrowId f = 0; f < sk.cat.num_arrows() && !flipped; ++f) {
      if (sk.cat.cod(f) != F.fam.owner[lam] || sk.cat.is_identity(f)) continue;
      const ArrowId cur = S.sigma_arr[lam][f];
      for (ArrowId cand : sk.cat.hom(sk.cat.dom(cur), sk.cat.cod(cur)))
        if (cand != cur) {
          S.sigma_arr[lam][f] = cand;
          flipped = true;
          break;
        }
    }
  REQUIRE(flipped);
  const LawReport r = check_sigma_laws(sk.cat, F.fam, S);
  CHECK_FALSE(r.all_passed());
}

TEST_CASE("transports collapse to identities in strict instances") {
  const FinSetSkeleton sk = finset_skeleton(3);
  const FinSetFam F = finset_fam(sk, 1);
  const SigmaStruct S = finset_sigma(sk, F);
  auto t = terminal(sk.cat);
  REQUIRE(t.has_value());
  for (FamArrowId lam = 0; lam < F.fam.size(); ++lam)
    for (ArrowId i : sk.cat.hom(t->object, F.fam.owner[lam])) {
      const TransportPair tp = transport(sk.cat, F.fam, S, lam, i, i);
      const FamArrowId lam_i = F.fam.restrict_raw(lam, i);
      CHECK(tp.lam_ij == sk.cat.identity(S.sigma_obj[lam_i]));
      CHECK(tp.lam_ji == sk.cat.identity(S.sigma_obj[lam_i]));
      // composed both ways = identity, via compose itself
      CHECK(sk.cat.compose(tp.lam_ji, tp.lam_ij) == sk.cat.identity(S.sigma_obj[lam_i]));
      CHECK(sk.cat.is_mono(S.sigma_arr[lam][i]));
    }
}

TEST_CASE("transport preconditions") {
  const FinSetSkeleton sk = finset_skeleton(2);
  const FinSetFam F = finset_fam(sk, 1);
  const SigmaStruct S = finset_sigma(sk, F);
  const auto elems = sk.cat.hom(1, 2);
  REQUIRE(elems.size() == 2);
  const FamArrowId lam = F.fam.fam_of[2][1];
  CHECK_THROWS_AS((void)transport(sk.cat, F.fam, S, lam, elems[0], elems[1]), NotEqualElements);

  const RingTables r4 = ring_mod(4);
  const FinCat ring = ring_category(r4);
  const FamStruct Fr = ring_fam(r4, ring);
  CHECK_THROWS_AS((void)transport(ring, Fr, ring_sigma(r4, ring, Fr), 0, 0, 0),
                  NoTerminalObject);
}

TEST_CASE("pullback pasting: composable sigma squares") {
  // Pasting the verified square for g onto the square for f gives a square
  // that is_pullback accepts, exhaustively on the skeleton and on Z/4.
  const FinSetSkeleton sk = finset_skeleton(3);
  const FinSetFam F = finset_fam(sk, 1);
  const SigmaStruct S = finset_sigma(sk, F);
  auto paste_and_check = [](const FinCat& C, const FamStruct& fam, const SigmaStruct& sig) {
    std::size_t pasted = 0;
    for (FamArrowId lam = 0; lam < fam.size(); ++lam)
      for (ArrowId f = 0; f < C.num_arrows(); ++f) {
        if (C.cod(f) != fam.owner[lam]) continue;
        const FamArrowId lam_f = fam.restrict_raw(lam, f);
        for (ArrowId g = 0; g < C.num_arrows(); ++g) {
          if (C.cod(g) != C.dom(f)) continue;
          const FamArrowId lam_fg = fam.restrict_raw(lam_f, g);
          const Square outer{sig.pr1[lam_fg],
                             C.compose(sig.sigma_arr[lam][f], sig.sigma_arr[lam_f][g]),
                             C.compose(f, g), sig.pr1[lam]};
          REQUIRE(is_pullback(C, outer).is_pullback);
          ++pasted;
        }
      }
    return pasted;
  };
  CHECK(paste_and_check(sk.cat, F.fam, S) > 0);

  const RingTables r4 = ring_mod(4);
  const FinCat ring = ring_category(r4);
  const FamStruct Fr = ring_fam(r4, ring);
  CHECK(paste_and_check(ring, Fr, ring_sigma(r4, ring, Fr)) == 16 * 16);
}
