#include "depcat/famcat.hpp"

#include <algorithm>

namespace depcat {

FamArrowId restrict_fam(const FinCat& C, const FamStruct& F, FamArrowId lam, ArrowId f) {
  if (lam >= F.size()) throw UnknownArrow("family id " + std::to_string(lam));
  C.check_arrow(f);
  if (C.cod(f) != F.owner[lam])
    throw TypeMismatch("restricting " + F.names[lam] + " along " + C.arrow_name(f) +
                       " with cod " + C.object_name(C.cod(f)));
  return F.restriction[lam][f];
}

LawReport check_fam_laws(const FinCat& C, const FamStruct& F) {
  LawReport report{"fam", {}};
  for (FamArrowId lam = 0; lam < F.size(); ++lam) {
    const ObjectId a = F.owner[lam];
    for (ObjectId b = 0; b < C.num_objects(); ++b)
      for (ArrowId f : C.hom(b, a)) {
        report.tally(laws::fam_typing);
        const FamArrowId mu = F.restrict_raw(lam, f);
        if (mu >= F.size() || F.owner[mu] != b)
          report.fail(laws::fam_typing,
                      F.names[lam] + "∘" + C.arrow_name(f) + " is not a family over " +
                          C.object_name(b));
      }
  }
  for (FamArrowId lam = 0; lam < F.size(); ++lam) {
    report.tally(laws::fam1);
    if (F.restrict_raw(lam, C.identity(F.owner[lam])) != lam)
      report.fail(laws::fam1, F.names[lam] + "∘1 ≠ " + F.names[lam]);
  }
  for (FamArrowId lam = 0; lam < F.size(); ++lam) {
    const ObjectId a = F.owner[lam];
    for (ArrowId f = 0; f < C.num_arrows(); ++f) {
      if (C.cod(f) != a) continue;
      const FamArrowId lam_f = F.restrict_raw(lam, f);
      if (lam_f >= F.size()) continue;  // reported under fam.typing
      for (ArrowId g = 0; g < C.num_arrows(); ++g) {
        if (C.cod(g) != C.dom(f)) continue;
        report.tally(laws::fam2);
        if (F.restrict_raw(lam, C.compose_raw(f, g)) != F.restrict_raw(lam_f, g))
          report.fail(laws::fam2, "(" + F.names[lam] + ", " + C.arrow_name(f) + ", " +
                                      C.arrow_name(g) + ")");
      }
    }
  }
  return report;
}

FamStruct constant_fam(const FinCat& C) {
  FamStruct F;
  const std::size_t n = C.num_objects();
  F.fam_of.resize(n);
  for (ObjectId a = 0; a < n; ++a)
    for (ObjectId b = 0; b < n; ++b) {
      const FamArrowId id = static_cast<FamArrowId>(F.owner.size());
      F.owner.push_back(a);
      F.fam_of[a].push_back(id);
      F.names.push_back(C.object_name(b) + "@" + C.object_name(a));
    }
  F.restriction.assign(F.size(), std::vector<FamArrowId>(C.num_arrows(), kNone));
  for (FamArrowId lam = 0; lam < F.size(); ++lam) {
    const ObjectId b = lam % n;  // the constant value
    for (ArrowId f = 0; f < C.num_arrows(); ++f)
      if (C.cod(f) == F.owner[lam]) F.restriction[lam][f] = C.dom(f) * n + b;
  }
  return F;
}

FamStruct coslice_fam(const FinCat& C) {
  FamStruct F;
  F.fam_of.resize(C.num_objects());
  std::vector<FamArrowId> by_arrow(C.num_arrows(), kNone);
  for (ObjectId a = 0; a < C.num_objects(); ++a)
    for (ArrowId x = 0; x < C.num_arrows(); ++x) {
      if (C.dom(x) != a) continue;
      const FamArrowId id = static_cast<FamArrowId>(F.owner.size());
      by_arrow[x] = id;
      F.owner.push_back(a);
      F.fam_of[a].push_back(id);
      F.names.push_back(C.arrow_name(x) + "/");
    }
  F.restriction.assign(F.size(), std::vector<FamArrowId>(C.num_arrows(), kNone));
  for (ArrowId x = 0; x < C.num_arrows(); ++x)
    for (ArrowId f = 0; f < C.num_arrows(); ++f)
      if (C.cod(f) == C.dom(x)) F.restriction[by_arrow[x]][f] = by_arrow[C.compose_raw(x, f)];
  return F;
}

Presheaf fam_presheaf(const FinCat& C, const FamStruct& F) {
  Presheaf P;
  P.elems = F.fam_of;
  P.owner = F.owner;
  P.names = F.names;
  P.action.assign(C.num_arrows(), {});
  for (ArrowId f = 0; f < C.num_arrows(); ++f) {
    const auto& src = F.fam_of[C.cod(f)];
    P.action[f].reserve(src.size());
    for (FamArrowId lam : src) P.action[f].push_back(F.restrict_raw(lam, f));
  }
  return P;
}

LawReport check_presheaf_functoriality(const FinCat& C, const Presheaf& P) {
  LawReport report{"presheaf", {}};
  std::vector<std::uint32_t> pos(P.owner.size(), kNone);
  for (const auto& v : P.elems)
    for (std::uint32_t i = 0; i < v.size(); ++i) pos[v[i]] = i;
  // P(f) must land in P(dom f); mistyped actions fail here and are excluded
  // from the composition chase so that chained lookups stay in range.
  std::vector<bool> typed(C.num_arrows(), true);
  for (ArrowId f = 0; f < C.num_arrows(); ++f)
    for (std::uint32_t i = 0; i < P.elems[C.cod(f)].size(); ++i) {
      const std::uint32_t x = P.action[f][i];
      if (x >= P.owner.size() || P.owner[x] != C.dom(f)) {
        report.fail(laws::presheaf_comp,
                    "P(" + C.arrow_name(f) + ") lands outside P(" +
                        C.object_name(C.dom(f)) + ")");
        typed[f] = false;
      }
    }
  for (ObjectId a = 0; a < C.num_objects(); ++a)
    for (std::uint32_t i = 0; i < P.elems[a].size(); ++i) {
      report.tally(laws::presheaf_unit);
      if (P.action[C.identity(a)][i] != P.elems[a][i])
        report.fail(laws::presheaf_unit, "P(1)(" + P.names[P.elems[a][i]] + ")");
    }
  for (ArrowId f = 0; f < C.num_arrows(); ++f) {
    if (!typed[f]) continue;
    for (ArrowId g = 0; g < C.num_arrows(); ++g) {
      if (C.cod(g) != C.dom(f) || !typed[g]) continue;
      const ArrowId fg = C.compose_raw(f, g);
      if (!typed[fg]) continue;
      for (std::uint32_t i = 0; i < P.elems[C.cod(f)].size(); ++i) {
        report.tally(laws::presheaf_comp);
        const std::uint32_t via = P.action[g][pos[P.action[f][i]]];
        if (P.action[fg][i] != via)
          report.fail(laws::presheaf_comp, "P(" + C.arrow_name(f) + "∘" + C.arrow_name(g) +
                                               ") at " + P.names[P.elems[C.cod(f)][i]]);
      }
    }
  }
  return report;
}

ElementsIndex elements_index(const FinCat& C, const Presheaf& P) {
  ElementsIndex ix;
  for (ObjectId a = 0; a < C.num_objects(); ++a)
    for (std::uint32_t x : P.elems[a]) ix.objects.emplace_back(a, x);
  for (ArrowId f = 0; f < C.num_arrows(); ++f)
    for (std::uint32_t x : P.elems[C.cod(f)]) ix.arrows.emplace_back(f, x);
  return ix;
}

FinCat category_of_elements(const FinCat& C, const Presheaf& P, std::size_t max_arrows) {
  const ElementsIndex ix = elements_index(C, P);
  if (ix.arrows.size() > max_arrows)
    throw BudgetExceeded("category of elements needs " + std::to_string(ix.arrows.size()) +
                         " arrows, budget " + std::to_string(max_arrows));
  std::vector<std::uint32_t> obj_of_elem(P.owner.size(), kNone);
  for (std::uint32_t o = 0; o < ix.objects.size(); ++o) obj_of_elem[ix.objects[o].second] = o;
  std::vector<std::uint32_t> pos(P.owner.size(), kNone);
  for (const auto& v : P.elems)
    for (std::uint32_t i = 0; i < v.size(); ++i) pos[v[i]] = i;

  std::vector<std::string> object_names;
  std::vector<ArrowId> identities(ix.objects.size(), kNone);
  for (const auto& [a, x] : ix.objects)
    object_names.push_back("(" + C.object_name(a) + "," + P.names[x] + ")");

  // arrow (f, x with x in P(cod f)): (dom f, P(f)(x)) → (cod f, x)
  std::vector<Arrow> arrows;
  std::vector<std::string> arrow_names;
  std::map<std::pair<ArrowId, std::uint32_t>, ArrowId> arrow_of;
  for (ArrowId i = 0; i < ix.arrows.size(); ++i) {
    const auto& [f, x] = ix.arrows[i];
    const std::uint32_t fx = P.action[f][pos[x]];
    arrows.push_back(Arrow{obj_of_elem[fx], obj_of_elem[x]});
    arrow_names.push_back("(" + C.arrow_name(f) + "," + P.names[x] + ")");
    arrow_of[{f, x}] = i;
    if (C.is_identity(f)) identities[obj_of_elem[x]] = i;
  }
  std::vector<CompTriple> comp;
  for (ArrowId i = 0; i < ix.arrows.size(); ++i) {
    const auto& [f, x] = ix.arrows[i];
    const std::uint32_t fx = P.action[f][pos[x]];
    for (ArrowId j = 0; j < ix.arrows.size(); ++j) {
      const auto& [g, y] = ix.arrows[j];
      if (y != fx || C.cod(g) != C.dom(f)) continue;
      comp.push_back(CompTriple{i, j, arrow_of.at({C.compose_raw(f, g), x})});
    }
  }
  return FinCat(std::move(object_names), std::move(arrows), std::move(arrow_names),
                std::move(identities), comp);
}

LawReport check_fam_functor(const FinCat& Csrc, const FamStruct& Fsrc, const FinCat& Cdst,
                            const FamStruct& Fdst, const FamFunctor& F) {
  if (F.object_map.size() != Csrc.num_objects() || F.arrow_map.size() != Csrc.num_arrows() ||
      F.fam_map.size() != Fsrc.size())
    throw InvalidSpec("fam-functor maps must cover the source category");
  LawReport report{"fam-functor", {}};
  for (ArrowId f = 0; f < Csrc.num_arrows(); ++f) {
    report.tally(laws::functor_typing);
    const ArrowId ff = F.arrow_map[f];
    if (ff >= Cdst.num_arrows() || Cdst.dom(ff) != F.object_map[Csrc.dom(f)] ||
        Cdst.cod(ff) != F.object_map[Csrc.cod(f)])
      report.fail(laws::functor_typing, "F(" + Csrc.arrow_name(f) + ")");
  }
  if (!report.all_passed()) return report;
  for (ObjectId a = 0; a < Csrc.num_objects(); ++a) {
    report.tally(laws::functor_unit);
    if (F.arrow_map[Csrc.identity(a)] != Cdst.identity(F.object_map[a]))
      report.fail(laws::functor_unit, "F(1_" + Csrc.object_name(a) + ")");
  }
  for (ArrowId g = 0; g < Csrc.num_arrows(); ++g)
    for (ArrowId f = 0; f < Csrc.num_arrows(); ++f) {
      if (Csrc.cod(f) != Csrc.dom(g)) continue;
      report.tally(laws::functor_comp);
      if (F.arrow_map[Csrc.compose_raw(g, f)] !=
          Cdst.compose_raw(F.arrow_map[g], F.arrow_map[f]))
        report.fail(laws::functor_comp,
                    "F(" + Csrc.arrow_name(g) + "∘" + Csrc.arrow_name(f) + ")");
    }
  for (FamArrowId lam = 0; lam < Fsrc.size(); ++lam) {
    report.tally(laws::functor_fam);
    const FamArrowId flam = F.fam_map[lam];
    if (flam >= Fdst.size() || Fdst.owner[flam] != F.object_map[Fsrc.owner[lam]]) {
      report.fail(laws::functor_fam, "F₂(" + Fsrc.names[lam] + ") mistyped");
      continue;
    }
    for (ArrowId f = 0; f < Csrc.num_arrows(); ++f) {
      if (Csrc.cod(f) != Fsrc.owner[lam]) continue;
      report.tally(laws::functor_fam);
      if (F.fam_map[Fsrc.restrict_raw(lam, f)] != Fdst.restrict_raw(flam, F.arrow_map[f]))
        report.fail(laws::functor_fam,
                    "F₂(" + Fsrc.names[lam] + "∘" + Csrc.arrow_name(f) + ")");
    }
  }
  return report;
}

LawReport check_fam_nat_trans(const FinCat& Csrc, const FamStruct& Fsrc, const FinCat& Cdst,
                              const FamStruct& Fdst, const FamFunctor& F, const FamFunctor& G,
                              const FamNatTrans& eta) {
  if (eta.component.size() != Csrc.num_objects())
    throw InvalidSpec("natural transformation needs one component per source object");
  LawReport report{"fam-nat-trans", {}};
  for (ObjectId a = 0; a < Csrc.num_objects(); ++a) {
    const ArrowId c = eta.component[a];
    if (c >= Cdst.num_arrows() || Cdst.dom(c) != F.object_map[a] ||
        Cdst.cod(c) != G.object_map[a])
      throw TypeMismatch("component at " + Csrc.object_name(a));
  }
  for (ArrowId f = 0; f < Csrc.num_arrows(); ++f) {
    report.tally(laws::nat_natural);
    const ObjectId b = Csrc.dom(f), a = Csrc.cod(f);
    if (Cdst.compose_raw(eta.component[a], F.arrow_map[f]) !=
        Cdst.compose_raw(G.arrow_map[f], eta.component[b]))
      report.fail(laws::nat_natural, "naturality at " + Csrc.arrow_name(f));
  }
  for (FamArrowId lam = 0; lam < Fsrc.size(); ++lam) {
    report.tally(laws::nat_triangle);
    const ObjectId a = Fsrc.owner[lam];
    if (Fdst.restrict_raw(G.fam_map[lam], eta.component[a]) != F.fam_map[lam])
      report.fail(laws::nat_triangle, "G(" + Fsrc.names[lam] + ")∘η ≠ F(" + Fsrc.names[lam] + ")");
  }
  return report;
}

CofamStruct cofam_from_op(const FinCat& C, const FamStruct& F_on_op) {
  CofamStruct co;
  co.owner = F_on_op.owner;
  co.cofam_of = F_on_op.fam_of;
  co.names = F_on_op.names;
  co.action.assign(F_on_op.size(), std::vector<FamArrowId>(C.num_arrows(), kNone));
  for (FamArrowId p = 0; p < F_on_op.size(); ++p)
    for (ArrowId f = 0; f < C.num_arrows(); ++f)
      if (C.dom(f) == co.owner[p]) co.action[p][f] = F_on_op.restrict_raw(p, f);
  return co;
}

LawReport check_cofam_laws(const FinCat& C, const CofamStruct& F) {
  LawReport report{"cofam", {}};
  for (FamArrowId p = 0; p < F.owner.size(); ++p)
    for (ArrowId f = 0; f < C.num_arrows(); ++f) {
      if (C.dom(f) != F.owner[p]) continue;
      report.tally(laws::cofam_typing);
      const FamArrowId q = F.action[p][f];
      if (q >= F.owner.size() || F.owner[q] != C.cod(f))
        report.fail(laws::cofam_typing, C.arrow_name(f) + "∘" + F.names[p]);
    }
  for (FamArrowId p = 0; p < F.owner.size(); ++p) {
    report.tally(laws::cofam1);
    if (F.action[p][C.identity(F.owner[p])] != p)
      report.fail(laws::cofam1, "1∘" + F.names[p] + " ≠ " + F.names[p]);
  }
  for (FamArrowId p = 0; p < F.owner.size(); ++p)
    for (ArrowId f = 0; f < C.num_arrows(); ++f) {
      if (C.dom(f) != F.owner[p]) continue;
      const FamArrowId fp = F.action[p][f];
      if (fp >= F.owner.size()) continue;
      for (ArrowId g = 0; g < C.num_arrows(); ++g) {
        if (C.dom(g) != C.cod(f)) continue;
        report.tally(laws::cofam2);
        if (F.action[p][C.compose_raw(g, f)] != F.action[fp][g])
          report.fail(laws::cofam2,
                      "(" + C.arrow_name(g) + ", " + C.arrow_name(f) + ", " + F.names[p] + ")");
      }
    }
  return report;
}

PullbackChooser canonical_chooser(const FinCat& C) {
  return [&C](ArrowId f, ArrowId lam) {
    auto w = pullback_of(C, f, lam);
    if (!w)
      throw MissingPullback("cospan (" + C.arrow_name(f) + ", " + C.arrow_name(lam) + ")");
    return *w;
  };
}

WeakFamStruct slice_wfam(const FinCat& C, const PullbackChooser& choose) {
  WeakFamStruct W;
  W.wrestrict.assign(C.num_arrows(), std::vector<ArrowId>(C.num_arrows(), kNone));
  W.wsigma.assign(C.num_arrows(), std::vector<ArrowId>(C.num_arrows(), kNone));
  for (ArrowId lam = 0; lam < C.num_arrows(); ++lam)
    for (ArrowId f = 0; f < C.num_arrows(); ++f) {
      if (C.cod(f) != C.cod(lam)) continue;
      const PullbackWitness w = choose(f, lam);
      if (C.cod(w.leg_left) != C.dom(f) || C.cod(w.leg_right) != C.dom(lam))
        throw TypeMismatch("chooser legs for (" + C.arrow_name(f) + ", " + C.arrow_name(lam) + ")");
      W.wrestrict[lam][f] = w.leg_left;
      W.wsigma[lam][f] = w.leg_right;
    }
  return W;
}

namespace {

// x ≅ y in C/b: an iso u: dom(x) → dom(y) with y∘u = x.
bool slice_iso(const FinCat& C, ArrowId x, ArrowId y) {
  for (ArrowId u : C.hom(C.dom(x), C.dom(y)))
    if (C.compose_raw(y, u) == x && C.is_iso(u)) return true;
  return false;
}

}  // namespace

LawReport check_weak_fam_laws(const FinCat& C, const WeakFamStruct& W) {
  LawReport report{"weak-fam", {}};
  for (ArrowId lam = 0; lam < C.num_arrows(); ++lam) {
    const ArrowId r = W.wrestrict[lam][C.identity(C.cod(lam))];
    report.tally(laws::fam1);
    if (r != lam) report.fail(laws::fam1, C.arrow_name(lam) + "∘1 ≠ " + C.arrow_name(lam));
    report.tally(laws::weak_fam1);
    if (!slice_iso(C, r, lam))
      report.fail(laws::weak_fam1, C.arrow_name(lam) + "∘1 not slice-isomorphic to " +
                                       C.arrow_name(lam));
  }
  for (ArrowId lam = 0; lam < C.num_arrows(); ++lam)
    for (ArrowId f = 0; f < C.num_arrows(); ++f) {
      if (C.cod(f) != C.cod(lam)) continue;
      for (ArrowId g = 0; g < C.num_arrows(); ++g) {
        if (C.cod(g) != C.dom(f)) continue;
        const ArrowId lhs = W.wrestrict[lam][C.compose_raw(f, g)];
        const ArrowId rhs = W.wrestrict[W.wrestrict[lam][f]][g];
        const std::string witness =
            "(" + C.arrow_name(lam) + ", " + C.arrow_name(f) + ", " + C.arrow_name(g) + ")";
        report.tally(laws::fam2);
        if (lhs != rhs) report.fail(laws::fam2, witness);
        report.tally(laws::weak_fam2);
        if (!slice_iso(C, lhs, rhs)) report.fail(laws::weak_fam2, witness);
      }
    }
  // The slice Sigma-arrows are strict only where the fam laws are: Σ_λ1 must
  // be an identity and Σ_λ(f∘g) must match the chosen legs on the nose.
  for (ArrowId lam = 0; lam < C.num_arrows(); ++lam) {
    report.tally(laws::s1);
    if (W.wsigma[lam][C.identity(C.cod(lam))] != C.identity(C.dom(lam)))
      report.fail(laws::s1, "Σ_" + C.arrow_name(lam) + "(1) ≠ 1");
  }
  for (ArrowId lam = 0; lam < C.num_arrows(); ++lam)
    for (ArrowId f = 0; f < C.num_arrows(); ++f) {
      if (C.cod(f) != C.cod(lam)) continue;
      const ArrowId lam_f = W.wrestrict[lam][f];  // the restricted slice object
      for (ArrowId g = 0; g < C.num_arrows(); ++g) {
        if (C.cod(g) != C.dom(f)) continue;
        report.tally(laws::s2);
        const ArrowId lhs = W.wsigma[lam][C.compose_raw(f, g)];
        const ArrowId inner = W.wsigma[lam_f][g];
        const std::string witness =
            "(" + C.arrow_name(lam) + ", " + C.arrow_name(f) + ", " + C.arrow_name(g) + ")";
        if (C.dom(lhs) != C.dom(inner) || !C.composable(W.wsigma[lam][f], inner) ||
            lhs != C.compose_raw(W.wsigma[lam][f], inner))
          report.fail(laws::s2, witness);
      }
    }
  return report;
}

}  // namespace depcat
