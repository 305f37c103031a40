#include "depcat/depcat.hpp"

namespace depcat {

DepArrowId apply_dep(const FinCat& C, const FamStruct& F, const DepStruct& D, DepArrowId phi,
                     ArrowId f) {
  if (phi >= D.size()) throw UnknownArrow("dependent arrow id " + std::to_string(phi));
  C.check_arrow(f);
  if (C.cod(f) != F.owner[D.dep_fam[phi]])
    throw TypeMismatch("applying " + D.names[phi] + " to " + C.arrow_name(f));
  return D.application[phi][f];
}

LawReport check_dep_laws(const FinCat& C, const FamStruct& F, const DepStruct& D) {
  LawReport report{"dep", {}};
  for (DepArrowId phi = 0; phi < D.size(); ++phi) {
    const FamArrowId lam = D.dep_fam[phi];
    const ObjectId a = F.owner[lam];
    for (ArrowId f = 0; f < C.num_arrows(); ++f) {
      if (C.cod(f) != a) continue;
      report.tally(laws::dep_typing);
      const DepArrowId psi = D.apply_raw(phi, f);
      if (psi >= D.size() || D.dep_fam[psi] != F.restrict_raw(lam, f))
        report.fail(laws::dep_typing,
                    D.names[phi] + "(" + C.arrow_name(f) + ") lands outside dHom(" +
                        C.object_name(C.dom(f)) + ", " + F.names[lam] + "∘" + C.arrow_name(f) +
                        ")");
    }
  }
  for (DepArrowId phi = 0; phi < D.size(); ++phi) {
    report.tally(laws::dep1);
    if (D.apply_raw(phi, C.identity(F.owner[D.dep_fam[phi]])) != phi)
      report.fail(laws::dep1, D.names[phi] + "(1) ≠ " + D.names[phi]);
  }
  for (DepArrowId phi = 0; phi < D.size(); ++phi) {
    const ObjectId a = F.owner[D.dep_fam[phi]];
    for (ArrowId f = 0; f < C.num_arrows(); ++f) {
      if (C.cod(f) != a) continue;
      const DepArrowId phi_f = D.apply_raw(phi, f);
      if (phi_f >= D.size()) continue;  // reported under dep.typing
      for (ArrowId g = 0; g < C.num_arrows(); ++g) {
        if (C.cod(g) != C.dom(f)) continue;
        report.tally(laws::dep2);
        if (D.apply_raw(phi, C.compose_raw(f, g)) != D.apply_raw(phi_f, g))
          report.fail(laws::dep2, "(" + D.names[phi] + ", " + C.arrow_name(f) + ", " +
                                      C.arrow_name(g) + ")");
      }
    }
  }
  return report;
}

DepStruct trivial_dep(const FinCat& C, const FamStruct& F) {
  DepStruct D;
  D.dep_of.resize(F.size());
  for (FamArrowId lam = 0; lam < F.size(); ++lam) {
    D.dep_fam.push_back(lam);
    D.dep_of[lam].push_back(lam);
    D.names.push_back("∗(" + F.names[lam] + ")");
    D.carrier.push_back(kNone);
  }
  D.application.assign(D.size(), std::vector<DepArrowId>(C.num_arrows(), kNone));
  for (DepArrowId phi = 0; phi < D.size(); ++phi)
    for (ArrowId f = 0; f < C.num_arrows(); ++f)
      if (C.cod(f) == F.owner[phi]) D.application[phi][f] = F.restrict_raw(phi, f);
  return D;
}

DepStruct constant_dep(const FinCat& C, const FamStruct& constant) {
  const std::size_t n = C.num_objects();
  if (constant.size() != n * n)
    throw InvalidSpec("constant dep expects the constant family structure");
  DepStruct D;
  D.dep_of.resize(constant.size());
  std::vector<std::vector<DepArrowId>> by_arrow(constant.size());
  for (FamArrowId lam = 0; lam < constant.size(); ++lam) {
    const ObjectId a = constant.owner[lam];
    const ObjectId b = static_cast<ObjectId>(lam % n);
    by_arrow[lam].assign(C.num_arrows(), kNone);
    for (ArrowId x : C.hom(a, b)) {
      const DepArrowId id = static_cast<DepArrowId>(D.size());
      by_arrow[lam][x] = id;
      D.dep_fam.push_back(lam);
      D.dep_of[lam].push_back(id);
      D.names.push_back(C.arrow_name(x) + ":" + constant.names[lam]);
      D.carrier.push_back(x);
    }
  }
  D.application.assign(D.size(), std::vector<DepArrowId>(C.num_arrows(), kNone));
  for (DepArrowId phi = 0; phi < D.size(); ++phi) {
    const FamArrowId lam = D.dep_fam[phi];
    for (ArrowId g = 0; g < C.num_arrows(); ++g)
      if (C.cod(g) == constant.owner[lam])
        D.application[phi][g] =
            by_arrow[constant.restrict_raw(lam, g)][C.compose_raw(D.carrier[phi], g)];
  }
  return D;
}

std::vector<ArrowId> dependent_objects(const FinCat& C, const FamStruct& F, const SigmaStruct& S,
                                       FamArrowId lam) {
  const ObjectId a = F.owner[lam];
  std::vector<ArrowId> sections;
  for (ArrowId phi : C.hom(a, S.sigma_obj[lam]))
    if (C.compose_raw(S.pr1[lam], phi) == C.identity(a)) sections.push_back(phi);
  return sections;
}

DepStruct global_sections_dep(const FinCat& C, const FamStruct& F, const SigmaStruct& S) {
  DepStruct D;
  D.dep_of.resize(F.size());
  std::vector<std::vector<DepArrowId>> by_arrow(F.size(),
                                                std::vector<DepArrowId>(C.num_arrows(), kNone));
  for (FamArrowId lam = 0; lam < F.size(); ++lam)
    for (ArrowId phi : dependent_objects(C, F, S, lam)) {
      const DepArrowId id = static_cast<DepArrowId>(D.size());
      by_arrow[lam][phi] = id;
      D.dep_fam.push_back(lam);
      D.dep_of[lam].push_back(id);
      D.names.push_back(C.arrow_name(phi) + "⊢" + F.names[lam]);
      D.carrier.push_back(phi);
    }
  D.application.assign(D.size(), std::vector<DepArrowId>(C.num_arrows(), kNone));
  for (FamArrowId lam = 0; lam < F.size(); ++lam) {
    const ObjectId a = F.owner[lam];
    for (ArrowId f = 0; f < C.num_arrows(); ++f) {
      if (C.cod(f) != a) continue;
      const ObjectId b = C.dom(f);
      const FamArrowId lam_f = F.restrict_raw(lam, f);
      const PullbackWitness square = sigma_square_witness(C, F, S, lam, f);
      for (DepArrowId phi : D.dep_of[lam]) {
        const ArrowId sec = D.carrier[phi];
        const ArrowId phi_f = mediator(C, square, C.identity(b), C.compose_raw(sec, f));
        // The theorem's defining equations, re-verified on the mediator.
        if (C.compose_raw(S.sigma_arr[lam][f], phi_f) != C.compose_raw(sec, f) ||
            C.compose_raw(S.pr1[lam_f], phi_f) != C.identity(b))
          throw PullbackMediatorMissing("section application for (" + D.names[phi] + ", " +
                                        C.arrow_name(f) + ")");
        if (by_arrow[lam_f][phi_f] == kNone)
          throw PullbackMediatorMissing("application of " + D.names[phi] + " along " +
                                        C.arrow_name(f) + " is not a section");
        D.application[phi][f] = by_arrow[lam_f][phi_f];
      }
    }
  }
  return D;
}

ArrowId section_arrow(const DepStruct& D, DepArrowId phi) {
  if (phi >= D.size() || D.carrier[phi] == kNone)
    throw UnknownArrow("dep arrow " + std::to_string(phi) + " has no carrier arrow");
  return D.carrier[phi];
}

DepObjectBijection dep_object_bijection(const FinCat& C, ObjectId a, ObjectId b) {
  auto w = binary_product(C, a, b);
  if (!w) throw MissingProduct(C.object_name(a) + " × " + C.object_name(b));
  DepObjectBijection bij;
  bij.product = std::move(*w);
  bij.hom_ab = C.hom(a, b);
  for (ArrowId phi : C.hom(a, bij.product.apex))
    if (C.compose_raw(bij.product.pr_left, phi) == C.identity(a)) bij.sections.push_back(phi);
  for (ArrowId x : bij.hom_ab)
    bij.e.push_back(pairing(C, bij.product, C.identity(a), x));
  for (ArrowId phi : bij.sections)
    bij.j.push_back(C.compose_raw(bij.product.pr_right, phi));
  return bij;
}

LawReport check_dep_object_bijection(const FinCat& C, const DepObjectBijection& bij) {
  LawReport report{"exdo2", {}};
  report.tally(laws::exdo2_bij);
  if (bij.hom_ab.size() != bij.sections.size())
    report.fail(laws::exdo2_bij, "|Hom| = " + std::to_string(bij.hom_ab.size()) +
                                     " but |𝒟| = " + std::to_string(bij.sections.size()));
  for (std::size_t k = 0; k < bij.hom_ab.size(); ++k) {
    report.tally(laws::exdo2_bij);
    // j(e(f)) = pr_b ∘ ⟨1, f⟩ = f
    if (C.compose_raw(bij.product.pr_right, bij.e[k]) != bij.hom_ab[k])
      report.fail(laws::exdo2_bij, "j(e(" + C.arrow_name(bij.hom_ab[k]) + "))");
  }
  for (std::size_t s = 0; s < bij.sections.size(); ++s) {
    report.tally(laws::exdo2_bij);
    // e(j(φ)) = ⟨1, pr_b∘φ⟩ = φ
    if (pairing(C, bij.product, C.identity(bij.product.left), bij.j[s]) != bij.sections[s])
      report.fail(laws::exdo2_bij, "e(j(" + C.arrow_name(bij.sections[s]) + "))");
  }
  return report;
}

Presheaf dep_presheaf(const FinCat& C, const FamStruct& F, const DepStruct& D) {
  const Presheaf famP = fam_presheaf(C, F);
  const ElementsIndex ix = elements_index(C, famP);
  Presheaf P;
  P.owner.assign(D.size(), kNone);
  P.names = D.names;
  P.elems.resize(ix.objects.size());
  for (std::uint32_t o = 0; o < ix.objects.size(); ++o) {
    const FamArrowId lam = ix.objects[o].second;
    P.elems[o] = D.dep_of[lam];
    for (DepArrowId phi : D.dep_of[lam]) P.owner[phi] = o;
  }
  P.action.resize(ix.arrows.size());
  for (std::uint32_t i = 0; i < ix.arrows.size(); ++i) {
    const auto& [f, lam] = ix.arrows[i];
    for (DepArrowId phi : D.dep_of[lam]) P.action[i].push_back(D.apply_raw(phi, f));
  }
  return P;
}

FinCat category_of_dep_arrows(const FinCat& C, const FamStruct& F, const DepStruct& D,
                              std::size_t max_arrows) {
  const FinCat elements = category_of_elements(C, fam_presheaf(C, F), max_arrows);
  return category_of_elements(elements, dep_presheaf(C, F, D), max_arrows);
}

}  // namespace depcat
