#include "depcat/depsigma.hpp"

namespace depcat {

LawReport check_depsigma_laws(const FinCat& C, const FamStruct& F, const SigmaStruct& S,
                              const DepStruct& D, const Pr2Table& pr2) {
  LawReport report{"depsigma", {}};
  if (pr2.size() != F.size())
    throw InvalidSpec("pr₂ must assign a dependent arrow to every family-arrow");

  for (FamArrowId lam = 0; lam < F.size(); ++lam) {
    report.tally(laws::depsigma_typing);
    // Well-definedness: pr₂^{a,λ} ∈ dHom(Σₐλ, λ∘pr₁^{a,λ}).
    const DepArrowId p = pr2[lam];
    if (p >= D.size() || D.dep_fam[p] != F.restrict_raw(lam, S.pr1[lam]))
      report.fail(laws::depsigma_typing, "pr₂ for " + F.names[lam]);
  }
  if (!report.all_passed()) return report;

  for (FamArrowId lam = 0; lam < F.size(); ++lam) {
    const ObjectId a = F.owner[lam];
    for (ArrowId f = 0; f < C.num_arrows(); ++f) {
      if (C.cod(f) != a) continue;
      report.tally(laws::depsigma_compat);
      const FamArrowId lam_f = F.restrict_raw(lam, f);
      // pr₂^{b,λ∘f} = pr₂^{a,λ}(Σ_λf)
      if (pr2[lam_f] != D.apply_raw(pr2[lam], S.sigma_arr[lam][f]))
        report.fail(laws::depsigma_compat,
                    "(" + F.names[lam] + ", " + C.arrow_name(f) + ")");
    }
  }
  return report;
}

CanonicalDepSigma canonical_pr2(const FinCat& C, const FamStruct& F, const SigmaStruct& S) {
  CanonicalDepSigma out;
  out.dep = global_sections_dep(C, F, S);
  out.pr2.assign(F.size(), kNone);
  std::vector<std::vector<DepArrowId>> by_arrow(F.size(),
                                                std::vector<DepArrowId>(C.num_arrows(), kNone));
  for (DepArrowId phi = 0; phi < out.dep.size(); ++phi)
    by_arrow[out.dep.dep_fam[phi]][out.dep.carrier[phi]] = phi;
  for (FamArrowId lam = 0; lam < F.size(); ++lam) {
    const ArrowId one = C.identity(S.sigma_obj[lam]);
    const PullbackWitness square = sigma_square_witness(C, F, S, lam, S.pr1[lam]);
    const ArrowId arrow = mediator(C, square, one, one);
    const DepArrowId phi = by_arrow[F.restrict_raw(lam, S.pr1[lam])][arrow];
    if (phi == kNone)
      throw PullbackMediatorMissing("canonical pr₂ for " + F.names[lam] + " is not a section");
    out.pr2[lam] = phi;
  }
  return out;
}

LawReport pr2_prime_check(const FinCat& C, ObjectId a, ObjectId b) {
  LawReport report{"expr22", {}};
  auto ab = binary_product(C, a, b);
  if (!ab) throw MissingProduct(C.object_name(a) + " × " + C.object_name(b));
  auto ab_b = binary_product(C, ab->apex, b);
  if (!ab_b) throw MissingProduct(C.object_name(ab->apex) + " × " + C.object_name(b));

  // The (b-constant over a, pr_a) square of the product sigma:
  //   (a×b)×b --pr_a×1_b--> a×b, with both sides pr_a.
  const ArrowId sigma_arrow =
      pairing(C, *ab, C.compose_raw(ab->pr_left, ab_b->pr_left), ab_b->pr_right);
  const PullbackWitness square =
      verify_pullback(C, Square{ab_b->pr_left, sigma_arrow, ab->pr_left, ab->pr_left});
  const ArrowId one = C.identity(ab->apex);
  const ArrowId pr2_prime = mediator(C, square, one, one);

  report.tally(laws::expr22_eq);
  if (pr2_prime != pairing(C, *ab_b, one, ab->pr_right))
    report.fail(laws::expr22_eq, "pr₂' ≠ ⟨1, pr_b⟩ at (" + C.object_name(a) + ", " +
                                     C.object_name(b) + ")");
  report.tally(laws::expr22_eq);
  // Under the Ex-exdo2 identification for (a×b, b): j(pr₂') = pr_b.
  if (C.compose_raw(ab_b->pr_right, pr2_prime) != ab->pr_right)
    report.fail(laws::expr22_eq, "j(pr₂') ≠ pr_b at (" + C.object_name(a) + ", " +
                                     C.object_name(b) + ")");
  return report;
}

ElementAnalysis analyze_element(const FinCat& C, const FamStruct& F, const SigmaStruct& S,
                                const DepStruct& D, const Pr2Table& pr2, FamArrowId lam,
                                ArrowId z) {
  auto t = terminal(C);
  if (!t) throw NoTerminalObject("element analysis needs a terminal object");
  C.check_arrow(z);
  if (C.dom(z) != t->object || C.cod(z) != S.sigma_obj[lam])
    throw TypeMismatch(C.arrow_name(z) + " is not a global element of Σ(" + F.names[lam] + ")");

  ElementAnalysis out;
  out.report.suite = "elsigma";
  out.z = z;
  out.i = C.compose_raw(S.pr1[lam], z);
  out.lam_i = F.restrict_raw(lam, out.i);
  const PullbackWitness square = sigma_square_witness(C, F, S, lam, out.i);
  out.u = mediator(C, square, C.identity(t->object), z);

  out.report.tally(laws::elsigma_pr0);
  if (C.compose_raw(S.pr1[out.lam_i], out.u) != C.identity(t->object))
    out.report.fail(laws::elsigma_pr0, "!∘u ≠ 1 at " + C.arrow_name(z));
  out.report.tally(laws::elsigma_pr1);
  if (C.compose_raw(S.sigma_arr[lam][out.i], out.u) != z)
    out.report.fail(laws::elsigma_pr1, "z ≠ (Σ_λ pr₁(z))∘u at " + C.arrow_name(z));
  out.report.tally(laws::elsigma_pr2);
  if (D.apply_raw(pr2[lam], z) != D.apply_raw(pr2[out.lam_i], out.u))
    out.report.fail(laws::elsigma_pr2, "pr₂(z) ≠ pr₂(u) at " + C.arrow_name(z));
  return out;
}

ElementEqualityVerdict element_equality(const FinCat& C, const FamStruct& F, const SigmaStruct& S,
                                        const DepStruct& D, const Pr2Table& pr2, FamArrowId lam,
                                        ArrowId z, ArrowId w) {
  ElementEqualityVerdict out;
  out.report.suite = "elsigma";
  const ElementAnalysis az = analyze_element(C, F, S, D, pr2, lam, z);
  const ElementAnalysis aw = analyze_element(C, F, S, D, pr2, lam, w);
  out.equal = (z == w);
  out.proj_equal = (az.i == aw.i);
  if (out.proj_equal) {
    // Route through the transport computation even though strict instances
    // collapse it to identities.
    out.transports = transport(C, F, S, lam, az.i, aw.i);
    out.rhs = (aw.u == C.compose_raw(out.transports.lam_ij, az.u));
  }
  out.report.tally(laws::elsigma_pr3);
  if (out.equal != (out.proj_equal && out.rhs))
    out.report.fail(laws::elsigma_pr3, "(pr3) biconditional broken at (" + C.arrow_name(z) +
                                           ", " + C.arrow_name(w) + ")");
  out.report.tally(laws::elsigma_pr4);
  if (out.equal && D.apply_raw(pr2[lam], z) != D.apply_raw(pr2[lam], w))
    out.report.fail(laws::elsigma_pr4, "(pr4) broken at (" + C.arrow_name(z) + ", " +
                                           C.arrow_name(w) + ")");
  return out;
}

}  // namespace depcat
