#include "depcat/sigmacat.hpp"

namespace depcat {

namespace {

bool sigma_shape_ok(const FamStruct& F, const SigmaStruct& S) {
  return S.sigma_obj.size() == F.size() && S.pr1.size() == F.size() &&
         S.sigma_arr.size() == F.size();
}

}  // namespace

LawReport check_sigma_laws(const FinCat& C, const FamStruct& F, const SigmaStruct& S) {
  LawReport report{"sigma", {}};
  if (!sigma_shape_ok(F, S)) throw InvalidSpec("sigma tables must cover every family-arrow");

  for (FamArrowId lam = 0; lam < F.size(); ++lam) {
    report.tally(laws::sigma_typing);
    const ObjectId a = F.owner[lam];
    if (S.sigma_obj[lam] >= C.num_objects() || S.pr1[lam] >= C.num_arrows() ||
        C.dom(S.pr1[lam]) != S.sigma_obj[lam] || C.cod(S.pr1[lam]) != a) {
      report.fail(laws::sigma_typing, "pr₁ for " + F.names[lam]);
      continue;
    }
    for (ArrowId f = 0; f < C.num_arrows(); ++f) {
      if (C.cod(f) != a) continue;
      report.tally(laws::sigma_typing);
      const FamArrowId lam_f = F.restrict_raw(lam, f);
      const ArrowId s = S.sigma_arr[lam][f];
      if (lam_f >= F.size() || s >= C.num_arrows() || C.dom(s) != S.sigma_obj[lam_f] ||
          C.cod(s) != S.sigma_obj[lam])
        report.fail(laws::sigma_typing,
                    "Σ_" + F.names[lam] + "(" + C.arrow_name(f) + ")");
    }
  }
  if (!report.all_passed()) return report;

  for (FamArrowId lam = 0; lam < F.size(); ++lam) {
    const ObjectId a = F.owner[lam];
    for (ArrowId f = 0; f < C.num_arrows(); ++f) {
      if (C.cod(f) != a) continue;
      const FamArrowId lam_f = F.restrict_raw(lam, f);
      const std::string witness = "(" + F.names[lam] + ", " + C.arrow_name(f) + ")";
      report.tally(laws::sigma_square);
      // a mistyped restriction (broken fam layer) cannot form the square
      if (F.owner[lam_f] != C.dom(f)) {
        report.fail(laws::sigma_square, witness + ": restriction mistyped");
        continue;
      }
      if (C.compose_raw(f, S.pr1[lam_f]) != C.compose_raw(S.pr1[lam], S.sigma_arr[lam][f])) {
        report.fail(laws::sigma_square, witness);
        continue;
      }
      report.tally(laws::sigma_pullback);
      const Square sq{S.pr1[lam_f], S.sigma_arr[lam][f], f, S.pr1[lam]};
      if (PullbackCheck check = is_pullback(C, sq); !check.is_pullback)
        report.fail(laws::sigma_pullback, witness + ": " + check.reason);
    }
  }

  for (FamArrowId lam = 0; lam < F.size(); ++lam) {
    report.tally(laws::s1);
    if (S.sigma_arr[lam][C.identity(F.owner[lam])] != C.identity(S.sigma_obj[lam]))
      report.fail(laws::s1, "Σ_" + F.names[lam] + "(1) ≠ 1");
  }
  for (FamArrowId lam = 0; lam < F.size(); ++lam) {
    const ObjectId a = F.owner[lam];
    for (ArrowId f = 0; f < C.num_arrows(); ++f) {
      if (C.cod(f) != a) continue;
      const FamArrowId lam_f = F.restrict_raw(lam, f);
      for (ArrowId g = 0; g < C.num_arrows(); ++g) {
        if (C.cod(g) != C.dom(f)) continue;
        report.tally(laws::s2);
        if (S.sigma_arr[lam][C.compose_raw(f, g)] !=
            C.compose_raw(S.sigma_arr[lam][f], S.sigma_arr[lam_f][g]))
          report.fail(laws::s2, "(" + F.names[lam] + ", " + C.arrow_name(f) + ", " +
                                    C.arrow_name(g) + ")");
      }
    }
  }
  return report;
}

SigmaStruct trivial_sigma(const FinCat& C, const FamStruct& F) {
  SigmaStruct S;
  S.sigma_obj.resize(F.size());
  S.pr1.resize(F.size());
  S.sigma_arr.assign(F.size(), std::vector<ArrowId>(C.num_arrows(), kNone));
  for (FamArrowId lam = 0; lam < F.size(); ++lam) {
    const ObjectId a = F.owner[lam];
    S.sigma_obj[lam] = a;
    S.pr1[lam] = C.identity(a);
    for (ArrowId f = 0; f < C.num_arrows(); ++f)
      if (C.cod(f) == a) S.sigma_arr[lam][f] = f;
  }
  return S;
}

SigmaStruct product_sigma(const FinCat& C, const FamStruct& constant) {
  const std::size_t n = C.num_objects();
  if (constant.size() != n * n)
    throw InvalidSpec("product sigma expects the constant family structure");
  std::vector<std::optional<ProductWitness>> products(n * n);
  auto product = [&](ObjectId a, ObjectId b) -> const ProductWitness& {
    auto& slot = products[a * n + b];
    if (!slot) {
      auto w = binary_product(C, a, b);
      if (!w) throw MissingProduct(C.object_name(a) + " × " + C.object_name(b));
      slot = std::move(*w);
    }
    return *slot;
  };

  SigmaStruct S;
  S.sigma_obj.resize(constant.size());
  S.pr1.resize(constant.size());
  S.sigma_arr.assign(constant.size(), std::vector<ArrowId>(C.num_arrows(), kNone));
  for (FamArrowId lam = 0; lam < constant.size(); ++lam) {
    const ObjectId a = constant.owner[lam];
    const ObjectId b = static_cast<ObjectId>(lam % n);
    const ProductWitness& ab = product(a, b);
    S.sigma_obj[lam] = ab.apex;
    S.pr1[lam] = ab.pr_left;
    for (ArrowId f = 0; f < C.num_arrows(); ++f) {
      if (C.cod(f) != a) continue;
      const ProductWitness& cb = product(C.dom(f), b);
      // Σ_b f := ⟨f∘pr_c, pr_b⟩ =: f × 1_b
      S.sigma_arr[lam][f] =
          pairing(C, ab, C.compose_raw(f, cb.pr_left), cb.pr_right);
    }
  }
  return S;
}

PullbackWitness sigma_square_witness(const FinCat& C, const FamStruct& F, const SigmaStruct& S,
                                     FamArrowId lam, ArrowId f) {
  if (!sigma_shape_ok(F, S)) throw InvalidSpec("sigma tables must cover every family-arrow");
  if (lam >= F.size()) throw UnknownArrow("family id " + std::to_string(lam));
  if (C.cod(f) != F.owner[lam])
    throw TypeMismatch("square of " + F.names[lam] + " along " + C.arrow_name(f));
  const FamArrowId lam_f = F.restrict_raw(lam, f);
  return verify_pullback(C, Square{S.pr1[lam_f], S.sigma_arr[lam][f], f, S.pr1[lam]});
}

TransportPair transport(const FinCat& C, const FamStruct& F, const SigmaStruct& S, FamArrowId lam,
                        ArrowId i, ArrowId j) {
  auto t = terminal(C);
  if (!t) throw NoTerminalObject("transport arrows need a terminal object");
  C.check_arrow(i);
  C.check_arrow(j);
  const ObjectId a = F.owner[lam];
  if (C.dom(i) != t->object || C.cod(i) != a || C.dom(j) != t->object || C.cod(j) != a)
    throw TypeMismatch("transport elements must be global elements of " + C.object_name(a));
  if (i != j)
    throw NotEqualElements(C.arrow_name(i) + " ≠ " + C.arrow_name(j));

  const FamArrowId lam_i = F.restrict_raw(lam, i);
  const FamArrowId lam_j = F.restrict_raw(lam, j);
  // Part (i): Σ_λi is a mono and pr₁ is the unique arrow to 1.
  if (!C.is_mono(S.sigma_arr[lam][i]))
    throw PullbackMediatorMissing("Σ_λi is not a mono for (" + F.names[lam] + ", " +
                                  C.arrow_name(i) + ")");
  if (S.pr1[lam_i] != t->bang[S.sigma_obj[lam_i]])
    throw PullbackMediatorMissing("pr₁ over 1 is not the arrow to the terminal object");

  const PullbackWitness sq_i = sigma_square_witness(C, F, S, lam, i);
  const PullbackWitness sq_j = sigma_square_witness(C, F, S, lam, j);
  TransportPair tp;
  tp.lam_ji = mediator(C, sq_i, S.pr1[lam_j], S.sigma_arr[lam][j]);
  tp.lam_ij = mediator(C, sq_j, S.pr1[lam_i], S.sigma_arr[lam][i]);
  // Triangles and the iso property, exactly as in the proposition's proof.
  const bool ok =
      C.compose_raw(S.sigma_arr[lam][i], tp.lam_ji) == S.sigma_arr[lam][j] &&
      C.compose_raw(S.sigma_arr[lam][j], tp.lam_ij) == S.sigma_arr[lam][i] &&
      C.compose_raw(tp.lam_ji, tp.lam_ij) == C.identity(S.sigma_obj[lam_i]) &&
      C.compose_raw(tp.lam_ij, tp.lam_ji) == C.identity(S.sigma_obj[lam_j]);
  if (!ok)
    throw PullbackMediatorMissing("transports for (" + F.names[lam] + ", " + C.arrow_name(i) +
                                  ") do not form an iso");
  return tp;
}

}  // namespace depcat
