#include "depcat/fincat.hpp"

#include <algorithm>

namespace depcat {

FinCat::FinCat(std::vector<std::string> object_names, std::vector<Arrow> arrows,
               std::vector<std::string> arrow_names, std::vector<ArrowId> identities,
               const std::vector<CompTriple>& comp)
    : object_names_(std::move(object_names)),
      arrows_(std::move(arrows)),
      arrow_names_(std::move(arrow_names)),
      identities_(std::move(identities)) {
  const std::size_t n_obj = object_names_.size();
  const std::size_t n_arr = arrows_.size();
  if (arrow_names_.size() != n_arr)
    throw InvalidSpec("arrow name count does not match arrow count");
  if (identities_.size() != n_obj)
    throw InvalidSpec("identity table must have one entry per object");
  for (std::size_t f = 0; f < n_arr; ++f) {
    if (arrows_[f].dom >= n_obj || arrows_[f].cod >= n_obj)
      throw InvalidSpec("arrow " + arrow_names_[f] + " has out-of-range endpoint");
  }
  for (std::size_t a = 0; a < n_obj; ++a) {
    const ArrowId id = identities_[a];
    if (id >= n_arr) throw InvalidSpec("identity of " + object_names_[a] + " is not an arrow");
    if (arrows_[id].dom != a || arrows_[id].cod != a)
      throw InvalidSpec("identity of " + object_names_[a] + " is not an endo-arrow on it");
  }

  comp_.assign(n_arr * n_arr, kNone);
  for (const auto& t : comp) {
    if (t.g >= n_arr || t.f >= n_arr || t.gf >= n_arr)
      throw InvalidSpec("composition triple references an unknown arrow");
    if (arrows_[t.f].cod != arrows_[t.g].dom)
      throw InvalidSpec("composition entry (" + arrow_names_[t.g] + ", " + arrow_names_[t.f] +
                        ") is not a composable pair");
    if (arrows_[t.gf].dom != arrows_[t.f].dom || arrows_[t.gf].cod != arrows_[t.g].cod)
      throw InvalidSpec("composite of (" + arrow_names_[t.g] + ", " + arrow_names_[t.f] +
                        ") has wrong endpoints");
    ArrowId& slot = comp_[t.g * n_arr + t.f];
    if (slot != kNone) throw InvalidSpec("duplicate composition entry");
    slot = t.gf;
  }
  for (ArrowId g = 0; g < n_arr; ++g)
    for (ArrowId f = 0; f < n_arr; ++f)
      if ((arrows_[f].cod == arrows_[g].dom) != (comp_[g * n_arr + f] != kNone))
        throw InvalidSpec("composition must be defined exactly on composable pairs; bad pair (" +
                          arrow_names_[g] + ", " + arrow_names_[f] + ")");

  hom_.assign(n_obj, std::vector<std::vector<ArrowId>>(n_obj));
  for (ArrowId f = 0; f < n_arr; ++f) hom_[arrows_[f].dom][arrows_[f].cod].push_back(f);
}

ObjectId FinCat::check_object(ObjectId a) const {
  if (a >= num_objects()) throw UnknownObject("object id " + std::to_string(a));
  return a;
}

ArrowId FinCat::check_arrow(ArrowId f) const {
  if (f >= num_arrows()) throw UnknownArrow("arrow id " + std::to_string(f));
  return f;
}

bool FinCat::composable(ArrowId g, ArrowId f) const {
  return cod(f) == dom(g);
}

ArrowId FinCat::compose(ArrowId g, ArrowId f) const {
  check_arrow(g);
  check_arrow(f);
  if (!composable(g, f))
    throw NotComposable("cod(" + arrow_name(f) + ") = " + object_name(cod(f)) + " but dom(" +
                        arrow_name(g) + ") = " + object_name(dom(g)));
  return comp_[g * num_arrows() + f];
}

const std::vector<ArrowId>& FinCat::hom(ObjectId a, ObjectId b) const {
  return hom_[check_object(a)][check_object(b)];
}

bool FinCat::is_mono(ArrowId f) const {
  check_arrow(f);
  const ObjectId a = dom(f);
  for (ObjectId d = 0; d < num_objects(); ++d) {
    const auto& par = hom_[d][a];
    for (std::size_t i = 0; i < par.size(); ++i)
      for (std::size_t j = i + 1; j < par.size(); ++j)
        if (compose_raw(f, par[i]) == compose_raw(f, par[j])) return false;
  }
  return true;
}

bool FinCat::is_iso(ArrowId f) const {
  check_arrow(f);
  for (ArrowId g : hom(cod(f), dom(f)))
    if (compose_raw(g, f) == identity(dom(f)) && compose_raw(f, g) == identity(cod(f)))
      return true;
  return false;
}

std::vector<CompTriple> FinCat::comp_triples() const {
  std::vector<CompTriple> out;
  for (ArrowId g = 0; g < num_arrows(); ++g)
    for (ArrowId f = 0; f < num_arrows(); ++f)
      if (ArrowId gf = comp_[g * num_arrows() + f]; gf != kNone)
        out.push_back(CompTriple{g, f, gf});
  return out;
}

bool FinCat::operator==(const FinCat& other) const {
  return object_names_ == other.object_names_ &&
         arrow_names_ == other.arrow_names_ &&
         identities_ == other.identities_ && comp_ == other.comp_ &&
         [&] {
           if (arrows_.size() != other.arrows_.size()) return false;
           for (std::size_t i = 0; i < arrows_.size(); ++i)
             if (arrows_[i].dom != other.arrows_[i].dom || arrows_[i].cod != other.arrows_[i].cod)
               return false;
           return true;
         }();
}

LawReport check_category_laws(const FinCat& C) {
  LawReport report{"category", {}};
  for (ArrowId f = 0; f < C.num_arrows(); ++f) {
    report.tally(laws::cat_unit);
    if (C.compose_raw(C.identity(C.cod(f)), f) != f)
      report.fail(laws::cat_unit, "id∘" + C.arrow_name(f) + " ≠ " + C.arrow_name(f));
    else if (C.compose_raw(f, C.identity(C.dom(f))) != f)
      report.fail(laws::cat_unit, C.arrow_name(f) + "∘id ≠ " + C.arrow_name(f));
  }
  for (ArrowId f = 0; f < C.num_arrows(); ++f)
    for (ArrowId g = 0; g < C.num_arrows(); ++g) {
      if (C.cod(f) != C.dom(g)) continue;
      const ArrowId gf = C.compose_raw(g, f);
      for (ArrowId h = 0; h < C.num_arrows(); ++h) {
        if (C.cod(g) != C.dom(h)) continue;
        report.tally(laws::cat_assoc);
        if (C.compose_raw(h, gf) != C.compose_raw(C.compose_raw(h, g), f))
          report.fail(laws::cat_assoc, "(" + C.arrow_name(h) + ", " + C.arrow_name(g) + ", " +
                                           C.arrow_name(f) + ")");
      }
    }
  return report;
}

std::optional<TerminalWitness> terminal(const FinCat& C) {
  for (ObjectId t = 0; t < C.num_objects(); ++t) {
    TerminalWitness w;
    w.object = t;
    bool ok = true;
    for (ObjectId a = 0; a < C.num_objects() && ok; ++a) {
      const auto& arrows = C.hom(a, t);
      if (arrows.size() != 1)
        ok = false;
      else
        w.bang.push_back(arrows.front());
    }
    if (ok) return w;
  }
  return std::nullopt;
}

std::vector<ArrowId> global_elements(const FinCat& C, ObjectId a) {
  C.check_object(a);
  auto t = terminal(C);
  if (!t) throw NoTerminalObject("global elements of " + C.object_name(a));
  return C.hom(t->object, a);
}

namespace {

// Verifies the universal property for a commuting square over cospan
// (f: L→B, g: R→B) with legs (pl: P→L, pr: P→R). On success fills the
// mediator map; on failure reports the first violating cone.
bool universal_property(const FinCat& C, ArrowId f, ArrowId g, ObjectId apex, ArrowId pl,
                        ArrowId pr, std::map<std::pair<ArrowId, ArrowId>, ArrowId>* mediators,
                        PullbackCheck* violation) {
  const ObjectId L = C.dom(f), R = C.dom(g);
  for (ObjectId d = 0; d < C.num_objects(); ++d) {
    const auto& cands = C.hom(d, apex);
    for (ArrowId p : C.hom(d, L)) {
      const ArrowId fp = C.compose_raw(f, p);
      for (ArrowId q : C.hom(d, R)) {
        if (fp != C.compose_raw(g, q)) continue;
        ArrowId found = kNone;
        for (ArrowId m : cands) {
          if (C.compose_raw(pl, m) == p && C.compose_raw(pr, m) == q) {
            if (found != kNone) {
              if (violation) {
                violation->reason = "two mediators for cone (" + C.arrow_name(p) + ", " +
                                    C.arrow_name(q) + ")";
                violation->cone = {{p, q}};
              }
              return false;
            }
            found = m;
          }
        }
        if (found == kNone) {
          if (violation) {
            violation->reason =
                "no mediator for cone (" + C.arrow_name(p) + ", " + C.arrow_name(q) + ")";
            violation->cone = {{p, q}};
          }
          return false;
        }
        if (mediators) (*mediators)[{p, q}] = found;
      }
    }
  }
  return true;
}

}  // namespace

std::optional<ProductWitness> binary_product(const FinCat& C, ObjectId a, ObjectId b) {
  C.check_object(a);
  C.check_object(b);
  for (ObjectId apex = 0; apex < C.num_objects(); ++apex) {
    for (ArrowId pa : C.hom(apex, a)) {
      for (ArrowId pb : C.hom(apex, b)) {
        ProductWitness w;
        w.left = a;
        w.right = b;
        w.apex = apex;
        w.pr_left = pa;
        w.pr_right = pb;
        bool ok = true;
        for (ObjectId d = 0; d < C.num_objects() && ok; ++d) {
          const auto& cands = C.hom(d, apex);
          for (ArrowId f : C.hom(d, a)) {
            for (ArrowId g : C.hom(d, b)) {
              ArrowId found = kNone;
              for (ArrowId m : cands) {
                if (C.compose_raw(pa, m) == f && C.compose_raw(pb, m) == g) {
                  if (found != kNone) {
                    ok = false;
                    break;
                  }
                  found = m;
                }
              }
              if (found == kNone) ok = false;
              if (!ok) break;
              w.pairing[{f, g}] = found;
            }
            if (!ok) break;
          }
        }
        if (ok) return w;
      }
    }
  }
  return std::nullopt;
}

ArrowId pairing(const FinCat& C, const ProductWitness& w, ArrowId f, ArrowId g) {
  if (C.cod(f) != w.left || C.cod(g) != w.right || C.dom(f) != C.dom(g))
    throw NonCommutingCone("pairing of (" + C.arrow_name(f) + ", " + C.arrow_name(g) + ")");
  return w.pairing.at({f, g});
}

std::optional<PullbackWitness> pullback_of(const FinCat& C, ArrowId f, ArrowId g) {
  C.check_arrow(f);
  C.check_arrow(g);
  if (C.cod(f) != C.cod(g))
    throw NotACospan(C.arrow_name(f) + " and " + C.arrow_name(g) + " have different codomains");
  const ObjectId L = C.dom(f), R = C.dom(g);
  for (ObjectId apex = 0; apex < C.num_objects(); ++apex) {
    for (ArrowId pl : C.hom(apex, L)) {
      const ArrowId fpl = C.compose_raw(f, pl);
      for (ArrowId pr : C.hom(apex, R)) {
        if (fpl != C.compose_raw(g, pr)) continue;
        PullbackWitness w;
        w.into_left = f;
        w.into_right = g;
        w.apex = apex;
        w.leg_left = pl;
        w.leg_right = pr;
        if (universal_property(C, f, g, apex, pl, pr, &w.mediators, nullptr)) return w;
      }
    }
  }
  return std::nullopt;
}

PullbackCheck is_pullback(const FinCat& C, const Square& sq) {
  C.check_arrow(sq.left_leg);
  C.check_arrow(sq.right_leg);
  C.check_arrow(sq.left_side);
  C.check_arrow(sq.right_side);
  if (C.dom(sq.left_leg) != C.dom(sq.right_leg) ||
      C.cod(sq.left_leg) != C.dom(sq.left_side) ||
      C.cod(sq.right_leg) != C.dom(sq.right_side) ||
      C.cod(sq.left_side) != C.cod(sq.right_side))
    throw IllTypedSquare("legs (" + C.arrow_name(sq.left_leg) + ", " + C.arrow_name(sq.right_leg) +
                         "), sides (" + C.arrow_name(sq.left_side) + ", " +
                         C.arrow_name(sq.right_side) + ")");
  PullbackCheck check;
  if (C.compose_raw(sq.left_side, sq.left_leg) != C.compose_raw(sq.right_side, sq.right_leg)) {
    check.reason = "square does not commute";
    return check;
  }
  if (universal_property(C, sq.left_side, sq.right_side, C.dom(sq.left_leg), sq.left_leg,
                         sq.right_leg, nullptr, &check))
    check.is_pullback = true;
  return check;
}

PullbackWitness verify_pullback(const FinCat& C, const Square& sq) {
  PullbackCheck check = is_pullback(C, sq);
  if (!check.is_pullback)
    throw PullbackMediatorMissing("square on (" + C.arrow_name(sq.left_side) + ", " +
                                  C.arrow_name(sq.right_side) + "): " + check.reason);
  PullbackWitness w;
  w.into_left = sq.left_side;
  w.into_right = sq.right_side;
  w.apex = C.dom(sq.left_leg);
  w.leg_left = sq.left_leg;
  w.leg_right = sq.right_leg;
  universal_property(C, sq.left_side, sq.right_side, w.apex, w.leg_left, w.leg_right, &w.mediators,
                     nullptr);
  return w;
}

ArrowId mediator(const FinCat& C, const PullbackWitness& w, ArrowId p, ArrowId q) {
  C.check_arrow(p);
  C.check_arrow(q);
  if (C.dom(p) != C.dom(q) || C.cod(p) != C.dom(w.into_left) || C.cod(q) != C.dom(w.into_right) ||
      C.compose_raw(w.into_left, p) != C.compose_raw(w.into_right, q))
    throw NonCommutingCone("(" + C.arrow_name(p) + ", " + C.arrow_name(q) + ")");
  auto it = w.mediators.find({p, q});
  if (it == w.mediators.end())
    throw PullbackMediatorMissing("cone (" + C.arrow_name(p) + ", " + C.arrow_name(q) + ")");
  return it->second;
}

FinCat opposite(const FinCat& C) {
  std::vector<std::string> object_names;
  std::vector<Arrow> arrows;
  std::vector<std::string> arrow_names;
  std::vector<ArrowId> identities;
  for (ObjectId a = 0; a < C.num_objects(); ++a) {
    object_names.push_back(C.object_name(a));
    identities.push_back(C.identity(a));
  }
  for (ArrowId f = 0; f < C.num_arrows(); ++f) {
    arrows.push_back(Arrow{C.cod(f), C.dom(f)});
    arrow_names.push_back(C.arrow_name(f));
  }
  std::vector<CompTriple> comp;
  for (ArrowId g = 0; g < C.num_arrows(); ++g)
    for (ArrowId f = 0; f < C.num_arrows(); ++f)
      if (C.dom(f) == C.cod(g))  // composable in the opposite
        comp.push_back(CompTriple{g, f, C.compose_raw(f, g)});
  return FinCat(std::move(object_names), std::move(arrows), std::move(arrow_names),
                std::move(identities), comp);
}

}  // namespace depcat
