#include "relalg/domains.hpp"

#include "relalg/factors.hpp"

namespace relalg {

namespace {

Relation id_of(const CarrierPtr& c) { return Relation::identity(c); }

Evidence equality(std::string equation, const Relation& lhs, const Relation& rhs) {
  Evidence e{std::move(equation), lhs == rhs, std::nullopt, std::nullopt};
  if (!e.holds) {
    e.lhs = lhs;
    e.rhs = rhs;
  }
  return e;
}

Evidence inclusion(std::string equation, const Relation& lhs, const Relation& rhs) {
  Evidence e{std::move(equation), is_subset(lhs, rhs), std::nullopt, std::nullopt};
  if (!e.holds) {
    e.lhs = lhs;
    e.rhs = rhs;
  }
  return e;
}

Classification from_evidence(std::string name, std::vector<Evidence> evidence) {
  bool all = true;
  for (const auto& e : evidence) all = all && e.holds;
  return {std::move(name), all, std::move(evidence)};
}

Evidence heterogeneous(const Relation& r) {
  return {"src = dst (" + r.src().name() + " vs " + r.dst().name() + ")", false, std::nullopt, std::nullopt};
}

}  // namespace

Coreflexive ldom(const Relation& r) {
  return Coreflexive(intersect(id_of(r.src_ptr()), compose(r, converse(r))));
}

Coreflexive rdom(const Relation& r) {
  return Coreflexive(intersect(id_of(r.dst_ptr()), compose(converse(r), r)));
}

Relation per_ldom(const Relation& r) { return compose(sym_left_div(r, r), ldom(r)); }

Relation per_rdom(const Relation& r) { return compose(rdom(r), sym_right_div(r, r)); }

bool is_per(const Relation& r) {
  if (!r.is_homogeneous()) throw TypeError("is_per: relation " + r.src().name() + "~" + r.dst().name() + " is heterogeneous");
  return converse(r) == r && is_subset(compose(r, r), r);
}

bool is_functional(const Relation& r) { return compose(r, converse(r)) == ldom(r).relation(); }

bool is_injective(const Relation& r) { return compose(converse(r), r) == rdom(r).relation(); }

bool is_bijection(const Relation& r) { return is_functional(r) && is_injective(r); }

bool is_difunctional(const Relation& r) { return is_subset(compose(r, converse(r), r), r); }

bool is_rectangle(const Relation& r) {
  return compose(r, Relation::top(r.dst_ptr(), r.src_ptr()), r) == r;
}

bool is_square(const Relation& r) { return is_symmetric(r) && is_rectangle(r); }

bool is_core_relation(const Relation& r) {
  return ldom(r).relation() == per_ldom(r) && rdom(r).relation() == per_rdom(r);
}

bool PerForms::agree() const noexcept {
  for (bool b : holds) {
    if (b != holds[0]) return false;
  }
  return true;
}

PerForms per_forms(const Relation& r) {
  PerForms f;
  f.holds[0] = is_per(r);
  f.holds[1] = r == compose(converse(r), r);
  f.holds[2] = r == per_ldom(r);
  f.holds[3] = r == per_rdom(r);
  return f;
}

bool DifunctionalForms::agree() const noexcept {
  for (bool b : holds) {
    if (b != holds[0]) return false;
  }
  return true;
}

DifunctionalForms difunctional_forms(const Relation& r) {
  const Relation rc = converse(r);
  const Relation rrc = compose(r, rc);
  const Relation rcr = compose(rc, r);
  DifunctionalForms f;
  f.holds[0] = is_subset(compose(rrc, r), r);
  f.holds[1] = r == compose(rrc, r);
  f.holds[2] = compose(rdom(r), left_residual(r, r)) == rcr;
  f.holds[3] = per_rdom(r) == rcr;
  f.holds[4] = compose(right_residual(r, r), ldom(r)) == rrc;
  f.holds[5] = per_ldom(r) == rrc;
  f.holds[6] = r == intersect(r, converse(right_residual(left_residual(r, r), r)));
  return f;
}

std::vector<const Classification*> PredicateReport::all() const {
  return {&coreflexive, &functional, &injective, &bijection, &per, &difunctional, &rectangle, &square, &core_relation};
}

PredicateReport classify(const Relation& r) {
  PredicateReport rep;
  const Relation rc = converse(r);
  const Relation rrc = compose(r, rc);
  const Relation rcr = compose(rc, r);
  const Relation left = ldom(r);
  const Relation right = rdom(r);

  if (r.is_homogeneous()) {
    rep.coreflexive = from_evidence("coreflexive", {inclusion("R ⊆ 𝕀", r, id_of(r.src_ptr()))});
  } else {
    rep.coreflexive = from_evidence("coreflexive", {heterogeneous(r)});
  }
  rep.functional = from_evidence("functional", {equality("R∘R° = R<", rrc, left)});
  rep.injective = from_evidence("injective", {equality("R°∘R = R>", rcr, right)});
  rep.bijection = from_evidence("bijection", {equality("R∘R° = R<", rrc, left), equality("R°∘R = R>", rcr, right)});
  if (r.is_homogeneous()) {
    rep.per = from_evidence("per", {equality("R = R°", r, rc), inclusion("R∘R ⊆ R", compose(r, r), r)});
  } else {
    rep.per = from_evidence("per", {heterogeneous(r)});
  }
  rep.difunctional = from_evidence("difunctional", {inclusion("R∘R°∘R ⊆ R", compose(rrc, r), r)});
  const Relation rect = compose(r, Relation::top(r.dst_ptr(), r.src_ptr()), r);
  rep.rectangle = from_evidence("rectangle", {equality("R = R∘⊤∘R", r, rect)});
  if (r.is_homogeneous()) {
    rep.square = from_evidence("square", {equality("R = R∘⊤∘R", r, rect), equality("R = R°", r, rc)});
  } else {
    rep.square = from_evidence("square", {heterogeneous(r)});
  }
  rep.core_relation = from_evidence("core_relation", {equality("R< = R≺", left, per_ldom(r)), equality("R> = R≻", right, per_rdom(r))});
  return rep;
}

std::vector<NamedCheck> domain_law_suite(const Relation& r, const Relation& s, const Relation& p) {
  if (!(r.dst() == s.src()) || !p.is_homogeneous() || !(p.src() == r.dst())) {
    throw TypeError("domain_law_suite: expected R: A~B, S: B~C and p on B");
  }
  if (!is_coreflexive(p)) throw TypeError("domain_law_suite: p is not coreflexive");
  std::vector<NamedCheck> out;
  const Relation rc = converse(r);
  const Relation top_ab = Relation::top(r.src_ptr(), r.dst_ptr());
  const Relation left = ldom(r);
  const Relation right = rdom(r);
  const Relation bot_a = Relation::bottom(r.src_ptr(), r.src_ptr());
  const Relation bot_b = Relation::bottom(r.dst_ptr(), r.dst_ptr());

  {
    const bool x = is_subset(right, p);
    const bool y = is_subset(r, compose(top_ab, p));
    const bool z = is_subset(r, compose(r, p));
    out.push_back({"R> ⊆ p ≡ R ⊆ ⊤∘p ≡ R ⊆ R∘p", x == y && y == z});
  }
  out.push_back({"R = R∘p ≡ R> = R>∘p", (r == compose(r, p)) == (right == compose(right, p))});
  out.push_back({"R<∘R = R = R∘R>", compose(left, r) == r && compose(r, right) == r});
  {
    const bool x = left == bot_a;
    const bool y = r.empty();
    const bool z = right == bot_b;
    out.push_back({"R< = ⊥ ≡ R = ⊥ ≡ R> = ⊥", x == y && y == z});
  }
  out.push_back({"⊤∘R> = ⊤∘R", compose(Relation::top(r.dst_ptr(), r.dst_ptr()), right) ==
                                   compose(Relation::top(r.dst_ptr(), r.src_ptr()), r)});
  out.push_back({"(R°)> = R<", rdom(rc) == ldom(r)});
  out.push_back({"(R∘S)> = (R>∘S)>", rdom(compose(r, s)) == rdom(compose(right, s))});

  const Relation pl = per_ldom(r);
  const Relation pr = per_rdom(r);
  const Relation eq = sym_right_div(r, r);
  out.push_back({"R≻ = R>∘(R\\\\R) = (R\\\\R)∘R>", pr == compose(right, eq) && pr == compose(eq, right)});
  out.push_back({"R≺∘R = R = R∘R≻", compose(pl, r) == r && compose(r, pr) == r});
  out.push_back({"(R≻)< = R> = (R≻)>", ldom(pr).relation() == right && rdom(pr).relation() == right});
  out.push_back({"R≺ and R≻ are pers", is_per(pl) && is_per(pr)});
  return out;
}

}  // namespace relalg
