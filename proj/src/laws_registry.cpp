#include <algorithm>

#include "relalg/domains.hpp"
#include "relalg/factors.hpp"
#include "relalg/indexcore.hpp"
#include "relalg/isomorph.hpp"
#include "relalg/laws.hpp"
#include "relalg/pointlattice.hpp"

namespace relalg {

namespace {

using Rel = Relation;
using Fn = std::function<bool(const Instance&)>;

constexpr std::size_t A = 0, B = 1, C = 2, D = 3;

Param rel(std::string n, std::size_t s, std::size_t d) { return {std::move(n), Kind::Relation, s, d}; }
Param cor(std::string n, std::size_t v) { return {std::move(n), Kind::Coreflexive, v, v}; }
Param per(std::string n, std::size_t v) { return {std::move(n), Kind::Per, v, v}; }
Param dif(std::string n, std::size_t s, std::size_t d) { return {std::move(n), Kind::Difunctional, s, d}; }
Param fun(std::string n, std::size_t s, std::size_t d) { return {std::move(n), Kind::Functional, s, d}; }
Param bij(std::string n, std::size_t s, std::size_t d) { return {std::move(n), Kind::Bijection, s, d}; }
Param pt(std::string n, std::size_t v) { return {std::move(n), Kind::Point, v, v}; }

Rel cv(const Rel& r) { return converse(r); }
Rel cp(const Rel& a, const Rel& b) { return compose(a, b); }
Rel cp(const Rel& a, const Rel& b, const Rel& c) { return compose(a, b, c); }
Rel top(const CarrierPtr& a, const CarrierPtr& b) { return Relation::top(a, b); }
Rel bot(const CarrierPtr& a, const CarrierPtr& b) { return Relation::bottom(a, b); }
Rel id(const CarrierPtr& a) { return Relation::identity(a); }
Rel ld(const Rel& r) { return ldom(r); }
Rel rd(const Rel& r) { return rdom(r); }
bool sub(const Rel& a, const Rel& b) { return is_subset(a, b); }
bool eq3(bool a, bool b, bool c) { return a == b && b == c; }

bool reflexive_transitive(const Rel& r) {
  return sub(id(r.src_ptr()), r) && sub(cp(r, r), r);
}

bool is_equivalence(const Rel& r) { return reflexive_transitive(r) && is_symmetric(r); }

// Column-class oracle: b, b' related by R≻ iff both are in R> and R relates
// the same elements to them.
Rel column_classes(const Rel& r) {
  const Rel t = cv(r);
  Rel out(r.dst_ptr(), r.dst_ptr());
  for (std::size_t b = 0; b < t.rows(); ++b) {
    for (std::size_t c = 0; c < t.rows(); ++c) {
      if (t.row(b) != 0 && t.row(b) == t.row(c)) out.insert(b, c);
    }
  }
  return out;
}

Rel join_of(const std::vector<Rel>& parts, const CarrierPtr& a, const CarrierPtr& b) {
  Rel out(a, b);
  for (const auto& p : parts) out = unite(out, p);
  return out;
}

std::vector<Rel> below_points(const Rel& p) {
  std::vector<Rel> out;
  for (const auto& a : points(p.src_ptr())) {
    if (sub(a, p)) out.push_back(a);
  }
  return out;
}

bool domains_equal(const Rel& j, const Rel& k) { return ld(j) == ld(k) && rd(j) == rd(k); }

// Bijections φ = R<∘φ0, ψ = R>∘ψ0 when they cover R's domains.
std::optional<IsoWitness> restricted_witness(const Rel& r, const Rel& phi0, const Rel& psi0) {
  Rel phi = cp(ld(r), phi0);
  Rel psi = cp(rd(r), psi0);
  if (!(cp(phi, cv(phi)) == ld(r)) || !(cp(psi, cv(psi)) == rd(r))) return std::nullopt;
  return IsoWitness{phi, psi};
}

Law make(std::string id, std::string statement, std::size_t vars, std::vector<Param> params, Fn f,
         std::size_t cap = 4) {
  return Law{std::move(id), std::move(statement), vars, std::move(params), std::move(f), cap};
}

std::vector<Law> build() {
  std::vector<Law> L;

  // Lattice, composition and converse.
  L.push_back(make("compose.associative", "(R∘S)∘T = R∘(S∘T)", 4, {rel("R", A, B), rel("S", B, C), rel("T", C, D)},
                   [](const Instance& in) {
                     const auto& [r, s, t] = std::tie(in.args[0], in.args[1], in.args[2]);
                     return cp(cp(r, s), t) == cp(r, cp(s, t));
                   }));
  L.push_back(make("compose.identity_unit", "𝕀∘R = R = R∘𝕀", 2, {rel("R", A, B)}, [](const Instance& in) {
    const auto& r = in.args[0];
    return cp(id(r.src_ptr()), r) == r && cp(r, id(r.dst_ptr())) == r;
  }));
  L.push_back(make("compose.bottom_zero", "⊥∘R = ⊥ = R∘⊥", 3, {rel("R", A, B)}, [](const Instance& in) {
    const auto& r = in.args[0];
    const auto& c = in.carriers[C];
    return cp(bot(c, r.src_ptr()), r).empty() && cp(r, bot(r.dst_ptr(), c)).empty();
  }));
  L.push_back(make("compose.distributes_left", "R∘(S ∪ T) = R∘S ∪ R∘T", 3,
                   {rel("R", A, B), rel("S", B, C), rel("T", B, C)}, [](const Instance& in) {
                     const auto& [r, s, t] = std::tie(in.args[0], in.args[1], in.args[2]);
                     return cp(r, unite(s, t)) == unite(cp(r, s), cp(r, t));
                   }));
  L.push_back(make("compose.distributes_right", "(R ∪ S)∘T = R∘T ∪ S∘T", 3,
                   {rel("R", A, B), rel("S", A, B), rel("T", B, C)}, [](const Instance& in) {
                     const auto& [r, s, t] = std::tie(in.args[0], in.args[1], in.args[2]);
                     return cp(unite(r, s), t) == unite(cp(r, t), cp(s, t));
                   }));
  L.push_back(make("converse.involution", "(R°)° = R", 2, {rel("R", A, B)},
                   [](const Instance& in) { return cv(cv(in.args[0])) == in.args[0]; }));
  L.push_back(make("converse.compose", "(R∘S)° = S°∘R°", 3, {rel("R", A, B), rel("S", B, C)}, [](const Instance& in) {
    return cv(cp(in.args[0], in.args[1])) == cp(cv(in.args[1]), cv(in.args[0]));
  }));
  L.push_back(make("converse.identity", "𝕀° = 𝕀", 1, {},
                   [](const Instance& in) { return cv(id(in.carriers[A])) == id(in.carriers[A]); }));
  L.push_back(make("converse.lattice", "(R ∪ S)° = R° ∪ S° ∧ (R ∩ S)° = R° ∩ S°", 2,
                   {rel("R", A, B), rel("S", A, B)}, [](const Instance& in) {
                     const auto& [r, s] = std::tie(in.args[0], in.args[1]);
                     return cv(unite(r, s)) == unite(cv(r), cv(s)) && cv(intersect(r, s)) == intersect(cv(r), cv(s));
                   }));
  L.push_back(make("lattice.partial_order", "⊆ is reflexive, antisymmetric and transitive", 2,
                   {rel("R", A, B), rel("S", A, B), rel("T", A, B)}, [](const Instance& in) {
                     const auto& [r, s, t] = std::tie(in.args[0], in.args[1], in.args[2]);
                     return sub(r, r) && (!(sub(r, s) && sub(s, r)) || r == s) &&
                            (!(sub(r, s) && sub(s, t)) || sub(r, t));
                   }));
  L.push_back(make("lattice.union_lub", "R ∪ S ⊆ T ≡ R ⊆ T ∧ S ⊆ T", 2, {rel("R", A, B), rel("S", A, B), rel("T", A, B)},
                   [](const Instance& in) {
                     const auto& [r, s, t] = std::tie(in.args[0], in.args[1], in.args[2]);
                     return sub(unite(r, s), t) == (sub(r, t) && sub(s, t));
                   }));
  L.push_back(make("lattice.intersect_glb", "T ⊆ R ∩ S ≡ T ⊆ R ∧ T ⊆ S", 2,
                   {rel("R", A, B), rel("S", A, B), rel("T", A, B)}, [](const Instance& in) {
                     const auto& [r, s, t] = std::tie(in.args[0], in.args[1], in.args[2]);
                     return sub(t, intersect(r, s)) == (sub(t, r) && sub(t, s));
                   }));
  L.push_back(make("lattice.bounds", "⊥ ⊆ R ⊆ ⊤", 2, {rel("R", A, B)}, [](const Instance& in) {
    const auto& r = in.args[0];
    return sub(bot(r.src_ptr(), r.dst_ptr()), r) && sub(r, top(r.src_ptr(), r.dst_ptr()));
  }));
  L.push_back(make("lattice.complement", "R ∪ ¬R = ⊤ ∧ R ∩ ¬R = ⊥", 2, {rel("R", A, B)}, [](const Instance& in) {
    const auto& r = in.args[0];
    return unite(r, complement(r)) == top(r.src_ptr(), r.dst_ptr()) && intersect(r, complement(r)).empty();
  }));
  L.push_back(make("dedekind.modular", "R∘S ∩ T ⊆ R∘(S ∩ R°∘T)", 3, {rel("R", A, B), rel("S", B, C), rel("T", A, C)},
                   [](const Instance& in) {
                     const auto& [r, s, t] = std::tie(in.args[0], in.args[1], in.args[2]);
                     return sub(intersect(cp(r, s), t), cp(r, intersect(s, cp(cv(r), t))));
                   }));
  L.push_back(make("dedekind.modular_dual", "S∘R ∩ T ⊆ (S ∩ T∘R°)∘R", 3,
                   {rel("S", A, B), rel("R", B, C), rel("T", A, C)}, [](const Instance& in) {
                     const auto& [s, r, t] = std::tie(in.args[0], in.args[1], in.args[2]);
                     return sub(intersect(cp(s, r), t), cp(intersect(s, cp(t, cv(r))), r));
                   }));
  L.push_back(make("dedekind.check_agrees", "dedekind_check reports both rules", 3,
                   {rel("R", A, B), rel("S", B, C), rel("T", A, C)}, [](const Instance& in) {
                     return dedekind_check(in.args[0], in.args[1], in.args[2]).holds();
                   }));
  L.push_back(make("cone.rule", "⊤∘R∘⊤ = ⊤ ∨ R = ⊥", 4, {rel("R", A, B)}, [](const Instance& in) {
    const auto& r = in.args[0];
    const auto& c = in.carriers[C];
    const auto& d = in.carriers[D];
    return r.empty() || cp(top(c, r.src_ptr()), r, top(r.dst_ptr(), d)) == top(c, d);
  }));
  L.push_back(make("cone.check_agrees", "cone_check(R)", 2, {rel("R", A, B)},
                   [](const Instance& in) { return cone_check(in.args[0]); }));
  L.push_back(make("coreflexive.idempotent", "p = p° = p∘p", 1, {cor("p", A)}, [](const Instance& in) {
    const auto& p = in.args[0];
    return p == cv(p) && p == cp(p, p);
  }));
  L.push_back(make("coreflexive.compose_is_meet", "p∘q = p ∩ q = q∘p", 1, {cor("p", A), cor("q", A)},
                   [](const Instance& in) {
                     const auto& [p, q] = std::tie(in.args[0], in.args[1]);
                     return cp(p, q) == intersect(p, q) && cp(q, p) == intersect(p, q);
                   }));

  // Factors.
  L.push_back(make("factor.left_galois", "T ⊆ R\\S ≡ R∘T ⊆ S", 3, {rel("R", A, B), rel("S", A, C), rel("T", B, C)},
                   [](const Instance& in) {
                     const auto& [r, s, t] = std::tie(in.args[0], in.args[1], in.args[2]);
                     return sub(t, left_residual(r, s)) == sub(cp(r, t), s);
                   }));
  L.push_back(make("factor.right_galois", "T ⊆ R/S ≡ T∘S ⊆ R", 3, {rel("R", A, B), rel("S", C, B), rel("T", A, C)},
                   [](const Instance& in) {
                     const auto& [r, s, t] = std::tie(in.args[0], in.args[1], in.args[2]);
                     return sub(t, right_residual(r, s)) == sub(cp(t, s), r);
                   }));
  L.push_back(make("factor.left_cancel", "T∘(T\\U) ⊆ U", 3, {rel("T", A, B), rel("U", A, C)}, [](const Instance& in) {
    return sub(cp(in.args[0], left_residual(in.args[0], in.args[1])), in.args[1]);
  }));
  L.push_back(make("factor.right_cancel", "(R/S)∘S ⊆ R", 3, {rel("R", A, B), rel("S", C, B)}, [](const Instance& in) {
    return sub(cp(right_residual(in.args[0], in.args[1]), in.args[1]), in.args[0]);
  }));
  L.push_back(make("factor.self_cancel", "R∘(R\\R) = R = (R/R)∘R", 2, {rel("R", A, B)}, [](const Instance& in) {
    const auto& r = in.args[0];
    return cp(r, left_residual(r, r)) == r && cp(right_residual(r, r), r) == r;
  }));
  L.push_back(make("factor.preorders", "R\\R and R/R are reflexive and transitive", 2, {rel("R", A, B)},
                   [](const Instance& in) {
                     const auto& r = in.args[0];
                     return reflexive_transitive(left_residual(r, r)) && reflexive_transitive(right_residual(r, r));
                   }));
  L.push_back(make("symdiv.equivalences", "R\\\\R and R//R are equivalence relations", 2, {rel("R", A, B)},
                   [](const Instance& in) {
                     const auto& r = in.args[0];
                     return is_equivalence(sym_right_div(r, r)) && is_equivalence(sym_left_div(r, r));
                   }));
  L.push_back(make("symdiv.cancel", "R∘(R\\\\R) = R = (R//R)∘R", 2, {rel("R", A, B)}, [](const Instance& in) {
    const auto& r = in.args[0];
    return cp(r, sym_right_div(r, r)) == r && cp(sym_left_div(r, r), r) == r;
  }));

  // Domains.
  L.push_back(make("domain.definition", "R< = 𝕀 ∩ R∘R° ∧ R> = 𝕀 ∩ R°∘R", 2, {rel("R", A, B)}, [](const Instance& in) {
    const auto& r = in.args[0];
    return ld(r) == intersect(id(r.src_ptr()), cp(r, cv(r))) && rd(r) == intersect(id(r.dst_ptr()), cp(cv(r), r));
  }));
  L.push_back(make("symdiv.definition", "R\\\\S = R\\S ∩ (S\\R)° ∧ R°//S° = R°/S° ∩ (S°/R°)°", 3,
                   {rel("R", A, B), rel("S", A, C)}, [](const Instance& in) {
                     const auto& [r, s] = std::tie(in.args[0], in.args[1]);
                     const Rel rt = cv(r);
                     const Rel st = cv(s);
                     return sym_right_div(r, s) == intersect(left_residual(r, s), cv(left_residual(s, r))) &&
                            sym_left_div(rt, st) == intersect(right_residual(rt, st), cv(right_residual(st, rt)));
                   }));
  L.push_back(make("rdom.galois", "R> ⊆ p ≡ R ⊆ ⊤∘p ≡ R ⊆ R∘p", 2, {rel("R", A, B), cor("p", B)},
                   [](const Instance& in) {
                     const auto& [r, p] = std::tie(in.args[0], in.args[1]);
                     return eq3(sub(rd(r), p), sub(r, cp(top(r.src_ptr(), r.dst_ptr()), p)), sub(r, cp(r, p)));
                   }));
  L.push_back(make("ldom.galois", "R< ⊆ p ≡ R ⊆ p∘⊤ ≡ R = p∘R", 2, {rel("R", A, B), cor("p", A)},
                   [](const Instance& in) {
                     const auto& [r, p] = std::tie(in.args[0], in.args[1]);
                     return eq3(sub(ld(r), p), sub(r, cp(p, top(r.src_ptr(), r.dst_ptr()))), r == cp(p, r));
                   }));
  L.push_back(make("rdom.restriction", "R = R∘p ≡ R> = R>∘p", 2, {rel("R", A, B), cor("p", B)},
                   [](const Instance& in) {
                     const auto& [r, p] = std::tie(in.args[0], in.args[1]);
                     return (r == cp(r, p)) == (rd(r) == cp(rd(r), p));
                   }));
  L.push_back(make("ldom.restriction", "R = p∘R ≡ R< = p∘R<", 2, {rel("R", A, B), cor("p", A)},
                   [](const Instance& in) {
                     const auto& [r, p] = std::tie(in.args[0], in.args[1]);
                     return (r == cp(p, r)) == (ld(r) == cp(p, ld(r)));
                   }));
  L.push_back(make("ldom.least", "p∘R = R ≡ R< ⊆ p", 2, {rel("R", A, B), cor("p", A)}, [](const Instance& in) {
    const auto& [r, p] = std::tie(in.args[0], in.args[1]);
    return (cp(p, r) == r) == sub(ld(r), p);
  }));
  L.push_back(make("domain.cancel", "R<∘R = R = R∘R>", 2, {rel("R", A, B)}, [](const Instance& in) {
    const auto& r = in.args[0];
    return cp(ld(r), r) == r && cp(r, rd(r)) == r;
  }));
  L.push_back(make("domain.strict", "R< = ⊥ ≡ R = ⊥ ≡ R> = ⊥", 2, {rel("R", A, B)}, [](const Instance& in) {
    const auto& r = in.args[0];
    return eq3(ld(r).empty(), r.empty(), rd(r).empty());
  }));
  L.push_back(make("domain.top", "⊤∘R> = ⊤∘R ∧ R<∘⊤ = R∘⊤", 3, {rel("R", A, B)}, [](const Instance& in) {
    const auto& r = in.args[0];
    const auto& c = in.carriers[C];
    return cp(top(c, r.dst_ptr()), rd(r)) == cp(top(c, r.src_ptr()), r) &&
           cp(ld(r), top(r.src_ptr(), c)) == cp(r, top(r.dst_ptr(), c));
  }));
  L.push_back(make("domain.converse", "(R°)> = R< ∧ (R°)< = R>", 2, {rel("R", A, B)}, [](const Instance& in) {
    const auto& r = in.args[0];
    return rd(cv(r)) == ld(r) && ld(cv(r)) == rd(r);
  }));
  L.push_back(make("domain.compose", "(R∘S)> = (R>∘S)> ∧ (R∘S)< = (R∘S<)<", 3, {rel("R", A, B), rel("S", B, C)},
                   [](const Instance& in) {
                     const auto& [r, s] = std::tie(in.args[0], in.args[1]);
                     return rd(cp(r, s)) == rd(cp(rd(r), s)) && ld(cp(r, s)) == ld(cp(r, ld(s)));
                   }));
  L.push_back(make("perdom.pers", "R≺ and R≻ are pers", 2, {rel("R", A, B)}, [](const Instance& in) {
    return is_per(per_ldom(in.args[0])) && is_per(per_rdom(in.args[0]));
  }));
  L.push_back(make("perdom.alternative", "R≻ = R>∘(R\\\\R) = (R\\\\R)∘R> ∧ R≺ = (R//R)∘R< = R<∘(R//R)", 2,
                   {rel("R", A, B)}, [](const Instance& in) {
                     const auto& r = in.args[0];
                     const Rel e = sym_right_div(r, r);
                     const Rel f = sym_left_div(r, r);
                     return per_rdom(r) == cp(rd(r), e) && per_rdom(r) == cp(e, rd(r)) &&
                            per_ldom(r) == cp(f, ld(r)) && per_ldom(r) == cp(ld(r), f);
                   }));
  L.push_back(make("perdom.cancel", "R≺∘R = R = R∘R≻", 2, {rel("R", A, B)}, [](const Instance& in) {
    const auto& r = in.args[0];
    return cp(per_ldom(r), r) == r && cp(r, per_rdom(r)) == r;
  }));
  L.push_back(make("perdom.right_least", "R = R∘P ≡ R≻ = R≻∘P", 2, {rel("R", A, B), per("P", B)},
                   [](const Instance& in) {
                     const auto& [r, p] = std::tie(in.args[0], in.args[1]);
                     return (r == cp(r, p)) == (per_rdom(r) == cp(per_rdom(r), p));
                   }));
  L.push_back(make("perdom.left_least", "R = P∘R ≡ R≺ = P∘R≺", 2, {rel("R", A, B), per("P", A)},
                   [](const Instance& in) {
                     const auto& [r, p] = std::tie(in.args[0], in.args[1]);
                     return (r == cp(p, r)) == (per_ldom(r) == cp(p, per_ldom(r)));
                   }));
  L.push_back(make("perdom.domains", "(R≻)< = R> = (R≻)> ∧ (R≺)< = R< = (R≺)>", 2, {rel("R", A, B)},
                   [](const Instance& in) {
                     const auto& r = in.args[0];
                     return ld(per_rdom(r)) == rd(r) && rd(per_rdom(r)) == rd(r) && ld(per_ldom(r)) == ld(r) &&
                            rd(per_ldom(r)) == ld(r);
                   }));
  L.push_back(make("perdom.column_classes", "R≻ relates columns of R> with equal extent", 2, {rel("R", A, B)},
                   [](const Instance& in) {
                     const auto& r = in.args[0];
                     return per_rdom(r) == column_classes(r) && per_ldom(r) == column_classes(cv(r));
                   }));
  L.push_back(make("per.forms", "R = R° ∧ R∘R ⊆ R ≡ R = R°∘R ≡ R = R≺ ≡ R = R≻", 1, {rel("R", A, A)},
                   [](const Instance& in) { return per_forms(in.args[0]).agree(); }));
  L.push_back(make("functional.forms", "R∘R° = R< ≡ R∘R° ⊆ 𝕀 ∧ R°∘R = R> ≡ R°∘R ⊆ 𝕀", 2, {rel("R", A, B)},
                   [](const Instance& in) {
                     const auto& r = in.args[0];
                     return is_functional(r) == sub(cp(r, cv(r)), id(r.src_ptr())) &&
                            is_injective(r) == sub(cp(cv(r), r), id(r.dst_ptr()));
                   }));
  L.push_back(make("difunctional.forms", "the seven descriptions of a difunction agree", 2, {rel("R", A, B)},
                   [](const Instance& in) { return difunctional_forms(in.args[0]).agree(); }));
  L.push_back(make("difunctional.per_domains", "R difunctional ⇒ R≻ = R>∘(R\\R) ∧ R≺ = (R/R)∘R<", 2,
                   {dif("R", A, B)}, [](const Instance& in) {
                     const auto& r = in.args[0];
                     return per_rdom(r) == cp(rd(r), left_residual(r, r)) &&
                            per_ldom(r) == cp(right_residual(r, r), ld(r));
                   }));
  L.push_back(make("per.is_difunction", "a per is a symmetric difunction", 1, {per("P", A)}, [](const Instance& in) {
    return is_difunctional(in.args[0]) && is_symmetric(in.args[0]);
  }));
  L.push_back(make("rectangle.is_difunction", "a rectangle is a difunction", 2, {rel("R", A, B)},
                   [](const Instance& in) { return !is_rectangle(in.args[0]) || is_difunctional(in.args[0]); }));
  L.push_back(make("square.is_per", "a square is a per", 1, {rel("R", A, A)},
                   [](const Instance& in) { return !is_square(in.args[0]) || is_per(in.args[0]); }));
  L.push_back(make("rectangle.construction", "R∘⊤∘S is a rectangle", 4, {rel("R", A, B), rel("S", C, D)},
                   [](const Instance& in) {
                     const auto& [r, s] = std::tie(in.args[0], in.args[1]);
                     return is_rectangle(cp(r, top(r.dst_ptr(), s.src_ptr()), s));
                   }));

  // Isomorphism.
  L.push_back(make("iso.reflexive", "R ≅ R via (R<, R>)", 2, {rel("R", A, B)}, [](const Instance& in) {
    const auto& r = in.args[0];
    return verify_witness(r, r, {ld(r), rd(r)}) && find_isomorphism(r, r).has_value();
  }));
  L.push_back(make("iso.two_sided", "given the domain equations, R = φ∘S∘ψ° ≡ φ°∘R∘ψ = S", 4,
                   {rel("R", A, B), rel("S", C, D), bij("φ", A, C), bij("ψ", B, D)}, [](const Instance& in) {
                     const auto& [r, s, phi, psi] = std::tie(in.args[0], in.args[1], in.args[2], in.args[3]);
                     const bool doms = cp(phi, cv(phi)) == ld(r) && cp(cv(phi), phi) == ld(s) &&
                                       cp(psi, cv(psi)) == rd(r) && cp(cv(psi), psi) == rd(s);
                     return !doms || (r == cp(phi, s, cv(psi))) == (cp(cv(phi), r, psi) == s);
                   }));
  L.push_back(make("iso.domains", "R ≅ S via (φ,ψ) ⇒ R< = φ∘S<∘φ° ∧ R> = ψ∘S>∘ψ°", 4,
                   {rel("R", A, B), bij("φ", A, C), bij("ψ", B, D)}, [](const Instance& in) {
                     const auto w = restricted_witness(in.args[0], in.args[1], in.args[2]);
                     if (!w) return true;
                     const auto& r = in.args[0];
                     const Rel s = cp(cv(w->phi), r, w->psi);
                     return verify_witness(r, s, *w) && ld(r) == cp(w->phi, ld(s), cv(w->phi)) &&
                            rd(r) == cp(w->psi, rd(s), cv(w->psi));
                   }));
  L.push_back(make("iso.per_domains", "R ≅ S via (φ,ψ) ⇒ R≺ = φ∘S≺∘φ° ∧ R≻ = ψ∘S≻∘ψ°", 4,
                   {rel("R", A, B), bij("φ", A, C), bij("ψ", B, D)}, [](const Instance& in) {
                     const auto w = restricted_witness(in.args[0], in.args[1], in.args[2]);
                     if (!w) return true;
                     const auto& r = in.args[0];
                     const Rel s = cp(cv(w->phi), r, w->psi);
                     return per_ldom(r) == cp(w->phi, per_ldom(s), cv(w->phi)) &&
                            per_rdom(r) == cp(w->psi, per_rdom(s), cv(w->psi));
                   }));
  L.push_back(make("iso.equivalence", "≅ is reflexive, symmetric and transitive", 4,
                   {rel("R", A, B), bij("φ", A, C), bij("ψ", B, D)}, [](const Instance& in) {
                     const auto w = restricted_witness(in.args[0], in.args[1], in.args[2]);
                     if (!w) return true;
                     const auto& r = in.args[0];
                     const Rel s = cp(cv(w->phi), r, w->psi);
                     const auto back = reverse_witness(*w);
                     return verify_witness(s, r, back) && verify_witness(r, r, chain_witness(*w, back)) &&
                            verify_witness(s, s, chain_witness(back, *w)) && find_isomorphism(r, s).has_value();
                   }));
  L.push_back(make("iso.coreflexive_iff_bijection", "R ≅ p for a coreflexive p ≡ R is a bijection", 3,
                   {rel("R", A, B), cor("p", C)}, [](const Instance& in) {
                     const auto& [r, p] = std::tie(in.args[0], in.args[1]);
                     if (find_isomorphism(r, p) && !is_bijection(r)) return false;
                     if (!is_bijection(r)) return true;
                     const Rel q = ld(r);
                     return verify_witness(r, q, {q, cv(r)});
                   }));
  L.push_back(make("iso.per_core", "P< ≅ P ⇒ P< = P", 1, {per("P", A)}, [](const Instance& in) {
    const auto& p = in.args[0];
    return !find_isomorphism(ld(p), p).has_value() || ld(p) == p;
  }));

  // Indexes and cores.
  L.push_back(make("index.construction", "J∘R∘K is an index of R for per indexes J of R≺ and K of R≻", 2,
                   {rel("R", A, B)}, [](const Instance& in) {
                     const auto& r = in.args[0];
                     for (Policy pol : {Policy::Smallest, Policy::Largest, Policy::Random}) {
                       const Chooser ch{pol, 7};
                       const Rel j = per_index(per_ldom(r), ch);
                       const Rel k = per_index(per_rdom(r), ch);
                       if (!verify_index(r, cp(j, r, k)).checks.all()) return false;
                     }
                     return true;
                   }));
  L.push_back(make("index.core_relation", "J index of R ⇒ J≺ ⊆ R≺ ∧ J≻ ⊆ R≻ ∧ J< = J≺ ∧ J> = J≻", 2,
                   {rel("R", A, B)}, [](const Instance& in) {
                     const auto& r = in.args[0];
                     for (const auto& j : all_indexes(r)) {
                       if (!sub(per_ldom(j), per_ldom(r)) || !sub(per_rdom(j), per_rdom(r)) || !is_core_relation(j)) {
                         return false;
                       }
                     }
                     return true;
                   },
                   3));
  L.push_back(make("index.self", "J index of R ⇒ J index of J", 2, {rel("R", A, B)}, [](const Instance& in) {
    for (const auto& j : all_indexes(in.args[0])) {
      if (!verify_index(j, j).checks.all()) return false;
    }
    return true;
  }, 3));
  L.push_back(make("core_relation.own_index", "R core relation ⇒ R index of R", 2, {rel("R", A, B)},
                   [](const Instance& in) {
                     return !is_core_relation(in.args[0]) || verify_index(in.args[0], in.args[0]).checks.all();
                   }));
  L.push_back(make("index.domain_restriction", "J index of R ⇒ J = J<∘R∘J>", 2, {rel("R", A, B)},
                   [](const Instance& in) {
                     const auto& r = in.args[0];
                     for (const auto& j : all_indexes(r)) {
                       if (!(j == cp(ld(j), r, rd(j)))) return false;
                     }
                     return true;
                   },
                   3));
  L.push_back(make("index.unique_by_domains", "J, K indexes of R ⇒ (J = K ≡ J< = K< ∧ J> = K>)", 2, {rel("R", A, B)},
                   [](const Instance& in) {
                     const auto all = all_indexes(in.args[0]);
                     for (std::size_t a = 0; a < all.size(); ++a) {
                       for (std::size_t b = a + 1; b < all.size(); ++b) {
                         if ((all[a] == all[b]) != domains_equal(all[a], all[b])) return false;
                       }
                     }
                     return !all.empty();
                   },
                   3));
  L.push_back(make("index.simplification", "J index of R ⇒ R∘J°∘R = R∘R°∘R", 2, {rel("R", A, B)},
                   [](const Instance& in) {
                     const auto& r = in.args[0];
                     for (const auto& j : all_indexes(r)) {
                       if (!(cp(r, cv(j), r) == cp(r, cv(r), r))) return false;
                     }
                     return true;
                   },
                   3));
  L.push_back(make("index.per_domain_pers", "R≺∘J<∘R≺ is a per with left domain R<, and symmetrically", 2,
                   {rel("R", A, B)}, [](const Instance& in) {
                     const auto& r = in.args[0];
                     for (const auto& j : all_indexes(r)) {
                       const Rel m = cp(per_ldom(r), ld(j), per_ldom(r));
                       const Rel n = cp(per_rdom(r), rd(j), per_rdom(r));
                       if (!is_per(m) || !is_per(n) || !(ld(m) == ld(r)) || !(rd(n) == rd(r))) return false;
                     }
                     return true;
                   },
                   3));
  L.push_back(make("index.per_domain_recovery", "R≺∘J<∘R≺ = R≺ ∧ R≻∘J>∘R≻ = R≻", 2, {rel("R", A, B)},
                   [](const Instance& in) {
                     const auto& r = in.args[0];
                     for (const auto& j : all_indexes(r)) {
                       if (!(cp(per_ldom(r), ld(j), per_ldom(r)) == per_ldom(r)) ||
                           !(cp(per_rdom(r), rd(j), per_rdom(r)) == per_rdom(r))) {
                         return false;
                       }
                     }
                     return true;
                   },
                   3));
  L.push_back(make("index.per_domain_index", "J index of R ⇒ J< index of R≺ ∧ J> index of R≻", 2, {rel("R", A, B)},
                   [](const Instance& in) {
                     const auto& r = in.args[0];
                     for (const auto& j : all_indexes(r)) {
                       if (!verify_index(per_ldom(r), ld(j)).checks.all() ||
                           !verify_index(per_rdom(r), rd(j)).checks.all()) {
                         return false;
                       }
                     }
                     return true;
                   },
                   3));
  L.push_back(make("index.isomorphic", "indexes of isomorphic relations are isomorphic", 4,
                   {rel("R", A, B), bij("φ", A, C), bij("ψ", B, D)}, [](const Instance& in) {
                     const auto& r = in.args[0];
                     const auto w = restricted_witness(r, in.args[1], in.args[2]);
                     if (!w) return true;
                     const Rel s = cp(cv(w->phi), r, w->psi);
                     const auto mine = all_indexes(r);
                     const auto theirs = all_indexes(s);
                     for (const auto& j : mine) {
                       for (const auto& k : theirs) {
                         if (!find_isomorphism(j, k)) return false;
                       }
                       for (const auto& k : mine) {
                         if (!find_isomorphism(j, k)) return false;
                       }
                     }
                     return !mine.empty() && !theirs.empty();
                   },
                   3));
  L.push_back(make("core.witnesses", "C = λ∘R∘ρ° ∧ R≺ = λ°∘λ ∧ λ< = λ∘λ° ∧ R≻ = ρ°∘ρ ∧ ρ< = ρ∘ρ°", 2,
                   {rel("R", A, B)}, [](const Instance& in) {
                     for (CoreMode m : {CoreMode::SameType, CoreMode::Quotient}) {
                       const auto d = core_of(in.args[0], m);
                       if (!check_core(in.args[0], d.lambda, d.rho, d.core).all()) return false;
                     }
                     return true;
                   }));
  L.push_back(make("core.index_is_core", "J is a core of R witnessed by J<∘R≺ and J>∘R≻", 2, {rel("R", A, B)},
                   [](const Instance& in) {
                     const auto& r = in.args[0];
                     for (const auto& j : all_indexes(r)) {
                       if (!check_core(r, cp(ld(j), per_ldom(r)), cp(rd(j), per_rdom(r)), j).all()) return false;
                     }
                     return true;
                   },
                   3));
  L.push_back(make("core.domains", "R< = λ> ∧ C< = λ< ∧ R> = ρ> ∧ C> = ρ<", 2, {rel("R", A, B)},
                   [](const Instance& in) {
                     const auto& r = in.args[0];
                     for (CoreMode m : {CoreMode::SameType, CoreMode::Quotient}) {
                       const auto d = core_of(r, m);
                       if (!(ld(r) == rd(d.lambda)) || !(ld(d.core) == ld(d.lambda)) || !(rd(r) == rd(d.rho)) ||
                           !(rd(d.core) == ld(d.rho))) {
                         return false;
                       }
                     }
                     return true;
                   }));
  L.push_back(make("core.isomorphic_to_index", "C ≅ J via λ∘J< and ρ∘J>", 2, {rel("R", A, B)},
                   [](const Instance& in) {
                     const auto& r = in.args[0];
                     const Rel j = relation_index(r).index;
                     for (CoreMode m : {CoreMode::SameType, CoreMode::Quotient}) {
                       const auto d = core_of(r, m);
                       if (!verify_witness(d.core, j, {cp(d.lambda, ld(j)), cp(d.rho, rd(j))})) return false;
                     }
                     return true;
                   }));
  L.push_back(make("core.is_core_relation", "a core is a core relation", 2, {rel("R", A, B)}, [](const Instance& in) {
    for (CoreMode m : {CoreMode::SameType, CoreMode::Quotient}) {
      if (!is_core_relation(core_of(in.args[0], m).core)) return false;
    }
    return true;
  }));
  L.push_back(make("difunction.index_conditions",
                   "J ⊆ R ∧ R∘J°∘R = R ∧ J<∘R∘R°∘J< = J< ∧ J>∘R°∘R∘J> = J> for difunctional R", 2,
                   {dif("R", A, B)}, [](const Instance& in) {
                     const auto& r = in.args[0];
                     const Rel j = relation_index(r).index;
                     return sub(j, r) && cp(r, cv(j), r) == r && cp(cp(ld(j), r, cv(r)), ld(j)) == ld(j) &&
                            cp(cp(rd(j), cv(r), r), rd(j)) == rd(j);
                   }));
  L.push_back(make("difunction.index_bijection", "an index of a difunction is a bijection", 2, {dif("R", A, B)},
                   [](const Instance& in) {
                     for (const auto& j : all_indexes(in.args[0])) {
                       if (!is_bijection(j)) return false;
                     }
                     return is_bijection(relation_index(in.args[0]).index);
                   },
                   3));
  L.push_back(make("difunction.index_iff", "J index of R ⇒ (R difunctional ≡ J difunctional)", 2, {rel("R", A, B)},
                   [](const Instance& in) {
                     const auto& r = in.args[0];
                     for (const auto& j : all_indexes(r)) {
                       if (is_difunctional(j) != is_difunctional(r)) return false;
                     }
                     return true;
                   },
                   3));
  L.push_back(make("per_index.conditions", "J ⊆ P< ∧ J∘P∘J = J ∧ P∘J∘P = P", 1, {per("P", A)},
                   [](const Instance& in) {
                     for (Policy pol : {Policy::Smallest, Policy::Largest, Policy::Random}) {
                       if (!check_per_index(in.args[0], per_index(in.args[0], {pol, 11})).all()) return false;
                     }
                     return true;
                   }));
  L.push_back(make("per_index.agrees_with_index", "for coreflexive J: per-index conditions ≡ index of P", 1,
                   {per("P", A), cor("J", A)}, [](const Instance& in) {
                     const auto& [p, j] = std::tie(in.args[0], in.args[1]);
                     return check_per_index(p, j).all() == verify_index(p, j).checks.all();
                   }));
  L.push_back(make("per_index.coreflexive_exists", "a per with an index has a coreflexive index", 1, {per("P", A)},
                   [](const Instance& in) {
                     const auto all = all_indexes(in.args[0]);
                     return all.empty() ||
                            std::any_of(all.begin(), all.end(), [](const Rel& j) { return is_coreflexive(j); });
                   },
                   3));
  L.push_back(make("per_index.bijection", "a coreflexive index is a bijection", 1, {per("P", A)},
                   [](const Instance& in) { return is_bijection(per_index(in.args[0])); }));
  L.push_back(make("splitting.characterization", "f = J∘P ⇒ P = f°∘f ∧ J = f∘f° ∧ f∘f° = f<", 1, {per("P", A)},
                   [](const Instance& in) {
                     const auto& p = in.args[0];
                     const Rel j = per_index(p);
                     const Rel f = splitting(p);
                     return p == cp(cv(f), f) && j == cp(f, cv(f)) && cp(f, cv(f)) == ld(f);
                   }));
  L.push_back(make("splitting.per_iff", "f functional ⇒ f°∘f is a per", 2, {fun("f", A, B)},
                   [](const Instance& in) { return is_per(cp(cv(in.args[0]), in.args[0])); }));
  L.push_back(make("splitting.unique_up_to_iso", "splittings of a per are unique up to isomorphism", 1, {per("P", A)},
                   [](const Instance& in) {
                     const auto& p = in.args[0];
                     const Rel f = splitting(p, {Policy::Smallest, 0});
                     const Rel g = splitting(p, {Policy::Largest, 0});
                     const Rel j = per_index(p, {Policy::Smallest, 0});
                     const Rel k = per_index(p, {Policy::Largest, 0});
                     // g = (g∘f°)∘f with g∘f° a bijection between the two index coreflexives.
                     const Rel link = cp(g, cv(f));
                     return find_isomorphism(j, k).has_value() && find_isomorphism(f, g).has_value() &&
                            is_bijection(link) && cp(link, f) == g;
                   }));

  // Points, pairs and atoms.
  L.push_back(make("atom.at_most_one_pair", "R atom ≡ R has at most one pair", 2, {rel("R", A, B)},
                   [](const Instance& in) { return is_atom(in.args[0]) == (in.args[0].count() <= 1); }));
  L.push_back(make("point.singleton", "point ≡ singleton coreflexive", 1, {rel("R", A, A)}, [](const Instance& in) {
    const auto& r = in.args[0];
    return is_point(r) == (is_coreflexive(r) && r.count() == 1);
  }));
  L.push_back(make("point.distinct", "a = a′ ∨ a∘a′ = ⊥", 1, {pt("a", A), pt("a′", A)}, [](const Instance& in) {
    return in.args[0] == in.args[1] || cp(in.args[0], in.args[1]).empty();
  }));
  L.push_back(make("point.saturation", "p = ∪{a | point a ∧ a ⊆ p}", 1, {cor("p", A)}, [](const Instance& in) {
    const auto& p = in.args[0];
    return join_of(below_points(p), p.src_ptr(), p.dst_ptr()) == p;
  }));
  L.push_back(make("pair.is_atom", "a pair is an atom", 2, {rel("Z", A, B)},
                   [](const Instance& in) { return !is_pair(in.args[0]) || is_atom(in.args[0]); }));
  L.push_back(make("particle.is_coreflexive", "a particle is coreflexive", 1, {rel("Z", A, A)},
                   [](const Instance& in) { return !is_particle(in.args[0]) || is_coreflexive(in.args[0]); }));
  L.push_back(make("particle.forms", "particle ≡ proper coreflexive rectangle ≡ proper coreflexive atom", 1,
                   {rel("Z", A, A)}, [](const Instance& in) {
                     const auto& z = in.args[0];
                     const bool rect = !z.empty() && is_coreflexive(z) && is_rectangle(z);
                     const bool atom = is_coreflexive(z) && is_proper_atom(z);
                     return eq3(is_particle(z), rect, atom);
                   }));
  L.push_back(make("point.iff_particle", "point ≡ particle", 1, {rel("R", A, A)},
                   [](const Instance& in) { return is_point(in.args[0]) == is_particle(in.args[0]); }));
  L.push_back(make("proper_atom.domains", "R proper atom ⇒ R< and R> are proper atoms and particles", 2,
                   {rel("R", A, B)}, [](const Instance& in) {
                     const auto& r = in.args[0];
                     if (!is_proper_atom(r)) return true;
                     return is_proper_atom(ld(r), AtomLattice::Coreflexives) &&
                            is_proper_atom(rd(r), AtomLattice::Coreflexives) && is_particle(ld(r)) &&
                            is_particle(rd(r));
                   }));
  L.push_back(make("proper_atom.rectangle", "a proper atom is a rectangle", 2, {rel("R", A, B)},
                   [](const Instance& in) { return !is_proper_atom(in.args[0]) || is_rectangle(in.args[0]); }));
  L.push_back(make("proper_atom.iff_pair", "proper atom ≡ pair", 2, {rel("R", A, B)},
                   [](const Instance& in) { return is_proper_atom(in.args[0]) == is_pair(in.args[0]); }));
  L.push_back(make("pair.domains_particles", "Z pair ⇒ Z< and Z> are particles", 2, {rel("Z", A, B)},
                   [](const Instance& in) {
                     const auto& z = in.args[0];
                     return !is_pair(z) || (is_particle(ld(z)) && is_particle(rd(z)));
                   }));
  L.push_back(make("pair.point_product", "pair Z ≡ ∃ points a, b: Z = a∘⊤∘b", 2, {rel("Z", A, B)},
                   [](const Instance& in) {
                     const auto& z = in.args[0];
                     bool found = false;
                     for (const auto& a : points(z.src_ptr())) {
                       for (const auto& b : points(z.dst_ptr())) found = found || pair_of(a, b) == z;
                     }
                     return is_pair(z) == found;
                   }));
  L.push_back(make("all_or_nothing", "a∘R∘b = ⊥ ∨ a∘R∘b = a∘⊤∘b", 2, {rel("R", A, B), pt("a", A), pt("b", B)},
                   [](const Instance& in) {
                     const auto& [r, a, b] = std::tie(in.args[0], in.args[1], in.args[2]);
                     const Outcome o = all_or_nothing(r, a, b);
                     const std::size_t i = a.pairs().front().first;
                     const std::size_t j = b.pairs().front().first;
                     return (o == Outcome::Full) == r.contains(i, j);
                   }));
  L.push_back(make("saturation", "R = ∪{a∘⊤∘b | a∘⊤∘b ⊆ R}", 2, {rel("R", A, B)}, [](const Instance& in) {
    const auto& r = in.args[0];
    return reunite(decompose_to_pairs(r), r.src_ptr(), r.dst_ptr()) == r;
  }));
  L.push_back(make("irreducible", "a∘⊤∘b ⊆ R ∪ S ≡ a∘⊤∘b ⊆ R ∨ a∘⊤∘b ⊆ S", 2,
                   {rel("R", A, B), rel("S", A, B), pt("a", A), pt("b", B)}, [](const Instance& in) {
                     const auto& [r, s, a, b] = std::tie(in.args[0], in.args[1], in.args[2], in.args[3]);
                     const Rel z = pair_of(a, b);
                     return sub(z, unite(r, s)) == (sub(z, r) || sub(z, s));
                   }));
  L.push_back(make("pointwise.compose", "pairs of R∘S = {(a,c) | ∃b: (a,b) pair of R ∧ (b,c) pair of S}", 3,
                   {rel("R", A, B), rel("S", B, C)}, [](const Instance& in) {
                     const auto& [r, s] = std::tie(in.args[0], in.args[1]);
                     Rel joined(r.src_ptr(), s.dst_ptr());
                     for (const auto& x : decompose_to_pairs(r)) {
                       for (const auto& y : decompose_to_pairs(s)) {
                         if (x.b == y.a) joined = unite(joined, pair_of(x.a, y.b));
                       }
                     }
                     return reunite(decompose_to_pairs(cp(r, s)), r.src_ptr(), s.dst_ptr()) == joined;
                   }));
  L.push_back(make("pointwise.converse", "pairs of R° are the swapped pairs of R", 2, {rel("R", A, B)},
                   [](const Instance& in) {
                     const auto& r = in.args[0];
                     const auto mine = decompose_to_pairs(r);
                     const auto theirs = decompose_to_pairs(cv(r));
                     if (mine.size() != theirs.size()) return false;
                     for (const auto& x : mine) {
                       const bool hit = std::any_of(theirs.begin(), theirs.end(),
                                                    [&](const PointPair& y) { return y.a == x.b && y.b == x.a; });
                       if (!hit) return false;
                     }
                     return true;
                   }));
  L.push_back(make("saturation.counting", "#relations(A~B) = 2^#pairs(A~B)", 2, {}, [](const Instance& in) {
    const auto& a = in.carriers[A];
    const auto& b = in.carriers[B];
    std::size_t pairs = 0;
    for (const auto& r : enumerate_relations(a, b, 16)) pairs += is_pair(r) ? 1 : 0;
    return enumerate_relations(a, b, 16).size() == (std::uint64_t{1} << pairs);
  }, 3));
  L.push_back(make("extensional.equivalence", "pair-saturated relations ≡ point-saturated coreflexives", 2, {},
                   [](const Instance& in) {
                     const auto& a = in.carriers[A];
                     const auto& b = in.carriers[B];
                     bool relations = true;
                     for (const auto& r : enumerate_relations(a, b, 16)) {
                       relations = relations && reunite(decompose_to_pairs(r), a, b) == r;
                     }
                     bool coreflexives = true;
                     for (const auto& p : enumerate_relations(a, a, 16)) {
                       if (is_coreflexive(p)) coreflexives = coreflexives && join_of(below_points(p), a, a) == p;
                     }
                     return relations == coreflexives && relations;
                   },
                   3));
  return L;
}

}  // namespace

const std::vector<Law>& registry() {
  static const std::vector<Law> laws = build();
  return laws;
}

const std::vector<ManifestEntry>& manifest() {
  using E = ManifestEntry;
  static const std::vector<ManifestEntry> entries = {
      // Axiom system.
      E{"lattice of relations per type", {"lattice.partial_order", "lattice.union_lub", "lattice.intersect_glb",
                                          "lattice.bounds", "lattice.complement"}, ""},
      E{"composition is associative with identities", {"compose.associative", "compose.identity_unit"}, ""},
      E{"bottom is a zero of composition", {"compose.bottom_zero"}, ""},
      E{"composition distributes over union", {"compose.distributes_left", "compose.distributes_right"}, ""},
      E{"reflexive-transitive closure", {}, "closure is only mentioned; no statement about it is made"},
      E{"converse is a poset isomorphism and an involution", {"converse.involution", "converse.lattice"}, ""},
      E{"converse of identity and of composition", {"converse.identity", "converse.compose"}, ""},
      E{"modularity rule", {"dedekind.modular", "dedekind.check_agrees"}, ""},
      E{"dual modularity rule", {"dedekind.modular_dual"}, ""},
      E{"cone rule", {"cone.rule", "cone.check_agrees"}, ""},
      // Factors.
      E{"left factor Galois connection", {"factor.left_galois"}, ""},
      E{"right factor Galois connection", {"factor.right_galois"}, ""},
      E{"factor cancellation", {"factor.left_cancel", "factor.right_cancel"}, ""},
      E{"self factors are transitive", {"factor.preorders"}, ""},
      E{"self factors are reflexive", {"factor.preorders"}, ""},
      E{"self factor cancellation equality", {"factor.self_cancel"}, ""},
      // Domains.
      E{"definition of left and right domains", {"domain.definition", "coreflexive.idempotent",
                                                 "coreflexive.compose_is_meet"}, ""},
      E{"right domain is least", {"rdom.restriction"}, ""},
      E{"left domain is least", {"ldom.restriction", "ldom.least"}, ""},
      E{"domains cancel", {"domain.cancel"}, ""},
      E{"domains are strict", {"domain.strict"}, ""},
      E{"domain Galois connections via top", {"rdom.galois", "ldom.galois"}, ""},
      E{"domain Galois connections via composition", {"rdom.galois", "ldom.galois"}, ""},
      E{"domain calculation rules", {"domain.top", "domain.converse", "domain.compose"}, ""},
      // Per domains.
      E{"symmetric right division", {"symdiv.definition"}, ""},
      E{"symmetric left division", {"symdiv.definition"}, ""},
      E{"symmetric divisions are equivalences", {"symdiv.equivalences"}, ""},
      E{"symmetric division cancellation", {"symdiv.cancel"}, ""},
      E{"definition of per domains", {"perdom.alternative", "perdom.column_classes", "perdom.pers"}, ""},
      E{"definition of per", {"per.forms"}, ""},
      E{"right per domain is least", {"perdom.right_least"}, ""},
      E{"left per domain is least", {"perdom.left_least"}, ""},
      E{"per domains cancel", {"perdom.cancel"}, ""},
      E{"alternative right per domain", {"perdom.alternative"}, ""},
      E{"domains of per domains", {"perdom.domains"}, ""},
      E{"per characterisations agree", {"per.forms"}, ""},
      E{"ordering on pers", {}, "the per ordering is cited from elsewhere and not stated"},
      // Functionality, difunctions, rectangles.
      E{"functional, injective and bijection definitions", {"functional.forms", "splitting.per_iff"}, ""},
      E{"difunctional definition", {"difunctional.forms", "per.is_difunction"}, ""},
      E{"strong difunctional characterisations", {"difunctional.forms", "difunctional.per_domains"}, ""},
      E{"rectangle and square definitions", {"rectangle.is_difunction", "square.is_per"}, ""},
      E{"R∘⊤∘S is a rectangle", {"rectangle.construction"}, ""},
      // Isomorphism.
      E{"isomorphic relations", {"iso.reflexive", "iso.domains"}, ""},
      E{"two-sided isomorphism", {"iso.two_sided"}, ""},
      E{"isomorphism equations are interchangeable", {"iso.two_sided"}, ""},
      E{"isomorphism is an equivalence", {"iso.equivalence"}, ""},
      E{"isomorphism transports domains", {"iso.domains"}, ""},
      E{"isomorphism transports per domains", {"iso.per_domains"}, ""},
      E{"relations isomorphic to a coreflexive are bijections", {"iso.coreflexive_iff_bijection"}, ""},
      E{"per isomorphic to its domain is that domain", {"iso.per_core"}, ""},
      // Indexes.
      E{"core relation", {"core_relation.own_index", "core.is_core_relation"}, ""},
      E{"index of a relation", {"index.construction", "index.self"}, ""},
      E{"a core relation is its own index", {"core_relation.own_index"}, ""},
      E{"per domains of an index", {"index.core_relation"}, ""},
      E{"an index is an index of itself", {"index.self"}, ""},
      E{"index determined by its domains", {"index.domain_restriction"}, ""},
      E{"indexes equal iff domains equal", {"index.unique_by_domains"}, ""},
      E{"index simplification", {"index.simplification"}, ""},
      E{"per-domain sandwiches are pers", {"index.per_domain_pers"}, ""},
      E{"per-domain sandwich domains", {"index.per_domain_pers"}, ""},
      E{"per-domain sandwich recovery", {"index.per_domain_recovery"}, ""},
      E{"index domains index the per domains", {"index.per_domain_index"}, ""},
      E{"indexes are isomorphic", {"index.isomorphic"}, ""},
      // Cores.
      E{"core of a relation", {"core.witnesses"}, ""},
      E{"an index is a core", {"core.index_is_core"}, ""},
      E{"domains of a core", {"core.domains"}, ""},
      E{"cores are isomorphic to indexes", {"core.isomorphic_to_index"}, ""},
      E{"cores are core relations", {"core.is_core_relation"}, ""},
      // Difunctions and pers.
      E{"difunctional index implies difunctional relation", {"difunction.index_iff"}, ""},
      E{"difunction index", {"difunction.index_conditions"}, ""},
      E{"difunction index is a bijection", {"difunction.index_bijection"}, ""},
      E{"difunctional iff index difunctional", {"difunction.index_iff"}, ""},
      E{"per with an index has a coreflexive index", {"per_index.coreflexive_exists"}, ""},
      E{"per index conditions", {"per_index.conditions", "per_index.agrees_with_index"}, ""},
      E{"coreflexive index of a per", {"per_index.conditions", "per_index.bijection"}, ""},
      E{"axiom of choice", {"per_index.coreflexive_exists"}, ""},
      E{"index from per domain indexes", {"index.construction"}, ""},
      E{"per as converse-composition of a functional", {"splitting.characterization", "splitting.per_iff"}, ""},
      E{"splitting from a coreflexive index", {"splitting.characterization"}, ""},
      E{"splittings unique up to isomorphism", {"splitting.unique_up_to_iso"}, ""},
      // Points.
      E{"atom", {"atom.at_most_one_pair"}, ""},
      E{"saturated lattice", {"point.saturation", "saturation"}, ""},
      E{"saturated iff powerset", {"saturation.counting"}, ""},
      E{"point", {"point.singleton"}, ""},
      E{"distinct points are disjoint", {"point.distinct"}, ""},
      E{"extensional coreflexives", {"point.saturation"}, ""},
      E{"coreflexive saturation", {"point.saturation"}, ""},
      E{"extensionality axiom", {"point.saturation", "extensional.equivalence"}, ""},
      E{"pair and particle", {"pair.is_atom", "particle.forms"}, ""},
      E{"a pair is an atom", {"pair.is_atom"}, ""},
      E{"a particle is an atom", {"particle.forms"}, ""},
      E{"a particle is coreflexive", {"particle.is_coreflexive"}, ""},
      E{"particle characterisation", {"particle.forms"}, ""},
      E{"a particle is a point", {"point.iff_particle"}, ""},
      E{"a point is a particle", {"point.iff_particle"}, ""},
      E{"points are particles", {"point.iff_particle"}, ""},
      E{"domains of a proper atom are proper atoms", {"proper_atom.domains"}, ""},
      E{"domains of a proper atom are particles", {"proper_atom.domains"}, ""},
      E{"a proper atom is a rectangle", {"proper_atom.rectangle"}, ""},
      E{"a proper atom is a pair", {"proper_atom.iff_pair"}, ""},
      E{"atoms are pairs", {"proper_atom.iff_pair"}, ""},
      E{"domains of a pair are particles", {"pair.domains_particles"}, ""},
      E{"pairs are products of points", {"pair.point_product"}, ""},
      E{"all-or-nothing rule", {"all_or_nothing"}, ""},
      E{"relations are saturated by pairs of points", {"saturation", "saturation.counting"}, ""},
      E{"saturation", {"saturation"}, ""},
      E{"irreducibility", {"irreducible"}, ""},
      E{"pointwise composition and converse", {"pointwise.compose", "pointwise.converse"}, ""},
      E{"extensional relations give extensional coreflexives", {"extensional.equivalence"}, ""},
      E{"extensional relations iff extensional coreflexives", {"extensional.equivalence"}, ""},
      E{"typing judgements", {}, "type judgements are cited from elsewhere and not stated"},
      E{"choice implies universal choice", {}, "left open; both flags are reported without implication"},
  };
  return entries;
}

}  // namespace relalg
