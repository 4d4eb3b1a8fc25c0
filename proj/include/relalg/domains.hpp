#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "relalg/relation.hpp"

namespace relalg {

// R< = 𝕀 ∩ R∘R°
Coreflexive ldom(const Relation& r);
// R> = 𝕀 ∩ R°∘R
Coreflexive rdom(const Relation& r);

// R≺ = (R//R)∘R<
Relation per_ldom(const Relation& r);
// R≻ = R>∘(R\\R)
Relation per_rdom(const Relation& r);

bool is_per(const Relation& r);  // throws TypeError when heterogeneous
bool is_functional(const Relation& r);
bool is_injective(const Relation& r);
bool is_bijection(const Relation& r);
bool is_difunctional(const Relation& r);
bool is_rectangle(const Relation& r);
bool is_square(const Relation& r);
bool is_core_relation(const Relation& r);

// The four equivalent descriptions of a per:
// (i) R = R° ∧ R∘R ⊆ R, (ii) R = R°∘R, (iii) R = R≺, (iv) R = R≻.
struct PerForms {
  std::array<bool, 4> holds{};
  bool agree() const noexcept;
};
PerForms per_forms(const Relation& r);

// The seven equivalent descriptions of a difunction:
// (i) R∘R°∘R ⊆ R, (ii) R = R∘R°∘R, (iii) R>∘(R\R) = R°∘R, (iv) R≻ = R°∘R,
// (v) (R/R)∘R< = R∘R°, (vi) R≺ = R∘R°, (vii) R = R ∩ (R\R/R)°.
struct DifunctionalForms {
  std::array<bool, 7> holds{};
  bool agree() const noexcept;
};
DifunctionalForms difunctional_forms(const Relation& r);

// One defining equality, kept with both sides for diagnostics.
struct Evidence {
  std::string equation;
  bool holds = false;
  std::optional<Relation> lhs;
  std::optional<Relation> rhs;
};

struct Classification {
  std::string name;
  bool value = false;
  std::vector<Evidence> evidence;
};

struct PredicateReport {
  Classification coreflexive, functional, injective, bijection, per, difunctional, rectangle, square,
      core_relation;
  std::vector<const Classification*> all() const;
};

PredicateReport classify(const Relation& r);

struct NamedCheck {
  std::string name;
  bool holds = false;
};

// Domain and per-domain laws for R: A~B, S: B~C and a coreflexive p on B.
std::vector<NamedCheck> domain_law_suite(const Relation& r, const Relation& s, const Relation& p);

}  // namespace relalg
