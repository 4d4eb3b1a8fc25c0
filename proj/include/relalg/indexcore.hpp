#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "relalg/domains.hpp"
#include "relalg/relation.hpp"

namespace relalg {

class NotAPer : public std::invalid_argument {
 public:
  NotAPer(const std::string& what, std::string condition)
      : std::invalid_argument(what), condition_(std::move(condition)) {}
  const std::string& condition() const noexcept { return condition_; }

 private:
  std::string condition_;
};

// Which member of each equivalence class becomes its representative.
enum class Policy { Smallest, Largest, Random };

struct Chooser {
  Policy policy = Policy::Smallest;
  std::uint64_t seed = 0;
};

Policy parse_policy(const std::string& name);  // "min", "max" or "random"
std::string policy_name(Policy p);

// Classes of the per P on the support of P<, each sorted, ordered by smallest member.
std::vector<std::vector<std::size_t>> per_classes(const Relation& p);

// Coreflexive J ⊆ P< with J∘P∘J = J and P∘J∘P = P. Throws NotAPer.
Coreflexive per_index(const Relation& p, const Chooser& chooser = {});

struct PerIndexChecks {
  bool within_domain = false;  // J ⊆ P<
  bool separates = false;      // J∘P∘J = J
  bool covers = false;         // P∘J∘P = P
  bool all() const noexcept { return within_domain && separates && covers; }
};
PerIndexChecks check_per_index(const Relation& p, const Relation& j);

struct IndexChecks {
  bool contained = false;     // J ⊆ R
  bool reconstructs = false;  // R≺∘J∘R≻ = R
  bool left = false;          // J<∘R≺∘J< = J<
  bool right = false;         // J>∘R≻∘J> = J>
  bool all() const noexcept { return contained && reconstructs && left && right; }
};

struct IndexCertificate {
  Relation relation;
  Relation index;
  IndexChecks checks;
};

IndexCertificate verify_index(const Relation& r, const Relation& j);

// J∘R∘K for per indexes J of R≺ and K of R≻. Throws std::logic_error if the
// result fails verification.
IndexCertificate relation_index(const Relation& r, const Chooser& chooser = {});

// Every index of R, found by testing all subsets of R. Refuses when R has more
// than `max_bits` pairs.
std::vector<Relation> all_indexes(const Relation& r, std::size_t max_bits = 16);

// f = J∘P for J = per_index(P); f is functional with f°∘f = P and f∘f° = J.
Relation splitting(const Relation& p, const Chooser& chooser = {});

enum class CoreMode { SameType, Quotient };
CoreMode parse_core_mode(const std::string& name);  // "same-type" or "quotient"
std::string core_mode_name(CoreMode m);

struct CoreChecks {
  bool core_equation = false;   // C = λ∘R∘ρ°
  bool lambda_per = false;      // R≺ = λ°∘λ
  bool lambda_domain = false;   // λ< = λ∘λ°
  bool rho_per = false;         // R≻ = ρ°∘ρ
  bool rho_domain = false;      // ρ< = ρ∘ρ°
  bool all() const noexcept { return core_equation && lambda_per && lambda_domain && rho_per && rho_domain; }
};

// λ: X~A and ρ: Y~B for R: A~B, core C: X~Y. In same-type mode X = A and Y = B.
struct CoreDecomposition {
  Relation relation;
  Relation lambda;
  Relation rho;
  Relation core;
  CoreMode mode = CoreMode::SameType;
  CoreChecks checks;
};

CoreChecks check_core(const Relation& r, const Relation& lambda, const Relation& rho, const Relation& c);

CoreDecomposition core_of(const Relation& r, CoreMode mode = CoreMode::SameType, const Chooser& chooser = {});

// Consequences of the index and core definitions, evaluated on the constructed
// index and core of R and on every other index of R.
std::vector<NamedCheck> core_theorem_suite(const Relation& r);

// Index conditions specialised to difunctions, and the bijection property.
// Throws std::invalid_argument when R is not difunctional.
std::vector<NamedCheck> difunction_index_suite(const Relation& r);

}  // namespace relalg
