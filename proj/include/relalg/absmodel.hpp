#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace relalg {

// A finite algebra with one implicit type. Elements are referred to by index;
// join and meet are derived from the order.
class AbstractModel {
 public:
  using Table = std::vector<std::vector<std::size_t>>;

  std::size_t size() const noexcept { return elements.size(); }
  std::size_t index_of(std::string_view name) const;  // throws std::out_of_range
  const std::string& name(std::size_t i) const { return elements.at(i); }

  bool le(std::size_t x, std::size_t y) const { return leq[x][y]; }
  std::size_t join(std::size_t x, std::size_t y) const { return join_[x][y]; }
  std::size_t meet(std::size_t x, std::size_t y) const { return meet_[x][y]; }
  std::size_t comp(std::size_t x, std::size_t y) const { return compose[x][y]; }
  std::size_t conv(std::size_t x) const { return converse[x]; }

  std::vector<std::string> elements;
  std::vector<std::vector<bool>> leq;
  Table compose;
  std::vector<std::size_t> converse;
  std::size_t identity = 0;
  std::size_t top = 0;
  std::size_t bottom = 0;

 private:
  friend AbstractModel validated(AbstractModel m);
  Table join_;
  Table meet_;
};

enum class ModelErrorKind { Shape, Lattice, Monoid, Converse, Distributivity };
std::string model_error_kind_name(ModelErrorKind k);

class ModelError : public std::runtime_error {
 public:
  ModelError(ModelErrorKind kind, const std::string& what, std::vector<std::string> tuple = {})
      : std::runtime_error(what), kind_(kind), tuple_(std::move(tuple)) {}
  ModelErrorKind kind() const noexcept { return kind_; }
  // The offending elements, smallest first in element order.
  const std::vector<std::string>& tuple() const noexcept { return tuple_; }

 private:
  ModelErrorKind kind_;
  std::vector<std::string> tuple_;
};

// Checks the order, monoid, converse and distributivity laws in that order and
// throws ModelError for the first category that fails. Derives join and meet.
AbstractModel validated(AbstractModel m);

AbstractModel parse_model(std::string_view json_text);
AbstractModel load_model(const std::string& path);
std::string model_to_json(const AbstractModel& m);

enum class Axiom {
  Dedekind,
  Cone,
  Choice,
  AllOrNothing,
  Extensional,
  UniversalChoice,
};
inline constexpr Axiom kAllAxioms[] = {Axiom::Dedekind,     Axiom::Cone,        Axiom::Choice,
                                       Axiom::AllOrNothing, Axiom::Extensional, Axiom::UniversalChoice};
std::string axiom_name(Axiom a);

struct AxiomResult {
  bool holds = true;
  std::vector<std::string> counterexample;  // empty iff holds
};

struct AxiomReport {
  AxiomResult dedekind, cone, choice, all_or_nothing, extensional, universal_choice;
  const AxiomResult& get(Axiom a) const;
  AxiomResult& get(Axiom a);
};

AxiomReport check_axioms(const AbstractModel& m);

// True when the tuple, read as in the corresponding AxiomResult, violates the axiom.
bool reproduces(const AbstractModel& m, Axiom a, const std::vector<std::string>& counterexample);

// Elements p ≤ 𝕀 with p ≠ ⊥ and nothing strictly between ⊥ and p.
std::vector<std::size_t> model_points(const AbstractModel& m);

// Componentwise product. Violates the cone rule whenever both factors have ⊥ ≠ ⊤.
AbstractModel product(const AbstractModel& a, const AbstractModel& b);

struct Expectation {
  std::optional<bool> cone, choice, all_or_nothing, extensional, universal_choice;
  std::optional<bool> get(Axiom a) const;
};

struct BundledModel {
  std::string name;
  AbstractModel model;
  Expectation expected;
};

std::vector<BundledModel> bundled_models();
const BundledModel& bundled_model(std::string_view name);

}  // namespace relalg
