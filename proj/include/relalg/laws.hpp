#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "relalg/relation.hpp"

namespace relalg {

// What a law parameter ranges over. Homogeneous kinds need src == dst.
enum class Kind { Relation, Coreflexive, Per, Difunctional, Functional, Bijection, Point };
std::string kind_name(Kind k);
bool in_kind(Kind k, const Relation& r);

struct Param {
  std::string name;
  Kind kind = Kind::Relation;
  std::size_t src = 0;  // type variable indices
  std::size_t dst = 0;
};

// One assignment of carriers to type variables and relations to parameters.
struct Instance {
  std::vector<CarrierPtr> carriers;
  std::vector<Relation> args;
};

struct Law {
  std::string id;
  std::string statement;
  std::size_t type_vars = 1;
  std::vector<Param> params;
  std::function<bool(const Instance&)> holds;
  // Carrier sizes beyond this are not attempted, whatever the suite maximum.
  std::size_t size_cap = 4;
};

// The built-in registry, in a fixed order with unique ids.
const std::vector<Law>& registry();

struct RunOptions {
  std::size_t max_size = 2;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::string filter = "*";
  std::uint64_t exhaustive_limit = 10'000'000;
};

enum class Mode { Exhaustive, Sampled };

struct LawReport {
  std::string id;
  std::string statement;
  std::uint64_t instances = 0;
  std::uint64_t failures = 0;
  Mode mode = Mode::Exhaustive;
  std::uint64_t seed = 0;
  std::size_t max_size = 0;
  std::optional<Instance> counterexample;  // shrunk
  bool passed() const noexcept { return failures == 0; }
};

// Throws std::invalid_argument when the filter matches no law, or when
// max_size is outside 1..4.
std::vector<LawReport> run_suite(const RunOptions& options);
std::vector<LawReport> run_laws(const std::vector<Law>& laws, const RunOptions& options);
LawReport run_law(const Law& law, const RunOptions& options);

// Greedily drops carrier elements and pairs while every argument stays in its
// kind and the law still fails. Returns the input unchanged if it passes.
Instance shrink(const Law& law, Instance failing);

// Maps each numbered statement of the calculus, named descriptively, to the
// law ids that test it or to the reason it is out of scope.
struct ManifestEntry {
  std::string statement;
  std::vector<std::string> law_ids;
  std::string out_of_scope;  // empty when law_ids is non-empty
};
const std::vector<ManifestEntry>& manifest();

// Ids referenced by the manifest but not registered, and registered ids the
// manifest never mentions.
struct ManifestGaps {
  std::vector<std::string> unknown_ids;
  std::vector<std::string> unmapped_laws;
  std::vector<std::string> empty_entries;
  bool empty() const noexcept { return unknown_ids.empty() && unmapped_laws.empty() && empty_entries.empty(); }
};
ManifestGaps manifest_gaps();

}  // namespace relalg
