#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "relalg/absmodel.hpp"
#include "relalg/domains.hpp"
#include "relalg/indexcore.hpp"
#include "relalg/isomorph.hpp"
#include "relalg/laws.hpp"
#include "relalg/pointlattice.hpp"
#include "relalg/relation.hpp"

namespace relalg {

using Json = nlohmann::json;

// Malformed input. `where` names the offending field, or "line N" for syntax errors.
class FormatError : public std::runtime_error {
 public:
  FormatError(std::string where, const std::string& what)
      : std::runtime_error(where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

// {"src": {"name", "size", "labels"}, "dst": {...}, "pairs": [[i, j], ...]}.
// Labels are optional on input and always written.
Relation relation_from_json(const Json& doc);
Relation parse_relation(std::string_view text);
Relation load_relation(const std::string& path);
Json to_json(const Relation& r);
Json to_json(const Carrier& c);

Json to_json(const PredicateReport& report);
Json to_json(const IndexChecks& checks);
Json to_json(const IndexCertificate& cert);
Json to_json(const CoreDecomposition& core);
Json to_json(const IsoWitness& w);
Json to_json(const std::vector<PointPair>& pairs);
Json to_json(const Instance& inst, const Law& law);
Json to_json(const LawReport& report);
Json to_json(const AxiomReport& report);
Json to_json(const ModelError& error);
Json manifest_json();

struct DotOptions {
  std::string name = "R";
  bool clusters = true;               // per-domain classes as clusters
  std::optional<Relation> highlight;  // e.g. an index; must have R's type
};

// Bipartite drawing: sources on the left, targets on the right, labelled by
// carrier labels. Output depends only on the relation and the options.
std::string to_dot(const Relation& r, const DotOptions& options = {});

}  // namespace relalg
