#include "relalg/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace relalg {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) { throw FormatError(where, what); }

std::size_t line_of(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) line += text[i] == '\n' ? 1 : 0;
  return line;
}

CarrierPtr carrier_from_json(const Json& doc, const std::string& where) {
  if (!doc.is_object()) bad(where, "must be an object with name and size");
  if (!doc.contains("name") || !doc["name"].is_string()) bad(where + ".name", "must be a string");
  if (!doc.contains("size") || !doc["size"].is_number_unsigned()) bad(where + ".size", "must be a non-negative integer");
  const auto name = doc["name"].get<std::string>();
  const auto size = doc["size"].get<std::size_t>();
  if (size > kMaxCarrierSize) bad(where + ".size", "exceeds " + std::to_string(kMaxCarrierSize));
  if (!doc.contains("labels")) return make_carrier(name, size);
  const auto& labels = doc["labels"];
  if (!labels.is_array()) bad(where + ".labels", "must be a list of strings");
  if (labels.size() != size) bad(where + ".labels", "has " + std::to_string(labels.size()) + " entries for size " + std::to_string(size));
  std::vector<std::string> out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!labels[i].is_string()) bad(where + ".labels[" + std::to_string(i) + "]", "must be a string");
    out.push_back(labels[i].get<std::string>());
  }
  try {
    return make_carrier(name, std::move(out));
  } catch (const std::exception& e) {
    bad(where + ".labels", e.what());
  }
}

Json flags(std::initializer_list<std::pair<const char*, bool>> items) {
  Json out = Json::object();
  for (const auto& [k, v] : items) out[k] = v;
  return out;
}

Json classification_json(const Classification& c) {
  Json ev = Json::array();
  for (const auto& e : c.evidence) {
    Json item = {{"equation", e.equation}, {"holds", e.holds}};
    if (e.lhs) item["lhs"] = to_json(*e.lhs)["pairs"];
    if (e.rhs) item["rhs"] = to_json(*e.rhs)["pairs"];
    ev.push_back(std::move(item));
  }
  return {{"value", c.value}, {"evidence", std::move(ev)}};
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Json to_json(const Carrier& c) { return {{"name", c.name()}, {"size", c.size()}, {"labels", c.labels()}}; }

Json to_json(const Relation& r) {
  Json pairs = Json::array();
  for (const auto& [i, j] : r.pairs()) pairs.push_back({i, j});
  return {{"src", to_json(r.src())}, {"dst", to_json(r.dst())}, {"pairs", std::move(pairs)}};
}

Relation relation_from_json(const Json& doc) {
  if (!doc.is_object()) bad("relation", "must be an object with src, dst and pairs");
  if (!doc.contains("src")) bad("src", "missing");
  if (!doc.contains("dst")) bad("dst", "missing");
  if (!doc.contains("pairs")) bad("pairs", "missing");
  auto src = carrier_from_json(doc["src"], "src");
  auto dst = carrier_from_json(doc["dst"], "dst");
  const auto& pairs = doc["pairs"];
  if (!pairs.is_array()) bad("pairs", "must be a list of [i, j]");
  Relation r(src, dst);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const std::string where = "pairs[" + std::to_string(k) + "]";
    const auto& p = pairs[k];
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_unsigned() || !p[1].is_number_unsigned()) {
      bad(where, "must be a pair of non-negative integers");
    }
    const auto i = p[0].get<std::size_t>();
    const auto j = p[1].get<std::size_t>();
    if (i >= src->size()) bad(where, "source index " + std::to_string(i) + " out of range");
    if (j >= dst->size()) bad(where, "target index " + std::to_string(j) + " out of range");
    if (r.contains(i, j)) bad(where, "duplicate pair");
    r.insert(i, j);
  }
  return r;
}

Relation parse_relation(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    bad("line " + std::to_string(line_of(text, e.byte == 0 ? 0 : e.byte - 1)), "invalid JSON");
  }
  return relation_from_json(doc);
}

Relation load_relation(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad(path, "cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_relation(buf.str());
  } catch (const FormatError& e) {
    throw FormatError(path + ": " + e.where(), std::string(e.what()).substr(e.where().size() + 2));
  }
}

Json to_json(const PredicateReport& report) {
  Json out = Json::object();
  for (const auto* c : report.all()) out[c->name] = classification_json(*c);
  return out;
}

Json to_json(const IndexChecks& c) {
  return flags({{"contained", c.contained}, {"reconstructs", c.reconstructs}, {"left", c.left}, {"right", c.right}});
}

Json to_json(const IndexCertificate& cert) {
  return {{"relation", to_json(cert.relation)},
          {"index", to_json(cert.index)},
          {"checks", to_json(cert.checks)},
          {"valid", cert.checks.all()}};
}

Json to_json(const CoreDecomposition& core) {
  const auto& c = core.checks;
  return {{"mode", core_mode_name(core.mode)},
          {"relation", to_json(core.relation)},
          {"lambda", to_json(core.lambda)},
          {"rho", to_json(core.rho)},
          {"core", to_json(core.core)},
          {"checks", flags({{"core_equation", c.core_equation},
                            {"lambda_per", c.lambda_per},
                            {"lambda_domain", c.lambda_domain},
                            {"rho_per", c.rho_per},
                            {"rho_domain", c.rho_domain}})},
          {"valid", c.all()}};
}

Json to_json(const IsoWitness& w) { return {{"phi", to_json(w.phi)}, {"psi", to_json(w.psi)}}; }

Json to_json(const std::vector<PointPair>& pairs) {
  Json out = Json::array();
  for (const auto& p : pairs) {
    const auto i = p.a.pairs().front().first;
    const auto j = p.b.pairs().front().first;
    out.push_back({{"a", i}, {"b", j}, {"a_label", p.a.src().label(i)}, {"b_label", p.b.src().label(j)}});
  }
  return out;
}

Json to_json(const Instance& inst, const Law& law) {
  Json carriers = Json::object();
  for (const auto& c : inst.carriers) carriers[c->name()] = c->size();
  Json args = Json::object();
  for (std::size_t k = 0; k < inst.args.size() && k < law.params.size(); ++k) {
    args[law.params[k].name] = to_json(inst.args[k])["pairs"];
  }
  return {{"carriers", std::move(carriers)}, {"args", std::move(args)}};
}

Json to_json(const LawReport& report) {
  Json out = {{"id", report.id},
              {"statement", report.statement},
              {"instances", report.instances},
              {"failures", report.failures},
              {"mode", report.mode == Mode::Exhaustive ? "exhaustive" : "sampled"},
              {"seed", report.seed},
              {"max_size", report.max_size},
              {"passed", report.passed()}};
  if (report.counterexample) {
    for (const auto& law : registry()) {
      if (law.id == report.id) out["counterexample"] = to_json(*report.counterexample, law);
    }
    if (!out.contains("counterexample")) {
      Json carriers = Json::object();
      for (const auto& c : report.counterexample->carriers) carriers[c->name()] = c->size();
      Json args = Json::array();
      for (const auto& a : report.counterexample->args) args.push_back(to_json(a)["pairs"]);
      out["counterexample"] = {{"carriers", carriers}, {"args", args}};
    }
  }
  return out;
}

Json to_json(const AxiomReport& report) {
  Json out = Json::object();
  for (Axiom a : kAllAxioms) {
    const auto& r = report.get(a);
    Json item = {{"holds", r.holds}};
    if (!r.holds) item["counterexample"] = r.counterexample;
    out[axiom_name(a)] = std::move(item);
  }
  return out;
}

Json to_json(const ModelError& error) {
  return {{"error", model_error_kind_name(error.kind())}, {"message", error.what()}, {"tuple", error.tuple()}};
}

Json manifest_json() {
  Json entries = Json::array();
  for (const auto& e : manifest()) {
    Json item = {{"statement", e.statement}, {"laws", e.law_ids}};
    if (!e.out_of_scope.empty()) item["out_of_scope"] = e.out_of_scope;
    entries.push_back(std::move(item));
  }
  const auto gaps = manifest_gaps();
  return {{"entries", std::move(entries)},
          {"gaps",
           {{"unknown_ids", gaps.unknown_ids},
            {"unmapped_laws", gaps.unmapped_laws},
            {"empty_entries", gaps.empty_entries}}},
          {"complete", gaps.empty()}};
}

std::string to_dot(const Relation& r, const DotOptions& options) {
  if (options.highlight && !same_type(r, *options.highlight)) {
    throw TypeError("to_dot: highlighted relation has a different type");
  }
  std::ostringstream out;
  out << "digraph " << quote(options.name) << " {\n";
  out << "  rankdir=LR;\n  node [shape=circle];\n";
  auto side = [&](const char* prefix, const Carrier& c, const Relation& per) {
    std::set<std::size_t> clustered;
    if (options.clusters) {
      std::size_t k = 0;
      for (const auto& cls : per_classes(per)) {
        out << "  subgraph cluster_" << prefix << k++ << " {\n    style=rounded;\n";
        for (auto i : cls) {
          out << "    " << prefix << i << " [label=" << quote(c.label(i)) << "];\n";
          clustered.insert(i);
        }
        out << "  }\n";
      }
    }
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (!clustered.count(i)) out << "  " << prefix << i << " [label=" << quote(c.label(i)) << "];\n";
    }
  };
  side("s", r.src(), per_ldom(r));
  side("t", r.dst(), per_rdom(r));
  for (const auto& [i, j] : r.pairs()) {
    out << "  s" << i << " -> t" << j;
    if (options.highlight && options.highlight->contains(i, j)) out << " [color=red, penwidth=2]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace relalg
