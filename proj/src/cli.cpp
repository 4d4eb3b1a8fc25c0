#include "relalg/cli.hpp"

#include <algorithm>
#include <iomanip>

#include "CLI11.hpp"
#include "relalg/io.hpp"

namespace relalg {

namespace {

struct Globals {
  bool dot = false;
  bool pretty = false;
};

void emit(std::ostream& out, const Json& doc) { out << doc.dump(2) << "\n"; }

std::string mark(bool b) { return b ? "yes" : "no"; }

void print_classification(std::ostream& out, const PredicateReport& rep) {
  for (const auto* c : rep.all()) out << std::left << std::setw(16) << c->name << mark(c->value) << "\n";
}

void print_laws(std::ostream& out, const std::vector<LawReport>& reports) {
  std::size_t passed = 0;
  for (const auto& r : reports) {
    out << (r.passed() ? "PASS " : "FAIL ") << std::left << std::setw(36) << r.id << std::right << std::setw(10)
        << r.instances << "  " << (r.mode == Mode::Exhaustive ? "exhaustive" : "sampled") << "\n";
    passed += r.passed() ? 1 : 0;
  }
  out << passed << "/" << reports.size() << " laws passed\n";
}

void print_axioms(std::ostream& out, const AxiomReport& rep) {
  for (Axiom a : kAllAxioms) {
    const auto& r = rep.get(a);
    out << std::left << std::setw(18) << axiom_name(a) << mark(r.holds);
    if (!r.holds) {
      out << "  (";
      for (std::size_t k = 0; k < r.counterexample.size(); ++k) out << (k ? ", " : "") << r.counterexample[k];
      out << ")";
    }
    out << "\n";
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite workbench for point-free relation algebra", "relalg"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--dot", g.dot, "Emit a Graphviz drawing instead of JSON where supported");
  app.add_flag("--pretty", g.pretty, "Human-readable tables instead of JSON");

  std::string rel_path, rel_path2, model_path;
  std::string policy = "min";
  std::uint64_t seed = 0;
  std::string mode = "same-type";
  std::size_t bound = kDefaultIsoBound;
  std::size_t carrier_size = 0;
  RunOptions law_opts;
  bool manifest_only = false;

  auto* classify_cmd = app.add_subcommand("classify", "Evaluate the structural predicates of a relation");
  classify_cmd->add_option("relation", rel_path, "Relation JSON file")->required();

  auto* index_cmd = app.add_subcommand("index", "Compute and certify an index");
  index_cmd->add_option("relation", rel_path, "Relation JSON file")->required();
  index_cmd->add_option("--policy", policy, "Representative choice: min, max or random")
      ->check(CLI::IsMember({"min", "max", "random"}));
  index_cmd->add_option("--seed", seed, "Seed for the random policy");

  auto* core_cmd = app.add_subcommand("core", "Compute a core with its splitting witnesses");
  core_cmd->add_option("relation", rel_path, "Relation JSON file")->required();
  core_cmd->add_option("--mode", mode, "same-type or quotient")->check(CLI::IsMember({"same-type", "quotient"}));
  core_cmd->add_option("--policy", policy, "Representative choice: min, max or random")
      ->check(CLI::IsMember({"min", "max", "random"}));
  core_cmd->add_option("--seed", seed, "Seed for the random policy");

  auto* iso_cmd = app.add_subcommand("iso", "Decide isomorphism and print witnesses");
  iso_cmd->add_option("first", rel_path, "Relation JSON file")->required();
  iso_cmd->add_option("second", rel_path2, "Relation JSON file")->required();
  iso_cmd->add_option("--bound", bound, "Largest domain size searched");

  auto* decompose_cmd = app.add_subcommand("decompose", "List the point pairs below a relation");
  decompose_cmd->add_option("relation", rel_path, "Relation JSON file")->required();

  auto* points_cmd = app.add_subcommand("points", "List the points of a carrier");
  points_cmd->add_option("size", carrier_size, "Carrier size")->required()->check(CLI::Range(0, 64));

  auto* laws_cmd = app.add_subcommand("laws", "Run the law registry");
  laws_cmd->add_option("--max-size", law_opts.max_size, "Largest carrier size (1 to 4)")->check(CLI::Range(1, 4));
  laws_cmd->add_option("--samples", law_opts.samples, "Samples per size combination beyond the exhaustive limit");
  laws_cmd->add_option("--seed", law_opts.seed, "Sampling seed");
  laws_cmd->add_option("--filter", law_opts.filter, "Glob over law ids");
  laws_cmd->add_flag("--manifest", manifest_only, "Print the coverage map instead of running");

  auto* model_cmd = app.add_subcommand("model", "Validate an abstract model and report its axioms");
  model_cmd->add_option("file", model_path, "Model JSON file")->required();

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const Chooser chooser{parse_policy(policy), seed};
  try {
    if (*classify_cmd) {
      const auto r = load_relation(rel_path);
      const auto rep = classify(r);
      if (g.pretty) {
        print_classification(out, rep);
      } else {
        emit(out, to_json(rep));
      }
      return kExitOk;
    }
    if (*index_cmd) {
      const auto r = load_relation(rel_path);
      const auto cert = relation_index(r, chooser);
      if (g.dot) {
        out << to_dot(r, {"index", true, cert.index});
      } else {
        Json doc = to_json(cert);
        doc["policy"] = policy;
        doc["seed"] = seed;
        emit(out, doc);
      }
      return cert.checks.all() ? kExitOk : kExitFalse;
    }
    if (*core_cmd) {
      const auto r = load_relation(rel_path);
      const auto core = core_of(r, parse_core_mode(mode), chooser);
      if (g.dot) {
        out << to_dot(core.core, {"core", true, std::nullopt});
      } else {
        emit(out, to_json(core));
      }
      return core.checks.all() ? kExitOk : kExitFalse;
    }
    if (*iso_cmd) {
      const auto r = load_relation(rel_path);
      const auto s = load_relation(rel_path2);
      const auto w = find_isomorphism(r, s, bound);
      if (!w) {
        if (g.pretty) {
          out << "not isomorphic\n";
        } else {
          emit(out, {{"isomorphic", false}});
        }
        return kExitFalse;
      }
      Json doc = to_json(*w);
      doc["isomorphic"] = true;
      emit(out, doc);
      return kExitOk;
    }
    if (*decompose_cmd) {
      const auto r = load_relation(rel_path);
      const auto pairs = decompose_to_pairs(r);
      if (g.dot) {
        out << to_dot(r, {"pairs", false, std::nullopt});
      } else if (g.pretty) {
        for (const auto& p : pairs) {
          const auto i = p.a.pairs().front().first;
          const auto j = p.b.pairs().front().first;
          out << r.src().label(i) << " -> " << r.dst().label(j) << "\n";
        }
      } else {
        emit(out, {{"relation", to_json(r)}, {"pairs", to_json(pairs)}});
      }
      return kExitOk;
    }
    if (*points_cmd) {
      const auto carrier = make_carrier("A", carrier_size);
      Json list = Json::array();
      for (const auto& p : points(carrier)) list.push_back(p.pairs().front().first);
      emit(out, {{"carrier", to_json(*carrier)}, {"points", list}});
      return kExitOk;
    }
    if (*laws_cmd) {
      if (manifest_only) {
        const auto doc = manifest_json();
        emit(out, doc);
        return doc["complete"].get<bool>() ? kExitOk : kExitFalse;
      }
      const auto reports = run_suite(law_opts);
      const bool all = std::all_of(reports.begin(), reports.end(), [](const LawReport& r) { return r.passed(); });
      if (g.pretty) {
        print_laws(out, reports);
      } else {
        Json doc = Json::array();
        for (const auto& r : reports) doc.push_back(to_json(r));
        emit(out, doc);
      }
      return all ? kExitOk : kExitFalse;
    }
    if (*model_cmd) {
      const auto m = load_model(model_path);
      const auto rep = check_axioms(m);
      if (g.pretty) {
        print_axioms(out, rep);
      } else {
        emit(out, to_json(rep));
      }
      return kExitOk;
    }
  } catch (const FormatError& e) {
    err << "format error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ModelError& e) {
    err << "invalid model: " << e.what() << "\n";
    emit(err, to_json(e));
    return kExitUsage;
  } catch (const TypeError& e) {
    err << "type error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace relalg
