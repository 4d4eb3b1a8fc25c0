#include "relalg/laws.hpp"

#include <fnmatch.h>

#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <tuple>

#include "relalg/domains.hpp"

namespace relalg {

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

const char* kTypeNames[] = {"A", "B", "C", "D", "E", "F"};

class CandidateCache {
 public:
  const std::vector<std::uint64_t>& get(Kind kind, const CarrierPtr& src, const CarrierPtr& dst) {
    const auto key = std::make_tuple(static_cast<int>(kind), src->size(), dst->size(), src->name() == dst->name());
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    std::vector<std::uint64_t> codes;
    for (const auto& r : enumerate_relations(src, dst, 16)) {
      if (in_kind(kind, r)) codes.push_back(r.code());
    }
    return cache_.emplace(key, std::move(codes)).first->second;
  }

 private:
  std::map<std::tuple<int, std::size_t, std::size_t, bool>, std::vector<std::uint64_t>> cache_;
};

bool evaluate(const Law& law, const Instance& inst) {
  try {
    return law.holds(inst);
  } catch (const std::exception&) {
    return false;
  }
}

bool args_in_kind(const Law& law, const Instance& inst) {
  for (std::size_t k = 0; k < law.params.size(); ++k) {
    if (!in_kind(law.params[k].kind, inst.args[k])) return false;
  }
  return true;
}

// Copy of r with element `drop` removed from every carrier position bound to `var`.
Relation drop_element(const Relation& r, const Param& p, std::size_t var, std::size_t drop,
                      const CarrierPtr& smaller) {
  const bool src_hit = p.src == var;
  const bool dst_hit = p.dst == var;
  Relation out(src_hit ? smaller : r.src_ptr(), dst_hit ? smaller : r.dst_ptr());
  for (const auto& [i, j] : r.pairs()) {
    if ((src_hit && i == drop) || (dst_hit && j == drop)) continue;
    out.insert(src_hit && i > drop ? i - 1 : i, dst_hit && j > drop ? j - 1 : j);
  }
  return out;
}

}  // namespace

std::string kind_name(Kind k) {
  switch (k) {
    case Kind::Relation: return "relation";
    case Kind::Coreflexive: return "coreflexive";
    case Kind::Per: return "per";
    case Kind::Difunctional: return "difunction";
    case Kind::Functional: return "functional";
    case Kind::Bijection: return "bijection";
    case Kind::Point: return "point";
  }
  return "relation";
}

bool in_kind(Kind k, const Relation& r) {
  switch (k) {
    case Kind::Relation: return true;
    case Kind::Coreflexive: return is_coreflexive(r);
    case Kind::Per: return r.is_homogeneous() && is_per(r);
    case Kind::Difunctional: return is_difunctional(r);
    case Kind::Functional: return is_functional(r);
    case Kind::Bijection: return is_bijection(r);
    case Kind::Point: return is_coreflexive(r) && r.count() == 1;
  }
  return false;
}

LawReport run_law(const Law& law, const RunOptions& options) {
  if (options.max_size < 1 || options.max_size > 4) throw std::invalid_argument("max_size must be between 1 and 4");
  if (law.type_vars > std::size(kTypeNames)) throw std::invalid_argument("law " + law.id + " has too many type variables");
  LawReport rep;
  rep.id = law.id;
  rep.statement = law.statement;
  rep.seed = options.seed;
  rep.max_size = std::min(options.max_size, law.size_cap);

  CandidateCache cache;
  std::vector<std::size_t> sizes(law.type_vars, 1);
  std::uint64_t combo = 0;
  std::optional<Instance> first_failure;
  for (bool more = true; more; ++combo) {
    Instance inst;
    for (std::size_t v = 0; v < law.type_vars; ++v) inst.carriers.push_back(make_carrier(kTypeNames[v], sizes[v]));
    std::vector<const std::vector<std::uint64_t>*> lists;
    long double total = 1;
    for (const auto& p : law.params) {
      lists.push_back(&cache.get(p.kind, inst.carriers[p.src], inst.carriers[p.dst]));
      total *= static_cast<long double>(lists.back()->size());
    }
    auto run_one = [&](const std::vector<std::size_t>& pick) {
      inst.args.clear();
      for (std::size_t k = 0; k < law.params.size(); ++k) {
        const auto& p = law.params[k];
        inst.args.push_back(Relation::from_code(inst.carriers[p.src], inst.carriers[p.dst], (*lists[k])[pick[k]]));
      }
      ++rep.instances;
      if (!evaluate(law, inst)) {
        ++rep.failures;
        if (!first_failure) first_failure = inst;
      }
    };
    std::vector<std::size_t> pick(law.params.size(), 0);
    if (total == 0) {
      // Nothing of the required kind at these sizes.
    } else if (total <= static_cast<long double>(options.exhaustive_limit)) {
      for (bool go = true; go;) {
        run_one(pick);
        go = false;
        for (std::size_t k = 0; k < pick.size(); ++k) {
          if (++pick[k] < lists[k]->size()) {
            go = true;
            break;
          }
          pick[k] = 0;
        }
      }
    } else {
      rep.mode = Mode::Sampled;
      std::mt19937_64 rng(options.seed ^ fnv1a(law.id) ^ (combo * 0x9E3779B97F4A7C15ULL));
      for (std::uint64_t s = 0; s < options.samples; ++s) {
        for (std::size_t k = 0; k < pick.size(); ++k) {
          pick[k] = std::uniform_int_distribution<std::size_t>(0, lists[k]->size() - 1)(rng);
        }
        run_one(pick);
      }
    }
    more = false;
    for (std::size_t v = 0; v < sizes.size(); ++v) {
      if (++sizes[v] <= rep.max_size) {
        more = true;
        break;
      }
      sizes[v] = 1;
    }
  }
  if (first_failure) rep.counterexample = shrink(law, *first_failure);
  return rep;
}

std::vector<LawReport> run_laws(const std::vector<Law>& laws, const RunOptions& options) {
  std::vector<LawReport> out;
  for (const auto& law : laws) {
    if (fnmatch(options.filter.c_str(), law.id.c_str(), 0) == 0) out.push_back(run_law(law, options));
  }
  if (out.empty()) throw std::invalid_argument("no law matches '" + options.filter + "'");
  return out;
}

std::vector<LawReport> run_suite(const RunOptions& options) { return run_laws(registry(), options); }

Instance shrink(const Law& law, Instance cur) {
  if (evaluate(law, cur)) return cur;
  for (bool progress = true; progress;) {
    progress = false;
    for (std::size_t v = 0; v < cur.carriers.size() && !progress; ++v) {
      const std::size_t n = cur.carriers[v]->size();
      if (n <= 1) continue;
      auto smaller = make_carrier(cur.carriers[v]->name(), n - 1);
      for (std::size_t drop = 0; drop < n && !progress; ++drop) {
        Instance cand;
        cand.carriers = cur.carriers;
        cand.carriers[v] = smaller;
        for (std::size_t k = 0; k < law.params.size(); ++k) {
          const auto& p = law.params[k];
          cand.args.push_back(drop_element(cur.args[k], p, v, drop, smaller));
        }
        if (args_in_kind(law, cand) && !evaluate(law, cand)) {
          cur = std::move(cand);
          progress = true;
        }
      }
    }
    for (std::size_t k = 0; k < cur.args.size() && !progress; ++k) {
      for (const auto& [i, j] : cur.args[k].pairs()) {
        Instance cand = cur;
        cand.args[k].erase(i, j);
        if (args_in_kind(law, cand) && !evaluate(law, cand)) {
          cur = std::move(cand);
          progress = true;
          break;
        }
      }
    }
  }
  return cur;
}

ManifestGaps manifest_gaps() {
  ManifestGaps gaps;
  std::set<std::string> registered;
  for (const auto& law : registry()) registered.insert(law.id);
  std::set<std::string> mentioned;
  for (const auto& e : manifest()) {
    if (e.law_ids.empty() && e.out_of_scope.empty()) gaps.empty_entries.push_back(e.statement);
    for (const auto& id : e.law_ids) {
      mentioned.insert(id);
      if (registered.count(id) == 0) gaps.unknown_ids.push_back(id);
    }
  }
  for (const auto& id : registered) {
    if (mentioned.count(id) == 0) gaps.unmapped_laws.push_back(id);
  }
  return gaps;
}

}  // namespace relalg
