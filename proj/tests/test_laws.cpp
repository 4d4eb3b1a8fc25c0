#include <map>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "relalg/domains.hpp"
#include "relalg/laws.hpp"

using namespace relalg;

namespace {

// Number of matrices of the given kind, counted with the pointwise oracle.
std::uint64_t kind_count(Kind k, std::size_t n, std::size_t m) {
  std::uint64_t count = 0;
  for (const auto& x : oracle::all_mats(n, m)) {
    bool in = false;
    switch (k) {
      case Kind::Relation: in = true; break;
      case Kind::Coreflexive: in = oracle::is_coreflexive(x); break;
      case Kind::Per: in = oracle::is_per(x); break;
      case Kind::Difunctional: in = oracle::is_difunctional(x); break;
      case Kind::Functional: in = oracle::is_functional(x); break;
      case Kind::Bijection: in = oracle::is_functional(x) && oracle::is_injective(x); break;
      case Kind::Point: {
        in = oracle::is_coreflexive(x) && std::count(x.b.begin(), x.b.end(), 1) == 1;
        break;
      }
    }
    count += in ? 1 : 0;
  }
  return count;
}

std::uint64_t expected_instances(const Law& law, std::size_t max_size) {
  const std::size_t top = std::min(max_size, law.size_cap);
  std::vector<std::size_t> sizes(law.type_vars, 1);
  std::uint64_t total = 0;
  while (true) {
    std::uint64_t prod = 1;
    for (const auto& p : law.params) prod *= kind_count(p.kind, sizes[p.src], sizes[p.dst]);
    total += prod;
    std::size_t v = 0;
    while (v < sizes.size() && ++sizes[v] > top) sizes[v++] = 1;
    if (v == sizes.size()) break;
  }
  return total;
}

Law negated_meet_law() {
  Law law;
  law.id = "selftest.meet_is_union";
  law.statement = "R ∩ S = R ∪ S (false)";
  law.type_vars = 2;
  law.params = {{"R", Kind::Relation, 0, 1}, {"S", Kind::Relation, 0, 1}};
  law.holds = [](const Instance& in) { return intersect(in.args[0], in.args[1]) == unite(in.args[0], in.args[1]); };
  return law;
}

std::size_t weight(const Instance& inst) {
  std::size_t w = 0;
  for (const auto& c : inst.carriers) w += c->size();
  for (const auto& a : inst.args) w += a.count();
  return w;
}

}  // namespace

TEST_SUITE("laws") {

TEST_CASE("registry ids are unique and numerous") {
  std::set<std::string> ids;
  for (const auto& law : registry()) {
    CHECK(ids.insert(law.id).second);
    CHECK_FALSE(law.statement.empty());
    for (const auto& p : law.params) {
      CHECK(p.src < law.type_vars);
      CHECK(p.dst < law.type_vars);
      if (p.kind != Kind::Relation && p.kind != Kind::Difunctional && p.kind != Kind::Functional &&
          p.kind != Kind::Bijection) {
        CHECK(p.src == p.dst);
      }
    }
  }
  CHECK(ids.size() >= 60);
}

TEST_CASE("manifest has no gaps") {
  const auto gaps = manifest_gaps();
  CHECK(gaps.unknown_ids.empty());
  CHECK(gaps.unmapped_laws.empty());
  CHECK(gaps.empty_entries.empty());
  std::size_t out_of_scope = 0;
  for (const auto& e : manifest()) out_of_scope += e.out_of_scope.empty() ? 0 : 1;
  CHECK(out_of_scope < manifest().size() / 4);
}

TEST_CASE("exhaustive counts equal the enumeration cardinality at size 2") {
  RunOptions opt;
  opt.max_size = 2;
  const auto reports = run_suite(opt);
  REQUIRE(reports.size() == registry().size());
  for (std::size_t k = 0; k < reports.size(); ++k) {
    CAPTURE(reports[k].id);
    CHECK(reports[k].passed());
    CHECK(reports[k].mode == Mode::Exhaustive);
    CHECK(reports[k].instances == expected_instances(registry()[k], 2));
    CHECK(reports[k].instances > 0);
  }
}

TEST_CASE("kind membership") {
  auto a = make_carrier("A", 2), b = make_carrier("B", 2);
  CHECK(in_kind(Kind::Point, Relation::from_pairs(a, a, std::vector<Pair>{{1, 1}})));
  CHECK_FALSE(in_kind(Kind::Point, Relation::identity(a)));
  CHECK_FALSE(in_kind(Kind::Per, Relation::top(a, b)));
  CHECK(in_kind(Kind::Difunctional, Relation::top(a, b)));
  CHECK(kind_name(Kind::Per) == "per");
}

TEST_CASE("runs are deterministic for a fixed seed") {
  RunOptions opt;
  opt.max_size = 3;
  opt.samples = 40;
  opt.seed = 99;
  opt.filter = "dedekind.*";
  opt.exhaustive_limit = 1000;
  const auto first = run_suite(opt);
  const auto second = run_suite(opt);
  REQUIRE(first.size() == second.size());
  for (std::size_t k = 0; k < first.size(); ++k) {
    CHECK(first[k].instances == second[k].instances);
    CHECK(first[k].failures == second[k].failures);
    CHECK(first[k].mode == Mode::Sampled);
    CHECK(first[k].seed == 99);
  }
}

TEST_CASE("filter and size errors") {
  RunOptions opt;
  opt.filter = "no.such.law*";
  CHECK_THROWS_AS(run_suite(opt), std::invalid_argument);
  opt.filter = "*";
  opt.max_size = 5;
  CHECK_THROWS_AS(run_suite(opt), std::invalid_argument);
  opt.max_size = 0;
  CHECK_THROWS_AS(run_suite(opt), std::invalid_argument);
}

TEST_CASE("difunctional laws pass sampled at size 3") {
  RunOptions opt;
  opt.max_size = 3;
  opt.samples = 1000;
  opt.seed = 42;
  opt.filter = "difunctional.*";
  for (const auto& r : run_suite(opt)) CHECK_MESSAGE(r.passed(), r.id);
}

TEST_CASE("a falsified law yields one failing report with a minimal counterexample") {
  const std::vector<Law> laws = {registry().front(), negated_meet_law()};
  RunOptions opt;
  opt.max_size = 2;
  const auto reports = run_laws(laws, opt);
  REQUIRE(reports.size() == 2);
  CHECK(reports[0].passed());
  CHECK_FALSE(reports[1].passed());
  REQUIRE(reports[1].counterexample);
  const auto& ce = *reports[1].counterexample;
  CHECK_FALSE(laws[1].holds(ce));
  // R and S must differ, so one pair over 1x1 carriers is the least failing input.
  CHECK(ce.carriers[0]->size() == 1);
  CHECK(ce.carriers[1]->size() == 1);
  CHECK(ce.args[0].count() + ce.args[1].count() == 1);
}

TEST_CASE("shrinking") {
  const auto law = negated_meet_law();
  auto a = make_carrier("A", 3), b = make_carrier("B", 3);
  Instance padded{{a, b},
                  {Relation::from_pairs(a, b, std::vector<Pair>{{0, 0}, {1, 2}, {2, 1}}),
                   Relation::from_pairs(a, b, std::vector<Pair>{{0, 0}, {2, 2}})}};
  REQUIRE_FALSE(law.holds(padded));
  const auto small = shrink(law, padded);
  CHECK_FALSE(law.holds(small));
  CHECK(weight(small) < weight(padded));
  CHECK(weight(small) == 3);

  // A minimal instance stays put; a passing instance is returned unchanged.
  const auto again = shrink(law, small);
  CHECK(again.args[0] == small.args[0]);
  CHECK(again.args[1] == small.args[1]);
  Instance passing{{a, b}, {Relation::bottom(a, b), Relation::bottom(a, b)}};
  const auto same = shrink(law, passing);
  CHECK(same.args[0] == passing.args[0]);
  CHECK(same.carriers[0]->size() == 3);
}

TEST_CASE("shrinking keeps parameters inside their kinds") {
  Law law;
  law.id = "selftest.per_is_empty";
  law.statement = "every per is empty (false)";
  law.params = {{"P", Kind::Per, 0, 0}};
  law.holds = [](const Instance& in) { return in.args[0].empty(); };
  auto a = make_carrier("A", 3);
  Instance inst{{a}, {Relation::top(a, a)}};
  const auto small = shrink(law, inst);
  CHECK(is_per(small.args[0]));
  CHECK_FALSE(small.args[0].empty());
  CHECK(small.carriers[0]->size() == 1);
}

}  // TEST_SUITE
