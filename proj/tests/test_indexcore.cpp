#include <set>

#include "doctest.h"
#include "gen.hpp"
#include "oracles.hpp"
#include "relalg/indexcore.hpp"
#include "relalg/isomorph.hpp"

using namespace relalg;

namespace {

Relation rel(const CarrierPtr& a, const CarrierPtr& b, std::vector<Pair> pairs) {
  return Relation::from_pairs(a, b, pairs);
}

Relation block(const CarrierPtr& a) { return rel(a, a, {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 2}}); }

// Def-level conditions for a coreflexive index of a per, evaluated directly.
bool per_index_oracle(const oracle::Mat& p, const oracle::Mat& j) {
  return oracle::is_coreflexive(j) && oracle::le(j, oracle::ldom(p)) &&
         oracle::comp(oracle::comp(j, p), j) == j && oracle::comp(oracle::comp(p, j), p) == p;
}

}  // namespace

TEST_SUITE("indexcore") {

TEST_CASE("per index examples") {
  auto two = make_carrier("A", 2), three = make_carrier("B", 3);
  CHECK(per_index(Relation::top(two, two)).relation() == rel(two, two, {{0, 0}}));
  CHECK(per_index(Relation::identity(three)).relation() == Relation::identity(three));
  CHECK(per_index(block(three)).relation() == rel(three, three, {{0, 0}, {2, 2}}));
  CHECK(per_index(Relation::top(two, two), {Policy::Largest, 0}).relation() == rel(two, two, {{1, 1}}));
}

TEST_CASE("per index names the failed condition") {
  auto a = make_carrier("A", 2);
  try {
    per_index(rel(a, a, {{0, 1}}));
    FAIL("expected NotAPer");
  } catch (const NotAPer& e) {
    CHECK(e.condition() == "symmetric");
  }
  try {
    per_index(rel(a, a, {{0, 1}, {1, 0}}));
    FAIL("expected NotAPer");
  } catch (const NotAPer& e) {
    CHECK(e.condition() == "transitive");
  }
  CHECK_THROWS_AS(per_index(Relation::bottom(a, make_carrier("B", 2))), NotAPer);
  CHECK_THROWS_AS(splitting(rel(a, a, {{0, 1}})), NotAPer);
}

TEST_CASE("policies parse") {
  CHECK(parse_policy("min") == Policy::Smallest);
  CHECK(parse_policy("max") == Policy::Largest);
  CHECK(parse_policy("random") == Policy::Random);
  CHECK_THROWS_AS(parse_policy("first"), std::invalid_argument);
  CHECK(policy_name(Policy::Largest) == "max");
  CHECK(parse_core_mode("quotient") == CoreMode::Quotient);
  CHECK_THROWS_AS(parse_core_mode("other"), std::invalid_argument);
}

TEST_CASE("per index satisfies its conditions for every per up to size 4") {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto a = make_carrier("A", n);
    for (const auto& p : enumerate_relations(a, a, 16)) {
      if (!is_per(p)) continue;
      for (Policy pol : {Policy::Smallest, Policy::Largest, Policy::Random}) {
        const auto j = per_index(p, {pol, 5});
        CHECK(check_per_index(p, j).all());
        CHECK(per_index_oracle(oracle::of(p), oracle::of(j)));
        CHECK(j.relation().count() == per_classes(p).size());
      }
    }
  }
}

TEST_CASE("per index conditions coincide with relation index conditions") {
  auto a = make_carrier("A", 3);
  for (const auto& p : enumerate_relations(a, a)) {
    if (!is_per(p)) continue;
    for (std::uint64_t mask = 0; mask < 8; ++mask) {
      Relation j(a, a);
      for (std::size_t i = 0; i < 3; ++i) {
        if ((mask >> i) & 1U) j.insert(i, i);
      }
      CHECK(check_per_index(p, j).all() == verify_index(p, j).checks.all());
    }
  }
}

TEST_CASE("relation index examples") {
  auto a = make_carrier("A", 2), c = make_carrier("C", 3);
  CHECK(relation_index(Relation::top(a, a)).index == rel(a, a, {{0, 0}}));
  const auto cert = relation_index(block(c));
  CHECK(cert.index == rel(c, c, {{0, 0}, {2, 2}}));
  CHECK(cert.checks.all());
  const auto perm = rel(c, c, {{0, 2}, {1, 0}, {2, 1}});
  CHECK(relation_index(perm).index == perm);
}

TEST_CASE("top is not its own index") {
  auto a = make_carrier("A", 2);
  const auto top = Relation::top(a, a);
  const auto c = verify_index(top, top).checks;
  CHECK(c.contained);
  CHECK(c.reconstructs);
  CHECK_FALSE(c.left);
  CHECK_FALSE(c.all());
  CHECK_THROWS_AS(verify_index(top, Relation::bottom(a, make_carrier("B", 2))), TypeError);
}

TEST_CASE("computed index is among the brute-force indexes for all 3x3 relations") {
  auto a = make_carrier("A", 3), b = make_carrier("B", 3);
  for (const auto& r : enumerate_relations(a, b)) {
    const auto mr = oracle::of(r);
    const auto brute = oracle::all_indexes(mr);
    for (Policy pol : {Policy::Smallest, Policy::Largest}) {
      const auto cert = relation_index(r, {pol, 0});
      CHECK(cert.checks.all());
      CHECK(std::find(brute.begin(), brute.end(), oracle::of(cert.index)) != brute.end());
    }
    const auto library = all_indexes(r);
    CHECK(library.size() == brute.size());
    for (const auto& j : library) {
      CHECK(std::find(brute.begin(), brute.end(), oracle::of(j)) != brute.end());
      // An index is a core relation.
      CHECK(ldom(j).relation() == per_ldom(j));
      CHECK(rdom(j).relation() == per_rdom(j));
      CHECK(is_subset(per_ldom(j), per_ldom(r)));
      CHECK(is_subset(per_rdom(j), per_rdom(r)));
    }
  }
}

TEST_CASE("indexes with equal domains coincide") {
  auto a = make_carrier("A", 3);
  for (const auto& r : enumerate_relations(a, a)) {
    const auto idx = all_indexes(r);
    for (const auto& j : idx) {
      for (const auto& k : idx) {
        if (ldom(j) == ldom(k) && rdom(j) == rdom(k)) CHECK(j == k);
      }
    }
  }
}

TEST_CASE("all_indexes refuses large relations") {
  auto a = make_carrier("A", 5);
  CHECK_THROWS_AS(all_indexes(Relation::top(a, a)), EnumerationBoundError);
}

TEST_CASE("splitting examples and characterisation") {
  auto a = make_carrier("A", 2);
  CHECK(splitting(Relation::identity(a)) == Relation::identity(a));
  CHECK(splitting(Relation::top(a, a)) == rel(a, a, {{0, 0}, {0, 1}}));
  for (std::size_t n = 1; n <= 3; ++n) {
    auto c = make_carrier("C", n);
    for (const auto& p : enumerate_relations(c, c)) {
      if (!is_per(p)) continue;
      const auto f = splitting(p);
      CHECK(is_functional(f));
      CHECK(compose(converse(f), f) == p);
      CHECK(compose(f, converse(f)) == per_index(p).relation());
    }
  }
}

TEST_CASE("quotient core of a full 2x3 relation is full 1x1") {
  auto a = make_carrier("A", 2), b = make_carrier("B", 3);
  const auto d = core_of(Relation::top(a, b), CoreMode::Quotient);
  CHECK(d.core.rows() == 1);
  CHECK(d.core.cols() == 1);
  CHECK(d.core.contains(0, 0));
  CHECK(d.checks.all());
}

TEST_CASE("quotient core of a bijection has one class per pair") {
  auto a = make_carrier("A", 3), b = make_carrier("B", 4);
  const auto r = rel(a, b, {{0, 3}, {2, 1}});
  const auto d = core_of(r, CoreMode::Quotient);
  CHECK(d.core.rows() == 2);
  CHECK(d.core.cols() == 2);
  CHECK(is_bijection(d.core));
}

TEST_CASE("same-type core is the index") {
  auto a = make_carrier("A", 3), b = make_carrier("B", 2);
  for (const auto& r : enumerate_relations(a, b)) {
    const auto d = core_of(r);
    CHECK(d.core == relation_index(r).index);
    CHECK(d.checks.all());
    const auto q = core_of(r, CoreMode::Quotient);
    CHECK(q.checks.all());
    CHECK(is_core_relation(q.core));
    CHECK(find_isomorphism(q.core, d.core).has_value());
  }
}

TEST_CASE("core check rejects a wrong witness") {
  auto a = make_carrier("A", 2);
  const auto r = Relation::top(a, a);
  const auto d = core_of(r);
  CHECK(check_core(r, d.lambda, d.rho, d.core).all());
  CHECK_FALSE(check_core(r, Relation::identity(a), d.rho, d.core).all());
}

TEST_CASE("core theorem suite holds at sizes up to 3") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t m = 1; m <= 3; ++m) {
      auto a = make_carrier("A", n), b = make_carrier("B", m);
      for (const auto& r : enumerate_relations(a, b)) {
        for (const auto& c : core_theorem_suite(r)) CHECK_MESSAGE(c.holds, c.name);
      }
    }
  }
}

TEST_CASE("difunction index suite") {
  auto c = make_carrier("C", 3);
  for (const auto& chk : difunction_index_suite(block(c))) CHECK_MESSAGE(chk.holds, chk.name);
  auto a = make_carrier("A", 2);
  const auto r = rel(a, a, {{0, 0}, {0, 1}, {1, 1}});
  CHECK_THROWS_AS(difunction_index_suite(r), std::invalid_argument);
  // Every index of a relation is difunctional exactly when the relation is.
  for (const auto& x : enumerate_relations(c, c)) {
    for (const auto& j : all_indexes(x)) CHECK(is_difunctional(j) == is_difunctional(x));
    if (is_difunctional(x)) {
      for (const auto& chk : difunction_index_suite(x)) CHECK_MESSAGE(chk.holds, chk.name);
    }
  }
}

TEST_CASE("indexes under different policies are isomorphic") {
  gen::Source src(23);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = src.carrier("A"), b = src.carrier("B");
    const auto r = src.relation(a, b, 0.5);
    const auto lo = relation_index(r, {Policy::Smallest, 0}).index;
    const auto hi = relation_index(r, {Policy::Largest, 0}).index;
    const auto rnd = relation_index(r, {Policy::Random, static_cast<std::uint64_t>(trial)}).index;
    CHECK(find_isomorphism(lo, hi).has_value());
    CHECK(find_isomorphism(lo, rnd).has_value());
  }
}

TEST_CASE("random policy is reproducible per seed") {
  auto a = make_carrier("A", 4);
  const auto top = Relation::top(a, a);
  std::set<std::uint64_t> seen;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto j = per_index(top, {Policy::Random, seed});
    CHECK(j == per_index(top, {Policy::Random, seed}));
    seen.insert(j.relation().code());
  }
  CHECK(seen.size() > 1);
}

TEST_CASE("per classes") {
  auto c = make_carrier("C", 4);
  auto p = block(make_carrier("C", 3));
  CHECK(per_classes(p) == std::vector<std::vector<std::size_t>>{{0, 1}, {2}});
  CHECK(per_classes(Relation::bottom(c, c)).empty());
}

}  // TEST_SUITE
