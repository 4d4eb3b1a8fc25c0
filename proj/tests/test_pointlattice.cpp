#include <map>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "relalg/pointlattice.hpp"

using namespace relalg;

namespace {

Relation rel(const CarrierPtr& a, const CarrierPtr& b, std::vector<Pair> pairs) {
  return Relation::from_pairs(a, b, pairs);
}

Relation point(const CarrierPtr& a, std::size_t i) { return rel(a, a, {{i, i}}); }

std::size_t element(const Relation& p) { return p.pairs().front().first; }

std::set<Pair> as_set(const std::vector<PointPair>& pairs) {
  std::set<Pair> out;
  for (const auto& p : pairs) out.insert({element(p.a), element(p.b)});
  return out;
}

}  // namespace

TEST_SUITE("pointlattice") {

TEST_CASE("point examples") {
  auto a = make_carrier("A", 3), two = make_carrier("B", 2);
  CHECK(is_point(point(a, 0)));
  CHECK_FALSE(is_point(Relation::identity(two)));
  CHECK_FALSE(is_point(Relation::bottom(a, a)));
  CHECK_FALSE(is_point(rel(a, a, {{0, 1}})));
  CHECK_THROWS_AS(is_point(Relation::bottom(a, two)), TypeError);
}

TEST_CASE("atom examples") {
  auto a = make_carrier("A", 2), b = make_carrier("B", 3);
  CHECK(is_atom(rel(a, b, {{1, 2}})));
  CHECK(is_atom(Relation::bottom(a, b)));
  CHECK_FALSE(is_proper_atom(Relation::bottom(a, b)));
  CHECK_FALSE(is_atom(rel(a, b, {{0, 0}, {1, 2}})));
  CHECK(is_atom(point(a, 1), AtomLattice::Coreflexives));
  CHECK_FALSE(is_atom(Relation::identity(a), AtomLattice::Coreflexives));
}

TEST_CASE("atoms are exactly the relations with at most one pair") {
  auto a = make_carrier("A", 2), b = make_carrier("B", 3);
  for (const auto& r : enumerate_relations(a, b)) CHECK(is_atom(r) == (r.count() <= 1));
}

TEST_CASE("pair and particle examples") {
  auto a = make_carrier("A", 2), c = make_carrier("C", 3);
  CHECK(is_pair(pair_of(point(a, 0), point(c, 2))));
  CHECK(is_particle(point(a, 0)));
  CHECK_FALSE(is_pair(Relation::identity(a)));
  CHECK_FALSE(is_pair(Relation::bottom(a, c)));
  const auto z = rel(a, a, {{0, 1}});
  CHECK(ldom(z).relation() == point(a, 0));
  CHECK(rdom(z).relation() == point(a, 1));
  CHECK(is_particle(ldom(z)));
  CHECK(is_particle(rdom(z)));
  CHECK_FALSE(is_particle(z));
}

TEST_CASE("pair_of builds the single-pair relation") {
  auto a = make_carrier("A", 3), b = make_carrier("B", 2);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 2; ++j) CHECK(pair_of(point(a, i), point(b, j)) == rel(a, b, {{i, j}}));
  }
}

TEST_CASE("points of a carrier") {
  auto a = make_carrier("A", 3);
  const auto pts = points(a);
  REQUIRE(pts.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(pts[i] == point(a, i));
  CHECK(points(make_carrier("Z", 0)).empty());
}

TEST_CASE("particles are points") {
  auto a = make_carrier("A", 3);
  std::size_t both = 0;
  for (const auto& r : enumerate_relations(a, a)) {
    CHECK(is_point(r) == is_particle(r));
    both += is_point(r) ? 1 : 0;
  }
  CHECK(both == 3);
  auto one = make_carrier("U", 1);
  CHECK(is_point(Relation::top(one, one)));
  CHECK(is_particle(Relation::identity(one)));
  auto two = make_carrier("B", 2);
  CHECK_FALSE(is_point(Relation::top(two, two)));
  CHECK_FALSE(is_particle(Relation::top(two, two)));
}

TEST_CASE("point, particle and atom suites") {
  for (std::size_t n = 0; n <= 4; ++n) {
    auto a = make_carrier("A", n);
    for (const auto& c : point_law_suite(a)) CHECK_MESSAGE(c.holds, c.name);
    if (n <= 3) {
      for (const auto& c : particle_point_equivalence(a)) CHECK_MESSAGE(c.holds, c.name);
    }
  }
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t m = 1; m <= 3; ++m) {
      for (const auto& c : atom_pair_equivalence(make_carrier("A", n), make_carrier("B", m))) {
        CHECK_MESSAGE(c.holds, c.name);
      }
    }
  }
}

TEST_CASE("pairs over 2x2 are the single-pair relations") {
  auto a = make_carrier("A", 2);
  std::size_t pairs = 0;
  for (const auto& r : enumerate_relations(a, a)) {
    CHECK(is_pair(r) == (r.count() == 1));
    CHECK(is_pair(r) == is_proper_atom(r));
    pairs += is_pair(r) ? 1 : 0;
  }
  CHECK(pairs == 4);
}

TEST_CASE("all or nothing examples") {
  auto a = make_carrier("A", 2);
  const auto r = rel(a, a, {{0, 1}});
  CHECK(all_or_nothing(r, point(a, 0), point(a, 1)) == Outcome::Full);
  CHECK(all_or_nothing(r, point(a, 1), point(a, 0)) == Outcome::Bottom);
  for (const auto& p : points(a)) {
    for (const auto& q : points(a)) CHECK(all_or_nothing(Relation::top(a, a), p, q) == Outcome::Full);
  }
  CHECK_THROWS_AS(all_or_nothing(r, Relation::identity(a), point(a, 0)), std::invalid_argument);
  CHECK_THROWS_AS(all_or_nothing(r, point(make_carrier("B", 2), 0), point(a, 0)), TypeError);
}

TEST_CASE("all or nothing agrees with membership at sizes up to 3") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t m = 1; m <= 3; ++m) {
      auto a = make_carrier("A", n), b = make_carrier("B", m);
      for (const auto& r : enumerate_relations(a, b)) {
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < m; ++j) {
            const auto out = all_or_nothing(r, point(a, i), point(b, j));
            CHECK((out == Outcome::Full) == r.contains(i, j));
          }
        }
      }
    }
  }
}

TEST_CASE("decomposition examples") {
  auto a = make_carrier("A", 3), b = make_carrier("B", 2);
  CHECK(decompose_to_pairs(Relation::bottom(a, b)).empty());
  const auto d = decompose_to_pairs(rel(a, b, {{0, 1}, {2, 0}}));
  REQUIRE(d.size() == 2);
  CHECK(element(d[0].a) == 0);
  CHECK(element(d[0].b) == 1);
  CHECK(element(d[1].a) == 2);
  CHECK(element(d[1].b) == 0);
}

TEST_CASE("decomposition reunites to the relation for all 3x3 relations") {
  auto a = make_carrier("A", 3), b = make_carrier("B", 3);
  for (const auto& r : enumerate_relations(a, b)) {
    const auto d = decompose_to_pairs(r);
    CHECK(reunite(d, a, b) == r);
    const auto pairs = r.pairs();
    CHECK(as_set(d) == std::set<Pair>(pairs.begin(), pairs.end()));
  }
}

TEST_CASE("decomposition commutes with composition and converse") {
  auto a = make_carrier("A", 2);
  for (const auto& r : enumerate_relations(a, a)) {
    const auto dr = as_set(decompose_to_pairs(r));
    std::set<Pair> swapped;
    for (const auto& [i, j] : dr) swapped.insert({j, i});
    CHECK(as_set(decompose_to_pairs(converse(r))) == swapped);
    for (const auto& s : enumerate_relations(a, a)) {
      const auto ds = as_set(decompose_to_pairs(s));
      std::set<Pair> joined;
      for (const auto& [i, j] : dr) {
        for (const auto& [k, l] : ds) {
          if (j == k) joined.insert({i, l});
        }
      }
      CHECK(as_set(decompose_to_pairs(compose(r, s))) == joined);
    }
  }
}

TEST_CASE("counting identity for relations and pairs") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto a = make_carrier("A", n);
    std::size_t pairs = 0;
    for (const auto& r : enumerate_relations(a, a)) pairs += is_pair(r) ? 1 : 0;
    CHECK(enumerate_relations(a, a).size() == (std::uint64_t{1} << pairs));
  }
}

}  // TEST_SUITE
