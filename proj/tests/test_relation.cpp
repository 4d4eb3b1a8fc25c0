#include <set>

#include "doctest.h"
#include "gen.hpp"
#include "oracles.hpp"
#include "relalg/relation.hpp"

using namespace relalg;

namespace {

Relation rel(const CarrierPtr& a, const CarrierPtr& b, std::vector<Pair> pairs) {
  return Relation::from_pairs(a, b, pairs);
}

}  // namespace

TEST_SUITE("relcore") {

TEST_CASE("carriers compare by name and size") {
  auto a = make_carrier("A", 2);
  auto a2 = make_carrier("A", std::vector<std::string>{"x", "y"});
  CHECK(*a == *a2);
  CHECK_FALSE(*a == *make_carrier("A", 3));
  CHECK_FALSE(*a == *make_carrier("B", 2));
  CHECK(a->label(1) == "1");
  CHECK_THROWS_AS(make_carrier("A", std::vector<std::string>{"x", "x"}), std::invalid_argument);
  CHECK_THROWS_AS(make_carrier("A", 65), std::length_error);
}

TEST_CASE("composition example") {
  auto a = make_carrier("A", 1), b = make_carrier("B", 2), c = make_carrier("C", 1);
  const auto r = rel(a, b, {{0, 0}, {0, 1}});
  const auto s = rel(b, c, {{1, 0}});
  CHECK(compose(r, s) == rel(a, c, {{0, 0}}));
  CHECK(compose(Relation::identity(a), r) == r);
  CHECK(compose(Relation::bottom(a, a), r) == Relation::bottom(a, b));
  CHECK_THROWS_AS(compose(r, r), TypeError);
}

TEST_CASE("converse and lattice examples") {
  auto a = make_carrier("A", 2);
  CHECK(converse(rel(a, a, {{0, 1}})) == rel(a, a, {{1, 0}}));
  CHECK(converse(Relation::identity(a)) == Relation::identity(a));
  const auto r = rel(a, a, {{0, 1}, {1, 1}});
  CHECK(unite(r, Relation::bottom(a, a)) == r);
  CHECK(complement(Relation::bottom(a, a)) == Relation::top(a, a));
  const auto p = rel(a, a, {{0, 0}, {1, 1}}), q = rel(a, a, {{1, 1}});
  CHECK(intersect(p, q) == compose(p, q));
  CHECK_THROWS_AS(unite(r, Relation::bottom(a, make_carrier("B", 2))), TypeError);
}

TEST_CASE("equality needs matching carriers") {
  auto a = make_carrier("A", 2), b = make_carrier("B", 2);
  CHECK_FALSE(Relation::bottom(a, a) == Relation::bottom(a, b));
  CHECK(Relation::bottom(a, a) == Relation::bottom(make_carrier("A", 2), make_carrier("A", 2)));
}

TEST_CASE("codes round-trip and follow row-major bit order") {
  auto a = make_carrier("A", 2), b = make_carrier("B", 3);
  const auto r = Relation::from_code(a, b, 0b100010);
  CHECK(r.pairs() == std::vector<Pair>{{0, 1}, {1, 2}});
  for (std::uint64_t code = 0; code < 64; ++code) CHECK(Relation::from_code(a, b, code).code() == code);
}

TEST_CASE("coreflexive wrapper rejects non-coreflexives") {
  auto a = make_carrier("A", 2);
  CHECK_NOTHROW(Coreflexive(rel(a, a, {{1, 1}})));
  CHECK_THROWS_AS(Coreflexive(rel(a, a, {{0, 1}})), TypeError);
  const Coreflexive p(rel(a, a, {{0, 0}}));
  CHECK(converse(p) == p.relation());
  CHECK(compose(p, p) == p.relation());
}

TEST_CASE("operators agree with the pointwise oracle") {
  gen::Source src(7);
  for (int trial = 0; trial < 300; ++trial) {
    auto a = src.carrier("A", 0), b = src.carrier("B", 0), c = src.carrier("C", 0);
    const auto r = src.relation(a, b), s = src.relation(b, c), t = src.relation(a, b);
    CHECK(oracle::of(compose(r, s)) == oracle::comp(oracle::of(r), oracle::of(s)));
    CHECK(oracle::of(converse(r)) == oracle::conv(oracle::of(r)));
    CHECK(oracle::of(intersect(r, t)) == oracle::meet(oracle::of(r), oracle::of(t)));
    CHECK(is_subset(r, t) == oracle::le(oracle::of(r), oracle::of(t)));
    CHECK(r.count() == r.pairs().size());
    CHECK(r.empty() == oracle::empty(oracle::of(r)));
  }
}

TEST_CASE("composition is associative with unit and zero") {
  gen::Source src(11);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = src.carrier("A"), b = src.carrier("B"), c = src.carrier("C"), d = src.carrier("D");
    const auto r = src.relation(a, b), s = src.relation(b, c), t = src.relation(c, d);
    CHECK(compose(compose(r, s), t) == compose(r, compose(s, t)));
    CHECK(compose(r, Relation::identity(b)) == r);
    CHECK(compose(r, Relation::bottom(b, c)) == Relation::bottom(a, c));
    CHECK(converse(compose(r, s)) == compose(converse(s), converse(r)));
    CHECK(converse(converse(r)) == r);
  }
}

TEST_CASE("dedekind holds exhaustively over 2x2x2") {
  auto a = make_carrier("A", 2), b = make_carrier("B", 2), c = make_carrier("C", 2);
  std::size_t n = 0;
  for (const auto& r : enumerate_relations(a, b)) {
    for (const auto& s : enumerate_relations(b, c)) {
      for (const auto& t : enumerate_relations(a, c)) {
        CHECK_UNARY(dedekind_check(r, s, t).holds());
        ++n;
      }
    }
  }
  CHECK(n == 4096);
  CHECK_THROWS_AS(dedekind_check(Relation::bottom(a, b), Relation::bottom(a, b), Relation::bottom(a, b)),
                  TypeError);
}

TEST_CASE("cone rule over nonempty carriers") {
  auto a = make_carrier("A", 2), b = make_carrier("B", 3);
  for (const auto& r : enumerate_relations(a, b)) CHECK(cone_check(r));
  CHECK(cone_check(Relation::bottom(a, b)));
}

TEST_CASE("enumeration counts and bound") {
  auto a = make_carrier("A", 2), b = make_carrier("B", 3);
  auto e = enumerate_relations(a, b);
  CHECK(e.size() == 64);
  std::set<std::uint64_t> seen;
  for (const auto& r : e) seen.insert(r.code());
  CHECK(seen.size() == 64);
  auto big = make_carrier("N", 4);
  CHECK_THROWS_AS(enumerate_relations(big, big), EnumerationBoundError);
  CHECK(enumerate_relations(big, big, 16).size() == 65536);
  CHECK(enumerate_relations(make_carrier("Z", 0), b).size() == 1);
}

TEST_CASE("bits_of lists set positions") {
  CHECK(bits_of(0b10110) == std::vector<std::size_t>{1, 2, 4});
  CHECK(bits_of(0).empty());
}

}  // TEST_SUITE
