#include "doctest.h"
#include "gen.hpp"
#include "oracles.hpp"
#include "relalg/domains.hpp"
#include "relalg/isomorph.hpp"

using namespace relalg;

namespace {

Relation rel(const CarrierPtr& a, const CarrierPtr& b, std::vector<Pair> pairs) {
  return Relation::from_pairs(a, b, pairs);
}

}  // namespace

TEST_SUITE("isomorph") {

TEST_CASE("single pair moved along the diagonal") {
  auto a = make_carrier("A", 2);
  const auto r = rel(a, a, {{0, 0}}), s = rel(a, a, {{1, 1}});
  const auto w = find_isomorphism(r, s);
  REQUIRE(w);
  CHECK(w->phi == rel(a, a, {{0, 1}}));
  CHECK(w->psi == rel(a, a, {{0, 1}}));
  CHECK(verify_witness(r, s, *w));
}

TEST_CASE("identity is not isomorphic to bottom") {
  auto a = make_carrier("A", 2);
  CHECK_FALSE(find_isomorphism(Relation::identity(a), Relation::bottom(a, a)));
}

TEST_CASE("domains witness self isomorphism") {
  auto a = make_carrier("A", 3), b = make_carrier("B", 2);
  for (const auto& r : enumerate_relations(a, b)) {
    CHECK(verify_witness(r, r, {ldom(r).relation(), rdom(r).relation()}));
  }
}

TEST_CASE("flipping one witness bit breaks verification") {
  auto a = make_carrier("A", 3);
  const auto r = rel(a, a, {{0, 1}, {1, 2}});
  const auto s = rel(a, a, {{2, 0}, {0, 1}});
  auto w = find_isomorphism(r, s);
  REQUIRE(w);
  CHECK(verify_witness(r, s, *w));
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      IsoWitness bad = *w;
      if (bad.psi.contains(i, j)) {
        bad.psi.erase(i, j);
      } else {
        bad.psi.insert(i, j);
      }
      CHECK_FALSE(verify_witness(r, s, bad));
    }
  }
}

TEST_CASE("witness carriers are checked") {
  auto a = make_carrier("A", 2), b = make_carrier("B", 2);
  const auto r = Relation::identity(a);
  CHECK_THROWS_AS(check_witness(r, r, {Relation::identity(b), Relation::identity(a)}), TypeError);
}

TEST_CASE("decision matches the permutation oracle on 2x2 and 2x3") {
  for (auto [n, m] : {std::pair<std::size_t, std::size_t>{2, 2}, {2, 3}}) {
    auto a = make_carrier("A", n), b = make_carrier("B", m);
    auto c = make_carrier("C", n), d = make_carrier("D", m);
    for (const auto& r : enumerate_relations(a, b)) {
      for (const auto& s : enumerate_relations(c, d)) {
        const auto w = find_isomorphism(r, s);
        CHECK(w.has_value() == oracle::isomorphic(oracle::of(r), oracle::of(s)));
        if (w) CHECK(verify_witness(r, s, *w));
      }
    }
  }
}

TEST_CASE("isomorphism is an equivalence with derived witnesses") {
  gen::Source src(19);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = src.carrier("A", 1, 3), b = src.carrier("B", 1, 3);
    const auto r = src.relation(a, b);
    // Relabel by random permutations to get guaranteed isomorphic partners.
    auto permuted = [&](const Relation& x, const std::string& tag) {
      std::vector<std::size_t> pr(a->size()), pc(b->size());
      std::iota(pr.begin(), pr.end(), 0);
      std::iota(pc.begin(), pc.end(), 0);
      for (std::size_t k = src.size(0, 5); k > 0; --k) {
        std::next_permutation(pr.begin(), pr.end());
        std::next_permutation(pc.begin(), pc.end());
      }
      Relation out(make_carrier("C" + tag, a->size()), make_carrier("D" + tag, b->size()));
      for (const auto& [i, j] : x.pairs()) out.insert(pr[i], pc[j]);
      return out;
    };
    const auto s = permuted(r, "1");
    const auto t = permuted(s, "2");
    const auto rs = find_isomorphism(r, s);
    const auto st = find_isomorphism(s, t);
    REQUIRE(rs);
    REQUIRE(st);
    CHECK(verify_witness(s, r, reverse_witness(*rs)));
    const auto rt = chain_witness(*rs, *st);
    CHECK(verify_witness(r, t, rt));
    // Domains and per domains travel along the witnesses.
    CHECK(ldom(r).relation() == compose(rs->phi, ldom(s), converse(rs->phi)));
    CHECK(rdom(r).relation() == compose(rs->psi, rdom(s), converse(rs->psi)));
    CHECK(per_rdom(r) == compose(rs->psi, per_rdom(s), converse(rs->psi)));
    CHECK(per_ldom(r) == compose(rs->phi, per_ldom(s), converse(rs->phi)));
  }
}

TEST_CASE("relations isomorphic to a coreflexive are bijections") {
  auto a = make_carrier("A", 3), b = make_carrier("B", 3);
  std::vector<Relation> cores;
  for (std::uint64_t mask = 0; mask < 8; ++mask) {
    Relation p(a, a);
    for (std::size_t i = 0; i < 3; ++i) {
      if ((mask >> i) & 1U) p.insert(i, i);
    }
    cores.push_back(p);
  }
  for (const auto& r : enumerate_relations(a, b)) {
    bool iso_core = false;
    for (const auto& p : cores) iso_core = iso_core || find_isomorphism(r, p).has_value();
    CHECK(iso_core == is_bijection(r));
  }
}

TEST_CASE("search bound is enforced") {
  auto a = make_carrier("A", 10);
  const auto r = Relation::identity(a);
  CHECK_THROWS_AS(find_isomorphism(r, r), SearchBoundExceeded);
  CHECK(find_isomorphism(r, r, 10));
}

}  // TEST_SUITE
