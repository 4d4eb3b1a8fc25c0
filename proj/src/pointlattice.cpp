#include "relalg/pointlattice.hpp"

namespace relalg {

namespace {

// Every sub-relation of r, including ⊥ and r itself.
std::vector<Relation> subrelations(const Relation& r) {
  const auto pairs = r.pairs();
  std::vector<Relation> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    Relation q(r.src_ptr(), r.dst_ptr());
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if ((mask >> k) & 1U) q.insert(pairs[k].first, pairs[k].second);
    }
    out.push_back(std::move(q));
  }
  return out;
}

std::size_t checked_bits(const Relation& r, std::size_t bound, const char* op) {
  const std::size_t bits = r.rows() * r.cols();
  if (bits > bound) {
    throw EnumerationBoundError(std::string(op) + ": " + std::to_string(bits) + " bits exceeds the bound of " +
                                std::to_string(bound));
  }
  return bits;
}

}  // namespace

bool is_atom(const Relation& r, AtomLattice lattice) {
  if (lattice == AtomLattice::Coreflexives && !is_coreflexive(r)) return false;
  if (r.count() > 2) return false;
  for (const auto& q : subrelations(r)) {
    if (!(q == r) && !q.empty()) return false;
  }
  return true;
}

bool is_proper_atom(const Relation& r, AtomLattice lattice) { return !r.empty() && is_atom(r, lattice); }

bool is_point(const Relation& p) {
  if (!p.is_homogeneous()) throw TypeError("is_point: relation is heterogeneous");
  return is_coreflexive(p) && is_proper_atom(p, AtomLattice::Coreflexives);
}

bool is_pair(const Relation& z) {
  if (z.empty()) return false;
  const Relation zc = converse(z);
  return z == compose(z, Relation::top(z.dst_ptr(), z.src_ptr()), z) && ldom(z).relation() == compose(z, zc) &&
         rdom(z).relation() == compose(zc, z);
}

bool is_particle(const Relation& z) { return z.is_homogeneous() && is_symmetric(z) && is_pair(z); }

std::vector<Relation> points(const CarrierPtr& carrier) {
  std::vector<Relation> out;
  for (std::size_t i = 0; i < carrier->size(); ++i) {
    Relation p(carrier, carrier);
    p.insert(i, i);
    out.push_back(std::move(p));
  }
  return out;
}

Relation pair_of(const Relation& a, const Relation& b) {
  return compose(a, Relation::top(a.dst_ptr(), b.src_ptr()), b);
}

Outcome all_or_nothing(const Relation& r, const Relation& a, const Relation& b) {
  if (!a.is_homogeneous() || !is_point(a)) throw std::invalid_argument("all_or_nothing: a is not a point");
  if (!b.is_homogeneous() || !is_point(b)) throw std::invalid_argument("all_or_nothing: b is not a point");
  const Relation arb = compose(a, r, b);
  if (arb.empty()) return Outcome::Bottom;
  if (arb == pair_of(a, b)) return Outcome::Full;
  throw std::logic_error("all_or_nothing: a∘R∘b is neither ⊥ nor a∘⊤∘b");
}

std::vector<PointPair> decompose_to_pairs(const Relation& r) {
  std::vector<PointPair> out;
  const auto left = points(r.src_ptr());
  const auto right = points(r.dst_ptr());
  for (const auto& a : left) {
    for (const auto& b : right) {
      if (is_subset(pair_of(a, b), r)) out.push_back({a, b});
    }
  }
  return out;
}

Relation reunite(const std::vector<PointPair>& pairs, const CarrierPtr& src, const CarrierPtr& dst) {
  Relation out(src, dst);
  for (const auto& p : pairs) out = unite(out, pair_of(p.a, p.b));
  return out;
}

std::vector<NamedCheck> point_law_suite(const CarrierPtr& carrier) {
  if (carrier->size() > 16) throw EnumerationBoundError("point_law_suite: carrier has more than 16 elements");
  std::vector<NamedCheck> out;
  const auto pts = points(carrier);
  bool all_points = true;
  for (const auto& p : pts) all_points = all_points && is_point(p);
  out.push_back({"every singleton coreflexive is a point", all_points});

  bool distinct = true;
  for (const auto& a : pts) {
    for (const auto& b : pts) distinct = distinct && (a == b || compose(a, b).empty());
  }
  out.push_back({"a = a′ ∨ a∘a′ = ⊥", distinct});

  bool saturated = true;
  std::size_t coreflexives = 0;
  std::size_t point_count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << carrier->size()); ++mask) {
    Relation p(carrier, carrier);
    for (std::size_t i = 0; i < carrier->size(); ++i) {
      if ((mask >> i) & 1U) p.insert(i, i);
    }
    ++coreflexives;
    if (is_point(p)) ++point_count;
    Relation joined(carrier, carrier);
    for (const auto& a : pts) {
      if (is_subset(a, p)) joined = unite(joined, a);
    }
    saturated = saturated && joined == p;
  }
  out.push_back({"every coreflexive is the union of the points below it", saturated});
  out.push_back({"#coreflexives = 2^#points", point_count == pts.size() && coreflexives == (std::size_t{1} << point_count)});
  return out;
}

std::vector<NamedCheck> particle_point_equivalence(const CarrierPtr& carrier) {
  Relation probe(carrier, carrier);
  checked_bits(probe, 16, "particle_point_equivalence");
  bool agree = true;
  std::size_t both = 0;
  for (const auto& r : enumerate_relations(carrier, carrier, 16)) {
    const bool p = is_point(r);
    const bool q = is_particle(r);
    agree = agree && p == q;
    if (p && q) ++both;
  }
  return {{"point ≡ particle", agree}, {"#points = |A|", both == carrier->size()}};
}

std::vector<NamedCheck> atom_pair_equivalence(const CarrierPtr& a, const CarrierPtr& b) {
  checked_bits(Relation(a, b), 16, "atom_pair_equivalence");
  bool agree = true;
  bool pair_domains = true;
  bool atom_domains = true;
  bool atom_rectangle = true;
  for (const auto& r : enumerate_relations(a, b, 16)) {
    const bool atom = is_proper_atom(r);
    const bool pair = is_pair(r);
    agree = agree && atom == pair;
    if (pair) pair_domains = pair_domains && is_particle(ldom(r)) && is_particle(rdom(r));
    if (atom) {
      atom_domains = atom_domains && is_proper_atom(ldom(r)) && is_proper_atom(rdom(r));
      atom_rectangle = atom_rectangle && is_rectangle(r);
    }
  }
  return {{"proper atom ≡ pair", agree},
          {"Z pair ⇒ Z< and Z> particles", pair_domains},
          {"R proper atom ⇒ R< and R> proper atoms", atom_domains},
          {"a proper atom is a rectangle", atom_rectangle}};
}

}  // namespace relalg
