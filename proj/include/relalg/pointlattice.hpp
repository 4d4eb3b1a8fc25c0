#pragma once

#include <vector>

#include "relalg/domains.hpp"
#include "relalg/relation.hpp"

namespace relalg {

enum class AtomLattice { Relations, Coreflexives };

// ∀q in the lattice: q ⊆ R ≡ q = R ∨ q = ⊥. ⊥ counts as an atom.
bool is_atom(const Relation& r, AtomLattice lattice = AtomLattice::Relations);
bool is_proper_atom(const Relation& r, AtomLattice lattice = AtomLattice::Relations);

// Proper coreflexive atom. Throws TypeError when heterogeneous.
bool is_point(const Relation& p);

// Z ≠ ⊥, Z = Z∘⊤∘Z, Z< = Z∘Z°, Z> = Z°∘Z.
bool is_pair(const Relation& z);
// Symmetric pair.
bool is_particle(const Relation& z);

// The points of a carrier, in element order.
std::vector<Relation> points(const CarrierPtr& carrier);

// a∘⊤∘b
Relation pair_of(const Relation& a, const Relation& b);

enum class Outcome { Bottom, Full };

// Which disjunct of a∘R∘b = ⊥ ∨ a∘R∘b = a∘⊤∘b holds. Throws std::invalid_argument
// when a or b is not a point, TypeError when the carriers do not fit R.
Outcome all_or_nothing(const Relation& r, const Relation& a, const Relation& b);

struct PointPair {
  Relation a;
  Relation b;
};

// All (a, b) with a∘⊤∘b ⊆ R, ordered by (a, b) element index.
std::vector<PointPair> decompose_to_pairs(const Relation& r);

// Union of a∘⊤∘b over the list; the list must be non-empty or carriers given.
Relation reunite(const std::vector<PointPair>& pairs, const CarrierPtr& src, const CarrierPtr& dst);

// Point distinctness, point saturation of coreflexives and the counting identity.
std::vector<NamedCheck> point_law_suite(const CarrierPtr& carrier);

// is_point ≡ is_particle over every homogeneous relation on the carrier.
std::vector<NamedCheck> particle_point_equivalence(const CarrierPtr& carrier);

// proper atom ≡ pair over A~B, and the domain properties of pairs and atoms.
std::vector<NamedCheck> atom_pair_equivalence(const CarrierPtr& a, const CarrierPtr& b);

}  // namespace relalg
