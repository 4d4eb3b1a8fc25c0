#pragma once

#include <array>
#include <optional>
#include <stdexcept>

#include "relalg/relation.hpp"

namespace relalg {

// (φ, ψ) witnessing R ≅ S for R: A~B, S: C~D, with φ: A~C and ψ: B~D.
struct IsoWitness {
  Relation phi;
  Relation psi;
};

class SearchBoundExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline constexpr std::size_t kDefaultIsoBound = 8;

// Exhaustive backtracking over bijections between the domain points of R and S.
// Throws SearchBoundExceeded when either domain of R or S has more than
// `max_points` points.
std::optional<IsoWitness> find_isomorphism(const Relation& r, const Relation& s,
                                           std::size_t max_points = kDefaultIsoBound);

struct WitnessChecks {
  bool phi_left = false;   // φ∘φ° = R<
  bool phi_right = false;  // φ°∘φ = S<
  bool psi_left = false;   // ψ∘ψ° = R>
  bool psi_right = false;  // ψ°∘ψ = S>
  bool forward = false;    // R = φ∘S∘ψ°
  bool backward = false;   // φ°∘R∘ψ = S
  bool domains() const noexcept { return phi_left && phi_right && psi_left && psi_right; }
  bool all() const noexcept { return domains() && forward && backward; }
};

// Throws TypeError when the witness carriers do not line up with R and S.
WitnessChecks check_witness(const Relation& r, const Relation& s, const IsoWitness& w);

bool verify_witness(const Relation& r, const Relation& s, const IsoWitness& w);

// Witnesses for S ≅ R and for R ≅ T, derived from given ones.
IsoWitness reverse_witness(const IsoWitness& w);
IsoWitness chain_witness(const IsoWitness& rs, const IsoWitness& st);

}  // namespace relalg
