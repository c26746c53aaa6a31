#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chern/hilbert.hpp"

namespace chern {

/// Lengths λ(H^i_m(R)) for i = 0..d-1, each tagged with where it came from.
struct CohomologyLengths {
  enum class Source { Computed, User, Inverted };

  std::vector<std::int64_t> values;
  std::vector<Source> sources;

  std::size_t d() const { return values.size(); }

  static CohomologyLengths from_user(std::vector<std::int64_t> values);
  /// Checks length = d, nonnegativity is not required here, and that
  /// computed entries appear only at i = 0.
  void check(std::size_t d) const;
};

std::string to_string(CohomologyLengths::Source s);

/// Degree cap for degreewise summations: 4 * (max generator degree) * arity + 16.
unsigned summation_degree_cap(unsigned max_generator_degree, std::size_t arity);

/// λ(H^0_m(R)) = λ(sat(I, m) / I), summed degree by degree from Hilbert
/// functions. Requires a homogeneous defining ideal.
std::uint64_t h0_length(const QuotientRing& ring);

/// depth R > 0, i.e. H^0_m(R) = 0.
bool depth_positive(const QuotientRing& ring);

/// Longest regular sequence of random linear forms found over `trials`
/// restarts. A certified lower bound on depth R; equal to it with high
/// probability. Coefficients are uniform in [-7, 7] over QQ, uniform over F_p.
std::size_t depth_probe(const QuotientRing& ring, unsigned trials, std::uint64_t seed);

struct StandardSopCheck {
  std::uint64_t colength;      // λ(R/Q)
  std::int64_t e0;
  std::int64_t difference;     // λ(R/Q) - e_0
  std::int64_t predicted;      // sum_i C(d-1, i) h_i
  bool holds;
};

/// Tests λ(R/Q) - e_0(Q) = sum_i C(d-1, i) λ(H^i_m(R)).
StandardSopCheck standard_sop_check(const ParameterSystem& params, const CohomologyLengths& h, unsigned nmax = 0);
/// d = 1 only: h_0 is computed with h0_length.
StandardSopCheck standard_sop_check(const ParameterSystem& params, unsigned nmax = 0);

/// λ(L) for L = [⊕ S/I_i] / (S / ∩ I_i), from the degreewise difference of
/// Hilbert functions. Throws "L not finite length" if the difference does not
/// vanish by the degree cap.
std::uint64_t torsion_length(const std::vector<Ideal>& ideals);

/// J·L = 0 for the module L above, tested as J ⊆ I_i + ∩_{k≠i} I_k for every i.
bool annihilates_torsion(const Ideal& j, const std::vector<Ideal>& ideals);

}  // namespace chern
