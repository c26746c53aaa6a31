#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chern/binomial.hpp"
#include "chern/cohomology.hpp"

namespace chern {

// ---------------------------------------------------------------------------
// Schenzel's formula for standard systems of parameters:
//   e_{d-i} = (-1)^{d-i} sum_{j=0}^{i} C(i-1, j-1) h_j,   i = 0..d-1,
// with h_j = λ(H^j_m(R)).

/// Returns (e_1, ..., e_d).
std::vector<std::int64_t> schenzel_coeffs(const std::vector<std::int64_t>& h, std::size_t d);

struct SchenzelInversion {
  CohomologyLengths h;
  /// False when some h_i < 0, which no standard system of parameters allows.
  bool consistent;
};

/// Solves the triangular system above for h given (e_1, ..., e_d).
SchenzelInversion schenzel_invert(const std::vector<std::int64_t>& e, std::size_t d);

/// Number of leading zeros h_0 = ... = h_{k-1} = 0. For a standard system of
/// parameters this is the depth lower bound k.
std::size_t depth_lower_bound(const std::vector<std::int64_t>& h);

// ---------------------------------------------------------------------------
// Eagon–Northcott resolution of S/J^n for a regular sequence J of length d.

/// β_i(S/J^n) = C(n+d-1, d-i) C(n+i-2, i-1) for 1 <= i <= d; β_0 = 1.
std::int64_t en_betti(std::int64_t n, std::int64_t d, std::int64_t i);

/// λ(Tor_1(L, S/J^n)) = C(n+d-1, d-1) λ(L) when J ⊆ ann L.
std::int64_t tor1_length(std::int64_t n, std::int64_t d, std::int64_t lambda_l);

// ---------------------------------------------------------------------------
// Quotients of regular rings by intersections of CM ideals

/// (e_0, -λL, +λL, ..., (-1)^{d-1} λL, 0); requires d >= 2.
std::vector<std::int64_t> mv_predicted(std::size_t d, std::int64_t lambda_l, std::int64_t e0);

struct MVScenario {
  std::vector<Ideal> components;        // I_1, ..., I_g
  std::vector<Polynomial> parameters;   // lift of J
};

struct ReportCheck {
  std::string name;
  bool passed;
  std::string detail;
};

struct MVReport {
  std::size_t d = 0;
  std::int64_t lambda_l = 0;
  std::vector<std::int64_t> component_e0;
  std::vector<std::int64_t> actual;
  std::vector<std::int64_t> predicted;  // empty when the annihilator hypothesis fails
  bool annihilator = false;
  std::vector<ReportCheck> checks;

  bool all_passed() const;
};

/// Computes everything with the Hilbert pipeline and compares against the
/// closed form. Hypothesis failures are reported, not thrown.
MVReport mv_verify(const MVScenario& scenario, unsigned nmax = 0);

// ---------------------------------------------------------------------------
// Verdicts on e_1 for parameter ideals

struct Verdict {
  enum class Outcome { CohenMacaulay, NotCohenMacaulay, Inconclusive };

  Outcome outcome;
  std::int64_t e1;
  bool unmixed_assumed;
  std::string rationale;
};

std::string to_string(Verdict::Outcome o);

/// e1 < 0: not CM. e1 = 0 and unmixed: CM. e1 = 0 otherwise: inconclusive.
/// Throws InvariantViolation for e1 > 0, which no parameter ideal can have.
Verdict negativity_verdict(std::int64_t e1, bool unmixed);

}  // namespace chern
