#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "chern/ideal.hpp"

namespace chern {

// ---------------------------------------------------------------------------
// Monomial ideal combinatorics

/// Drops generators divisible by another; sorts the rest canonically.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

/// Dimension of k[x]/(gens): the largest set of variables containing the
/// support of no generator. An empty generator list gives the arity.
std::size_t monomial_dimension(const std::vector<Monomial>& gens, std::size_t arity);

/// Numerator N(t) of the Hilbert series N(t) / (1 - t)^arity of k[x]/(gens).
std::vector<std::int64_t> hilbert_numerator(std::vector<Monomial> gens, std::size_t arity);

/// Hilbert function of k[x]/(gens) in degree t, read off a numerator.
std::int64_t hilbert_function_value(const std::vector<std::int64_t>& numerator, std::size_t arity, std::int64_t t);

/// Hilbert numerator of S/I for a homogeneous ideal (via its degrevlex leading terms).
std::vector<std::int64_t> hilbert_numerator(const Ideal& homogeneous);

// ---------------------------------------------------------------------------
// Quotient rings and parameter systems

/// R = S / I with its Krull dimension cached at construction.
class QuotientRing {
 public:
  /// Throws "zero ring" for the unit ideal.
  explicit QuotientRing(Ideal defining);

  const RingPtr& ambient() const { return defining_.ring(); }
  const Ideal& defining() const { return defining_; }
  std::size_t dim() const { return dim_; }

 private:
  Ideal defining_;
  std::size_t dim_;
};

std::size_t krull_dim(const QuotientRing& ring);
std::size_t krull_dim(const Ideal& ideal, const MonomialOrder& ord = MonomialOrder::degrevlex());

/// λ(S/I), or nullopt when the quotient is not zero-dimensional.
std::optional<std::uint64_t> colength(const Ideal& ideal, const MonomialOrder& ord = MonomialOrder::degrevlex());

/// True iff |elements| = dim R and S/(I + (elements)) is zero-dimensional and
/// nonzero. Throws InvariantViolation if an accepted system fails to have
/// dim S/(elements) = arity - |elements|.
bool is_sop(const QuotientRing& ring, const std::vector<Polynomial>& elements);

/// Lifts a_1, ..., a_d of a system of parameters of R.
class ParameterSystem {
 public:
  /// Validates with is_sop; throws if the elements are not a system of parameters.
  static ParameterSystem validate(const QuotientRing& ring, std::vector<Polynomial> elements);

  const QuotientRing& ring() const { return ring_; }
  const std::vector<Polynomial>& elements() const { return elements_; }
  Ideal ideal() const { return Ideal(ring_.ambient(), elements_); }
  bool validated() const { return validated_; }

 private:
  ParameterSystem(QuotientRing ring, std::vector<Polynomial> elements)
      : ring_(std::move(ring)), elements_(std::move(elements)) {}
  QuotientRing ring_;
  std::vector<Polynomial> elements_;
  bool validated_ = false;
};

// ---------------------------------------------------------------------------
// Hilbert–Samuel function and coefficients

/// λ(R / Q^n R) = colength(I + Q^n); zero for n = 0.
std::uint64_t hilbert_samuel(const QuotientRing& ring, const ParameterSystem& params, unsigned n);

struct HilbertTable {
  std::map<unsigned, std::uint64_t> values;
  std::optional<std::vector<std::int64_t>> coeffs;  // e_0, ..., e_d
  std::optional<unsigned> postulation;
};

struct CoefficientFit {
  std::vector<std::int64_t> coeffs;  // e_0, ..., e_d
  unsigned postulation;
};

/// Value of P(n) = sum_i (-1)^i e_i C(n + d - 1 - i, d - i) for n >= 1.
std::int64_t hilbert_polynomial_value(const std::vector<std::int64_t>& coeffs, std::int64_t n);

/// Fits e_0..e_d from d + 1 consecutive values starting at the least n0 >= 1
/// whose fit also matches every later stored value (at least d + 2 of them).
CoefficientFit fit_coefficients(const HilbertTable& table, std::size_t d);

inline constexpr unsigned kHardMaxN = 40;

/// Default table length max(2d + 4, 12).
unsigned default_window(std::size_t d);

/// Fills H(0..nmax), fits, and extends by 4 while the fit fails (up to
/// n = 40). `nmax` of 0 means the default window.
HilbertTable hilbert_coefficients(const ParameterSystem& params, unsigned nmax = 0);

/// Hilbert series of the associated graded ring G(Q): h(x) / (1 - x)^d.
struct GrSeries {
  std::vector<std::int64_t> numerator;  // h_0, ..., h_s
  std::size_t denom_exponent = 0;

  /// e_k = sum_j C(j, k) h_j for k = 0..d.
  std::vector<std::int64_t> coefficients() const;
  /// e.g. "(3 - x) / (1 - x)^2"
  std::string to_string() const;
};

/// Series from a fitted table; throws "series not stabilized" if the tail of
/// (1 - x)^d times the first-difference series is nonzero.
GrSeries gr_series(const HilbertTable& table, std::size_t d);
GrSeries gr_series(const ParameterSystem& params, unsigned nmax = 0);

}  // namespace chern
