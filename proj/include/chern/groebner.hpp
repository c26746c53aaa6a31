#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "chern/polynomial.hpp"

namespace chern {

/// Reduced Gröbner basis of the ideal generated by `generators`.
///
/// Buchberger's algorithm with the normal selection strategy (pairs with the
/// smallest lcm degree first) and the Gebauer–Möller installation of the
/// product and chain criteria. The result is monic, interreduced and sorted by
/// descending leading monomial, hence canonical for the ideal and order.
std::vector<Polynomial> compute_groebner_basis(std::span<const Polynomial> generators, const MonomialOrder& ord);

/// Leading monomials of a Gröbner basis of a homogeneous ideal, computed
/// degree by degree. Before moving past degree t the engine asks
/// `enough(t, leading)`; a true answer stops it, and the monomials returned
/// generate the leading-term ideal in every degree <= t.
struct TruncatedLeading {
  std::vector<Monomial> leading;
  std::optional<unsigned> complete_through;  // nullopt: the full basis was computed
};
using DegreeStop = std::function<bool(unsigned t, const std::vector<Monomial>& leading)>;
TruncatedLeading truncated_leading_monomials(std::span<const Polynomial> homogeneous_generators,
                                             const MonomialOrder& ord, const DegreeStop& enough);

/// Fully reduced remainder of `f` modulo `basis` (any finite list). When
/// `basis` is a Gröbner basis under `ord`, the result is the unique normal form.
Polynomial reduce(const Polynomial& f, std::span<const Polynomial> basis, const MonomialOrder& ord);

/// S-polynomial of f and g under `ord`.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord);

/// Buchberger's criterion: every S-polynomial of `basis` reduces to zero.
bool satisfies_buchberger_criterion(std::span<const Polynomial> basis, const MonomialOrder& ord);

/// Exact quotient f / g; throws if g does not divide f.
Polynomial divide_exact(const Polynomial& f, const Polynomial& g);

}  // namespace chern
