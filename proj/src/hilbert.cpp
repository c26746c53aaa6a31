#include "chern/hilbert.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

#include "chern/binomial.hpp"
#include "chern/error.hpp"

namespace chern {

// ---------------------------------------------------------------------------
// Monomial ideal combinatorics

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  const auto lex = MonomialOrder::lex();
  std::sort(gens.begin(), gens.end(), [&](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return lex.greater(a, b);
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (const auto& g : gens)
    if (std::none_of(out.begin(), out.end(), [&](const Monomial& h) { return h.divides(g); })) out.push_back(g);
  return out;
}

std::size_t monomial_dimension(const std::vector<Monomial>& gens, std::size_t arity) {
  std::vector<std::uint32_t> supports;
  for (const auto& g : gens) {
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < arity; ++i)
      if (g[i] != 0) s |= 1u << i;
    if (s == 0) throw Error("zero ring has no Krull dimension");
    supports.push_back(s);
  }
  std::size_t best = 0;
  for (std::uint32_t u = 0; u < (1u << arity); ++u) {
    auto size = static_cast<std::size_t>(std::popcount(u));
    if (size <= best) continue;
    if (std::none_of(supports.begin(), supports.end(), [&](std::uint32_t s) { return (s & ~u) == 0; }))
      best = size;
  }
  return best;
}

namespace {

using Poly1 = std::vector<std::int64_t>;

Poly1 add(Poly1 a, const Poly1& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Poly1 mul(const Poly1& a, const Poly1& b) {
  if (a.empty() || b.empty()) return {};
  Poly1 r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

Poly1 one_minus_t_pow(unsigned e) {
  Poly1 p(e + 1, 0);
  p[0] = 1;
  p[e] -= 1;
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

Poly1 numerator_rec(std::vector<Monomial> gens, std::size_t arity) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {1};
  bool coprime = true;
  for (std::size_t a = 0; a < gens.size() && coprime; ++a)
    for (std::size_t b = a + 1; b < gens.size() && coprime; ++b)
      if (!gens[a].coprime(gens[b])) coprime = false;
  if (coprime) {
    Poly1 r{1};
    for (const auto& g : gens) r = mul(r, one_minus_t_pow(g.degree()));
    return r;
  }
  // Pivot on the variable shared by the most generators.
  std::size_t pivot = 0, best = 0;
  for (std::size_t v = 0; v < arity; ++v) {
    std::size_t count = 0;
    for (const auto& g : gens) count += g[v] != 0;
    if (count > best) {
      best = count;
      pivot = v;
    }
  }
  // N(I) = N(I + (x)) + t * N(I : x)
  Monomial x = Monomial::variable(arity, pivot);
  std::vector<Monomial> with_x = gens;
  with_x.push_back(x);
  std::vector<Monomial> colon;
  for (const auto& g : gens) colon.push_back(g[pivot] != 0 ? g / x : g);
  Poly1 shifted = numerator_rec(std::move(colon), arity);
  shifted.insert(shifted.begin(), 0);
  return add(numerator_rec(std::move(with_x), arity), shifted);
}

}  // namespace

std::vector<std::int64_t> hilbert_numerator(std::vector<Monomial> gens, std::size_t arity) {
  return numerator_rec(std::move(gens), arity);
}

std::int64_t hilbert_function_value(const std::vector<std::int64_t>& numerator, std::size_t arity, std::int64_t t) {
  if (t < 0) return 0;
  std::int64_t v = 0;
  const auto n = static_cast<std::int64_t>(arity);
  for (std::size_t j = 0; j < numerator.size(); ++j) {
    const auto jj = static_cast<std::int64_t>(j);
    if (jj > t) break;
    // Number of monomials of degree t - j in n variables.
    std::int64_t count = n == 0 ? (t == jj ? 1 : 0) : binomial(t - jj + n - 1, n - 1);
    v += numerator[j] * count;
  }
  return v;
}

std::vector<std::int64_t> hilbert_numerator(const Ideal& homogeneous) {
  if (!homogeneous.is_homogeneous()) throw Error("Hilbert function requires a homogeneous ideal");
  return hilbert_numerator(homogeneous.leading_monomials(), homogeneous.ring()->arity());
}

// ---------------------------------------------------------------------------
// Quotient rings and parameter systems

std::size_t krull_dim(const Ideal& ideal, const MonomialOrder& ord) {
  if (ideal.is_unit()) throw Error("zero ring: the defining ideal is the unit ideal");
  return monomial_dimension(minimalize(ideal.leading_monomials(ord)), ideal.ring()->arity());
}

QuotientRing::QuotientRing(Ideal defining) : defining_(std::move(defining)), dim_(krull_dim(defining_)) {}

std::size_t krull_dim(const QuotientRing& ring) { return ring.dim(); }

namespace {

// Counts the order ideal of monomials outside (gens), each monomial reached
// once by adding variables in nondecreasing index order.
std::uint64_t count_standard(const std::vector<Monomial>& gens, const Monomial& m, std::size_t from) {
  std::uint64_t total = 1;
  for (std::size_t v = from; v < m.arity(); ++v) {
    Monomial next = m * Monomial::variable(m.arity(), v);
    if (std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return g.divides(next); })) continue;
    total += count_standard(gens, next, v);
  }
  return total;
}

}  // namespace

namespace {

std::uint64_t sum_of_hilbert_function(const std::vector<Monomial>& leading, std::size_t arity, std::int64_t below) {
  auto numerator = hilbert_numerator(leading, arity);
  std::uint64_t total = 0;
  for (std::int64_t t = 0; t < below; ++t) total += static_cast<std::uint64_t>(hilbert_function_value(numerator, arity, t));
  return total;
}

// For homogeneous ideals the quotient vanishes from the first degree t with
// (S/I)_t = 0 on, so the basis is only needed through that degree.
std::optional<std::uint64_t> homogeneous_colength(const Ideal& ideal) {
  const std::size_t n = ideal.ring()->arity();
  auto result = truncated_leading_monomials(
      ideal.generators(), MonomialOrder::degrevlex(), [n](unsigned t, const std::vector<Monomial>& leading) {
        return hilbert_function_value(hilbert_numerator(leading, n), n, t) == 0;
      });
  if (result.complete_through)
    return sum_of_hilbert_function(result.leading, n, static_cast<std::int64_t>(*result.complete_through));
  auto gens = minimalize(std::move(result.leading));
  if (std::any_of(gens.begin(), gens.end(), [](const Monomial& g) { return g.is_one(); })) return 0;
  if (monomial_dimension(gens, n) != 0) return std::nullopt;
  std::int64_t top = 0;
  for (const auto& g : gens) top += g.degree();
  return sum_of_hilbert_function(gens, n, top + 1);
}

}  // namespace

std::optional<std::uint64_t> colength(const Ideal& ideal, const MonomialOrder& ord) {
  const std::size_t n = ideal.ring()->arity();
  if (ord == MonomialOrder::degrevlex() && ideal.is_homogeneous()) return homogeneous_colength(ideal);
  auto gens = minimalize(ideal.leading_monomials(ord));
  for (const auto& g : gens)
    if (g.is_one()) return 0;
  for (std::size_t v = 0; v < n; ++v) {
    bool pure = std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return g.degree() == g[v]; });
    if (!pure) return std::nullopt;
  }
  return count_standard(gens, Monomial(n), 0);
}

bool is_sop(const QuotientRing& ring, const std::vector<Polynomial>& elements) {
  if (elements.size() != ring.dim()) return false;
  std::vector<Polynomial> gens = ring.defining().generators();
  gens.insert(gens.end(), elements.begin(), elements.end());
  auto len = colength(Ideal(ring.ambient(), gens));
  if (!len || *len == 0) return false;
  Ideal lift(ring.ambient(), elements);
  const std::size_t expected = ring.ambient()->arity() - elements.size();
  if (krull_dim(lift) != expected)
    throw InvariantViolation("system of parameters does not lift to a regular sequence: dim S/(Q) = " +
                             std::to_string(krull_dim(lift)) + ", expected " + std::to_string(expected));
  return true;
}

ParameterSystem ParameterSystem::validate(const QuotientRing& ring, std::vector<Polynomial> elements) {
  for (const auto& e : elements)
    if (!(*e.ring() == *ring.ambient())) throw Error("parameter does not belong to the ambient ring");
  if (elements.size() != ring.dim())
    throw Error("not a system of parameters: " + std::to_string(elements.size()) + " elements but dim R = " +
                std::to_string(ring.dim()));
  if (!is_sop(ring, elements)) throw Error("not a system of parameters: R/(Q) is not zero-dimensional");
  ParameterSystem p(ring, std::move(elements));
  p.validated_ = true;
  return p;
}

// ---------------------------------------------------------------------------
// Hilbert–Samuel function and coefficients

namespace {

// I + Q^n for every n. When the parameters are linear forms, a linear change
// of coordinates sends them to the last d variables; colengths are unchanged
// and Q^n becomes a monomial ideal.
class SamuelIdeals {
 public:
  SamuelIdeals(const QuotientRing& ring, const ParameterSystem& params)
      : defining_(ring.defining()), params_(params.elements()) {
    straighten();
  }

  Ideal at(unsigned n) const {
    if (!straightened_) return ideal_sum(defining_, ideal_power(Ideal(defining_.ring(), params_), n));
    const RingPtr& ring = defining_.ring();
    std::vector<Polynomial> gens = defining_.generators();
    const FieldElement one = FieldElement::one(ring->field());
    std::vector<unsigned> e(ring->arity(), 0);
    // all monomials of degree n in the last d variables
    const std::size_t first = ring->arity() - params_.size();
    std::function<void(std::size_t, unsigned)> fill = [&](std::size_t i, unsigned left) {
      if (i + 1 == ring->arity()) {
        e[i] = left;
        gens.push_back(Polynomial::term(ring, Monomial(std::span<const unsigned>(e)), one));
        e[i] = 0;
        return;
      }
      for (unsigned k = 0; k <= left; ++k) {
        e[i] = k;
        fill(i + 1, left - k);
      }
      e[i] = 0;
    };
    fill(first, n);
    return Ideal(ring, std::move(gens));
  }

 private:
  void straighten() {
    const RingPtr& ring = defining_.ring();
    const std::size_t nv = ring->arity(), d = params_.size();
    if (d == 0) return;
    for (const auto& p : params_)
      if (p.total_degree() != 1 || !p.is_homogeneous()) return;
    const FieldDescriptor& field = ring->field();
    const FieldElement zero = FieldElement::zero(field), one = FieldElement::one(field);

    // Rows: the parameters, then unit vectors for the non-pivot columns.
    std::vector<std::vector<FieldElement>> a(d, std::vector<FieldElement>(nv, zero));
    for (std::size_t k = 0; k < d; ++k)
      for (const auto& t : params_[k].terms())
        for (std::size_t j = 0; j < nv; ++j)
          if (t.monomial[j] == 1) a[k][j] = t.coeff;
    std::vector<std::vector<FieldElement>> echelon = a;
    std::vector<bool> pivot(nv, false);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < nv && rank < d; ++c) {
      std::size_t r = rank;
      while (r < d && echelon[r][c].is_zero()) ++r;
      if (r == d) continue;
      std::swap(echelon[rank], echelon[r]);
      for (std::size_t k = rank + 1; k < d; ++k) {
        if (echelon[k][c].is_zero()) continue;
        FieldElement f = echelon[k][c] / echelon[rank][c];
        for (std::size_t j = c; j < nv; ++j) echelon[k][j] = echelon[k][j] - f * echelon[rank][j];
      }
      pivot[c] = true;
      ++rank;
    }
    if (rank < d) return;
    // Parameters become the last d variables, the smallest under degrevlex.
    std::vector<std::vector<FieldElement>> rows;
    for (std::size_t c = 0; c < nv; ++c)
      if (!pivot[c]) {
        rows.emplace_back(nv, zero);
        rows.back()[c] = one;
      }
    rows.insert(rows.end(), a.begin(), a.end());
    a = std::move(rows);

    // Invert a by Gauss-Jordan: x = a^{-1} y.
    std::vector<std::vector<FieldElement>> inv(nv, std::vector<FieldElement>(nv, zero));
    for (std::size_t i = 0; i < nv; ++i) inv[i][i] = one;
    for (std::size_t c = 0; c < nv; ++c) {
      std::size_t r = c;
      while (a[r][c].is_zero()) ++r;
      std::swap(a[c], a[r]);
      std::swap(inv[c], inv[r]);
      FieldElement s = a[c][c].inverse();
      for (std::size_t j = 0; j < nv; ++j) {
        a[c][j] = a[c][j] * s;
        inv[c][j] = inv[c][j] * s;
      }
      for (std::size_t k = 0; k < nv; ++k) {
        if (k == c || a[k][c].is_zero()) continue;
        FieldElement f = a[k][c];
        for (std::size_t j = 0; j < nv; ++j) {
          a[k][j] = a[k][j] - f * a[c][j];
          inv[k][j] = inv[k][j] - f * inv[c][j];
        }
      }
    }
    std::vector<Polynomial> image;
    for (std::size_t i = 0; i < nv; ++i) {
      Polynomial x(ring);
      for (std::size_t k = 0; k < nv; ++k)
        if (!inv[i][k].is_zero()) x = x + Polynomial::variable(ring, k).scale(inv[i][k]);
      image.push_back(std::move(x));
    }

    std::vector<Polynomial> gens;
    for (const auto& g : defining_.generators()) gens.push_back(substitute(g, image));
    defining_ = Ideal(ring, std::move(gens));
    straightened_ = true;
  }

  static Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& image) {
    const RingPtr& ring = f.ring();
    std::vector<std::vector<Polynomial>> powers(image.size());
    auto power = [&](std::size_t i, unsigned e) -> const Polynomial& {
      auto& p = powers[i];
      if (p.empty()) p.push_back(Polynomial::constant(ring, 1));
      while (p.size() <= e) p.push_back(p.back() * image[i]);
      return p[e];
    };
    Polynomial out(ring);
    for (const auto& t : f.terms()) {
      Polynomial acc = Polynomial::term(ring, Monomial(ring->arity()), t.coeff);
      for (std::size_t i = 0; i < image.size(); ++i)
        if (t.monomial[i] > 0) acc = acc * power(i, t.monomial[i]);
      out = out + acc;
    }
    return out;
  }

  Ideal defining_;
  std::vector<Polynomial> params_;
  bool straightened_ = false;
};

std::uint64_t samuel_value(const SamuelIdeals& ideals, unsigned n) {
  if (n == 0) return 0;
  auto len = colength(ideals.at(n));
  if (!len) throw Error("not zero-dimensional: R/Q^" + std::to_string(n) + " has infinite length");
  return *len;
}

}  // namespace

std::uint64_t hilbert_samuel(const QuotientRing& ring, const ParameterSystem& params, unsigned n) {
  if (n == 0) return 0;
  return samuel_value(SamuelIdeals(ring, params), n);
}

std::int64_t hilbert_polynomial_value(const std::vector<std::int64_t>& coeffs, std::int64_t n) {
  const auto d = static_cast<std::int64_t>(coeffs.size()) - 1;
  std::int64_t v = 0;
  for (std::int64_t i = 0; i <= d; ++i) {
    std::int64_t term = coeffs[i] * binomial(n + d - 1 - i, d - i);
    v += (i % 2 == 0) ? term : -term;
  }
  return v;
}

namespace {

// Solves the (d+1)x(d+1) system for e_0..e_d from values at n0..n0+d.
std::optional<std::vector<std::int64_t>> solve_window(const HilbertTable& table, std::size_t d, unsigned n0) {
  const std::size_t m = d + 1;
  std::vector<std::vector<mpq_class>> a(m, std::vector<mpq_class>(m + 1));
  for (std::size_t r = 0; r < m; ++r) {
    const auto n = static_cast<std::int64_t>(n0 + r);
    for (std::size_t i = 0; i < m; ++i) {
      const auto ii = static_cast<std::int64_t>(i);
      const auto dd = static_cast<std::int64_t>(d);
      std::int64_t b = binomial(n + dd - 1 - ii, dd - ii);
      a[r][i] = (i % 2 == 0) ? b : -b;
    }
    a[r][m] = mpz_class(std::to_string(table.values.at(n0 + static_cast<unsigned>(r))));
  }
  for (std::size_t c = 0; c < m; ++c) {
    std::size_t piv = c;
    while (piv < m && a[piv][c] == 0) ++piv;
    if (piv == m) return std::nullopt;
    std::swap(a[c], a[piv]);
    for (std::size_t r = 0; r < m; ++r) {
      if (r == c || a[r][c] == 0) continue;
      mpq_class f = a[r][c] / a[c][c];
      for (std::size_t k = c; k <= m; ++k) a[r][k] -= f * a[c][k];
    }
  }
  std::vector<std::int64_t> e(m);
  for (std::size_t i = 0; i < m; ++i) {
    mpq_class v = a[i][m] / a[i][i];
    if (v.get_den() != 1) return std::nullopt;
    e[i] = v.get_num().get_si();
  }
  return e;
}

}  // namespace

CoefficientFit fit_coefficients(const HilbertTable& table, std::size_t d) {
  unsigned last = 0;
  while (table.values.count(last + 1)) ++last;
  for (unsigned n0 = 1; n0 + 2 * d + 1 <= last; ++n0) {
    auto e = solve_window(table, d, n0);
    if (!e) continue;
    bool ok = true;
    for (unsigned n = n0 + static_cast<unsigned>(d) + 1; n <= last && ok; ++n)
      ok = hilbert_polynomial_value(*e, n) == static_cast<std::int64_t>(table.values.at(n));
    if (!ok) continue;
    if ((*e)[0] < 1) throw InvariantViolation("fitted multiplicity e0 is not positive");
    return {*e, n0};
  }
  throw Error("no stabilization: no window of " + std::to_string(d + 2) +
              " consecutive values agrees with a fitted polynomial (table ends at n = " + std::to_string(last) + ")");
}

unsigned default_window(std::size_t d) { return std::max(static_cast<unsigned>(2 * d + 4), 12u); }

HilbertTable hilbert_coefficients(const ParameterSystem& params, unsigned nmax) {
  if (!params.validated()) throw Error("parameter system has not been validated");
  const QuotientRing& ring = params.ring();
  const std::size_t d = ring.dim();
  unsigned limit = nmax == 0 ? default_window(d) : nmax;
  if (limit > kHardMaxN) throw Error("nmax exceeds the hard cap n = " + std::to_string(kHardMaxN));
  HilbertTable table;
  table.values[0] = 0;
  const SamuelIdeals ideals(ring, params);
  while (true) {
    for (unsigned n = 1; n <= limit; ++n)
      if (!table.values.count(n)) table.values[n] = samuel_value(ideals, n);
    try {
      auto fit = fit_coefficients(table, d);
      table.coeffs = fit.coeffs;
      table.postulation = fit.postulation;
      return table;
    } catch (const Error&) {
      if (limit >= kHardMaxN) throw;
      limit = std::min(limit + 4, kHardMaxN);
    }
  }
}

std::vector<std::int64_t> GrSeries::coefficients() const {
  std::vector<std::int64_t> e(denom_exponent + 1, 0);
  for (std::size_t k = 0; k <= denom_exponent; ++k)
    for (std::size_t j = 0; j < numerator.size(); ++j)
      e[k] += binomial(static_cast<std::int64_t>(j), static_cast<std::int64_t>(k)) * numerator[j];
  return e;
}

std::string GrSeries::to_string() const {
  std::string num;
  for (std::size_t j = 0; j < numerator.size(); ++j) {
    std::int64_t c = numerator[j];
    if (c == 0) continue;
    std::string mag = std::to_string(c < 0 ? -c : c);
    std::string mono = j == 0 ? "" : (j == 1 ? "x" : "x^" + std::to_string(j));
    std::string body = mono.empty() ? mag : (mag == "1" ? mono : mag + "*" + mono);
    if (num.empty()) {
      num = (c < 0 ? "-" : "") + body;
    } else {
      num += (c < 0 ? " - " : " + ") + body;
    }
  }
  if (num.empty()) num = "0";
  if (denom_exponent == 0) return num;
  std::string den = "(1 - x)";
  if (denom_exponent > 1) den += "^" + std::to_string(denom_exponent);
  return "(" + num + ") / " + den;
}

GrSeries gr_series(const HilbertTable& table, std::size_t d) {
  if (!table.postulation) throw Error("series requires a fitted Hilbert table");
  unsigned last = 0;
  while (table.values.count(last + 1)) ++last;
  // a_n = λ(Q^n / Q^{n+1}) for n = 0..last-1
  std::vector<std::int64_t> diff;
  for (unsigned n = 0; n < last; ++n)
    diff.push_back(static_cast<std::int64_t>(table.values.at(n + 1)) - static_cast<std::int64_t>(table.values.at(n)));
  std::vector<std::int64_t> c(diff.size(), 0);
  for (std::size_t k = 0; k < diff.size(); ++k)
    for (std::size_t j = 0; j <= d && j <= k; ++j) {
      std::int64_t b = binomial(static_cast<std::int64_t>(d), static_cast<std::int64_t>(j));
      c[k] += (j % 2 == 0 ? b : -b) * diff[k - j];
    }
  const std::size_t tail = *table.postulation + d;
  if (tail >= c.size()) throw Error("series not stabilized: table too short to confirm the numerator");
  for (std::size_t k = tail; k < c.size(); ++k)
    if (c[k] != 0) throw Error("series not stabilized: nonzero coefficient at x^" + std::to_string(k));
  c.resize(tail);
  while (!c.empty() && c.back() == 0) c.pop_back();
  return {c, d};
}

GrSeries gr_series(const ParameterSystem& params, unsigned nmax) {
  return gr_series(hilbert_coefficients(params, nmax), params.ring().dim());
}

}  // namespace chern
