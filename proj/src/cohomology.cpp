#include "chern/cohomology.hpp"

#include <algorithm>
#include <random>

#include "chern/binomial.hpp"
#include "chern/error.hpp"

namespace chern {

CohomologyLengths CohomologyLengths::from_user(std::vector<std::int64_t> values) {
  CohomologyLengths h;
  h.sources.assign(values.size(), Source::User);
  h.values = std::move(values);
  return h;
}

void CohomologyLengths::check(std::size_t d) const {
  if (values.size() != d || sources.size() != d)
    throw Error("cohomology length vector has " + std::to_string(values.size()) + " entries, expected d = " +
                std::to_string(d));
  for (std::size_t i = 1; i < sources.size(); ++i)
    if (sources[i] == Source::Computed) throw InvariantViolation("only H^0 lengths can be computed directly");
}

std::string to_string(CohomologyLengths::Source s) {
  switch (s) {
    case CohomologyLengths::Source::Computed: return "computed";
    case CohomologyLengths::Source::User: return "user";
    case CohomologyLengths::Source::Inverted: return "inverted";
  }
  return {};
}

unsigned summation_degree_cap(unsigned max_generator_degree, std::size_t arity) {
  return 4 * std::max(max_generator_degree, 1u) * static_cast<unsigned>(arity) + 16;
}

namespace {

void require_homogeneous(const Ideal& ideal) {
  if (!ideal.is_homogeneous())
    throw Error(
        "local cohomology needs a homogeneous defining ideal; graded and local lengths only agree for "
        "homogeneous data");
}

// Sum over t of (sum_i HF(S/A_i, t)) - HF(S/B, t) for homogeneous ideals,
// stopping once past every numerator degree with `quiet` zero differences.
std::int64_t degreewise_excess(const std::vector<Ideal>& parts, const Ideal& whole, unsigned cap,
                               const char* what) {
  const std::size_t n = whole.ring()->arity();
  std::vector<std::vector<std::int64_t>> nums;
  for (const auto& p : parts) nums.push_back(hilbert_numerator(p));
  auto whole_num = hilbert_numerator(whole);
  std::size_t past = whole_num.size();
  for (const auto& nm : nums) past = std::max(past, nm.size());
  // Beyond the numerator degrees the difference is a polynomial of degree < n.
  const std::size_t quiet = n + 2;
  std::int64_t total = 0;
  std::size_t zeros = 0;
  for (unsigned t = 0; t <= cap; ++t) {
    std::int64_t diff = -hilbert_function_value(whole_num, n, t);
    for (const auto& nm : nums) diff += hilbert_function_value(nm, n, t);
    total += diff;
    zeros = diff == 0 ? zeros + 1 : 0;
    if (t >= past && zeros >= quiet) return total;
  }
  throw Error(std::string(what) + ": degreewise difference did not vanish by degree " + std::to_string(cap));
}

}  // namespace

std::uint64_t h0_length(const QuotientRing& ring) {
  const Ideal& ideal = ring.defining();
  require_homogeneous(ideal);
  Ideal sat = saturate(ideal, Ideal::maximal(ring.ambient())).ideal;
  unsigned cap = summation_degree_cap(ideal.max_generator_degree(), ring.ambient()->arity());
  // HF(S/I) - HF(S/sat) counts sat/I degree by degree.
  std::int64_t len = degreewise_excess({ideal}, sat, cap, "H^0 length");
  if (len < 0) throw InvariantViolation("negative H^0 length");
  return static_cast<std::uint64_t>(len);
}

bool depth_positive(const QuotientRing& ring) { return h0_length(ring) == 0; }

std::size_t depth_probe(const QuotientRing& ring, unsigned trials, std::uint64_t seed) {
  const Ideal& ideal = ring.defining();
  require_homogeneous(ideal);
  const RingPtr& s = ring.ambient();
  const FieldDescriptor& field = s->field();
  std::mt19937_64 rng(seed);
  auto random_form = [&] {
    while (true) {
      std::vector<Term> terms;
      for (std::size_t v = 0; v < s->arity(); ++v) {
        mpz_class c;
        if (field.is_rational()) {
          c = static_cast<long>(std::uniform_int_distribution<int>(-7, 7)(rng));
        } else {
          c = static_cast<unsigned long>(std::uniform_int_distribution<std::uint32_t>(0, field.modulus - 1)(rng));
        }
        terms.push_back({Monomial::variable(s->arity(), v), FieldElement::from_integer(c, field)});
      }
      Polynomial form(s, std::move(terms));
      if (!form.is_zero()) return form;
    }
  };

  std::size_t best = 0;
  for (unsigned trial = 0; trial < std::max(trials, 1u); ++trial) {
    Ideal current = ideal;
    std::size_t length = 0;
    while (krull_dim(current) > 0) {
      Polynomial form = random_form();
      if (!(ideal_quotient(current, form) == current)) break;
      current = ideal_sum(current, Ideal(s, {form}));
      ++length;
    }
    best = std::max(best, length);
  }
  return best;
}

StandardSopCheck standard_sop_check(const ParameterSystem& params, const CohomologyLengths& h, unsigned nmax) {
  const std::size_t d = params.ring().dim();
  h.check(d);
  HilbertTable table = hilbert_coefficients(params, nmax);
  StandardSopCheck r{};
  r.colength = table.values.at(1);
  r.e0 = (*table.coeffs)[0];
  r.difference = static_cast<std::int64_t>(r.colength) - r.e0;
  r.predicted = 0;
  for (std::size_t i = 0; i < d; ++i)
    r.predicted += binomial(static_cast<std::int64_t>(d) - 1, static_cast<std::int64_t>(i)) * h.values[i];
  r.holds = r.difference == r.predicted;
  return r;
}

StandardSopCheck standard_sop_check(const ParameterSystem& params, unsigned nmax) {
  if (params.ring().dim() != 1) throw Error("cohomology lengths must be supplied when dim R != 1");
  CohomologyLengths h;
  h.values = {static_cast<std::int64_t>(h0_length(params.ring()))};
  h.sources = {CohomologyLengths::Source::Computed};
  return standard_sop_check(params, h, nmax);
}

std::uint64_t torsion_length(const std::vector<Ideal>& ideals) {
  if (ideals.empty()) throw Error("torsion length needs at least one ideal");
  if (ideals.size() == 1) return 0;
  unsigned maxdeg = 0;
  for (const auto& i : ideals) {
    require_homogeneous(i);
    maxdeg = std::max(maxdeg, i.max_generator_degree());
  }
  Ideal meet = ideal_intersect(ideals);
  unsigned cap = summation_degree_cap(maxdeg, ideals[0].ring()->arity());
  try {
    return static_cast<std::uint64_t>(degreewise_excess(ideals, meet, cap, "torsion length"));
  } catch (const Error&) {
    throw Error("L not finite length: the component ideals are not pairwise comaximal up to m-primary sums");
  }
}

bool annihilates_torsion(const Ideal& j, const std::vector<Ideal>& ideals) {
  if (ideals.size() <= 1) return true;
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    std::vector<Ideal> others;
    for (std::size_t k = 0; k < ideals.size(); ++k)
      if (k != i) others.push_back(ideals[k]);
    if (!ideal_sum(ideals[i], ideal_intersect(others)).contains(j)) return false;
  }
  return true;
}

}  // namespace chern
