#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "chern/binomial.hpp"
#include "chern/error.hpp"
#include "chern/hilbert.hpp"
#include "oracles.hpp"

using namespace chern;

namespace {

std::vector<Polynomial> vars(const RingPtr& ring) {
  std::vector<Polynomial> v;
  for (std::size_t i = 0; i < ring->arity(); ++i) v.push_back(Polynomial::variable(ring, i));
  return v;
}

struct FourVar {
  RingPtr ring = make_ring({"x", "y", "z", "w"});
  std::vector<Polynomial> v = vars(ring);
  Ideal defining = ideal_intersect(Ideal(ring, {v[0], v[1]}), Ideal(ring, {v[2], v[3]}));
  QuotientRing quotient{defining};
  std::vector<Polynomial> q = {v[0] + v[2], v[1] + v[3]};
};

struct OneDim {
  RingPtr ring = make_ring({"x", "y"});
  std::vector<Polynomial> v = vars(ring);
  QuotientRing quotient{Ideal(ring, {v[0].pow(3), v[0] * v[1]})};
  std::vector<Polynomial> q = {v[1]};
};

struct SixVar {
  RingPtr ring = make_ring({"x", "y", "z", "u", "v", "w"});
  std::vector<Polynomial> v = vars(ring);
  Ideal defining = ideal_intersect(Ideal(ring, {v[0], v[1]}), Ideal(ring, {v[2], v[3], v[4], v[5]}));
  QuotientRing quotient{defining};
  std::vector<Polynomial> q = {v[0] + v[2], v[3], v[1] + v[4], v[5]};
};

HilbertTable table_of(std::function<std::int64_t(unsigned)> h, unsigned from, unsigned to) {
  HilbertTable t;
  t.values[0] = 0;
  for (unsigned n = from; n <= to; ++n) t.values[n] = static_cast<std::uint64_t>(h(n));
  return t;
}

}  // namespace

TEST_CASE("krull_dim") {
  FourVar a;
  CHECK(krull_dim(a.quotient) == 2);
  auto plain = make_ring({"a", "b", "c"});
  CHECK(krull_dim(QuotientRing(Ideal(plain, {}))) == 3);

  SixVar b;
  CHECK(krull_dim(b.quotient) == 4);
  CHECK(testing::growth_dimension(b.defining.leading_monomials(), 6) == 4);
}

TEST_CASE("zero ring is rejected") {
  auto ring = make_ring({"x"});
  CHECK_THROWS_WITH_AS(QuotientRing(Ideal::unit(ring)), doctest::Contains("zero ring"), Error);
}

TEST_CASE("colength") {
  auto ring = make_ring({"x", "y"});
  auto v = vars(ring);
  CHECK(colength(Ideal(ring, {v[0].pow(3), v[0] * v[1], v[1]})) == 3u);
  CHECK(colength(Ideal(ring, {v[0].pow(2), v[0] * v[1], v[1].pow(3)})) == 4u);
  CHECK_FALSE(colength(Ideal(ring, {v[0]})).has_value());
  CHECK(colength(Ideal::unit(ring)) == 0u);
}

TEST_CASE("hilbert_samuel on the two-plane example") {
  FourVar a;
  auto params = ParameterSystem::validate(a.quotient, a.q);
  CHECK(hilbert_samuel(a.quotient, params, 0) == 0);
  for (unsigned n = 1; n <= 5; ++n) CHECK(hilbert_samuel(a.quotient, params, n) == n * (n + 2));
  // Substituting z = -x, w = -y leaves k[x,y]/(x^2, xy, y^2).
  auto plane = make_ring({"x", "y"});
  auto p = vars(plane);
  CHECK(colength(Ideal(plane, {p[0] * p[0], p[0] * p[1], p[1] * p[1]})) == 3u);
}

TEST_CASE("hilbert_samuel on a polynomial ring and a one-dimensional ring") {
  auto ring = make_ring({"x", "y"});
  QuotientRing regular(Ideal(ring, {}));
  auto params = ParameterSystem::validate(regular, vars(ring));
  for (unsigned n = 1; n <= 6; ++n)
    CHECK(hilbert_samuel(regular, params, n) == static_cast<std::uint64_t>(binomial(n + 1, 2)));

  OneDim b;
  auto q = ParameterSystem::validate(b.quotient, b.q);
  for (unsigned n = 1; n <= 8; ++n) CHECK(hilbert_samuel(b.quotient, q, n) == n + 2);
}

TEST_CASE("fit_coefficients") {
  auto fit = fit_coefficients(table_of([](unsigned n) { return n * (n + 2); }, 1, 12), 2);
  CHECK(fit.coeffs == std::vector<std::int64_t>{2, -1, 0});
  fit = fit_coefficients(table_of([](unsigned n) { return binomial(n + 1, 2); }, 1, 12), 2);
  CHECK(fit.coeffs == std::vector<std::int64_t>{1, 0, 0});
  fit = fit_coefficients(table_of([](unsigned n) { return n + 2; }, 1, 12), 1);
  CHECK(fit.coeffs == std::vector<std::int64_t>{1, -2});
  CHECK(fit.postulation == 1);

  // Polynomial only from n = 4 on.
  fit = fit_coefficients(table_of([](unsigned n) { return n < 4 ? n : 2 * n - 2; }, 1, 12), 1);
  CHECK(fit.coeffs == std::vector<std::int64_t>{2, 2});
  CHECK(fit.postulation == 4);
  for (std::int64_t n = 4; n <= 12; ++n) CHECK(hilbert_polynomial_value(fit.coeffs, n) == 2 * n - 2);

  // Exponential growth never agrees with a degree-1 polynomial.
  CHECK_THROWS_WITH_AS(fit_coefficients(table_of([](unsigned n) { return std::int64_t{1} << n; }, 1, 12), 1),
                       doctest::Contains("no stabilization"), Error);
}

TEST_CASE("default window and table extent") {
  CHECK(default_window(1) == 12);
  CHECK(default_window(4) == 12);
  CHECK(default_window(6) == 16);
  OneDim b;
  auto table = hilbert_coefficients(ParameterSystem::validate(b.quotient, b.q));
  CHECK(table.values.size() == 13);
  REQUIRE(table.coeffs.has_value());
  CHECK(*table.coeffs == std::vector<std::int64_t>{1, -2});
}

TEST_CASE("gr_series") {
  FourVar a;
  auto s = gr_series(ParameterSystem::validate(a.quotient, a.q));
  CHECK(s.numerator == std::vector<std::int64_t>{3, -1});
  CHECK(s.denom_exponent == 2);
  CHECK(s.to_string() == "(3 - x) / (1 - x)^2");

  auto ring = make_ring({"x", "y", "z"});
  QuotientRing regular(Ideal(ring, {}));
  auto r = gr_series(ParameterSystem::validate(regular, vars(ring)));
  CHECK(r.numerator == std::vector<std::int64_t>{1});
  CHECK(r.coefficients() == std::vector<std::int64_t>{1, 0, 0, 0});

  OneDim b;
  auto params = ParameterSystem::validate(b.quotient, b.q);
  auto t = gr_series(params);
  CHECK(t.numerator == std::vector<std::int64_t>{3, -2});
  CHECK(t.coefficients() == std::vector<std::int64_t>{1, -2});
  CHECK(t.coefficients() == *hilbert_coefficients(params).coeffs);
}

TEST_CASE("is_sop") {
  FourVar a;
  CHECK(is_sop(a.quotient, a.q));
  CHECK_FALSE(is_sop(a.quotient, {a.v[0]}));
  CHECK_FALSE(is_sop(a.quotient, {a.v[0], a.v[1]}));
  CHECK_THROWS_WITH_AS(ParameterSystem::validate(a.quotient, {a.v[0]}),
                       doctest::Contains("not a system of parameters"), Error);

  SixVar b;
  CHECK(is_sop(b.quotient, b.q));
  auto params = ParameterSystem::validate(b.quotient, b.q);
  CHECK(params.validated());
}

TEST_CASE("six-variable example Hilbert data") {
  SixVar b;
  auto params = ParameterSystem::validate(b.quotient, b.q);
  auto table = hilbert_coefficients(params);
  REQUIRE(table.coeffs.has_value());
  CHECK(*table.coeffs == std::vector<std::int64_t>{1, 0, 1, -1, 0});
  auto s = gr_series(table, 4);
  CHECK(s.coefficients() == *table.coeffs);
}

TEST_CASE("oracle equivalence: standard monomials vs dense linear algebra") {
  std::mt19937 rng(2024);
  int compared = 0;
  for (int trial = 0; trial < 400 && compared < 30; ++trial) {
    std::uniform_int_distribution<std::size_t> nv(1, 3);
    std::size_t n = nv(rng);
    std::vector<std::string> names = {"x", "y", "z"};
    names.resize(n);
    auto ring = make_ring(names);
    std::vector<Polynomial> gens;
    // pure powers keep the quotient zero-dimensional
    std::uniform_int_distribution<unsigned> power(1, 5);
    for (std::size_t i = 0; i < n; ++i) gens.push_back(Polynomial::variable(ring, i).pow(power(rng)));
    auto extra = testing::random_homogeneous_ideal(rng, ring, 3, 4, true);
    for (const auto& g : extra.generators()) gens.push_back(g);
    Ideal ideal(ring, gens);
    auto length = colength(ideal);
    REQUIRE(length.has_value());
    if (*length > 60) continue;
    CHECK(static_cast<long>(*length) == testing::dense_colength(ideal, 20));
    ++compared;
  }
  CHECK(compared >= 20);
}

TEST_CASE("order independence of dimension and colength") {
  std::mt19937 rng(7);
  auto ring = make_ring({"x", "y", "z"});
  for (int trial = 0; trial < 30; ++trial) {
    auto ideal = testing::random_homogeneous_ideal(rng, ring, 3, 3, true);
    if (ideal.is_unit()) continue;
    CHECK(krull_dim(ideal, MonomialOrder::lex()) == krull_dim(ideal, MonomialOrder::degrevlex()));
    CHECK(colength(ideal, MonomialOrder::lex()) == colength(ideal, MonomialOrder::degrevlex()));
  }
}

TEST_CASE("random rings: first differences, series cross-check, nonpositive e1") {
  std::mt19937 rng(99);
  int rings = 0;
  for (int trial = 0; trial < 300 && rings < 15; ++trial) {
    auto sc = testing::random_scenario(rng, 3, 2);
    if (!sc) continue;
    ++rings;
    std::size_t d = sc->ring.dim();
    auto table = hilbert_coefficients(sc->params);
    REQUIRE(table.coeffs.has_value());
    for (auto it = table.values.begin(); std::next(it) != table.values.end(); ++it)
      CHECK(std::next(it)->second >= it->second);
    CHECK(gr_series(table, d).coefficients() == *table.coeffs);
    CHECK((*table.coeffs)[0] >= 1);
    CHECK((*table.coeffs)[1] <= 0);
  }
  CHECK(rings >= 10);
}

TEST_CASE("multiplicity is additive over equidimensional components") {
  std::mt19937 rng(3);
  auto ring = make_ring({"x", "y", "z", "w"});
  auto v = vars(ring);
  std::vector<std::pair<Ideal, Ideal>> cases = {
      {Ideal(ring, {v[0], v[1]}), Ideal(ring, {v[2], v[3]})},
      {Ideal(ring, {v[0], v[1]}), Ideal(ring, {v[2].pow(2), v[3]})},
      {Ideal(ring, {v[0].pow(2), v[1]}), Ideal(ring, {v[2], v[3].pow(3)})},
  };
  for (const auto& [i1, i2] : cases) {
    for (int attempt = 0; attempt < 3; ++attempt) {
      std::vector<Polynomial> q = {testing::random_linear_form(rng, ring), testing::random_linear_form(rng, ring)};
      QuotientRing whole(ideal_intersect(i1, i2));
      QuotientRing c1(i1), c2(i2);
      if (!is_sop(whole, q) || !is_sop(c1, q) || !is_sop(c2, q)) continue;
      auto e = [&](const QuotientRing& r) { return (*hilbert_coefficients(ParameterSystem::validate(r, q)).coeffs)[0]; };
      CHECK(e(whole) == e(c1) + e(c2));
    }
  }
}

TEST_CASE("Hilbert-Samuel values agree with the direct definition") {
  std::mt19937 rng(17);
  int rings = 0;
  for (int trial = 0; trial < 300 && rings < 12; ++trial) {
    auto sc = testing::random_scenario(rng, 3 + static_cast<std::size_t>(trial % 2), 3);
    if (!sc) continue;
    ++rings;
    Ideal q = sc->params.ideal();
    for (unsigned n = 1; n <= 3; ++n) {
      Ideal direct = ideal_sum(sc->ring.defining(), ideal_power(q, n));
      auto expected = colength(direct, MonomialOrder::lex());
      REQUIRE(expected.has_value());
      CHECK(hilbert_samuel(sc->ring, sc->params, n) == *expected);
    }
  }
  CHECK(rings >= 10);

  // Parameters that are not linear forms take the general route.
  auto ring = make_ring({"x", "y", "z"});
  auto v = vars(ring);
  QuotientRing r(Ideal(ring, {v[0] * v[1]}));
  auto params = ParameterSystem::validate(r, {v[0].pow(2) + v[1].pow(3), v[2]});
  for (unsigned n = 1; n <= 3; ++n)
    CHECK(hilbert_samuel(r, params, n) ==
          *colength(ideal_sum(r.defining(), ideal_power(params.ideal(), n)), MonomialOrder::lex()));
}
