#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "chern/cohomology.hpp"
#include "chern/error.hpp"
#include "oracles.hpp"

using namespace chern;

namespace {

std::vector<Polynomial> vars(const RingPtr& ring) {
  std::vector<Polynomial> v;
  for (std::size_t i = 0; i < ring->arity(); ++i) v.push_back(Polynomial::variable(ring, i));
  return v;
}

}  // namespace

TEST_CASE("h0_length") {
  auto ring = make_ring({"x", "y"});
  auto v = vars(ring);
  CHECK(h0_length(QuotientRing(Ideal(ring, {v[0].pow(3), v[0] * v[1]}))) == 2);
  CHECK(h0_length(QuotientRing(Ideal(ring, {v[0].pow(2), v[0] * v[1]}))) == 1);

  auto four = make_ring({"x", "y", "z", "w"});
  auto f = vars(four);
  auto planes = ideal_intersect(Ideal(four, {f[0], f[1]}), Ideal(four, {f[2], f[3]}));
  CHECK(h0_length(QuotientRing(planes)) == 0);
}

TEST_CASE("inhomogeneous input is refused") {
  auto ring = make_ring({"x", "y"});
  auto v = vars(ring);
  QuotientRing r(Ideal(ring, {v[0] * v[1] - v[0]}));
  CHECK_THROWS_AS(h0_length(r), Error);
  CHECK_THROWS_AS(depth_positive(r), Error);
}

TEST_CASE("depth_positive and depth_probe") {
  auto six = make_ring({"x", "y", "z", "u", "v", "w"});
  auto s = vars(six);
  QuotientRing six_var(ideal_intersect(Ideal(six, {s[0], s[1]}), Ideal(six, {s[2], s[3], s[4], s[5]})));
  CHECK(depth_positive(six_var));
  CHECK(depth_probe(six_var, 8, 1) == 1);

  auto ring = make_ring({"x", "y"});
  auto v = vars(ring);
  CHECK_FALSE(depth_positive(QuotientRing(Ideal(ring, {v[0].pow(3), v[0] * v[1]}))));
  QuotientRing node(Ideal(ring, {v[0] * v[1]}));
  CHECK(depth_probe(node, 8, 1) == 1);

  for (std::size_t r = 1; r <= 4; ++r) {
    std::vector<std::string> names = {"a", "b", "c", "d"};
    names.resize(r);
    auto regular = make_ring(names);
    QuotientRing q(Ideal(regular, {}));
    CHECK(depth_positive(q));
    CHECK(depth_probe(q, 4, 17) == r);
  }

  // Over a prime field the probe draws uniformly.
  auto fp = make_ring({"x", "y", "z"}, FieldDescriptor::prime(32003));
  auto p = vars(fp);
  CHECK(depth_probe(QuotientRing(Ideal(fp, {p[0] * p[1]})), 4, 3) == 2);
}

TEST_CASE("depth_probe is reproducible for a seed") {
  auto ring = make_ring({"x", "y", "z", "w"});
  auto v = vars(ring);
  QuotientRing r(ideal_intersect(Ideal(ring, {v[0], v[1]}), Ideal(ring, {v[2], v[3]})));
  auto a = depth_probe(r, 3, 42);
  CHECK(a == depth_probe(r, 3, 42));
  CHECK(a == 1);
}

TEST_CASE("standard_sop_check") {
  auto ring = make_ring({"x", "y"});
  auto v = vars(ring);
  QuotientRing one_dim(Ideal(ring, {v[0].pow(3), v[0] * v[1]}));
  auto params = ParameterSystem::validate(one_dim, {v[1]});
  auto check = standard_sop_check(params);
  CHECK(check.colength == 3);
  CHECK(check.e0 == 1);
  CHECK(check.difference == 2);
  CHECK(check.predicted == 2);
  CHECK(check.holds);

  // Cohen–Macaulay: λ(R/Q) = e0.
  QuotientRing node(Ideal(ring, {v[0] * v[1]}));
  auto cm = standard_sop_check(ParameterSystem::validate(node, {v[0] + v[1]}), CohomologyLengths::from_user({0}));
  CHECK(cm.difference == 0);
  CHECK(cm.holds);

  auto four = make_ring({"x", "y", "z", "w"});
  auto f = vars(four);
  QuotientRing planes(ideal_intersect(Ideal(four, {f[0], f[1]}), Ideal(four, {f[2], f[3]})));
  auto q = ParameterSystem::validate(planes, {f[0] + f[2], f[1] + f[3]});
  auto c4 = standard_sop_check(q, CohomologyLengths::from_user({0, 1}));
  CHECK(c4.colength == 3);
  CHECK(c4.e0 == 2);
  CHECK(c4.difference == 1);
  CHECK(c4.predicted == 1);
  CHECK(c4.holds);
  CHECK_FALSE(standard_sop_check(q, CohomologyLengths::from_user({0, 0})).holds);
  CHECK_THROWS_AS(standard_sop_check(q, CohomologyLengths::from_user({0})), Error);
}

TEST_CASE("torsion_length") {
  auto four = make_ring({"x", "y", "z", "w"});
  auto f = vars(four);
  CHECK(torsion_length({Ideal(four, {f[0], f[1]}), Ideal(four, {f[2], f[3]})}) == 1);

  auto ring = make_ring({"x", "y"});
  auto v = vars(ring);
  CHECK(torsion_length({Ideal(ring, {v[0]}), Ideal(ring, {v[0].pow(3), v[1]})}) == 1);
  CHECK(torsion_length({Ideal(ring, {v[0]})}) == 0);

  auto three = make_ring({"x", "y", "z"});
  auto t = vars(three);
  CHECK_THROWS_WITH_AS(torsion_length({Ideal(three, {t[0]}), Ideal(three, {t[1]})}),
                       doctest::Contains("L not finite length"), Error);
}

TEST_CASE("annihilates_torsion") {
  auto four = make_ring({"x", "y", "z", "w"});
  auto f = vars(four);
  std::vector<Ideal> parts = {Ideal(four, {f[0], f[1]}), Ideal(four, {f[2], f[3]})};
  CHECK(annihilates_torsion(Ideal(four, {f[0] + f[2], f[1] + f[3]}), parts));
  std::vector<Ideal> thick = {Ideal(four, {f[0], f[1]}), Ideal(four, {f[2].pow(2), f[3]})};
  CHECK_FALSE(annihilates_torsion(Ideal(four, {f[0] + f[2], f[1] + f[3]}), thick));
  CHECK(annihilates_torsion(Ideal(four, {f[0] + f[2].pow(2), f[1] + f[3]}), thick));
}

TEST_CASE("h0 vanishes exactly when the ideal is saturated") {
  std::mt19937 rng(8);
  auto ring = make_ring({"x", "y", "z"});
  auto m = Ideal::maximal(ring);
  for (int trial = 0; trial < 40; ++trial) {
    auto ideal = testing::random_homogeneous_ideal(rng, ring, 3, 3, true);
    if (ideal.is_unit()) continue;
    QuotientRing r(ideal);
    bool saturated = saturate(ideal, m).ideal == ideal;
    CHECK((h0_length(r) == 0) == saturated);
    CHECK(depth_positive(r) == saturated);
  }
}

TEST_CASE("depth_probe stays within its bounds") {
  std::mt19937 rng(21);
  auto ring = make_ring({"x", "y", "z"});
  for (int trial = 0; trial < 25; ++trial) {
    auto ideal = testing::random_homogeneous_ideal(rng, ring, 2, 3, true);
    if (ideal.is_unit()) continue;
    QuotientRing r(ideal);
    auto depth = depth_probe(r, 2, static_cast<std::uint64_t>(trial));
    CHECK(depth <= r.dim());
    CHECK((depth >= 1) == depth_positive(r));
  }
}

TEST_CASE("e1 of a principal parameter ideal is minus the length of H^0") {
  std::mt19937 rng(31);
  auto ring = make_ring({"x", "y"});
  int rings = 0;
  for (int trial = 0; trial < 200 && rings < 12; ++trial) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(testing::monomial_poly(ring, testing::random_monomial(rng, 2, 1, 4)));
    Ideal ideal(ring, gens);
    QuotientRing r(ideal);
    if (r.dim() != 1) continue;
    auto form = testing::random_linear_form(rng, ring);
    if (!is_sop(r, {form})) continue;
    ++rings;
    auto coeffs = *hilbert_coefficients(ParameterSystem::validate(r, {form})).coeffs;
    CHECK(coeffs[1] == -static_cast<std::int64_t>(h0_length(r)));
  }
  CHECK(rings >= 10);
}

TEST_CASE("two components: torsion length is the colength of their sum") {
  std::mt19937 rng(12);
  auto ring = make_ring({"x", "y", "z", "w"});
  auto v = vars(ring);
  std::uniform_int_distribution<unsigned> e(1, 3);
  for (int trial = 0; trial < 10; ++trial) {
    Ideal a(ring, {v[0].pow(e(rng)), v[1].pow(e(rng))});
    Ideal b(ring, {v[2].pow(e(rng)), v[3].pow(e(rng)), v[2] * v[3]});
    auto sum = colength(ideal_sum(a, b));
    REQUIRE(sum.has_value());
    CHECK(torsion_length({a, b}) == *sum);
  }
}
