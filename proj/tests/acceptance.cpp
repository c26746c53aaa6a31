// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

#include "chern/cohomology.hpp"
#include "chern/formulas.hpp"
#include "oracles.hpp"

using namespace chern;

namespace {

using Vec = std::vector<std::int64_t>;

std::string show(const Vec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ")";
  return os.str();
}

std::vector<Polynomial> vars(const RingPtr& ring) {
  std::vector<Polynomial> v;
  for (std::size_t i = 0; i < ring->arity(); ++i) v.push_back(Polynomial::variable(ring, i));
  return v;
}

// Collects sub-check failures for one criterion.
struct Criterion {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

int failed = 0;

void run(const char* id, const char* title, double limit_seconds, const std::function<std::string(Criterion&)>& body) {
  Criterion c;
  std::string summary;
  auto start = std::chrono::steady_clock::now();
  try {
    summary = body(c);
  } catch (const std::exception& e) {
    c.failures.push_back(std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0 && secs >= limit_seconds)
    c.failures.push_back("runtime " + std::to_string(secs) + " s exceeds " + std::to_string(limit_seconds) + " s");
  bool ok = c.failures.empty();
  if (!ok) ++failed;
  std::printf("%s %s: %s [%.3f s%s] %s\n", id, ok ? "PASS" : "FAIL", title, secs,
              limit_seconds > 0 ? (", limit " + std::to_string(static_cast<int>(limit_seconds)) + " s").c_str() : "",
              summary.c_str());
  for (const auto& f : c.failures) std::printf("    - %s\n", f.c_str());
}

}  // namespace

int main() {
  run("AC1", "two planes in QQ[x,y,z,w], Q = (x+z, y+w)", 5, [](Criterion& c) {
    auto ring = make_ring({"x", "y", "z", "w"});
    auto v = vars(ring);
    auto ideal = ideal_intersect(Ideal(ring, {v[0], v[1]}), Ideal(ring, {v[2], v[3]}));
    c.expect(ideal == Ideal(ring, {v[0] * v[3], v[1] * v[2], v[1] * v[3], v[0] * v[2]}), "I = (xw, yz, yw, xz)");
    QuotientRing r(ideal);
    c.expect(r.dim() == 2, "dim R = 2");
    auto params = ParameterSystem::validate(r, {v[0] + v[2], v[1] + v[3]});
    auto table = hilbert_coefficients(params);
    Vec e = table.coeffs.value_or(Vec{});
    c.expect(e == Vec{2, -1, 0}, "e = (2, -1, 0), got " + show(e));
    auto s = gr_series(table, 2);
    c.expect(s.numerator == Vec{3, -1}, "numerator 3 - x, got " + s.to_string());
    return "e = " + show(e) + ", series " + s.to_string();
  });

  run("AC2", "QQ[x,y]/(x^3, xy), Q = (y)", 2, [](Criterion& c) {
    auto ring = make_ring({"x", "y"});
    auto v = vars(ring);
    QuotientRing r(Ideal(ring, {v[0].pow(3), v[0] * v[1]}));
    auto params = ParameterSystem::validate(r, {v[1]});
    Vec e = hilbert_coefficients(params).coeffs.value_or(Vec{});
    auto length = colength(ideal_sum(r.defining(), params.ideal()));
    auto h0 = static_cast<std::int64_t>(h0_length(r));
    auto check = standard_sop_check(params);
    c.expect(e.size() == 2 && e[0] == 1, "e0 = 1");
    c.expect(length == 3u, "lambda(R/yR) = 3");
    c.expect(h0 == 2, "lambda(H^0) = 2");
    c.expect(check.holds && check.difference == 2 && check.colength == 3 && check.e0 == 1, "3 - 1 = 2");
    c.expect(e.size() == 2 && e[1] == -2 && e[1] == -h0 && Vec{e[1]} == schenzel_coeffs({h0}, 1),
             "e1 = -2 = -lambda(H^0) = Schenzel prediction");
    return "e = " + show(e) + ", lambda(H^0) = " + std::to_string(h0) + ", difference " + std::to_string(check.difference);
  });

  run("AC3", "QQ[x,y,z,u,v,w]/((x,y) meet (z,u,v,w)), Q = (x+z, u, y+v, w)", 60, [](Criterion& c) {
    auto ring = make_ring({"x", "y", "z", "u", "v", "w"});
    auto v = vars(ring);
    QuotientRing r(ideal_intersect(Ideal(ring, {v[0], v[1]}), Ideal(ring, {v[2], v[3], v[4], v[5]})));
    c.expect(r.dim() == 4, "dim R = 4");
    auto params = ParameterSystem::validate(r, {v[0] + v[2], v[3], v[1] + v[4], v[5]});
    Vec e = hilbert_coefficients(params).coeffs.value_or(Vec{});
    c.expect(e.size() == 5 && e[1] == 0, "e1 = 0, got " + show(e));
    auto depth = depth_probe(r, 8, 1);
    c.expect(depth == 1, "depth probe = 1");
    auto verdict = negativity_verdict(e.size() > 1 ? e[1] : -1, false);
    c.expect(verdict.outcome == Verdict::Outcome::Inconclusive, "verdict Inconclusive");
    return "e = " + show(e) + ", depth " + std::to_string(depth) + ", " + to_string(verdict.outcome);
  });

  run("AC4", "e1 <= 0 on randomized quotient rings", 0, [](Criterion& c) {
    std::mt19937 rng(4);
    int rings = 0;
    std::int64_t worst = -1000;
    for (int trial = 0; trial < 4000 && rings < 60; ++trial) {
      auto sc = testing::random_scenario(rng, 3 + static_cast<std::size_t>(trial % 2), 3);
      if (!sc) continue;
      ++rings;
      Vec e = *hilbert_coefficients(sc->params).coeffs;
      worst = std::max(worst, e[1]);
      c.expect(e[1] <= 0, "positive e1 = " + std::to_string(e[1]) + " on " + sc->ring.defining().to_string());
    }
    c.expect(rings >= 25, "only " + std::to_string(rings) + " rings generated");
    return std::to_string(rings) + " rings, max e1 = " + std::to_string(worst);
  });

  run("AC5", "standard-monomial colength equals dense linear algebra", 0, [](Criterion& c) {
    std::mt19937 rng(5);
    int compared = 0;
    for (int trial = 0; trial < 1000 && compared < 25; ++trial) {
      std::size_t n = 1 + static_cast<std::size_t>(trial % 3);
      std::vector<std::string> names = {"x", "y", "z"};
      names.resize(n);
      auto ring = make_ring(names);
      std::vector<Polynomial> gens;
      std::uniform_int_distribution<unsigned> power(1, 5);
      for (std::size_t i = 0; i < n; ++i) gens.push_back(Polynomial::variable(ring, i).pow(power(rng)));
      auto extra = testing::random_homogeneous_ideal(rng, ring, 3, 4, true);
      for (const auto& g : extra.generators()) gens.push_back(g);
      Ideal ideal(ring, gens);
      auto length = colength(ideal);
      if (!length || *length > 60) continue;
      ++compared;
      auto dense = testing::dense_colength(ideal, 30);
      c.expect(static_cast<long>(*length) == dense,
               ideal.to_string() + ": " + std::to_string(*length) + " vs " + std::to_string(dense));
    }
    c.expect(compared >= 20, "only " + std::to_string(compared) + " instances");
    return std::to_string(compared) + " instances";
  });

  run("AC6", "closed-form identities", 0, [](Criterion& c) {
    std::size_t round_trips = 0;
    for (std::size_t d = 1; d <= 6; ++d) {
      Vec h(d, 0);
      while (true) {
        auto inv = schenzel_invert(schenzel_coeffs(h, d), d);
        c.expect(inv.h.values == h && inv.consistent, "Schenzel round trip at " + show(h));
        ++round_trips;
        std::size_t i = 0;
        while (i < d && h[i] == 5) h[i++] = 0;
        if (i == d) break;
        ++h[i];
      }
    }
    for (std::int64_t n = 1; n <= 8; ++n)
      for (std::int64_t d = 1; d <= 8; ++d) {
        std::int64_t sum = 0;
        for (std::int64_t i = 0; i <= d; ++i) sum += (i % 2 ? -1 : 1) * en_betti(n, d, i);
        c.expect(sum == 0, "Betti alternating sum at n = " + std::to_string(n) + ", d = " + std::to_string(d));
      }
    std::size_t identities = 0;
    for (std::int64_t d = 2; d <= 5; ++d)
      for (std::int64_t len = 0; len <= 3; ++len) {
        Vec e = mv_predicted(static_cast<std::size_t>(d), len, 1);
        for (std::int64_t n = 1; n <= 10; ++n) {
          std::int64_t rhs = 0;
          for (std::int64_t i = 1; i <= d; ++i)
            rhs += (i % 2 ? -1 : 1) * e[static_cast<std::size_t>(i)] * binomial(n + d - 1 - i, d - i);
          c.expect(tor1_length(n, d, len) - len == rhs, "Tor identity at n, d, len = " + std::to_string(n) + ", " +
                                                            std::to_string(d) + ", " + std::to_string(len));
          ++identities;
        }
      }
    return std::to_string(round_trips) + " round trips, 64 Betti sums, " + std::to_string(identities) + " Tor identities";
  });

  run("AC7", "Cohen-Macaulay controls", 0, [](Criterion& c) {
    auto ring = make_ring({"x", "y"});
    auto v = vars(ring);
    QuotientRing plane(Ideal(ring, {}));
    Vec a = *hilbert_coefficients(ParameterSystem::validate(plane, {v[0], v[1]})).coeffs;
    c.expect(a == Vec{1, 0, 0}, "QQ[x,y]: " + show(a));
    QuotientRing node(Ideal(ring, {v[0] * v[1]}));
    Vec b = *hilbert_coefficients(ParameterSystem::validate(node, {v[0] + v[1]})).coeffs;
    c.expect(b == Vec{2, 0}, "QQ[x,y]/(xy): " + show(b));
    auto verdict = negativity_verdict(b[1], true);
    c.expect(verdict.outcome == Verdict::Outcome::CohenMacaulay, "verdict CohenMacaulay");
    return show(a) + ", " + show(b) + " " + to_string(verdict.outcome);
  });

  run("AC8", "torsion formula on the two-plane scenario", 0, [](Criterion& c) {
    auto ring = make_ring({"x", "y", "z", "w"});
    auto v = vars(ring);
    auto report = mv_verify({{Ideal(ring, {v[0], v[1]}), Ideal(ring, {v[2], v[3]})}, {v[0] + v[2], v[1] + v[3]}});
    c.expect(report.lambda_l == 1, "lambda(L) = 1");
    c.expect(report.component_e0 == Vec{1, 1} && report.actual.size() == 3 && report.actual[0] == 2, "2 = 1 + 1");
    c.expect(report.annihilator, "J L = 0");
    c.expect(report.actual == Vec{2, -1, 0} && report.predicted == report.actual, "actual = predicted = (2, -1, 0)");
    c.expect(report.all_passed(), "every report check passes");
    return "lambda(L) = " + std::to_string(report.lambda_l) + ", actual " + show(report.actual) + ", predicted " +
           show(report.predicted);
  });

  std::printf("%s\n", failed == 0 ? "ALL ACCEPTANCE CRITERIA PASS" : "ACCEPTANCE FAILED");
  return failed == 0 ? 0 : 1;
}
