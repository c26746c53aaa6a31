#include "chern/formulas.hpp"

#include <algorithm>

#include "chern/error.hpp"

namespace chern {

namespace {

std::int64_t sign(std::int64_t k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace

std::vector<std::int64_t> schenzel_coeffs(const std::vector<std::int64_t>& h, std::size_t d) {
  if (h.size() != d) throw Error("expected " + std::to_string(d) + " cohomology lengths");
  const auto dd = static_cast<std::int64_t>(d);
  std::vector<std::int64_t> e(d, 0);
  for (std::int64_t i = 0; i < dd; ++i) {
    std::int64_t s = 0;
    for (std::int64_t j = 0; j <= i; ++j) s += binomial(i - 1, j - 1) * h[j];
    e[dd - i - 1] = sign(dd - i) * s;  // e_{d-i} at index d-i-1
  }
  return e;
}

SchenzelInversion schenzel_invert(const std::vector<std::int64_t>& e, std::size_t d) {
  if (e.size() != d) throw Error("expected coefficients e_1..e_" + std::to_string(d));
  const auto dd = static_cast<std::int64_t>(d);
  SchenzelInversion r{{std::vector<std::int64_t>(d, 0),
                       std::vector<CohomologyLengths::Source>(d, CohomologyLengths::Source::Inverted)},
                      true};
  auto& h = r.h.values;
  // Row i has C(i-1, i-1) = 1 on h_i, so h_i follows from e_{d-i} and h_0..h_{i-1}.
  for (std::int64_t i = 0; i < dd; ++i) {
    std::int64_t s = sign(dd - i) * e[dd - i - 1];
    for (std::int64_t j = 0; j < i; ++j) s -= binomial(i - 1, j - 1) * h[j];
    h[i] = s;
    if (s < 0) r.consistent = false;
  }
  return r;
}

std::size_t depth_lower_bound(const std::vector<std::int64_t>& h) {
  std::size_t k = 0;
  while (k < h.size() && h[k] == 0) ++k;
  return k;
}

std::int64_t en_betti(std::int64_t n, std::int64_t d, std::int64_t i) {
  if (n < 1) throw Error("Eagon-Northcott Betti numbers need n >= 1");
  if (i == 0) return 1;
  if (i < 1 || i > d) throw Error("Betti index " + std::to_string(i) + " outside 1.." + std::to_string(d));
  return binomial(n + d - 1, d - i) * binomial(n + i - 2, i - 1);
}

std::int64_t tor1_length(std::int64_t n, std::int64_t d, std::int64_t lambda_l) {
  return binomial(n + d - 1, d - 1) * lambda_l;
}

std::vector<std::int64_t> mv_predicted(std::size_t d, std::int64_t lambda_l, std::int64_t e0) {
  if (d < 2) throw Error("the closed form needs dim R >= 2");
  std::vector<std::int64_t> e(d + 1, 0);
  e[0] = e0;
  for (std::size_t i = 1; i < d; ++i) e[i] = sign(static_cast<std::int64_t>(i)) * lambda_l;
  e[d] = 0;
  return e;
}

bool MVReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const ReportCheck& c) { return c.passed; });
}

namespace {

std::string vec_string(const std::vector<std::int64_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + ")";
}

}  // namespace

MVReport mv_verify(const MVScenario& scenario, unsigned nmax) {
  if (scenario.components.empty()) throw Error("scenario needs at least one component ideal");
  MVReport rep;
  const RingPtr& s = scenario.components.front().ring();

  QuotientRing ring(ideal_intersect(scenario.components));
  auto params = ParameterSystem::validate(ring, scenario.parameters);
  rep.d = ring.dim();
  HilbertTable table = hilbert_coefficients(params, nmax);
  rep.actual = *table.coeffs;

  rep.lambda_l = static_cast<std::int64_t>(torsion_length(scenario.components));
  rep.checks.push_back({"L has finite length", true, "lambda(L) = " + std::to_string(rep.lambda_l)});

  std::int64_t sum = 0;
  for (const auto& comp : scenario.components) {
    QuotientRing part(comp);
    if (part.dim() != rep.d) {
      rep.checks.push_back({"components have dimension d", false,
                            "component " + comp.to_string() + " has dimension " + std::to_string(part.dim())});
      rep.component_e0.push_back(0);
      continue;
    }
    auto local = ParameterSystem::validate(part, scenario.parameters);
    std::int64_t e0 = (*hilbert_coefficients(local, nmax).coeffs)[0];
    rep.component_e0.push_back(e0);
    sum += e0;
  }
  std::string additivity = std::to_string(rep.actual[0]) + " = ";
  for (std::size_t i = 0; i < rep.component_e0.size(); ++i)
    additivity += (i ? " + " : "") + std::to_string(rep.component_e0[i]);
  rep.checks.push_back({"e0 additivity", sum == rep.actual[0], additivity});

  rep.annihilator = annihilates_torsion(Ideal(s, scenario.parameters), scenario.components);
  rep.checks.push_back({"J L = 0", rep.annihilator,
                        rep.annihilator ? "J annihilates L" : "annihilator hypothesis fails"});

  if (rep.annihilator) {
    if (rep.d >= 2) {
      rep.predicted = mv_predicted(rep.d, rep.lambda_l, rep.actual[0]);
    } else if (rep.lambda_l == 0) {
      rep.predicted.assign(rep.d + 1, 0);
      rep.predicted[0] = rep.actual[0];
    }
  }
  if (!rep.predicted.empty()) {
    rep.checks.push_back({"actual = predicted", rep.actual == rep.predicted,
                          "actual " + vec_string(rep.actual) + ", predicted " + vec_string(rep.predicted)});
  } else if (!rep.annihilator && rep.d >= 2 && rep.lambda_l > 0) {
    rep.checks.push_back({"e1 < 0", rep.actual[1] < 0, "e1 = " + std::to_string(rep.actual[1])});
  }
  return rep;
}

std::string to_string(Verdict::Outcome o) {
  switch (o) {
    case Verdict::Outcome::CohenMacaulay: return "CohenMacaulay";
    case Verdict::Outcome::NotCohenMacaulay: return "NotCohenMacaulay";
    case Verdict::Outcome::Inconclusive: return "Inconclusive";
  }
  return {};
}

Verdict negativity_verdict(std::int64_t e1, bool unmixed) {
  if (e1 > 0)
    throw InvariantViolation("e1 = " + std::to_string(e1) +
                             " is positive; the Chern number of a parameter ideal is never positive, so the input "
                             "is not a parameter ideal or the computation is wrong");
  const std::string flag = unmixed ? "unmixedness assumed by caller" : "unmixedness not assumed";
  if (e1 < 0)
    return {Verdict::Outcome::NotCohenMacaulay, e1, unmixed,
            "e1 < 0 forces R to be not Cohen-Macaulay (" + flag + ")"};
  if (unmixed)
    return {Verdict::Outcome::CohenMacaulay, e1, unmixed,
            "e1 = 0 for a parameter ideal of an unmixed ring forces R to be Cohen-Macaulay (" + flag + ")"};
  return {Verdict::Outcome::Inconclusive, e1, unmixed,
          "e1 = 0 does not decide Cohen-Macaulayness without unmixedness: R = k[x,y,z,u,v,w]/((x,y) cap (z,u,v,w)) "
          "has e1(Q) = 0 for Q = (x+z, u, y+v, w) but depth R = 1 < 4 = dim R (" + flag + ")"};
}

}  // namespace chern
