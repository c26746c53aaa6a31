#include "chern/commands.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace chern {

using nlohmann::json;

namespace example_sessions {

const char* const kFourVariable = R"(# Union of two planes meeting at a point.
ring QQ[x,y,z,w]
ideal I1 = x, y
ideal I2 = z, w
ideal I = intersect(I1, I2)
quotient by I
param Q = x + z, y + w
assume unmixed = true
)";

const char* const kOneDimensional = R"(# (x) cap (x^3, y): a line with an embedded point.
ring QQ[x,y]
ideal I = x^3, x*y
quotient by I
param Q = y
)";

const char* const kSixVariable = R"(# A 4-space and a 2-plane meeting at the origin; not unmixed.
ring QQ[x,y,z,u,v,w]
ideal I1 = x, y
ideal I2 = z, u, v, w
ideal I = intersect(I1, I2)
quotient by I
param Q = x + z, u, y + v, w
assume unmixed = false
)";

const char* const kRegularPlane = R"(ring QQ[x,y]
param Q = x, y
assume unmixed = true
)";

const char* const kNodeCurve = R"(ring QQ[x,y]
ideal I = x*y
quotient by I
param Q = x + y
assume unmixed = true
)";

}  // namespace example_sessions

bool Report::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const ReportCheck& c) { return c.passed; });
}

json Report::to_json() const {
  json j;
  j["command"] = command;
  j["inputHash"] = input_hash;
  j["values"] = values;
  j["checks"] = json::array();
  for (const auto& c : checks) j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  j["citations"] = citations;
  return j;
}

std::string input_hash(std::string_view text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

const std::vector<std::string>& session_commands() {
  static const std::vector<std::string> names{"coeffs", "series", "verdict", "schenzel", "mv", "h0", "depth"};
  return names;
}

namespace {

constexpr const char* kHilbertSamuel = "Hilbert-Samuel polynomial P(n) = sum_i (-1)^i e_i C(n+d-1-i, d-i)";
constexpr const char* kNonpositivity = "e1(Q) <= 0 for every parameter ideal Q";
constexpr const char* kOneDimH0 = "e1((a)) = -lambda(H^0_m(R)) in dimension one";
constexpr const char* kSchenzel = "Schenzel: e_{d-i} = (-1)^{d-i} sum_j C(i-1, j-1) lambda(H^j_m(R)) for standard s.o.p.";
constexpr const char* kStandardSop = "standard s.o.p.: lambda(R/q) - e0(q) = sum_i C(d-1, i) lambda(H^i_m(R))";
constexpr const char* kTorsionFormula = "intersections of CM ideals: J in ann L gives e_i = (-1)^i lambda(L) for 0 < i < d, e_d = 0";
constexpr const char* kNegativity = "Negativity Conjecture: e1(Q) < 0 iff R is not Cohen-Macaulay (unmixed R)";
constexpr const char* kUnmixedNeeded = "e1(Q) = 0 with depth R < dim R when R is not unmixed";

std::string vec(const std::vector<std::int64_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + ")";
}

std::string poly_list(const std::vector<Polynomial>& ps) {
  std::string s = "(";
  for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? ", " : "") + ps[i].to_string();
  return s + ")";
}

json poly_json(const std::vector<Polynomial>& ps) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(p.to_string());
  return a;
}

struct Context {
  QuotientRing ring;
  ParameterSystem params;
};

Context build_context(const SessionSpec& spec, const CommandOptions& opt) {
  QuotientRing ring(spec.defining_ideal());
  const ParamBinding& binding = spec.param(opt.param);
  auto params = ParameterSystem::validate(ring, binding.elements);
  return {std::move(ring), std::move(params)};
}

void describe_ring(Report& r, const Context& ctx) {
  const auto& gb = ctx.ring.defining().groebner_basis();
  r.values["ring"] = ctx.ring.ambient()->to_string();
  r.values["definingIdeal"] = poly_json(gb);
  r.values["dim"] = ctx.ring.dim();
  r.values["parameters"] = poly_json(ctx.params.elements());
  std::ostringstream os;
  os << "R = " << ctx.ring.ambient()->to_string() << " / " << poly_list(gb) << "\n"
     << "dim R = " << ctx.ring.dim() << "\n"
     << "Q = " << poly_list(ctx.params.elements()) << "\n";
  r.text += os.str();
}

void add_table(Report& r, const HilbertTable& table) {
  const auto& e = *table.coeffs;
  json values = json::array();
  std::ostringstream os;
  os << "   n   lambda(R/Q^n)   P(n)\n";
  for (const auto& [n, v] : table.values) {
    if (n == 0) continue;
    values.push_back({{"n", n}, {"length", v}});
    char line[64];
    std::snprintf(line, sizeof line, "%4u   %13llu   %lld\n", n, static_cast<unsigned long long>(v),
                  static_cast<long long>(hilbert_polynomial_value(e, n)));
    os << line;
  }
  for (std::size_t i = 0; i < e.size(); ++i) os << "e" << i << " = " << e[i] << "\n";
  os << "postulation n0 = " << *table.postulation << "\n";
  r.values["hilbertSamuel"] = values;
  r.values["coeffs"] = e;
  r.values["postulation"] = *table.postulation;
  r.text += os.str();
  bool reproduces = true;
  for (const auto& [n, v] : table.values)
    if (n >= *table.postulation && hilbert_polynomial_value(e, n) != static_cast<std::int64_t>(v)) reproduces = false;
  r.checks.push_back({"polynomial reproduces table from n0", reproduces, "n0 = " + std::to_string(*table.postulation)});
  if (e.size() > 1) r.checks.push_back({"e1 <= 0", e[1] <= 0, "e1 = " + std::to_string(e[1])});
}

std::optional<std::vector<std::int64_t>> cohomology_input(const SessionSpec& spec, const CommandOptions& opt) {
  if (opt.h) return opt.h;
  return spec.h;
}

bool unmixed_flag(const SessionSpec& spec, const CommandOptions& opt) {
  if (opt.unmixed) return *opt.unmixed;
  return spec.unmixed.value_or(false);
}

void cmd_coeffs(Report& r, const SessionSpec& spec, const CommandOptions& opt) {
  auto ctx = build_context(spec, opt);
  describe_ring(r, ctx);
  add_table(r, hilbert_coefficients(ctx.params, opt.nmax));
  r.citations = {kHilbertSamuel};
}

void cmd_series(Report& r, const SessionSpec& spec, const CommandOptions& opt) {
  auto ctx = build_context(spec, opt);
  describe_ring(r, ctx);
  HilbertTable table = hilbert_coefficients(ctx.params, opt.nmax);
  GrSeries s = gr_series(table, ctx.ring.dim());
  r.values["numerator"] = s.numerator;
  r.values["denomExponent"] = s.denom_exponent;
  r.values["series"] = s.to_string();
  r.values["coeffs"] = *table.coeffs;
  r.text += "Hilbert series of G(Q): " + s.to_string() + "\n";
  auto from_series = s.coefficients();
  r.checks.push_back({"series coefficients agree with fit", from_series == *table.coeffs,
                      "series " + vec(from_series) + ", fit " + vec(*table.coeffs)});
  r.checks.push_back({"h(1) = e0 > 0", from_series[0] > 0, "h(1) = " + std::to_string(from_series[0])});
  r.citations = {kHilbertSamuel};
}

void cmd_verdict(Report& r, const SessionSpec& spec, const CommandOptions& opt) {
  auto ctx = build_context(spec, opt);
  describe_ring(r, ctx);
  HilbertTable table = hilbert_coefficients(ctx.params, opt.nmax);
  const auto& e = *table.coeffs;
  if (e.size() < 2) throw Error("a verdict needs dim R >= 1");
  Verdict v = negativity_verdict(e[1], unmixed_flag(spec, opt));
  r.values["coeffs"] = e;
  r.values["e1"] = v.e1;
  r.values["outcome"] = to_string(v.outcome);
  r.values["unmixedAssumed"] = v.unmixed_assumed;
  r.values["rationale"] = v.rationale;
  r.text += "e1 = " + std::to_string(v.e1) + "\nverdict: " + to_string(v.outcome) + "\n" + v.rationale + "\n";
  r.checks.push_back({"e1 <= 0", true, "e1 = " + std::to_string(v.e1)});
  r.citations = {kNegativity, kNonpositivity};
  if (v.outcome == Verdict::Outcome::Inconclusive) r.citations.push_back(kUnmixedNeeded);
}

void cmd_schenzel(Report& r, const SessionSpec& spec, const CommandOptions& opt) {
  auto ctx = build_context(spec, opt);
  describe_ring(r, ctx);
  const std::size_t d = ctx.ring.dim();
  HilbertTable table = hilbert_coefficients(ctx.params, opt.nmax);
  const auto& e = *table.coeffs;
  std::vector<std::int64_t> computed(e.begin() + 1, e.end());
  r.values["coeffs"] = e;
  r.citations = {kSchenzel};
  if (auto h = cohomology_input(spec, opt)) {
    auto lengths = CohomologyLengths::from_user(*h);
    lengths.check(d);
    auto predicted = schenzel_coeffs(lengths.values, d);
    auto check = standard_sop_check(ctx.params, lengths, opt.nmax);
    r.values["mode"] = "forward";
    r.values["h"] = lengths.values;
    r.values["predicted"] = predicted;
    r.values["standardSop"] = {{"colength", check.colength}, {"e0", check.e0},
                               {"difference", check.difference}, {"sum", check.predicted}};
    r.text += "h = " + vec(lengths.values) + " (user)\n";
    r.text += "Schenzel prediction (e1..ed) = " + vec(predicted) + "\n";
    r.text += "computed (e1..ed)            = " + vec(computed) + "\n";
    r.text += "lambda(R/Q) - e0 = " + std::to_string(check.difference) + ", sum C(d-1,i) h_i = " +
              std::to_string(check.predicted) + "\n";
    r.checks.push_back({"standard s.o.p. equation", check.holds,
                        std::to_string(check.colength) + " - " + std::to_string(check.e0) + " = " +
                            std::to_string(check.predicted)});
    r.checks.push_back({"computed coefficients match prediction", predicted == computed,
                        "computed " + vec(computed) + ", predicted " + vec(predicted)});
    r.citations.push_back(kStandardSop);
  } else {
    auto inv = schenzel_invert(computed, d);
    std::size_t bound = depth_lower_bound(inv.h.values);
    r.values["mode"] = "invert";
    r.values["h"] = inv.h.values;
    r.values["consistent"] = inv.consistent;
    r.values["conditionalDepthBound"] = bound;
    r.text += "computed (e1..ed) = " + vec(computed) + "\n";
    r.text += "inverted h = " + vec(inv.h.values) + (inv.consistent ? "" : "  (negative entry)") + "\n";
    r.text += "if Q is standard: depth R >= " + std::to_string(bound) + "\n";
    r.checks.push_back({"inversion consistent with a standard s.o.p.", inv.consistent,
                        inv.consistent ? "all h_i >= 0" : "some h_i < 0: Q is not standard"});
    r.checks.push_back({"round trip", schenzel_coeffs(inv.h.values, d) == computed, "coeffs(invert(e)) = e"});
  }
}

void cmd_mv(Report& r, const SessionSpec& spec, const CommandOptions& opt) {
  MVScenario scenario{spec.components(), spec.param(opt.param).elements};
  MVReport rep = mv_verify(scenario, opt.nmax);
  std::vector<std::string> comps;
  for (const auto& c : scenario.components) comps.push_back(c.to_string());
  r.values["components"] = comps;
  r.values["dim"] = rep.d;
  r.values["lambdaL"] = rep.lambda_l;
  r.values["componentE0"] = rep.component_e0;
  r.values["actual"] = rep.actual;
  r.values["predicted"] = rep.predicted;
  r.values["annihilator"] = rep.annihilator;
  std::ostringstream os;
  os << "components: " << comps.size() << "\n"
     << "dim R = " << rep.d << "\n"
     << "lambda(L) = " << rep.lambda_l << "\n"
     << "actual    = " << vec(rep.actual) << "\n"
     << "predicted = " << (rep.predicted.empty() ? std::string("n/a") : vec(rep.predicted)) << "\n";
  r.text += os.str();
  r.checks = rep.checks;
  r.citations = {kTorsionFormula};
}

void cmd_h0(Report& r, const SessionSpec& spec, const CommandOptions&) {
  QuotientRing ring(spec.defining_ideal());
  Saturation sat = saturate(ring.defining(), Ideal::maximal(ring.ambient()));
  std::uint64_t len = h0_length(ring);
  r.values["h0"] = len;
  r.values["saturation"] = poly_json(sat.ideal.groebner_basis());
  r.values["saturationSteps"] = sat.steps;
  r.values["depthPositive"] = len == 0;
  r.text += "sat(I, m) = " + poly_list(sat.ideal.groebner_basis()) + "  (" + std::to_string(sat.steps) + " steps)\n";
  r.text += "lambda(H^0_m(R)) = " + std::to_string(len) + "\n";
  r.checks.push_back({"I subset of sat(I, m)", sat.ideal.contains(ring.defining()), ""});
  if (ring.dim() == 1 && !spec.params.empty()) {
    CommandOptions o;
    auto ctx = build_context(spec, o);
    auto e = *hilbert_coefficients(ctx.params).coeffs;
    r.values["e1"] = e[1];
    r.checks.push_back({"e1 = -lambda(H^0)", e[1] == -static_cast<std::int64_t>(len),
                        "e1 = " + std::to_string(e[1])});
    r.citations.push_back(kOneDimH0);
  }
}

void cmd_depth(Report& r, const SessionSpec& spec, const CommandOptions& opt) {
  QuotientRing ring(spec.defining_ideal());
  std::size_t depth = depth_probe(ring, opt.trials, opt.seed);
  r.values["depth"] = depth;
  r.values["dim"] = ring.dim();
  r.values["trials"] = opt.trials;
  r.values["seed"] = opt.seed;
  r.values["cohenMacaulay"] = depth == ring.dim();
  r.text += "depth R >= " + std::to_string(depth) + " (random linear forms, " + std::to_string(opt.trials) +
            " trials, seed " + std::to_string(opt.seed) + ")\n";
  r.text += "dim R = " + std::to_string(ring.dim()) + "\n";
  r.checks.push_back({"depth <= dim", depth <= ring.dim(), ""});
}

}  // namespace

Report run_command(const SessionSpec& spec, const std::string& command, const CommandOptions& options,
                   std::string_view input_text) {
  Report r;
  r.command = command;
  r.input_hash = input_hash(input_text);
  if (command == "coeffs") cmd_coeffs(r, spec, options);
  else if (command == "series") cmd_series(r, spec, options);
  else if (command == "verdict") cmd_verdict(r, spec, options);
  else if (command == "schenzel") cmd_schenzel(r, spec, options);
  else if (command == "mv") cmd_mv(r, spec, options);
  else if (command == "h0") cmd_h0(r, spec, options);
  else if (command == "depth") cmd_depth(r, spec, options);
  else throw Error("unknown command '" + command + "'");
  return r;
}

// ---------------------------------------------------------------------------
// Worked examples

bool SuiteResult::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const ReportCheck& c) { return c.passed; });
}

namespace {

template <class T>
ReportCheck expect_eq(const std::string& name, const T& actual, const T& expected) {
  std::ostringstream os;
  if constexpr (std::is_same_v<T, std::vector<std::int64_t>>) {
    os << "got " << vec(actual) << ", expected " << vec(expected);
  } else {
    os << "got " << actual << ", expected " << expected;
  }
  return {name, actual == expected, os.str()};
}

// Runs `body`, turning any exception into a failed check.
template <class F>
void guarded(SuiteResult& s, F body) {
  try {
    body();
  } catch (const std::exception& ex) {
    s.checks.push_back({"suite ran to completion", false, ex.what()});
  }
}

std::vector<std::int64_t> coeffs_of(const SessionSpec& spec) {
  auto ctx = build_context(spec, {});
  return *hilbert_coefficients(ctx.params).coeffs;
}

SuiteResult suite_four_variable() {
  SuiteResult s{"A", "k[x,y,z,w]/(x,y)cap(z,w), Q = (x+z, y+w)", {}};
  guarded(s, [&] {
    auto spec = parse_session(example_sessions::kFourVariable);
    auto ctx = build_context(spec, {});
    const RingPtr& ring = spec.ring;
    auto x = Polynomial::variable(ring, 0), y = Polynomial::variable(ring, 1);
    auto z = Polynomial::variable(ring, 2), w = Polynomial::variable(ring, 3);
    Ideal expected(ring, {x * w, y * z, y * w, x * z});
    s.checks.push_back({"I = (xw, yz, yw, xz)", ctx.ring.defining() == expected, ctx.ring.defining().to_string()});
    s.checks.push_back(expect_eq<std::size_t>("dim R", ctx.ring.dim(), 2));
    HilbertTable table = hilbert_coefficients(ctx.params);
    s.checks.push_back(expect_eq<std::vector<std::int64_t>>("(e0, e1, e2)", *table.coeffs, {2, -1, 0}));
    s.checks.push_back(
        expect_eq<std::string>("G(Q) series", gr_series(table, 2).to_string(), "(3 - x) / (1 - x)^2"));
    MVReport mv = mv_verify({spec.components(), ctx.params.elements()});
    s.checks.push_back(expect_eq<std::int64_t>("lambda(L)", mv.lambda_l, 1));
    s.checks.push_back({"torsion formula checks", mv.all_passed(), vec(mv.actual) + " vs " + vec(mv.predicted)});
    s.checks.push_back(expect_eq<std::string>("verdict", to_string(negativity_verdict((*table.coeffs)[1], true).outcome),
                                              "NotCohenMacaulay"));
  });
  return s;
}

SuiteResult suite_one_dimensional() {
  SuiteResult s{"B", "k[x,y]/(x^3, xy), Q = (y)", {}};
  guarded(s, [&] {
    auto spec = parse_session(example_sessions::kOneDimensional);
    auto ctx = build_context(spec, {});
    auto e = *hilbert_coefficients(ctx.params).coeffs;
    auto h0 = static_cast<std::int64_t>(h0_length(ctx.ring));
    auto check = standard_sop_check(ctx.params);
    s.checks.push_back(expect_eq<std::int64_t>("e0", e[0], 1));
    s.checks.push_back(expect_eq<std::uint64_t>("lambda(R/yR)", hilbert_samuel(ctx.ring, ctx.params, 1), 3));
    s.checks.push_back(expect_eq<std::int64_t>("lambda(H^0)", h0, 2));
    s.checks.push_back({"lambda(R/yR) - e0 = lambda(H^0)", check.holds,
                        std::to_string(check.colength) + " - " + std::to_string(check.e0) + " = " +
                            std::to_string(check.predicted)});
    s.checks.push_back(expect_eq<std::int64_t>("e1", e[1], -2));
    s.checks.push_back(expect_eq<std::int64_t>("e1 = -lambda(H^0)", e[1], -h0));
    s.checks.push_back(expect_eq<std::int64_t>("e1 = Schenzel", e[1], schenzel_coeffs({h0}, 1)[0]));
  });
  return s;
}

SuiteResult suite_six_variable(std::uint64_t seed) {
  SuiteResult s{"C", "k[x,y,z,u,v,w]/(x,y)cap(z,u,v,w), Q = (x+z, u, y+v, w)", {}};
  guarded(s, [&] {
    auto spec = parse_session(example_sessions::kSixVariable);
    auto ctx = build_context(spec, {});
    auto e = coeffs_of(spec);
    s.checks.push_back(expect_eq<std::size_t>("dim R", ctx.ring.dim(), 4));
    s.checks.push_back(expect_eq<std::int64_t>("e1", e[1], 0));
    s.checks.push_back(expect_eq<std::size_t>("depth (8 trials)", depth_probe(ctx.ring, 8, seed), 1));
    s.checks.push_back(expect_eq<std::string>("verdict (unmixed = false)",
                                              to_string(negativity_verdict(e[1], false).outcome), "Inconclusive"));
  });
  return s;
}

SuiteResult suite_cm_controls() {
  SuiteResult s{"D", "Cohen-Macaulay controls: k[x,y] and k[x,y]/(xy)", {}};
  guarded(s, [&] {
    auto plane = coeffs_of(parse_session(example_sessions::kRegularPlane));
    s.checks.push_back(expect_eq<std::vector<std::int64_t>>("k[x,y], Q = (x, y)", plane, {1, 0, 0}));
    auto node = coeffs_of(parse_session(example_sessions::kNodeCurve));
    s.checks.push_back(expect_eq<std::vector<std::int64_t>>("k[x,y]/(xy), Q = (x + y)", node, {2, 0}));
    s.checks.push_back(expect_eq<std::string>("verdict (unmixed = true)",
                                              to_string(negativity_verdict(node[1], true).outcome), "CohenMacaulay"));
  });
  return s;
}

}  // namespace

std::vector<SuiteResult> run_example_suites(std::uint64_t seed) {
  return {suite_four_variable(), suite_one_dimensional(), suite_six_variable(seed), suite_cm_controls()};
}

Report example_suites_report(std::uint64_t seed) {
  Report r;
  r.command = "paper-examples";
  std::string all;
  for (const char* t : {example_sessions::kFourVariable, example_sessions::kOneDimensional,
                        example_sessions::kSixVariable, example_sessions::kRegularPlane, example_sessions::kNodeCurve})
    all += t;
  r.input_hash = input_hash(all);
  json suites = json::array();
  std::ostringstream os;
  for (const auto& suite : run_example_suites(seed)) {
    std::size_t ok = std::count_if(suite.checks.begin(), suite.checks.end(), [](const ReportCheck& c) { return c.passed; });
    suites.push_back({{"id", suite.id}, {"title", suite.title}, {"passed", suite.passed()},
                      {"checks", suite.checks.size()}, {"checksPassed", ok}});
    os << "(" << suite.id << ") " << (suite.passed() ? "PASS" : "FAIL") << "  " << ok << "/" << suite.checks.size()
       << "  " << suite.title << "\n";
    for (const auto& c : suite.checks) {
      r.checks.push_back({suite.id + ": " + c.name, c.passed, c.detail});
      if (!c.passed) os << "      mismatch: " << c.name << ": " << c.detail << "\n";
    }
  }
  r.values["suites"] = suites;
  r.text = os.str();
  r.citations = {kHilbertSamuel, kOneDimH0, kStandardSop, kSchenzel, kTorsionFormula, kNegativity, kUnmixedNeeded};
  return r;
}

}  // namespace chern
