#include "chern/session.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>

namespace chern {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

// Cursor over one logical line of the session file.
class LineParser {
 public:
  LineParser(std::string_view text, std::size_t line, RingPtr ring)
      : text_(text), line_(line), ring_(std::move(ring)) {}

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, pos_ + 1, msg); }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& msg) const { throw ParseError(line_, pos + 1, msg); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::size_t pos() const { return pos_; }
  /// Start of the next token.
  std::size_t token_pos() {
    skip_ws();
    return pos_;
  }
  void set_pos(std::size_t p) { pos_ = p; }

  std::string identifier() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ >= text_.size() || !(std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      fail("expected an identifier");
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string natural_literal() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a natural number");
    return std::string(text_.substr(start, pos_ - start));
  }

  unsigned small_natural() {
    std::size_t at = token_pos();
    std::string s = natural_literal();
    if (s.size() > 6) fail_at(at, "number too large");
    return static_cast<unsigned>(std::stoul(s));
  }

  bool keyword(std::string_view kw) {
    skip_ws();
    if (text_.substr(pos_, kw.size()) != kw) return false;
    std::size_t end = pos_ + kw.size();
    if (end < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_'))
      return false;
    pos_ = end;
    return true;
  }

  void expect_end() {
    if (!at_end()) fail("unexpected text '" + std::string(text_.substr(pos_)) + "'");
  }

  // expr := ['+'|'-'] term (('+'|'-') term)*
  Polynomial polynomial() {
    Polynomial acc(ring_);
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (accept('+')) {
        acc = acc + term();
      } else if (accept('-')) {
        acc = acc - term();
      } else {
        break;
      }
    }
    return acc;
  }

  std::vector<Polynomial> polynomial_list() {
    std::vector<Polynomial> out{polynomial()};
    while (accept(',')) out.push_back(polynomial());
    return out;
  }

 private:
  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (accept('^')) {
      unsigned e = small_natural();
      if (e > 1000) fail("exponent too large");
      base = base.pow(e);
    }
    return base;
  }

  Polynomial primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial p = polynomial();
      expect(')');
      return p;
    }
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial::constant(ring_, mpz_class(natural_literal()));
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t at = pos_;
      std::string name = identifier();
      int idx = ring_->index_of(name);
      if (idx < 0) fail_at(at, "unknown identifier '" + name + "' (not a ring variable)");
      return Polynomial::variable(ring_, static_cast<std::size_t>(idx));
    }
    if (c == '\0') fail("unexpected end of line in polynomial");
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_;
  RingPtr ring_;
};

struct Line {
  std::size_t number;
  std::string_view text;
};

std::vector<Line> logical_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 1, start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t\r") != std::string_view::npos) out.push_back({number, line});
    if (end == text.size()) break;
    start = end + 1;
    ++number;
  }
  return out;
}

RingPtr parse_ring(LineParser& p) {
  std::size_t at = p.token_pos();
  std::string field_name = p.identifier();
  FieldDescriptor field;
  if (field_name == "QQ") {
    field = FieldDescriptor::rationals();
  } else if (field_name.rfind("Fp", 0) == 0 && field_name.size() > 2 &&
             std::all_of(field_name.begin() + 2, field_name.end(), ::isdigit)) {
    if (field_name.size() > 12) p.fail_at(at, "field modulus too large");
    try {
      field = FieldDescriptor::prime(static_cast<std::uint32_t>(std::stoull(field_name.substr(2))));
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      p.fail_at(at, e.what());
    }
  } else {
    p.fail_at(at, "unknown field '" + field_name + "' (expected QQ or Fp<prime>)");
  }
  p.expect('[');
  std::vector<std::string> names;
  if (!p.accept(']')) {
    do {
      std::size_t vat = p.token_pos();
      std::string v = p.identifier();
      if (std::find(names.begin(), names.end(), v) != names.end()) p.fail_at(vat, "duplicate variable '" + v + "'");
      if (v == "_t") p.fail_at(vat, "variable name _t is reserved");
      names.push_back(v);
    } while (p.accept(','));
    p.expect(']');
  }
  if (names.size() > kMaxVariables - 1)
    p.fail("at most " + std::to_string(kMaxVariables - 1) + " variables are supported");
  p.expect_end();
  return make_ring(std::move(names), field);
}

}  // namespace

SessionSpec parse_session(std::string_view text) {
  SessionSpec spec;
  auto lines = logical_lines(text);
  if (lines.empty()) throw ParseError(1, 1, "ring declaration required at line 1");

  std::map<std::string, std::size_t> names;  // ideal and param names
  for (std::size_t k = 0; k < lines.size(); ++k) {
    const Line& line = lines[k];
    LineParser p(line.text, line.number, spec.ring);
    if (k == 0) {
      if (!p.keyword("ring"))
        throw ParseError(line.number, 1, "ring declaration required at line " + std::to_string(line.number));
      spec.ring = parse_ring(p);
      continue;
    }
    if (p.keyword("ring")) p.fail_at(0, "only one ring declaration is allowed");

    auto declare = [&](LineParser& lp) {
      std::size_t at = lp.token_pos();
      std::string name = lp.identifier();
      if (names.count(name)) lp.fail_at(at, "'" + name + "' is already defined");
      if (spec.ring->index_of(name) >= 0) lp.fail_at(at, "'" + name + "' clashes with a ring variable");
      names[name] = line.number;
      return name;
    };
    auto ideal_ref = [&](LineParser& lp) {
      lp.skip_ws();
      std::size_t at = lp.pos();
      std::string name = lp.identifier();
      bool is_ideal = std::any_of(spec.ideals.begin(), spec.ideals.end(),
                                  [&](const IdealBinding& b) { return b.name == name; });
      if (!is_ideal) lp.fail_at(at, "unknown identifier '" + name + "' (not a declared ideal)");
      return name;
    };

    if (p.keyword("ideal")) {
      IdealBinding b;
      b.name = declare(p);
      p.expect('=');
      std::size_t mark = p.pos();
      IdealExpr::Kind op = IdealExpr::Kind::Generators;
      if (p.keyword("intersect")) op = IdealExpr::Kind::Intersect;
      else if (p.keyword("sum")) op = IdealExpr::Kind::Sum;
      else if (p.keyword("product")) op = IdealExpr::Kind::Product;
      else if (p.keyword("power")) op = IdealExpr::Kind::Power;
      if (op != IdealExpr::Kind::Generators && p.peek() != '(') {
        // A variable that happens to share the keyword's name.
        op = IdealExpr::Kind::Generators;
        p.set_pos(mark);
      }
      b.expr.kind = op;
      if (op == IdealExpr::Kind::Generators) {
        b.expr.generators = p.polynomial_list();
        std::erase_if(b.expr.generators, [](const Polynomial& g) { return g.is_zero(); });
      } else {
        p.expect('(');
        b.expr.lhs = ideal_ref(p);
        p.expect(',');
        if (op == IdealExpr::Kind::Power) {
          b.expr.exponent = p.small_natural();
        } else {
          b.expr.rhs = ideal_ref(p);
        }
        p.expect(')');
      }
      p.expect_end();
      spec.ideals.push_back(std::move(b));
    } else if (p.keyword("quotient")) {
      if (!p.keyword("by")) p.fail("expected 'by'");
      if (spec.quotient) p.fail_at(0, "only one quotient declaration is allowed");
      spec.quotient = ideal_ref(p);
      p.expect_end();
    } else if (p.keyword("param")) {
      ParamBinding b;
      b.name = declare(p);
      p.expect('=');
      b.elements = p.polynomial_list();
      p.expect_end();
      spec.params.push_back(std::move(b));
    } else if (p.keyword("assume")) {
      if (p.keyword("unmixed")) {
        p.expect('=');
        if (p.keyword("true")) spec.unmixed = true;
        else if (p.keyword("false")) spec.unmixed = false;
        else p.fail("expected true or false");
      } else if (p.keyword("h")) {
        p.expect('=');
        p.expect('[');
        std::vector<std::int64_t> h;
        if (!p.accept(']')) {
          do h.push_back(static_cast<std::int64_t>(p.small_natural()));
          while (p.accept(','));
          p.expect(']');
        }
        spec.h = std::move(h);
      } else {
        p.fail("expected 'unmixed' or 'h'");
      }
      p.expect_end();
    } else {
      p.fail("unknown statement (expected ideal, quotient, param or assume)");
    }
  }
  return spec;
}

Ideal SessionSpec::ideal(const std::string& name) const {
  auto it = std::find_if(ideals.begin(), ideals.end(), [&](const IdealBinding& b) { return b.name == name; });
  if (it == ideals.end()) throw Error("unknown ideal '" + name + "'");
  const IdealExpr& e = it->expr;
  switch (e.kind) {
    case IdealExpr::Kind::Generators: return Ideal(ring, e.generators);
    case IdealExpr::Kind::Intersect: return ideal_intersect(ideal(e.lhs), ideal(e.rhs));
    case IdealExpr::Kind::Sum: return ideal_sum(ideal(e.lhs), ideal(e.rhs));
    case IdealExpr::Kind::Product: return ideal_product(ideal(e.lhs), ideal(e.rhs));
    case IdealExpr::Kind::Power: return ideal_power(ideal(e.lhs), e.exponent);
  }
  throw Error("bad ideal expression");
}

Ideal SessionSpec::defining_ideal() const { return quotient ? ideal(*quotient) : Ideal(ring); }

std::vector<Ideal> SessionSpec::components() const {
  if (!quotient) return {Ideal(ring)};
  std::vector<Ideal> out;
  std::function<void(const std::string&)> walk = [&](const std::string& name) {
    auto it = std::find_if(ideals.begin(), ideals.end(), [&](const IdealBinding& b) { return b.name == name; });
    if (it->expr.kind == IdealExpr::Kind::Intersect) {
      walk(it->expr.lhs);
      walk(it->expr.rhs);
    } else {
      out.push_back(ideal(name));
    }
  };
  walk(*quotient);
  return out;
}

const ParamBinding& SessionSpec::param(const std::optional<std::string>& name) const {
  if (params.empty()) throw Error("the session declares no parameter system");
  if (!name) return params.front();
  for (const auto& p : params)
    if (p.name == *name) return p;
  throw Error("unknown parameter system '" + *name + "'");
}

bool operator==(const SessionSpec& a, const SessionSpec& b) {
  bool rings = (a.ring == b.ring) || (a.ring && b.ring && *a.ring == *b.ring);
  return rings && a.ideals == b.ideals && a.quotient == b.quotient && a.params == b.params &&
         a.unmixed == b.unmixed && a.h == b.h;
}

namespace {

std::string join_polys(const std::vector<Polynomial>& ps) {
  std::string s;
  for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? ", " : "") + ps[i].to_string();
  return s.empty() ? "0" : s;
}

}  // namespace

std::string print_session(const SessionSpec& spec) {
  std::string out = "ring " + spec.ring->to_string() + "\n";
  for (const auto& b : spec.ideals) {
    out += "ideal " + b.name + " = ";
    switch (b.expr.kind) {
      case IdealExpr::Kind::Generators: out += join_polys(b.expr.generators); break;
      case IdealExpr::Kind::Intersect: out += "intersect(" + b.expr.lhs + ", " + b.expr.rhs + ")"; break;
      case IdealExpr::Kind::Sum: out += "sum(" + b.expr.lhs + ", " + b.expr.rhs + ")"; break;
      case IdealExpr::Kind::Product: out += "product(" + b.expr.lhs + ", " + b.expr.rhs + ")"; break;
      case IdealExpr::Kind::Power: out += "power(" + b.expr.lhs + ", " + std::to_string(b.expr.exponent) + ")"; break;
    }
    out += "\n";
  }
  if (spec.quotient) out += "quotient by " + *spec.quotient + "\n";
  for (const auto& p : spec.params) out += "param " + p.name + " = " + join_polys(p.elements) + "\n";
  if (spec.unmixed) out += std::string("assume unmixed = ") + (*spec.unmixed ? "true" : "false") + "\n";
  if (spec.h) {
    out += "assume h = [";
    for (std::size_t i = 0; i < spec.h->size(); ++i) out += (i ? ", " : "") + std::to_string((*spec.h)[i]);
    out += "]\n";
  }
  return out;
}

}  // namespace chern
