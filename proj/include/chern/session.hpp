#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chern/error.hpp"
#include "chern/ideal.hpp"

namespace chern {

/// Syntax or name-resolution error in a session file, with 1-based position.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

struct IdealExpr {
  enum class Kind { Generators, Intersect, Sum, Product, Power };

  Kind kind = Kind::Generators;
  std::vector<Polynomial> generators;  // Kind::Generators
  std::string lhs, rhs;                // operands by name
  unsigned exponent = 0;               // Kind::Power

  friend bool operator==(const IdealExpr&, const IdealExpr&) = default;
};

struct IdealBinding {
  std::string name;
  IdealExpr expr;
  friend bool operator==(const IdealBinding&, const IdealBinding&) = default;
};

struct ParamBinding {
  std::string name;
  std::vector<Polynomial> elements;
  friend bool operator==(const ParamBinding&, const ParamBinding&) = default;
};

/// A parsed `.ch` session: one ring, named ideals, an optional quotient,
/// named parameter systems and caller assertions.
struct SessionSpec {
  RingPtr ring;
  std::vector<IdealBinding> ideals;
  std::optional<std::string> quotient;
  std::vector<ParamBinding> params;
  std::optional<bool> unmixed;
  std::optional<std::vector<std::int64_t>> h;

  /// Evaluates a named ideal expression.
  Ideal ideal(const std::string& name) const;
  /// The ideal I with R = S/I; the zero ideal without a `quotient by` line.
  Ideal defining_ideal() const;
  /// Leaves of the intersection tree behind the quotient ideal, or the
  /// defining ideal alone when it is not an intersection.
  std::vector<Ideal> components() const;
  /// A parameter system by name, or the first declared one.
  const ParamBinding& param(const std::optional<std::string>& name = std::nullopt) const;

  friend bool operator==(const SessionSpec& a, const SessionSpec& b);
};

/// Grammar, one statement per line, `#` starts a comment:
///   ring QQ[x,y,...] | ring Fp<prime>[x,...]
///   ideal NAME = poly, poly, ...
///   ideal NAME = intersect(A, B) | sum(A, B) | product(A, B) | power(A, n)
///   quotient by NAME
///   param NAME = poly, poly, ...
///   assume unmixed = true|false
///   assume h = [n0, n1, ...]
/// Polynomials use integers, variables, + - * ^ and parentheses.
SessionSpec parse_session(std::string_view text);

/// Canonical text that parses back to an equal SessionSpec.
std::string print_session(const SessionSpec& spec);

}  // namespace chern
