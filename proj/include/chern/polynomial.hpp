#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "chern/field.hpp"
#include "chern/monomial.hpp"

namespace chern {

/// k[x_0, ..., x_{n-1}] with named variables.
class PolyRing {
 public:
  PolyRing(std::vector<std::string> variable_names, FieldDescriptor field);

  std::size_t arity() const { return names_.size(); }
  const std::vector<std::string>& variable_names() const { return names_; }
  const FieldDescriptor& field() const { return field_; }
  /// Index of a variable, or -1.
  int index_of(const std::string& name) const;

  /// e.g. "QQ[x,y,z,w]"
  std::string to_string() const;

  friend bool operator==(const PolyRing&, const PolyRing&) = default;

 private:
  std::vector<std::string> names_;
  FieldDescriptor field_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(std::vector<std::string> variable_names, FieldDescriptor field = FieldDescriptor::rationals());

struct Term {
  Monomial monomial;
  FieldElement coeff;
};

/// Immutable sparse polynomial. Terms are kept sorted by descending lex order
/// with no zero coefficients, so equality is structural.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  /// Combines like terms and drops zeros.
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial constant(RingPtr ring, const mpz_class& value);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial term(RingPtr ring, Monomial m, FieldElement c);

  const RingPtr& ring() const { return ring_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  unsigned total_degree() const;
  bool is_homogeneous() const;
  bool is_monomial() const { return terms_.size() == 1; }

  /// Order-maximal term; throws on the zero polynomial.
  Term leading_term(const MonomialOrder& ord) const;
  /// Terms sorted descending under `ord`.
  std::vector<Term> sorted_terms(const MonomialOrder& ord) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator-(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
  Polynomial scale(const FieldElement& c) const;
  Polynomial mul_term(const Monomial& m, const FieldElement& c) const;
  Polynomial pow(unsigned n) const;
  /// Divides by the leading coefficient under `ord`.
  Polynomial monic(const MonomialOrder& ord) const;

  /// Same polynomial viewed in `target`, old variable i becoming variable
  /// offset+i. Field must agree; variables dropped must not occur.
  Polynomial embed(RingPtr target, std::size_t offset) const;

  /// Readable form with terms in descending degrevlex order, e.g. "x^2 - 2*x*y + 3".
  std::string to_string() const;

  friend bool operator==(const Polynomial& p, const Polynomial& q);

 private:
  void check_ring(const Polynomial& other) const;
  RingPtr ring_;
  std::vector<Term> terms_;
};

}  // namespace chern
