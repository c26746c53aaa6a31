#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <string>
#include <variant>

namespace chern {

/// Coefficient field of a polynomial ring: the rationals or F_p.
struct FieldDescriptor {
  enum class Kind { Rational, Prime };

  Kind kind = Kind::Rational;
  std::uint32_t modulus = 0;  // only meaningful for Kind::Prime

  static FieldDescriptor rationals() { return {}; }
  static FieldDescriptor prime(std::uint32_t p);

  bool is_rational() const { return kind == Kind::Rational; }
  std::string name() const;  // "QQ" or "Fp<p>"

  friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;
};

bool is_prime(std::uint64_t n);

inline constexpr std::uint32_t kDefaultPrime = 32003;

/// Residue class modulo a prime; value always lies in [0, modulus).
struct Residue {
  std::uint32_t value = 0;
  std::uint32_t modulus = 0;
  friend bool operator==(const Residue&, const Residue&) = default;
};

/// Either an exact rational (kept canonical by GMP) or a prime-field residue.
class FieldElement {
 public:
  FieldElement() : rep_(mpq_class(0)) {}
  explicit FieldElement(mpq_class q) : rep_(std::move(q)) { std::get<mpq_class>(rep_).canonicalize(); }
  explicit FieldElement(Residue r) : rep_(r) {}

  /// The image of an integer in the given field.
  static FieldElement from_integer(const mpz_class& n, const FieldDescriptor& field);
  static FieldElement zero(const FieldDescriptor& field) { return from_integer(0, field); }
  static FieldElement one(const FieldDescriptor& field) { return from_integer(1, field); }

  bool is_rational() const { return std::holds_alternative<mpq_class>(rep_); }
  const mpq_class& rational() const { return std::get<mpq_class>(rep_); }
  const Residue& residue() const { return std::get<Residue>(rep_); }

  bool is_zero() const;
  bool is_one() const;

  FieldElement operator-() const;
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement inverse() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b);

  /// Decimal or fraction string, e.g. "-3", "2/7".
  std::string to_string() const;

 private:
  std::variant<mpq_class, Residue> rep_;
};

}  // namespace chern
