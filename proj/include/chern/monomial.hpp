#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>

namespace chern {

inline constexpr std::size_t kMaxVariables = 16;

/// Power product x_0^a_0 ... x_{k-1}^a_{k-1} with cached total degree.
///
/// Exponents live in a fixed-capacity inline array so monomials are
/// trivially copyable; slots past `arity()` are always zero.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  /// The unit monomial in `arity` variables.
  explicit Monomial(std::size_t arity);
  Monomial(std::initializer_list<unsigned> exponents);
  explicit Monomial(std::span<const unsigned> exponents);

  static Monomial variable(std::size_t arity, std::size_t index, unsigned power = 1);

  std::size_t arity() const { return arity_; }
  unsigned degree() const { return degree_; }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; requires `other.divides(*this)`.
  Monomial operator/(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  /// Drops or inserts variables: result has `new_arity` slots, with old
  /// variable i placed at `offset + i`.
  Monomial embed(std::size_t new_arity, std::size_t offset) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.arity_ == b.arity_ && a.exps_ == b.exps_;
  }

  std::size_t hash() const;

 private:
  std::array<Exponent, kMaxVariables> exps_{};
  std::uint8_t arity_ = 0;
  unsigned degree_ = 0;
};

enum class Ordering { less = -1, equal = 0, greater = 1 };

/// Global monomial order: lex, degrevlex, or a block order that compares the
/// first `elim_count` variables by `front` and breaks ties on the rest by
/// `back`.
class MonomialOrder {
 public:
  enum class Kind { Lex, DegRevLex, Block };

  static MonomialOrder lex() { return MonomialOrder(Kind::Lex); }
  static MonomialOrder degrevlex() { return MonomialOrder(Kind::DegRevLex); }
  static MonomialOrder block(std::size_t elim_count, MonomialOrder front, MonomialOrder back);

  Kind kind() const { return kind_; }
  std::size_t elim_count() const { return elim_count_; }

  Ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) == Ordering::less; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) == Ordering::greater; }

  /// Degree-compatible orders make homogeneous Buchberger run degree by degree.
  bool is_degree_compatible() const { return kind_ == Kind::DegRevLex; }

  /// Stable textual key, used for GB caches, e.g. "block(1,lex,degrevlex)".
  std::string key() const;

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) { return a.key() == b.key(); }

 private:
  explicit MonomialOrder(Kind k) : kind_(k) {}
  Ordering compare_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) const;

  Kind kind_;
  std::size_t elim_count_ = 0;
  std::shared_ptr<const MonomialOrder> front_;
  std::shared_ptr<const MonomialOrder> back_;
};

}  // namespace chern
