#include "chern/monomial.hpp"

#include <algorithm>

#include "chern/error.hpp"

namespace chern {

namespace {

void check_arity(std::size_t arity) {
  if (arity > kMaxVariables)
    throw Error("at most " + std::to_string(kMaxVariables) + " variables are supported");
}

void check_same_arity(const Monomial& a, const Monomial& b) {
  if (a.arity() != b.arity()) throw Error("monomial arity mismatch");
}

}  // namespace

Monomial::Monomial(std::size_t arity) : arity_(static_cast<std::uint8_t>(arity)) { check_arity(arity); }

Monomial::Monomial(std::initializer_list<unsigned> exponents)
    : Monomial(std::span<const unsigned>(exponents.begin(), exponents.size())) {}

Monomial::Monomial(std::span<const unsigned> exponents) : Monomial(exponents.size()) {
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] > 0xFFFF) throw Error("exponent too large");
    exps_[i] = static_cast<Exponent>(exponents[i]);
    degree_ += exponents[i];
  }
}

Monomial Monomial::variable(std::size_t arity, std::size_t index, unsigned power) {
  Monomial m(arity);
  m.exps_[index] = static_cast<Exponent>(power);
  m.degree_ = power;
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < arity_; ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  check_same_arity(*this, other);
  Monomial r(*this);
  for (std::size_t i = 0; i < arity_; ++i) {
    unsigned e = unsigned(exps_[i]) + other.exps_[i];
    if (e > 0xFFFF) throw Error("exponent overflow");
    r.exps_[i] = static_cast<Exponent>(e);
  }
  r.degree_ += other.degree_;
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < arity_; ++i) r.exps_[i] = static_cast<Exponent>(exps_[i] - other.exps_[i]);
  r.degree_ -= other.degree_;
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r(arity_);
  for (std::size_t i = 0; i < arity_; ++i) {
    r.exps_[i] = std::max(exps_[i], other.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < arity_; ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

Monomial Monomial::embed(std::size_t new_arity, std::size_t offset) const {
  Monomial r(new_arity);
  for (std::size_t i = 0; i < arity_; ++i) {
    if (exps_[i] == 0) continue;
    if (offset + i >= new_arity) throw Error("cannot drop a variable that occurs in a monomial");
    r.exps_[offset + i] = exps_[i];
    r.degree_ += exps_[i];
  }
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = arity_;
  for (std::size_t i = 0; i < arity_; ++i) h = h * 1000003u ^ exps_[i];
  return h;
}

MonomialOrder MonomialOrder::block(std::size_t elim_count, MonomialOrder front, MonomialOrder back) {
  MonomialOrder o(Kind::Block);
  o.elim_count_ = elim_count;
  o.front_ = std::make_shared<const MonomialOrder>(std::move(front));
  o.back_ = std::make_shared<const MonomialOrder>(std::move(back));
  return o;
}

Ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.arity() != b.arity()) throw Error("monomial arity mismatch in comparison");
  return compare_range(a, b, 0, a.arity());
}

Ordering MonomialOrder::compare_range(const Monomial& a, const Monomial& b, std::size_t lo,
                                      std::size_t hi) const {
  switch (kind_) {
    case Kind::Lex:
      for (std::size_t i = lo; i < hi; ++i)
        if (a[i] != b[i]) return a[i] > b[i] ? Ordering::greater : Ordering::less;
      return Ordering::equal;
    case Kind::DegRevLex: {
      unsigned da = 0, db = 0;
      if (lo == 0 && hi == a.arity()) {
        da = a.degree();
        db = b.degree();
      } else {
        for (std::size_t i = lo; i < hi; ++i) {
          da += a[i];
          db += b[i];
        }
      }
      if (da != db) return da > db ? Ordering::greater : Ordering::less;
      for (std::size_t i = hi; i-- > lo;)
        if (a[i] != b[i]) return a[i] < b[i] ? Ordering::greater : Ordering::less;
      return Ordering::equal;
    }
    case Kind::Block: {
      std::size_t mid = std::min(hi, lo + elim_count_);
      Ordering r = front_->compare_range(a, b, lo, mid);
      if (r != Ordering::equal) return r;
      return back_->compare_range(a, b, mid, hi);
    }
  }
  return Ordering::equal;
}

std::string MonomialOrder::key() const {
  switch (kind_) {
    case Kind::Lex: return "lex";
    case Kind::DegRevLex: return "degrevlex";
    case Kind::Block:
      return "block(" + std::to_string(elim_count_) + "," + front_->key() + "," + back_->key() + ")";
  }
  return {};
}

}  // namespace chern
