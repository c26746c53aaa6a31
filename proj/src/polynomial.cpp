#include "chern/polynomial.hpp"

#include <algorithm>
#include <set>

#include "chern/error.hpp"

namespace chern {

PolyRing::PolyRing(std::vector<std::string> variable_names, FieldDescriptor field)
    : names_(std::move(variable_names)), field_(field) {
  if (names_.size() > kMaxVariables)
    throw Error("at most " + std::to_string(kMaxVariables) + " variables are supported");
  std::set<std::string> seen(names_.begin(), names_.end());
  if (seen.size() != names_.size()) throw Error("variable names must be distinct");
}

int PolyRing::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

std::string PolyRing::to_string() const {
  std::string s = field_.name() + "[";
  for (std::size_t i = 0; i < names_.size(); ++i) s += (i ? "," : "") + names_[i];
  return s + "]";
}

RingPtr make_ring(std::vector<std::string> variable_names, FieldDescriptor field) {
  return std::make_shared<const PolyRing>(std::move(variable_names), field);
}

namespace {

const MonomialOrder& storage_order() {
  static const MonomialOrder ord = MonomialOrder::lex();
  return ord;
}

// Sorts descending and merges like terms.
std::vector<Term> normalize(std::vector<Term> terms, const MonomialOrder& ord) {
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return ord.greater(a.monomial, b.monomial); });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coeff = out.back().coeff + t.coeff;
    } else {
      if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
  return out;
}

}  // namespace

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  for (const auto& t : terms)
    if (t.monomial.arity() != ring_->arity()) throw Error("term arity does not match ring");
  terms_ = normalize(std::move(terms), storage_order());
}

Polynomial Polynomial::constant(RingPtr ring, const mpz_class& value) {
  auto c = FieldElement::from_integer(value, ring->field());
  Monomial one(ring->arity());
  return Polynomial(std::move(ring), {{one, c}});
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->arity()) throw Error("variable index out of range");
  auto m = Monomial::variable(ring->arity(), index);
  auto c = FieldElement::one(ring->field());
  return Polynomial(std::move(ring), {{m, c}});
}

Polynomial Polynomial::term(RingPtr ring, Monomial m, FieldElement c) {
  return Polynomial(std::move(ring), {{m, std::move(c)}});
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }

unsigned Polynomial::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.monomial.degree() != terms_.front().monomial.degree()) return false;
  return true;
}

Term Polynomial::leading_term(const MonomialOrder& ord) const {
  if (is_zero()) throw Error("leading term of the zero polynomial");
  const Term* best = &terms_.front();
  for (const auto& t : terms_)
    if (ord.greater(t.monomial, best->monomial)) best = &t;
  return *best;
}

std::vector<Term> Polynomial::sorted_terms(const MonomialOrder& ord) const {
  std::vector<Term> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(),
            [&](const Term& a, const Term& b) { return ord.greater(a.monomial, b.monomial); });
  return out;
}

void Polynomial::check_ring(const Polynomial& other) const {
  if (ring_ != other.ring_ && !(*ring_ == *other.ring_)) {
    if (ring_->field() != other.ring_->field()) throw Error("field mismatch between polynomials");
    throw Error("polynomials belong to different rings");
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.monomial, -t.coeff});
  return r;
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
  p.check_ring(q);
  const auto& ord = storage_order();
  Polynomial r(p.ring_);
  r.terms_.reserve(p.terms_.size() + q.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < p.terms_.size() && j < q.terms_.size()) {
    Ordering c = ord.compare(p.terms_[i].monomial, q.terms_[j].monomial);
    if (c == Ordering::greater) {
      r.terms_.push_back(p.terms_[i++]);
    } else if (c == Ordering::less) {
      r.terms_.push_back(q.terms_[j++]);
    } else {
      FieldElement s = p.terms_[i].coeff + q.terms_[j].coeff;
      if (!s.is_zero()) r.terms_.push_back({p.terms_[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  r.terms_.insert(r.terms_.end(), p.terms_.begin() + i, p.terms_.end());
  r.terms_.insert(r.terms_.end(), q.terms_.begin() + j, q.terms_.end());
  return r;
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) { return p + (-q); }

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  p.check_ring(q);
  std::vector<Term> prod;
  prod.reserve(p.terms_.size() * q.terms_.size());
  for (const auto& a : p.terms_)
    for (const auto& b : q.terms_) prod.push_back({a.monomial * b.monomial, a.coeff * b.coeff});
  Polynomial r(p.ring_);
  r.terms_ = normalize(std::move(prod), storage_order());
  return r;
}

Polynomial Polynomial::scale(const FieldElement& c) const {
  Polynomial r(ring_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.monomial, t.coeff * c});
  return r;
}

Polynomial Polynomial::mul_term(const Monomial& m, const FieldElement& c) const {
  Polynomial r(ring_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  // Multiplication by a monomial preserves any monomial order.
  for (const auto& t : terms_) r.terms_.push_back({t.monomial * m, t.coeff * c});
  return r;
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic(const MonomialOrder& ord) const {
  if (is_zero()) return *this;
  return scale(leading_term(ord).coeff.inverse());
}

Polynomial Polynomial::embed(RingPtr target, std::size_t offset) const {
  if (target->field() != ring_->field()) throw Error("field mismatch when changing rings");
  std::vector<Term> ts;
  ts.reserve(terms_.size());
  for (const auto& t : terms_) ts.push_back({t.monomial.embed(target->arity(), offset), t.coeff});
  return Polynomial(std::move(target), std::move(ts));
}

bool operator==(const Polynomial& p, const Polynomial& q) {
  if (p.terms_.size() != q.terms_.size()) return false;
  for (std::size_t i = 0; i < p.terms_.size(); ++i)
    if (!(p.terms_[i].monomial == q.terms_[i].monomial) || !(p.terms_[i].coeff == q.terms_[i].coeff))
      return false;
  return p.ring_ == q.ring_ || *p.ring_ == *q.ring_;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : sorted_terms(MonomialOrder::degrevlex())) {
    std::string c = t.coeff.to_string();
    bool negative = !c.empty() && c[0] == '-';
    if (negative) c.erase(0, 1);
    if (first) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < ring_->arity(); ++i) {
      unsigned e = t.monomial[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_->variable_names()[i];
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += c;
    } else if (c == "1") {
      out += mono;
    } else {
      out += c + "*" + mono;
    }
  }
  return out;
}

}  // namespace chern
