#include "chern/field.hpp"

#include "chern/error.hpp"

#include <utility>

namespace chern {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldDescriptor FieldDescriptor::prime(std::uint32_t p) {
  if (!is_prime(p)) throw Error("field modulus " + std::to_string(p) + " is not prime");
  if (p >= (1u << 31)) throw Error("field modulus must be below 2^31");
  return {Kind::Prime, p};
}

std::string FieldDescriptor::name() const {
  return is_rational() ? "QQ" : "Fp" + std::to_string(modulus);
}

namespace {

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

void check_same_modulus(const Residue& a, const Residue& b) {
  if (a.modulus != b.modulus) throw Error("prime field modulus mismatch");
}

[[noreturn]] void field_mismatch() { throw Error("field mismatch: rational and prime-field coefficients mixed"); }

}  // namespace

FieldElement FieldElement::from_integer(const mpz_class& n, const FieldDescriptor& field) {
  if (field.is_rational()) return FieldElement(mpq_class(n));
  mpz_class r = n % field.modulus;
  if (r < 0) r += field.modulus;
  return FieldElement(Residue{static_cast<std::uint32_t>(r.get_ui()), field.modulus});
}

bool FieldElement::is_zero() const {
  return is_rational() ? sgn(rational()) == 0 : residue().value == 0;
}

bool FieldElement::is_one() const {
  return is_rational() ? rational() == 1 : residue().value == 1;
}

FieldElement FieldElement::operator-() const {
  if (is_rational()) return FieldElement(mpq_class(-rational()));
  const Residue& r = residue();
  return FieldElement(Residue{r.value == 0 ? 0 : r.modulus - r.value, r.modulus});
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  if (a.is_rational() != b.is_rational()) field_mismatch();
  if (a.is_rational()) return FieldElement(mpq_class(a.rational() + b.rational()));
  check_same_modulus(a.residue(), b.residue());
  std::uint64_t s = std::uint64_t(a.residue().value) + b.residue().value;
  std::uint32_t p = a.residue().modulus;
  return FieldElement(Residue{static_cast<std::uint32_t>(s % p), p});
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a + (-b); }

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  if (a.is_rational() != b.is_rational()) field_mismatch();
  if (a.is_rational()) return FieldElement(mpq_class(a.rational() * b.rational()));
  check_same_modulus(a.residue(), b.residue());
  std::uint64_t s = std::uint64_t(a.residue().value) * b.residue().value;
  std::uint32_t p = a.residue().modulus;
  return FieldElement(Residue{static_cast<std::uint32_t>(s % p), p});
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error("division by zero");
  if (is_rational()) return FieldElement(mpq_class(1 / rational()));
  return FieldElement(Residue{mod_inverse(residue().value, residue().modulus), residue().modulus});
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }

bool operator==(const FieldElement& a, const FieldElement& b) { return a.rep_ == b.rep_; }

std::string FieldElement::to_string() const {
  if (is_rational()) return rational().get_str();
  return std::to_string(residue().value);
}

}  // namespace chern
