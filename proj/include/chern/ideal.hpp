#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "chern/groebner.hpp"
#include "chern/polynomial.hpp"

namespace chern {

/// Ideal given by generators, with a per-order cache of reduced Gröbner bases.
///
/// Copies share the cache. The cache is write-once per order: concurrent
/// fills may both compute, but both produce the same canonical basis and the
/// first stored one wins.
class Ideal {
 public:
  explicit Ideal(RingPtr ring);
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  static Ideal unit(RingPtr ring);
  /// (x_0, ..., x_{n-1})
  static Ideal maximal(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }

  const std::vector<Polynomial>& groebner_basis(const MonomialOrder& ord = MonomialOrder::degrevlex()) const;
  Polynomial normal_form(const Polynomial& f, const MonomialOrder& ord = MonomialOrder::degrevlex()) const;
  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }
  bool contains(const Ideal& other) const;
  bool is_unit() const;
  bool is_homogeneous() const;
  unsigned max_generator_degree() const;

  /// Minimal generators of the leading-term ideal under `ord`.
  std::vector<Monomial> leading_monomials(const MonomialOrder& ord = MonomialOrder::degrevlex()) const;

  /// Same ideal by reduced Gröbner basis.
  friend bool operator==(const Ideal& a, const Ideal& b);

  std::string to_string() const;

 private:
  struct Cache {
    std::mutex mutex;
    std::map<std::string, std::shared_ptr<const std::vector<Polynomial>>> bases;
  };

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
/// I^n, generated by all products of n generators; I^0 = (1).
Ideal ideal_power(const Ideal& ideal, unsigned n);
/// I ∩ J by eliminating t from t·I + (1 - t)·J.
Ideal ideal_intersect(const Ideal& a, const Ideal& b);
/// I ∩ J ∩ ... for a nonempty list.
Ideal ideal_intersect(const std::vector<Ideal>& ideals);
/// (I : f) = (I ∩ (f)) / f
Ideal ideal_quotient(const Ideal& ideal, const Polynomial& f);
/// (I : J) = ∩_g (I : g) over generators g of J.
Ideal ideal_quotient(const Ideal& ideal, const Ideal& by);

struct Saturation {
  Ideal ideal;
  unsigned steps;
};

inline constexpr unsigned kMaxSaturationSteps = 64;

/// (I : J^∞) by iterating ideal quotients until stable. `steps` counts the
/// quotients taken, including the final one that confirmed stability.
Saturation saturate(const Ideal& ideal, const Ideal& by);

/// Generators of I ∩ k[x_k, ..., x_{n-1}] expressed in the subring on the
/// trailing variables; `eliminate` leading variables are removed.
Ideal eliminate_leading(const Ideal& ideal, std::size_t eliminate, RingPtr target);

}  // namespace chern
