#include "chern/ideal.hpp"

#include <algorithm>

#include "chern/error.hpp"

namespace chern {

Ideal::Ideal(RingPtr ring) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {}

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators) : Ideal(std::move(ring)) {
  for (auto& g : generators) {
    if (!(*g.ring() == *ring_)) throw Error("generator does not belong to the ideal's ring");
    if (g.is_zero()) continue;
    if (std::find(gens_.begin(), gens_.end(), g) == gens_.end()) gens_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(RingPtr ring) {
  auto one = Polynomial::constant(ring, 1);
  return Ideal(std::move(ring), {one});
}

Ideal Ideal::maximal(RingPtr ring) {
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < ring->arity(); ++i) vars.push_back(Polynomial::variable(ring, i));
  return Ideal(std::move(ring), std::move(vars));
}

const std::vector<Polynomial>& Ideal::groebner_basis(const MonomialOrder& ord) const {
  const std::string key = ord.key();
  {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->bases.find(key);
    if (it != cache_->bases.end()) return *it->second;
  }
  auto gb = std::make_shared<const std::vector<Polynomial>>(compute_groebner_basis(gens_, ord));
  std::lock_guard lock(cache_->mutex);
  auto [it, inserted] = cache_->bases.emplace(key, std::move(gb));
  return *it->second;
}

Polynomial Ideal::normal_form(const Polynomial& f, const MonomialOrder& ord) const {
  return reduce(f, groebner_basis(ord), ord);
}

bool Ideal::contains(const Ideal& other) const {
  return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const Polynomial& g) { return contains(g); });
}

bool Ideal::is_unit() const {
  const auto& gb = groebner_basis();
  return gb.size() == 1 && gb[0].is_constant();
}

bool Ideal::is_homogeneous() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.is_homogeneous(); });
}

unsigned Ideal::max_generator_degree() const {
  unsigned d = 0;
  for (const auto& g : gens_) d = std::max(d, g.total_degree());
  return d;
}

std::vector<Monomial> Ideal::leading_monomials(const MonomialOrder& ord) const {
  std::vector<Monomial> out;
  for (const auto& g : groebner_basis(ord)) out.push_back(g.leading_term(ord).monomial);
  return out;
}

bool operator==(const Ideal& a, const Ideal& b) {
  if (!(*a.ring_ == *b.ring_)) return false;
  return a.groebner_basis() == b.groebner_basis();
}

std::string Ideal::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) s += (i ? ", " : "") + gens_[i].to_string();
  return s + ")";
}

namespace {

void check_same_ring(const Ideal& a, const Ideal& b) {
  if (!(*a.ring() == *b.ring())) throw Error("ideals belong to different rings");
}

}  // namespace

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  std::vector<Polynomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) gens.push_back(f * g);
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_power(const Ideal& ideal, unsigned n) {
  if (n == 0) return Ideal::unit(ideal.ring());
  const auto& gens = ideal.generators();
  std::vector<Polynomial> out;
  // Products over multisets: nondecreasing index sequences of length n.
  std::vector<std::size_t> idx(n, 0);
  if (gens.empty()) return Ideal(ideal.ring());
  // Powers of each generator are reused along the sequence.
  while (true) {
    Polynomial p = Polynomial::constant(ideal.ring(), 1);
    std::size_t k = 0;
    while (k < n) {
      std::size_t run = k;
      while (run < n && idx[run] == idx[k]) ++run;
      p = p * gens[idx[k]].pow(static_cast<unsigned>(run - k));
      k = run;
    }
    out.push_back(std::move(p));
    std::size_t pos = n;
    while (pos > 0 && idx[pos - 1] == gens.size() - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t r = pos; r < n; ++r) idx[r] = idx[pos - 1];
  }
  return Ideal(ideal.ring(), std::move(out));
}

Ideal eliminate_leading(const Ideal& ideal, std::size_t eliminate, RingPtr target) {
  const std::size_t rest = ideal.ring()->arity() - eliminate;
  if (target->arity() != rest) throw Error("elimination target ring has the wrong arity");
  auto ord = MonomialOrder::block(eliminate, MonomialOrder::degrevlex(), MonomialOrder::degrevlex());
  std::vector<Polynomial> kept;
  for (const auto& g : ideal.groebner_basis(ord)) {
    bool free = true;
    for (const auto& t : g.terms())
      for (std::size_t v = 0; v < eliminate && free; ++v)
        if (t.monomial[v] != 0) free = false;
    if (!free) continue;
    std::vector<Term> ts;
    for (const auto& t : g.terms()) {
      std::vector<unsigned> e(rest);
      for (std::size_t v = 0; v < rest; ++v) e[v] = t.monomial[eliminate + v];
      ts.push_back({Monomial(std::span<const unsigned>(e)), t.coeff});
    }
    kept.emplace_back(target, std::move(ts));
  }
  return Ideal(std::move(target), std::move(kept));
}

Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  const RingPtr& ring = a.ring();
  if (a.is_zero() || b.is_zero()) return Ideal(ring);
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  // Auxiliary variable placed first so a block order eliminates it.
  std::vector<std::string> names{"_t"};
  for (const auto& n : ring->variable_names()) {
    if (n == "_t") throw Error("variable name _t is reserved");
    names.push_back(n);
  }
  auto ext = make_ring(names, ring->field());
  auto t = Polynomial::variable(ext, 0);
  auto one_minus_t = Polynomial::constant(ext, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) gens.push_back(t * f.embed(ext, 1));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * g.embed(ext, 1));
  return eliminate_leading(Ideal(ext, std::move(gens)), 1, ring);
}

Ideal ideal_intersect(const std::vector<Ideal>& ideals) {
  if (ideals.empty()) throw Error("intersection of an empty list of ideals");
  Ideal acc = ideals.front();
  for (std::size_t i = 1; i < ideals.size(); ++i) acc = ideal_intersect(acc, ideals[i]);
  return acc;
}

Ideal ideal_quotient(const Ideal& ideal, const Polynomial& f) {
  if (f.is_zero()) return Ideal::unit(ideal.ring());
  Ideal principal(ideal.ring(), {f});
  Ideal meet = ideal_intersect(ideal, principal);
  std::vector<Polynomial> gens;
  for (const auto& g : meet.generators()) gens.push_back(divide_exact(g, f));
  return Ideal(ideal.ring(), std::move(gens));
}

Ideal ideal_quotient(const Ideal& ideal, const Ideal& by) {
  check_same_ring(ideal, by);
  if (by.is_zero()) return Ideal::unit(ideal.ring());
  std::vector<Ideal> parts;
  for (const auto& g : by.generators()) parts.push_back(ideal_quotient(ideal, g));
  Ideal q = ideal_intersect(parts);
  // Present the result by its reduced Gröbner basis.
  return Ideal(q.ring(), q.groebner_basis());
}

Saturation saturate(const Ideal& ideal, const Ideal& by) {
  Ideal current = ideal;
  for (unsigned step = 1; step <= kMaxSaturationSteps; ++step) {
    Ideal next = ideal_quotient(current, by);
    if (next == current) return {current, step};
    current = std::move(next);
  }
  throw Error("saturation did not stabilize after " + std::to_string(kMaxSaturationSteps) + " quotients");
}

}  // namespace chern
