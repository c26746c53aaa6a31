#include "chern/groebner.hpp"

#include <algorithm>
#include <optional>

#include "chern/error.hpp"

namespace chern {

namespace {

// Polynomial with terms sorted descending under the engine's order.
using TermList = std::vector<Term>;

class Reducer {
 public:
  explicit Reducer(const MonomialOrder& ord) : ord_(ord) {}

  // f - c * m * g, all lists sorted under ord_.
  void sub_mul(TermList& f, const FieldElement& c, const Monomial& m, const TermList& g, std::size_t f_from) {
    scratch_.clear();
    scratch_.reserve(f.size() + g.size());
    std::size_t i = f_from, j = 0;
    while (i < f.size() && j < g.size()) {
      Monomial gm = g[j].monomial * m;
      Ordering cmp = ord_.compare(f[i].monomial, gm);
      if (cmp == Ordering::greater) {
        scratch_.push_back(std::move(f[i++]));
      } else if (cmp == Ordering::less) {
        scratch_.push_back({gm, -(c * g[j].coeff)});
        ++j;
      } else {
        FieldElement s = f[i].coeff - c * g[j].coeff;
        if (!s.is_zero()) scratch_.push_back({gm, std::move(s)});
        ++i;
        ++j;
      }
    }
    for (; i < f.size(); ++i) scratch_.push_back(std::move(f[i]));
    for (; j < g.size(); ++j) scratch_.push_back({g[j].monomial * m, -(c * g[j].coeff)});
    f.resize(f_from);
    f.insert(f.end(), std::make_move_iterator(scratch_.begin()), std::make_move_iterator(scratch_.end()));
  }

  // Full reduction of f by the lists in `basis`. Returns the remainder.
  TermList reduce(TermList f, const std::vector<const TermList*>& basis) {
    // Terms [0, done) of f are irreducible and final.
    std::size_t done = 0;
    while (done < f.size()) {
      const Monomial& lm = f[done].monomial;
      const TermList* divisor = nullptr;
      for (const TermList* g : basis) {
        if (!g->empty() && (*g)[0].monomial.divides(lm)) {
          divisor = g;
          break;
        }
      }
      if (!divisor) {
        ++done;
        continue;
      }
      FieldElement c = f[done].coeff / (*divisor)[0].coeff;
      Monomial m = lm / (*divisor)[0].monomial;
      sub_mul(f, c, m, *divisor, done);
    }
    return f;
  }

 private:
  const MonomialOrder& ord_;
  TermList scratch_;
};

void make_monic(TermList& f) {
  if (f.empty() || f[0].coeff.is_one()) return;
  FieldElement inv = f[0].coeff.inverse();
  for (auto& t : f) t.coeff = t.coeff * inv;
}

TermList spoly(const TermList& f, const TermList& g, const MonomialOrder& ord) {
  Monomial l = f[0].monomial.lcm(g[0].monomial);
  Reducer red(ord);
  TermList r;
  // (l / lm f) * f / lc f - (l / lm g) * g / lc g
  FieldElement cf = f[0].coeff.inverse();
  Monomial mf = l / f[0].monomial;
  r.reserve(f.size());
  for (const auto& t : f) r.push_back({t.monomial * mf, t.coeff * cf});
  red.sub_mul(r, g[0].coeff.inverse(), l / g[0].monomial, g, 0);
  return r;
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

class Buchberger {
 public:
  explicit Buchberger(const MonomialOrder& ord, DegreeStop enough = {})
      : ord_(ord), reducer_(ord), enough_(std::move(enough)) {}

  std::optional<unsigned> stopped_at() const { return stopped_at_; }

  std::vector<Monomial> leading() const {
    std::vector<Monomial> out;
    for (std::size_t k = 0; k < basis_.size(); ++k)
      if (!redundant_[k]) out.push_back(basis_[k][0].monomial);
    return out;
  }

  // Runs to completion, or until the degree hook asks to stop.
  bool saturate_pairs(std::vector<TermList> input) {
    for (auto& f : input) {
      if (f.empty()) continue;
      std::vector<const TermList*> view = basis_view();
      TermList h = reducer_.reduce(std::move(f), view);
      if (h.empty()) continue;
      make_monic(h);
      insert(std::move(h));
    }
    unsigned finished = 0;
    while (!pairs_.empty()) {
      auto it = select_pair();
      if (enough_ && it->lcm.degree() > finished) {
        // every pair of degree <= next - 1 has been treated
        const unsigned next = it->lcm.degree();
        if (next > 0 && enough_(next - 1, leading())) {
          stopped_at_ = next - 1;
          return false;
        }
        finished = next;
      }
      Pair p = *it;
      pairs_.erase(it);
      TermList s = spoly(basis_[p.i], basis_[p.j], ord_);
      if (s.empty()) continue;
      TermList h = reducer_.reduce(std::move(s), basis_view());
      if (h.empty()) continue;
      make_monic(h);
      insert(std::move(h));
    }
    return true;
  }

  std::vector<TermList> run(std::vector<TermList> input) {
    saturate_pairs(std::move(input));
    return finalize();
  }

 private:
  std::vector<const TermList*> basis_view() const {
    std::vector<const TermList*> v;
    v.reserve(basis_.size());
    for (std::size_t k = 0; k < basis_.size(); ++k)
      if (!redundant_[k]) v.push_back(&basis_[k]);
    return v;
  }

  // Normal strategy: smallest lcm degree, then smallest lcm under the order.
  std::vector<Pair>::iterator select_pair() {
    auto best = pairs_.begin();
    for (auto it = pairs_.begin() + 1; it != pairs_.end(); ++it) {
      if (it->lcm.degree() < best->lcm.degree() ||
          (it->lcm.degree() == best->lcm.degree() && ord_.less(it->lcm, best->lcm)))
        best = it;
    }
    return best;
  }

  // Gebauer–Möller update with the new element h.
  void insert(TermList h) {
    const std::size_t hi = basis_.size();
    const Monomial lh = h[0].monomial;

    std::vector<Pair> candidates;
    for (std::size_t k = 0; k < hi; ++k)
      if (!redundant_[k]) candidates.push_back({k, hi, basis_[k][0].monomial.lcm(lh)});

    // Chain criterion among the new pairs: keep a pair unless another new
    // pair's lcm properly divides it; among equal lcms keep one, preferring a
    // coprime one (which is then dropped by the product criterion).
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const Pair& p = candidates[a];
      bool coprime = basis_[p.i][0].monomial.coprime(lh);
      bool drop = false;
      for (std::size_t b = 0; b < candidates.size() && !drop; ++b) {
        if (a == b) continue;
        const Pair& q = candidates[b];
        if (!q.lcm.divides(p.lcm)) continue;
        if (!(q.lcm == p.lcm)) {
          drop = true;
        } else if (!coprime) {
          bool q_coprime = basis_[q.i][0].monomial.coprime(lh);
          if (q_coprime || b < a) drop = true;
        }
      }
      if (!drop) kept.push_back(p);
    }
    // Product criterion.
    std::erase_if(kept, [&](const Pair& p) { return basis_[p.i][0].monomial.coprime(lh); });

    // Old pairs made redundant by h.
    std::erase_if(pairs_, [&](const Pair& p) {
      if (!lh.divides(p.lcm)) return false;
      Monomial l1 = basis_[p.i][0].monomial.lcm(lh);
      Monomial l2 = basis_[p.j][0].monomial.lcm(lh);
      return !(l1 == p.lcm) && !(l2 == p.lcm);
    });
    pairs_.insert(pairs_.end(), kept.begin(), kept.end());

    for (std::size_t k = 0; k < hi; ++k)
      if (!redundant_[k] && lh.divides(basis_[k][0].monomial)) redundant_[k] = true;
    basis_.push_back(std::move(h));
    redundant_.push_back(false);
    // Pairs involving a now-redundant element are still valid; they are kept.
  }

  std::vector<TermList> finalize() {
    std::vector<TermList> minimal;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      bool keep = true;
      for (std::size_t l = 0; l < basis_.size() && keep; ++l) {
        if (k == l) continue;
        const Monomial& a = basis_[l][0].monomial;
        const Monomial& b = basis_[k][0].monomial;
        if (a.divides(b) && (!(a == b) || l < k)) keep = false;
      }
      if (keep) minimal.push_back(basis_[k]);
    }
    std::vector<TermList> reduced;
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      std::vector<const TermList*> others;
      for (std::size_t l = 0; l < minimal.size(); ++l)
        if (l != k) others.push_back(&minimal[l]);
      TermList head{minimal[k][0]};
      TermList tail(minimal[k].begin() + 1, minimal[k].end());
      tail = reducer_.reduce(std::move(tail), others);
      head.insert(head.end(), tail.begin(), tail.end());
      make_monic(head);
      reduced.push_back(std::move(head));
    }
    std::sort(reduced.begin(), reduced.end(),
              [&](const TermList& a, const TermList& b) { return ord_.greater(a[0].monomial, b[0].monomial); });
    return reduced;
  }

  const MonomialOrder& ord_;
  Reducer reducer_;
  std::vector<TermList> basis_;
  std::vector<bool> redundant_;
  std::vector<Pair> pairs_;
  DegreeStop enough_;
  std::optional<unsigned> stopped_at_;
};

std::optional<RingPtr> common_ring(std::span<const Polynomial> polys) {
  if (polys.empty()) return std::nullopt;
  for (const auto& p : polys)
    if (!(*p.ring() == *polys[0].ring())) throw Error("generators belong to different rings");
  return polys[0].ring();
}

}  // namespace

namespace {

std::vector<TermList> engine_input(std::span<const Polynomial> generators, const MonomialOrder& ord) {
  std::vector<TermList> input;
  for (const auto& g : generators)
    if (!g.is_zero()) input.push_back(g.sorted_terms(ord));
  // Process low-degree generators first.
  std::stable_sort(input.begin(), input.end(), [&](const TermList& a, const TermList& b) {
    return ord.less(a[0].monomial, b[0].monomial);
  });
  return input;
}

}  // namespace

TruncatedLeading truncated_leading_monomials(std::span<const Polynomial> homogeneous_generators,
                                             const MonomialOrder& ord, const DegreeStop& enough) {
  common_ring(homogeneous_generators);
  for (const auto& g : homogeneous_generators)
    if (!g.is_homogeneous()) throw Error("degree-truncated Gröbner basis needs homogeneous generators");
  Buchberger engine(ord, enough);
  engine.saturate_pairs(engine_input(homogeneous_generators, ord));
  return {engine.leading(), engine.stopped_at()};
}

std::vector<Polynomial> compute_groebner_basis(std::span<const Polynomial> generators, const MonomialOrder& ord) {
  auto ring = common_ring(generators);
  if (!ring) return {};
  auto input = engine_input(generators, ord);
  Buchberger engine(ord);
  std::vector<Polynomial> out;
  for (auto& t : engine.run(std::move(input))) out.emplace_back(*ring, std::move(t));
  return out;
}

Polynomial reduce(const Polynomial& f, std::span<const Polynomial> basis, const MonomialOrder& ord) {
  std::vector<TermList> lists;
  lists.reserve(basis.size());
  for (const auto& g : basis) {
    if (!(*g.ring() == *f.ring())) throw Error("reduction across different rings");
    if (!g.is_zero()) lists.push_back(g.sorted_terms(ord));
  }
  std::vector<const TermList*> view;
  for (const auto& l : lists) view.push_back(&l);
  Reducer red(ord);
  return Polynomial(f.ring(), red.reduce(f.sorted_terms(ord), view));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
  if (f.is_zero() || g.is_zero()) throw Error("S-polynomial of the zero polynomial");
  return Polynomial(f.ring(), spoly(f.sorted_terms(ord), g.sorted_terms(ord), ord));
}

bool satisfies_buchberger_criterion(std::span<const Polynomial> basis, const MonomialOrder& ord) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!reduce(s_polynomial(basis[i], basis[j], ord), basis, ord).is_zero()) return false;
  return true;
}

Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw Error("division by the zero polynomial");
  const MonomialOrder ord = MonomialOrder::degrevlex();
  TermList rem = f.sorted_terms(ord);
  TermList div = g.sorted_terms(ord);
  std::vector<Term> quotient;
  Reducer red(ord);
  while (!rem.empty()) {
    if (!div[0].monomial.divides(rem[0].monomial)) throw Error("polynomial division is not exact");
    FieldElement c = rem[0].coeff / div[0].coeff;
    Monomial m = rem[0].monomial / div[0].monomial;
    quotient.push_back({m, c});
    red.sub_mul(rem, c, m, div, 0);
  }
  return Polynomial(f.ring(), std::move(quotient));
}

}  // namespace chern
