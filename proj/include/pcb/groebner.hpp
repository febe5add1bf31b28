#pragma once

#include "pcb/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace pcb {

struct GroebnerOptions {
  /// When set, ties in the pair selection are broken pseudo-randomly and the
  /// input generators are shuffled. The reduced basis must not change.
  std::optional<std::uint64_t> shuffle_seed;
};

struct GroebnerStats {
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
  std::size_t basis_peak = 0;
};

/// Full reduction of f modulo `basis` (every term reduced).
template <class F>
Polynomial<F> normal_form(const Polynomial<F>& f, const std::vector<const Polynomial<F>*>& basis) {
  using Term = typename Polynomial<F>::Term;
  const F& field = f.field();
  const MonomialOrder& ord = *f.order();
  std::vector<Term> remainder;
  std::vector<Term> h = f.terms();
  std::vector<Term> scratch;
  std::size_t head = 0;
  while (head < h.size()) {
    const Term& lt = h[head];
    const Polynomial<F>* divisor = nullptr;
    for (const auto* g : basis)
      if (g->leading_monomial().divides(lt.mono)) {
        divisor = g;
        break;
      }
    if (!divisor) {
      remainder.push_back(lt);
      ++head;
      continue;
    }
    // h[head+1..] - c * m * tail(divisor); the leading terms cancel
    const auto c = field.mul(lt.coeff, field.inv(divisor->leading_coeff()));
    const Monomial m = lt.mono / divisor->leading_monomial();
    const auto& g = divisor->terms();
    scratch.clear();
    std::size_t a = head + 1, b = 1;
    while (a < h.size() || b < g.size()) {
      if (b == g.size()) {
        scratch.push_back(std::move(h[a++]));
        continue;
      }
      Monomial gm = g[b].mono * m;
      if (a == h.size()) {
        scratch.push_back(Term{gm, field.neg(field.mul(c, g[b].coeff))});
        ++b;
        continue;
      }
      auto cmp = ord.compare(h[a].mono, gm);
      if (cmp > 0) {
        scratch.push_back(std::move(h[a++]));
      } else if (cmp < 0) {
        scratch.push_back(Term{gm, field.neg(field.mul(c, g[b].coeff))});
        ++b;
      } else {
        auto v = field.sub(h[a].coeff, field.mul(c, g[b].coeff));
        if (!field.is_zero(v)) scratch.push_back(Term{h[a].mono, std::move(v)});
        ++a;
        ++b;
      }
    }
    std::swap(h, scratch);
    head = 0;
  }
  return Polynomial<F>::from_terms(field, f.nvars(), std::move(remainder), f.order());
}

template <class F>
Polynomial<F> normal_form(const Polynomial<F>& f, const std::vector<Polynomial<F>>& basis) {
  std::vector<const Polynomial<F>*> ptrs;
  for (const auto& g : basis) ptrs.push_back(&g);
  return normal_form(f, ptrs);
}

template <class F>
Polynomial<F> s_polynomial(const Polynomial<F>& f, const Polynomial<F>& g) {
  const F& field = f.field();
  const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial<F> a = f.mul_term(l / f.leading_monomial(), field.inv(f.leading_coeff()));
  return a.sub_mul(field.inv(g.leading_coeff()), l / g.leading_monomial(), g);
}

namespace detail {

template <class F>
class Buchberger {
 public:
  Buchberger(const MonomialOrder& order, const GroebnerOptions& opts)
      : order_(make_order(order)), opts_(opts) {
    if (opts.shuffle_seed) rng_.seed(*opts.shuffle_seed);
  }

  std::vector<Polynomial<F>> run(std::vector<Polynomial<F>> gens) {
    if (opts_.shuffle_seed) std::shuffle(gens.begin(), gens.end(), rng_);
    for (auto& g : gens) {
      Polynomial<F> h = normal_form(g.with_order(order_), active()).monic();
      if (!h.is_zero()) insert(std::move(h));
    }
    while (!pairs_.empty()) {
      const Pair p = take_pair();
      ++stats.pairs_reduced;
      Polynomial<F> s = s_polynomial(polys_[p.i], polys_[p.j]);
      Polynomial<F> h = normal_form(s, active()).monic();
      if (h.is_zero()) {
        ++stats.zero_reductions;
        continue;
      }
      insert(std::move(h));
    }
    return reduce();
  }

  GroebnerStats stats;

 private:
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };

  std::vector<const Polynomial<F>*> active() const {
    std::vector<const Polynomial<F>*> out;
    out.reserve(basis_.size());
    for (auto idx : basis_) out.push_back(&polys_[idx]);
    return out;
  }

  Pair take_pair() {
    auto better = [&](const Pair& a, const Pair& b) {
      if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
      auto c = order_->compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      return std::pair(a.i, a.j) < std::pair(b.i, b.j);
    };
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k)
      if (better(pairs_[k], pairs_[best])) best = k;
    if (opts_.shuffle_seed) {
      // choose uniformly among the pairs of minimal lcm degree
      std::vector<std::size_t> ties;
      for (std::size_t k = 0; k < pairs_.size(); ++k)
        if (pairs_[k].lcm.degree() == pairs_[best].lcm.degree()) ties.push_back(k);
      best = ties[std::uniform_int_distribution<std::size_t>(0, ties.size() - 1)(rng_)];
    }
    Pair p = pairs_[best];
    pairs_[best] = pairs_.back();
    pairs_.pop_back();
    return p;
  }

  // Gebauer-Moeller update: product (coprime) and chain criteria.
  void insert(Polynomial<F> h) {
    const std::size_t hi = polys_.size();
    polys_.push_back(std::move(h));
    const Monomial& lh = polys_[hi].leading_monomial();

    std::vector<Pair> candidates;
    for (auto g : basis_) candidates.push_back(Pair{g, hi, lcm(polys_[g].leading_monomial(), lh)});

    std::vector<Pair> kept;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      const Pair& c = candidates[k];
      if (polys_[c.i].leading_monomial().coprime(lh)) {
        kept.push_back(c);
        continue;
      }
      bool dominated = false;
      for (std::size_t r = k + 1; r < candidates.size() && !dominated; ++r)
        dominated = candidates[r].lcm.divides(c.lcm);
      for (std::size_t r = 0; r < kept.size() && !dominated; ++r)
        dominated = kept[r].lcm.divides(c.lcm);
      if (!dominated) kept.push_back(c);
    }

    std::vector<Pair> next;
    for (const auto& p : pairs_) {
      const bool drop = lh.divides(p.lcm) &&
                        !(lcm(polys_[p.i].leading_monomial(), lh) == p.lcm) &&
                        !(lcm(polys_[p.j].leading_monomial(), lh) == p.lcm);
      if (!drop) next.push_back(p);
    }
    for (const auto& p : kept)
      if (!polys_[p.i].leading_monomial().coprime(lh)) next.push_back(p);
    pairs_ = std::move(next);

    std::erase_if(basis_, [&](std::size_t g) { return lh.divides(polys_[g].leading_monomial()); });
    basis_.push_back(hi);
    stats.basis_peak = std::max(stats.basis_peak, basis_.size());
  }

  std::vector<Polynomial<F>> reduce() {
    const auto ptrs = active();
    std::vector<Polynomial<F>> out;
    for (const auto* g : ptrs) {
      auto tail_terms = g->terms();
      tail_terms.erase(tail_terms.begin());
      auto tail = Polynomial<F>::from_terms(g->field(), g->nvars(), std::move(tail_terms), order_);
      std::vector<const Polynomial<F>*> others;
      for (const auto* o : ptrs)
        if (o != g) others.push_back(o);
      Polynomial<F> lead = Polynomial<F>::term(g->field(), g->nvars(), g->leading_monomial(),
                                               g->leading_coeff(), order_);
      out.push_back((lead + normal_form(tail, others)).monic());
    }
    std::sort(out.begin(), out.end(), [&](const Polynomial<F>& a, const Polynomial<F>& b) {
      return order_->less(a.leading_monomial(), b.leading_monomial());
    });
    return out;
  }

  OrderPtr order_;
  GroebnerOptions opts_;
  std::mt19937_64 rng_;
  std::vector<Polynomial<F>> polys_;
  std::vector<std::size_t> basis_;
  std::vector<Pair> pairs_;
};

}  // namespace detail

/// Reduced Groebner basis (monic, inter-reduced, sorted by ascending leading
/// monomial). The zero ideal gives an empty basis, the unit ideal {1}.
template <class F>
std::vector<Polynomial<F>> reduced_groebner_basis(std::vector<Polynomial<F>> gens, const MonomialOrder& order,
                                                  const GroebnerOptions& opts = {},
                                                  GroebnerStats* stats = nullptr) {
  std::erase_if(gens, [](const Polynomial<F>& g) { return g.is_zero(); });
  detail::Buchberger<F> engine(order, opts);
  auto basis = engine.run(std::move(gens));
  if (stats) *stats = engine.stats;
  return basis;
}

/// Buchberger's criterion: every S-polynomial reduces to zero.
template <class F>
bool is_groebner_basis(const std::vector<Polynomial<F>>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!normal_form(s_polynomial(basis[i], basis[j]), basis).is_zero()) return false;
  return true;
}

}  // namespace pcb
