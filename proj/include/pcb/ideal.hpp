#pragma once

#include "pcb/groebner.hpp"

#include <list>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace pcb {

/// A finitely generated ideal of F[x_1..x_n] with a per-order cache of its
/// reduced Groebner basis. Copies share the cache; the generators never
/// change after construction.
template <class F>
class Ideal {
 public:
  using Poly = Polynomial<F>;

  Ideal(F field, std::size_t nvars, std::vector<Poly> gens = {})
      : field_(std::move(field)), nvars_(nvars), cache_(std::make_shared<Cache>()) {
    for (auto& g : gens) {
      if (g.nvars() != nvars_ || !(g.field() == field_)) throw std::invalid_argument("Ideal: ring mismatch");
      if (!g.is_zero()) gens_.push_back(std::move(g));
    }
  }

  const F& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  const std::vector<Poly>& generators() const { return gens_; }

  const std::vector<Poly>& groebner(const MonomialOrder& order = MonomialOrder::degrevlex(),
                                    const GroebnerOptions& opts = {}) const {
    {
      std::lock_guard lock(cache_->mu);
      for (const auto& [o, basis] : cache_->entries)
        if (o == order) return basis;
    }
    auto basis = reduced_groebner_basis(gens_, order, opts);
    std::lock_guard lock(cache_->mu);
    for (const auto& [o, b] : cache_->entries)
      if (o == order) return b;
    cache_->entries.emplace_back(order, std::move(basis));
    return cache_->entries.back().second;
  }

  /// Installs a basis known to be the reduced basis for `order`.
  void seed_basis(const MonomialOrder& order, std::vector<Poly> basis) const {
    std::lock_guard lock(cache_->mu);
    for (const auto& e : cache_->entries)
      if (e.first == order) return;
    cache_->entries.emplace_back(order, std::move(basis));
  }

  Poly reduce(const Poly& f, const MonomialOrder& order = MonomialOrder::degrevlex()) const {
    check_ring(f);
    return normal_form(f.with_order(make_order(order)), groebner(order));
  }

  bool contains(const Poly& f, const MonomialOrder& order = MonomialOrder::degrevlex()) const {
    return reduce(f, order).is_zero();
  }

  /// other is a subset of this
  bool contains(const Ideal& other) const {
    check_ring(other);
    for (const auto& g : other.gens_)
      if (!contains(g)) return false;
    return true;
  }

  bool is_unit() const {
    const auto& gb = groebner();
    return gb.size() == 1 && gb.front().is_constant();
  }

  bool is_zero() const { return gens_.empty(); }

  friend bool operator==(const Ideal& a, const Ideal& b) {
    a.check_ring(b);
    const auto& ga = a.groebner();
    const auto& gb = b.groebner();
    if (ga.size() != gb.size()) return false;
    for (std::size_t i = 0; i < ga.size(); ++i)
      if (!(ga[i] == gb[i])) return false;
    return true;
  }

  Poly one() const { return Poly::constant(field_, nvars_, field_.one()); }

  void check_ring(const Poly& f) const {
    if (f.nvars() != nvars_ || !(f.field() == field_)) throw std::invalid_argument("Ideal: field/arity mismatch");
  }
  void check_ring(const Ideal& o) const {
    if (o.nvars_ != nvars_ || !(o.field_ == field_)) throw std::invalid_argument("Ideal: ring mismatch");
  }

 private:
  struct Cache {
    std::mutex mu;
    std::list<std::pair<MonomialOrder, std::vector<Poly>>> entries;
  };

  F field_;
  std::size_t nvars_;
  std::vector<Poly> gens_;
  std::shared_ptr<Cache> cache_;
};

template <class F>
Ideal<F> operator+(const Ideal<F>& a, const Ideal<F>& b) {
  a.check_ring(b);
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal<F>(a.field(), a.nvars(), std::move(gens));
}

template <class F>
Ideal<F> operator*(const Ideal<F>& a, const Ideal<F>& b) {
  a.check_ring(b);
  std::vector<Polynomial<F>> gens;
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) gens.push_back(f * g);
  return Ideal<F>(a.field(), a.nvars(), std::move(gens));
}

template <class F>
Ideal<F> power(const Ideal<F>& a, unsigned e) {
  Ideal<F> result(a.field(), a.nvars(), {a.one()});
  for (unsigned i = 0; i < e; ++i) result = result * a;
  return result;
}

/// I intersected with the subring in the last nvars - k variables. The
/// result lives in a ring of nvars - k variables (the first k dropped).
template <class F>
Ideal<F> eliminate(const Ideal<F>& ideal, std::size_t k) {
  if (k >= ideal.nvars()) throw std::invalid_argument("eliminate: must keep at least one variable");
  const MonomialOrder order = MonomialOrder::block_elimination(k);
  std::vector<Polynomial<F>> kept;
  for (const auto& g : ideal.groebner(order))
    if (!g.involves_any_of_first(k)) kept.push_back(g.without_leading_variables(k));
  Ideal<F> out(ideal.field(), ideal.nvars() - k, kept);
  // restricted to the surviving block the order is degrevlex, and the
  // surviving elements form its reduced basis
  out.seed_basis(MonomialOrder::degrevlex(), std::move(kept));
  return out;
}

/// I ∩ J via elimination of t from t*I + (1 - t)*J.
template <class F>
Ideal<F> intersect(const Ideal<F>& a, const Ideal<F>& b) {
  a.check_ring(b);
  const std::size_t n = a.nvars();
  if (a.is_zero() || b.is_zero()) return Ideal<F>(a.field(), n);
  const F& field = a.field();
  using Poly = Polynomial<F>;
  const Poly t = Poly::variable(field, n + 1, 0);
  const Poly one_minus_t = Poly::constant(field, n + 1, field.one()) - t;
  std::vector<Poly> gens;
  for (const auto& f : a.groebner()) gens.push_back(t * f.shifted(n + 1, 1));
  for (const auto& g : b.groebner()) gens.push_back(one_minus_t * g.shifted(n + 1, 1));
  return eliminate(Ideal<F>(field, n + 1, std::move(gens)), 1);
}

/// I : f, computed as (I ∩ (f)) / f.
template <class F>
Ideal<F> colon(const Ideal<F>& ideal, const Polynomial<F>& f) {
  ideal.check_ring(f);
  if (f.is_zero()) throw std::domain_error("colon: zero divisor polynomial");
  const Ideal<F> principal(ideal.field(), ideal.nvars(), {f});
  const Ideal<F> meet = intersect(ideal, principal);
  std::vector<Polynomial<F>> gens;
  for (const auto& g : meet.generators()) gens.push_back(g.divide_exact(f));
  return Ideal<F>(ideal.field(), ideal.nvars(), std::move(gens));
}

template <class F>
struct Saturation {
  Ideal<F> ideal;
  unsigned exponent;  // least N with I : f^N = I : f^(N+1)
};

/// I : f^∞ by iterated colon until the chain stabilizes.
template <class F>
Saturation<F> saturate(const Ideal<F>& ideal, const Polynomial<F>& f) {
  Ideal<F> current = ideal;
  for (unsigned n = 0;; ++n) {
    Ideal<F> next = colon(current, f);
    if (next == current) return {current, n};
    current = std::move(next);
  }
}

/// Kernel of x_i -> images[i], each image a single term c * t^w in one
/// auxiliary variable t.
template <class F>
Ideal<F> ring_map_kernel(const std::vector<Polynomial<F>>& images) {
  if (images.empty()) throw std::invalid_argument("ring_map_kernel: no images");
  const F& field = images.front().field();
  const std::size_t n = images.size();
  using Poly = Polynomial<F>;
  std::vector<Poly> gens;
  for (std::size_t i = 0; i < n; ++i) {
    const Poly& img = images[i];
    if (img.nvars() != 1 || img.size() != 1 || !(img.field() == field))
      throw std::invalid_argument("ring_map_kernel: images must be single terms c*t^w");
    Monomial tw(n + 1);
    tw.set(0, img.leading_monomial()[0]);
    gens.push_back(Poly::variable(field, n + 1, i + 1) - Poly::term(field, n + 1, tw, img.leading_coeff()));
  }
  return eliminate(Ideal<F>(field, n + 1, std::move(gens)), 1);
}

}  // namespace pcb
