#pragma once

#include "pcb/field.hpp"
#include "pcb/monomial.hpp"

#include <algorithm>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pcb {

using OrderPtr = std::shared_ptr<const MonomialOrder>;

inline OrderPtr default_order() {
  static const OrderPtr order = std::make_shared<const MonomialOrder>(MonomialOrder::degrevlex());
  return order;
}

inline OrderPtr make_order(const MonomialOrder& o) {
  if (o == *default_order()) return default_order();
  return std::make_shared<const MonomialOrder>(o);
}

/// Sparse multivariate polynomial over F. Terms are kept sorted strictly
/// descending in the polynomial's monomial order, with no zero coefficients.
template <class F>
class Polynomial {
 public:
  using Coeff = typename F::Element;
  struct Term {
    Monomial mono;
    Coeff coeff;
  };

  Polynomial(F field, std::size_t nvars, OrderPtr order = default_order())
      : field_(std::move(field)), nvars_(nvars), order_(std::move(order)) {
    if (nvars > kMaxVariables) throw std::out_of_range("Polynomial: too many variables");
  }

  static Polynomial from_terms(F field, std::size_t nvars, std::vector<Term> terms,
                               OrderPtr order = default_order()) {
    Polynomial p(std::move(field), nvars, std::move(order));
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }

  static Polynomial term(F field, std::size_t nvars, const Monomial& m, Coeff c,
                         OrderPtr order = default_order()) {
    return from_terms(field, nvars, {Term{m, std::move(c)}}, std::move(order));
  }

  static Polynomial constant(F field, std::size_t nvars, Coeff c, OrderPtr order = default_order()) {
    return term(field, nvars, Monomial(nvars), std::move(c), std::move(order));
  }

  static Polynomial variable(F field, std::size_t nvars, std::size_t i,
                             OrderPtr order = default_order()) {
    Coeff one = field.one();
    return term(field, nvars, Monomial::variable(nvars, i), one, std::move(order));
  }

  /// x^plus - x^minus
  static Polynomial binomial(F field, const Monomial& plus, const Monomial& minus,
                             OrderPtr order = default_order()) {
    const std::size_t n = plus.size();
    Coeff one = field.one();
    Coeff minus_one = field.neg(one);
    return from_terms(field, n, {Term{plus, one}, Term{minus, minus_one}}, std::move(order));
  }

  const F& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  const OrderPtr& order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Term& leading() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  const Coeff& leading_coeff() const { return terms_.front().coeff; }

  bool is_constant() const { return terms_.size() == 1 && terms_.front().mono.is_one(); }

  std::int64_t total_degree() const {
    std::int64_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }

  Polynomial with_order(OrderPtr order) const {
    if (*order == *order_) {
      Polynomial p = *this;
      p.order_ = std::move(order);
      return p;
    }
    return from_terms(field_, nvars_, terms_, std::move(order));
  }

  Polynomial monic() const {
    if (is_zero() || field_.is_one(leading_coeff())) return *this;
    return scaled(field_.inv(leading_coeff()));
  }

  Polynomial scaled(const Coeff& c) const {
    Polynomial p(field_, nvars_, order_);
    if (field_.is_zero(c)) return p;
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back(Term{t.mono, field_.mul(t.coeff, c)});
    return p;
  }

  /// c * m * this
  Polynomial mul_term(const Monomial& m, const Coeff& c) const {
    Polynomial p(field_, nvars_, order_);
    if (field_.is_zero(c)) return p;
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back(Term{t.mono * m, field_.mul(t.coeff, c)});
    return p;
  }

  /// this - c * m * g, by a single merge pass.
  Polynomial sub_mul(const Coeff& c, const Monomial& m, const Polynomial& g) const {
    Polynomial out(field_, nvars_, order_);
    out.terms_.reserve(terms_.size() + g.terms_.size());
    const MonomialOrder& ord = *order_;
    auto a = terms_.begin();
    auto b = g.terms_.begin();
    while (a != terms_.end() || b != g.terms_.end()) {
      if (b == g.terms_.end()) {
        out.terms_.push_back(*a++);
        continue;
      }
      Monomial bm = b->mono * m;
      if (a == terms_.end()) {
        out.terms_.push_back(Term{bm, field_.neg(field_.mul(c, b->coeff))});
        ++b;
        continue;
      }
      auto cmp = ord.compare(a->mono, bm);
      if (cmp > 0) {
        out.terms_.push_back(*a++);
      } else if (cmp < 0) {
        out.terms_.push_back(Term{bm, field_.neg(field_.mul(c, b->coeff))});
        ++b;
      } else {
        Coeff v = field_.sub(a->coeff, field_.mul(c, b->coeff));
        if (!field_.is_zero(v)) out.terms_.push_back(Term{a->mono, std::move(v)});
        ++a;
        ++b;
      }
    }
    return out;
  }

  Polynomial operator-() const { return scaled(field_.neg(field_.one())); }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    return a.sub_mul(a.field_.neg(a.field_.one()), Monomial(a.nvars_), b);
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    return a.sub_mul(a.field_.one(), Monomial(a.nvars_), b);
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    std::vector<Term> terms;
    terms.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) terms.push_back(Term{s.mono * t.mono, a.field_.mul(s.coeff, t.coeff)});
    return from_terms(a.field_, a.nvars_, std::move(terms), a.order_);
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.nvars_ != b.nvars_ || !(a.field_ == b.field_) || a.terms_.size() != b.terms_.size()) return false;
    if (!(*a.order_ == *b.order_)) return a == b.with_order(a.order_);
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
    return true;
  }

  Polynomial pow(unsigned e) const {
    Polynomial result = constant(field_, nvars_, field_.one(), order_);
    Polynomial base = *this;
    while (e) {
      if (e & 1) result = result * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return result;
  }

  /// Exact quotient this / g; throws std::domain_error if g does not divide.
  Polynomial divide_exact(const Polynomial& g) const {
    check_compatible(g);
    if (g.is_zero()) throw std::domain_error("divide_exact: division by zero");
    Polynomial rem = *this;
    std::vector<Term> quotient;
    const Coeff inv_lc = field_.inv(g.leading_coeff());
    while (!rem.is_zero()) {
      const Term& lt = rem.leading();
      if (!g.leading_monomial().divides(lt.mono))
        throw std::domain_error("divide_exact: not divisible");
      Monomial m = lt.mono / g.leading_monomial();
      Coeff c = field_.mul(lt.coeff, inv_lc);
      quotient.push_back(Term{m, c});
      rem = rem.sub_mul(c, m, g);
    }
    return from_terms(field_, nvars_, std::move(quotient), order_);
  }

  /// Renames x_i to x_{i + offset} inside a ring with `nvars` variables.
  Polynomial shifted(std::size_t nvars, std::size_t offset) const {
    std::vector<Term> terms;
    terms.reserve(terms_.size());
    for (const auto& t : terms_) {
      Monomial m(nvars);
      for (std::size_t i = 0; i < nvars_; ++i) m.set(i + offset, t.mono[i]);
      terms.push_back(Term{m, t.coeff});
    }
    return from_terms(field_, nvars, std::move(terms), order_);
  }

  /// Drops the first k variables, which must not occur.
  Polynomial without_leading_variables(std::size_t k, OrderPtr order = default_order()) const {
    std::vector<Term> terms;
    for (const auto& t : terms_) {
      Monomial m(nvars_ - k);
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (i < k) {
          if (t.mono[i] != 0) throw std::logic_error("without_leading_variables: variable occurs");
        } else {
          m.set(i - k, t.mono[i]);
        }
      }
      terms.push_back(Term{m, t.coeff});
    }
    return from_terms(field_, nvars_ - k, std::move(terms), std::move(order));
  }

  bool involves_any_of_first(std::size_t k) const {
    for (const auto& t : terms_)
      for (std::size_t i = 0; i < k; ++i)
        if (t.mono[i] != 0) return true;
    return false;
  }

  /// "<tag>|<coeff> <exps> ..." e.g. "Q|+1 [2,0,0,2] -1 [0,2,2,0]"; "<tag>|0" for zero.
  std::string serialize() const {
    std::ostringstream os;
    os << field_.tag() << '|';
    if (terms_.empty()) os << '0';
    for (std::size_t i = 0; i < terms_.size(); ++i)
      os << (i ? " " : "") << field_.format(terms_[i].coeff) << ' ' << terms_[i].mono.to_string();
    return os.str();
  }

  static Polynomial parse(const std::string& text, F field, std::size_t nvars,
                          OrderPtr order = default_order()) {
    const auto bar = text.find('|');
    if (bar == std::string::npos || text.substr(0, bar) != field.tag())
      throw std::invalid_argument("Polynomial::parse: missing or wrong field tag in '" + text + "'");
    std::istringstream is(text.substr(bar + 1));
    std::vector<std::string> tokens;
    for (std::string tok; is >> tok;) tokens.push_back(tok);
    if (tokens.size() == 1 && tokens.front() == "0") tokens.clear();
    if (tokens.size() % 2 != 0) throw std::invalid_argument("Polynomial::parse: dangling coefficient");
    std::vector<Term> terms;
    for (std::size_t k = 0; k < tokens.size(); k += 2) {
      const std::string& exps = tokens[k + 1];
      if (exps.size() < 2 || exps.front() != '[' || exps.back() != ']')
        throw std::invalid_argument("Polynomial::parse: bad exponent vector " + exps);
      std::vector<std::int64_t> e;
      std::istringstream es(exps.substr(1, exps.size() - 2));
      for (std::string item; std::getline(es, item, ',');) e.push_back(std::stoll(item));
      if (e.size() != nvars) throw std::invalid_argument("Polynomial::parse: arity mismatch");
      terms.push_back(Term{Monomial(e), field.parse(tokens[k])});
    }
    return from_terms(std::move(field), nvars, std::move(terms), std::move(order));
  }

 private:
  void check_compatible(const Polynomial& o) const {
    if (o.nvars_ != nvars_ || !(o.field_ == field_)) throw std::invalid_argument("Polynomial: ring mismatch");
    if (!(*o.order_ == *order_)) throw std::invalid_argument("Polynomial: order mismatch");
  }

  void normalize() {
    const MonomialOrder& ord = *order_;
    std::sort(terms_.begin(), terms_.end(),
              [&](const Term& a, const Term& b) { return ord.compare(a.mono, b.mono) > 0; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().mono == t.mono)
        out.back().coeff = field_.add(out.back().coeff, t.coeff);
      else
        out.push_back(std::move(t));
    }
    std::erase_if(out, [&](const Term& t) { return field_.is_zero(t.coeff); });
    terms_ = std::move(out);
  }

  F field_;
  std::size_t nvars_;
  OrderPtr order_;
  std::vector<Term> terms_;
};

/// f(images[0], ..., images[n-1]); all images live in one target ring.
template <class F>
Polynomial<F> substitute(const Polynomial<F>& f, const std::vector<Polynomial<F>>& images) {
  if (images.size() != f.nvars()) throw std::invalid_argument("substitute: arity mismatch");
  if (images.empty()) throw std::invalid_argument("substitute: no images");
  const F& field = images.front().field();
  const std::size_t m = images.front().nvars();
  const OrderPtr& order = images.front().order();
  Polynomial<F> result(field, m, order);
  std::vector<std::vector<Polynomial<F>>> powers(images.size());
  for (const auto& t : f.terms()) {
    Polynomial<F> term = Polynomial<F>::constant(field, m, t.coeff, order);
    for (std::size_t i = 0; i < images.size(); ++i) {
      const auto e = static_cast<std::size_t>(t.mono[i]);
      if (e == 0) continue;
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(Polynomial<F>::constant(field, m, field.one(), order));
      while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
      term = term * cache[e];
    }
    result = result + term;
  }
  return result;
}

}  // namespace pcb
