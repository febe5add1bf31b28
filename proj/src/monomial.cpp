#include "pcb/monomial.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace pcb {

namespace {

std::int32_t checked_exponent(std::int64_t e) {
  if (e < 0 || e > std::numeric_limits<std::int32_t>::max())
    throw std::out_of_range("monomial exponent out of range");
  return static_cast<std::int32_t>(e);
}

std::strong_ordering lex_range(const Monomial& a, const Monomial& b, std::size_t from,
                               std::size_t to) {
  for (std::size_t i = from; i < to; ++i)
    if (a[i] != b[i]) return a[i] <=> b[i];
  return std::strong_ordering::equal;
}

std::strong_ordering revlex_range(const Monomial& a, const Monomial& b, std::size_t from,
                                  std::size_t to) {
  for (std::size_t i = to; i > from; --i)
    if (a[i - 1] != b[i - 1]) return b[i - 1] <=> a[i - 1];
  return std::strong_ordering::equal;
}

}  // namespace

Monomial::Monomial(std::size_t nvars) : nvars_(static_cast<std::uint8_t>(nvars)) {
  if (nvars > kMaxVariables) throw std::out_of_range("too many variables for the oracle");
}

Monomial::Monomial(std::span<const std::int64_t> exps) : Monomial(exps.size()) {
  for (std::size_t i = 0; i < exps.size(); ++i) {
    e_[i] = checked_exponent(exps[i]);
    degree_ += e_[i];
  }
}

Monomial::Monomial(std::initializer_list<std::int64_t> exps)
    : Monomial(std::span<const std::int64_t>(exps.begin(), exps.size())) {}

Monomial Monomial::variable(std::size_t nvars, std::size_t i, std::int32_t power) {
  Monomial m(nvars);
  m.set(i, power);
  return m;
}

void Monomial::set(std::size_t i, std::int32_t value) {
  if (i >= nvars_) throw std::out_of_range("Monomial::set");
  degree_ += static_cast<std::int64_t>(value) - e_[i];
  e_[i] = checked_exponent(value);
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < nvars_; ++i)
    if (e_[i] > other.e_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < nvars_; ++i)
    if (e_[i] != 0 && other.e_[i] != 0) return false;
  return true;
}

std::vector<std::int64_t> Monomial::exponents() const {
  return std::vector<std::int64_t>(e_.begin(), e_.begin() + nvars_);
}

std::string Monomial::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < nvars_; ++i) os << (i ? "," : "") << e_[i];
  os << ']';
  return os.str();
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m(a.nvars_);
  for (std::size_t i = 0; i < a.nvars_; ++i)
    m.e_[i] = checked_exponent(static_cast<std::int64_t>(a.e_[i]) + b.e_[i]);
  m.degree_ = a.degree_ + b.degree_;
  return m;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial m(a.nvars_);
  for (std::size_t i = 0; i < a.nvars_; ++i) m.e_[i] = a.e_[i] - b.e_[i];
  m.degree_ = a.degree_ - b.degree_;
  return m;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial m(a.nvars_);
  for (std::size_t i = 0; i < a.nvars_; ++i) {
    m.e_[i] = std::max(a.e_[i], b.e_[i]);
    m.degree_ += m.e_[i];
  }
  return m;
}

MonomialOrder MonomialOrder::lex() { return MonomialOrder(Kind::Lex); }
MonomialOrder MonomialOrder::degrevlex() { return MonomialOrder(Kind::DegRevLex); }

MonomialOrder MonomialOrder::block_elimination(std::size_t block) {
  MonomialOrder o(Kind::BlockElimination);
  o.block_ = block;
  return o;
}

MonomialOrder MonomialOrder::weighted(std::vector<std::int64_t> weights, bool lex_tiebreak) {
  for (auto w : weights)
    if (w <= 0) throw std::invalid_argument("weighted order: weights must be positive");
  MonomialOrder o(Kind::Weighted);
  o.weights_ = std::move(weights);
  o.lex_tiebreak_ = lex_tiebreak;
  return o;
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = a.size();
  switch (kind_) {
    case Kind::Lex:
      return lex_range(a, b, 0, n);
    case Kind::DegRevLex:
      if (a.degree() != b.degree()) return a.degree() <=> b.degree();
      return revlex_range(a, b, 0, n);
    case Kind::BlockElimination: {
      const std::size_t k = std::min(block_, n);
      if (auto c = lex_range(a, b, 0, k); c != 0) return c;
      std::int64_t da = 0, db = 0;
      for (std::size_t i = k; i < n; ++i) {
        da += a[i];
        db += b[i];
      }
      if (da != db) return da <=> db;
      return revlex_range(a, b, k, n);
    }
    case Kind::Weighted: {
      if (weights_.size() != n) throw std::invalid_argument("weighted order: arity mismatch");
      std::int64_t wa = 0, wb = 0;
      for (std::size_t i = 0; i < n; ++i) {
        wa += weights_[i] * a[i];
        wb += weights_[i] * b[i];
      }
      if (wa != wb) return wa <=> wb;
      return lex_tiebreak_ ? lex_range(a, b, 0, n) : revlex_range(a, b, 0, n);
    }
  }
  return std::strong_ordering::equal;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::Lex: return "lex";
    case Kind::DegRevLex: return "degrevlex";
    case Kind::BlockElimination: return "block(" + std::to_string(block_) + ")";
    case Kind::Weighted: {
      std::string s = "weighted(";
      for (std::size_t i = 0; i < weights_.size(); ++i)
        s += (i ? "," : "") + std::to_string(weights_[i]);
      return s + (lex_tiebreak_ ? ";lex)" : ";degrevlex)");
    }
  }
  return "?";
}

}  // namespace pcb
