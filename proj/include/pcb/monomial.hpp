#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace pcb {

/// Upper bound on ring size for the Groebner oracle (n variables plus the
/// auxiliary ones used by elimination).
inline constexpr std::size_t kMaxVariables = 12;

/// Exponent vector in N_0^n with cached total degree.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::span<const std::int64_t> exps);
  Monomial(std::initializer_list<std::int64_t> exps);

  static Monomial variable(std::size_t nvars, std::size_t i, std::int32_t power = 1);

  std::size_t size() const { return nvars_; }
  std::int32_t operator[](std::size_t i) const { return e_[i]; }
  std::int64_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  void set(std::size_t i, std::int32_t value);

  bool divides(const Monomial& other) const;
  /// true when no variable appears in both
  bool coprime(const Monomial& other) const;

  std::vector<std::int64_t> exponents() const;
  std::string to_string() const;  // "[2,0,0,2]"

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// exact quotient; requires b.divides(a)
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.nvars_ == b.nvars_ && a.degree_ == b.degree_ && a.e_ == b.e_;
  }

 private:
  std::array<std::int32_t, kMaxVariables> e_{};
  std::int64_t degree_ = 0;
  std::uint8_t nvars_ = 0;
};

/// Total, multiplicative well-orders on exponent vectors.
class MonomialOrder {
 public:
  enum class Kind { Lex, DegRevLex, BlockElimination, Weighted };

  static MonomialOrder lex();
  static MonomialOrder degrevlex();
  /// First `block` variables compared lexicographically before the rest;
  /// the rest compared by degrevlex.
  static MonomialOrder block_elimination(std::size_t block);
  /// Weighted degree first (weights must be positive), ties broken by
  /// degrevlex or lex.
  static MonomialOrder weighted(std::vector<std::int64_t> weights, bool lex_tiebreak = false);

  Kind kind() const { return kind_; }
  std::size_t block() const { return block_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  std::string name() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind k) : kind_(k) {}

  Kind kind_;
  std::size_t block_ = 0;
  std::vector<std::int64_t> weights_;
  bool lex_tiebreak_ = false;
};

}  // namespace pcb
