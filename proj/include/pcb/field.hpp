#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace pcb {

/// Exact rationals; elements are kept canonical (lowest terms) by GMP.
struct Rationals {
  using Element = mpq_class;

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_integer(const mpz_class& z) const { return Element(z); }
  Element from_long(long v) const { return Element(v); }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element neg(const Element& a) const { return -a; }
  Element inv(const Element& a) const { return 1 / a; }
  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool is_one(const Element& a) const { return a == 1; }

  std::string tag() const { return "Q"; }
  std::string format(const Element& a) const;
  Element parse(const std::string& text) const;

  friend bool operator==(const Rationals&, const Rationals&) { return true; }
};

/// F_p for a prime p < 2^31. Elements are residues in [0, p).
struct PrimeField {
  using Element = std::uint32_t;

  explicit PrimeField(std::uint32_t prime);

  std::uint32_t p;

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_integer(const mpz_class& z) const;
  Element from_long(long v) const;

  Element add(Element a, Element b) const {
    std::uint32_t s = a + b;
    return s >= p ? s - p : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + p - b; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>(static_cast<std::uint64_t>(a) * b % p);
  }
  Element neg(Element a) const { return a == 0 ? 0 : p - a; }
  Element inv(Element a) const;
  Element pow(Element a, std::uint64_t e) const;
  bool is_zero(Element a) const { return a == 0; }
  bool is_one(Element a) const { return a == 1; }

  std::string tag() const { return "F" + std::to_string(p); }
  std::string format(Element a) const { return "+" + std::to_string(a); }
  Element parse(const std::string& text) const;

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p == b.p; }
};

bool is_prime(std::uint64_t n);

/// Least generator of the multiplicative group of F_p.
std::uint32_t least_primitive_root(std::uint32_t p);

}  // namespace pcb
