#include "pcb/field.hpp"

#include <stdexcept>
#include <vector>

namespace pcb {

std::string Rationals::format(const Element& a) const {
  std::string s = a.get_str();
  return sgn(a) < 0 ? s : "+" + s;
}

Rationals::Element Rationals::parse(const std::string& text) const {
  std::string body = (!text.empty() && text[0] == '+') ? text.substr(1) : text;
  Element v;
  if (body.empty() || v.set_str(body, 10) != 0) throw std::invalid_argument("bad rational: " + text);
  v.canonicalize();
  return v;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t prime) : p(prime) {
  if (prime >= (1u << 31) || !is_prime(prime))
    throw std::invalid_argument("PrimeField: " + std::to_string(prime) + " is not a prime below 2^31");
}

PrimeField::Element PrimeField::from_integer(const mpz_class& z) const {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return static_cast<Element>(r.get_ui());
}

PrimeField::Element PrimeField::from_long(long v) const {
  long r = v % static_cast<long>(p);
  return static_cast<Element>(r < 0 ? r + p : r);
}

PrimeField::Element PrimeField::pow(Element a, std::uint64_t e) const {
  Element result = 1;
  while (e) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

PrimeField::Element PrimeField::inv(Element a) const {
  if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
  return pow(a, p - 2);
}

PrimeField::Element PrimeField::parse(const std::string& text) const {
  std::size_t used = 0;
  long v = std::stol(text, &used);
  if (used != text.size()) throw std::invalid_argument("bad residue: " + text);
  return from_long(v);
}

std::uint32_t least_primitive_root(std::uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument("least_primitive_root: not a prime");
  if (p == 2) return 1;
  const PrimeField f(p);
  std::vector<std::uint32_t> factors;
  std::uint32_t m = p - 1;
  for (std::uint32_t q = 2; q * q <= m; ++q)
    if (m % q == 0) {
      factors.push_back(q);
      while (m % q == 0) m /= q;
    }
  if (m > 1) factors.push_back(m);
  for (std::uint32_t g = 2; g < p; ++g) {
    bool generator = true;
    for (auto q : factors)
      if (f.pow(g, (p - 1) / q) == 1) {
        generator = false;
        break;
      }
    if (generator) return g;
  }
  throw std::logic_error("least_primitive_root: none found");
}

}  // namespace pcb
