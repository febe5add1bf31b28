#pragma once

#include "pcb/ideal.hpp"
#include "pcb/pcb_core.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pcb {

/// One isolated component, as the parametrization x_i -> zeta^{e_i} t^{nu_i}
/// with zeta a fixed primitive r-th root of unity, r = d_{n-1}.
struct ComponentSpec {
  std::vector<std::int64_t> coeff_exponents;  // e, entries in [0, r)
  IntVector weights;                          // nu
  std::vector<std::int64_t> lambda_index;     // k, k_j in [0, d_j)
  std::int64_t root_order = 1;                // r

  std::string describe() const;  // "x1 -> z^0 t^1, ..."
};

/// All d tuples of Lambda(D), k = 0 first, then lexicographic in k (last
/// coordinate fastest). Uses the normalized SNF.
std::vector<ComponentSpec> enumerate_components(const PcbMatrix& p);
/// Same, from a caller-supplied normal decomposition whose last row of P is
/// nu. Throws std::invalid_argument if snf is not one.
std::vector<ComponentSpec> enumerate_components(const PcbMatrix& p, const SnfResult& snf);

bool hull_is_prime(const PcbMatrix& p);
ComponentCounts component_count(const PcbMatrix& p);

class BadPrime : public std::invalid_argument {
 public:
  BadPrime(std::uint64_t p, const Integer& r);
  std::uint64_t prime() const { return p_; }

 private:
  std::uint64_t p_;
};

class HypothesisFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class VerificationFailed : public std::runtime_error {
 public:
  VerificationFailed(const std::string& what, long component) : std::runtime_error(what), component_(component) {}
  long component() const { return component_; }

 private:
  long component_;
};

template <class F>
Polynomial<F> monomial_poly(const F& field, const ExponentVector& e);
template <class F>
Polynomial<F> binomial_poly(const F& field, const Binomial& b);

/// I = (f_1, ..., f_n)
template <class F>
Ideal<F> pcb_ideal(const PcbMatrix& p, const F& field);
/// J = (f_1, ..., f_{n-1})
template <class F>
Ideal<F> leading_generators_ideal(const PcbMatrix& p, const F& field);

/// S(I) = I : x^{b(n)}
template <class F>
Ideal<F> hull(const PcbMatrix& p, const F& field);

/// Three independent routes to the hull.
template <class F>
struct HullRoutes {
  Ideal<F> colon_i;     // I : x^{b(n)}
  Ideal<F> colon_j;     // J : x^{b(n)}
  Ideal<F> saturated;   // I : x_1^∞
  unsigned saturation_exponent;

  bool agree() const { return colon_i == colon_j && colon_j == saturated; }
};

template <class F>
HullRoutes<F> hull_routes(const PcbMatrix& p, const F& field);

template <class F>
struct EmbeddedComponent {
  Ideal<F> ideal;                    // I + (x^{b(n)})
  ExponentVector generator;          // b(n)
  unsigned stabilization = 0;        // N with I : x^b = I : (x^b)^∞ reached at step N
  std::vector<unsigned> nilpotency;  // least N_i with x_i^{N_i} in the component
  bool irredundant = false;          // hull ∩ component = I and hull != I
};

/// Throws DimensionTooSmall for n <= 3 and HypothesisFailed if one of the
/// structural checks does not hold.
template <class F>
EmbeddedComponent<F> embedded_component(const PcbMatrix& p, const F& field);

/// I == I : x_1
template <class F>
bool unmixedness_test(const PcbMatrix& p, const F& field);

/// zeta = g^((p-1)/r), g the least primitive root mod p.
std::uint32_t root_of_unity(std::uint32_t p, std::int64_t r);

/// Kernel ideals over F_p, one per ComponentSpec. Requires p ≡ 1 (mod r).
std::vector<Ideal<PrimeField>> realize_over_prime_field(const PcbMatrix& p, std::uint32_t prime);

struct FullDecompositionReport {
  enum class Mode { GoodCharacteristic, F2SpecialCase };

  Mode mode = Mode::GoodCharacteristic;
  std::uint32_t prime = 0;
  std::size_t isolated = 0;
  bool has_embedded = false;
  bool intersection_equals_ideal = false;
  std::vector<bool> irredundant;  // isolated components first, embedded last
  bool distinct_components = false;

  // F2 special case: a^N ⊆ S(I) ⊆ a, S(I) != I
  unsigned primary_exponent = 0;     // least N with a^N ⊆ S(I), 0 if none up to the search bound
  bool fourth_power_contained = false;  // a^4 ⊆ S(I)
  bool power_contained = false;
  bool hull_in_prime = false;
  bool hull_differs = false;
  bool hull_meets_embedded = false;

  std::vector<std::string> failures() const;
  bool ok() const { return failures().empty(); }
  /// Throws VerificationFailed naming the first failed check.
  void require_ok() const;
};

/// Intersects the realized components (and the embedded component for
/// n >= 4) and compares with I over F_p, then checks that dropping any one
/// component strictly enlarges the intersection. p = 2 on the simplest n = 4
/// matrix runs the dedicated bad-characteristic check instead.
FullDecompositionReport verify_full_decomposition(const PcbMatrix& p, std::uint32_t prime);

bool is_simplest_n4(const PcbMatrix& p);

// Symbolic identities, checked by expansion over Q.
bool syzygy_identity_holds(const PcbMatrix& p);
bool witness_identity_holds(const PcbMatrix& p);
/// All rows of adj(L) equal and strictly positive.
bool adjugate_rows_agree(const PcbMatrix& p);
/// Both monomials of each f_j have the same nu-degree.
bool generators_homogeneous(const PcbMatrix& p);
/// Every Groebner basis element vanishes under x_i -> t^{m_i}.
template <class F>
bool vanishes_on_curve(const Ideal<F>& ideal, const IntVector& m);
/// Every column of L is killed by every component mod r.
bool components_kill_columns(const PcbMatrix& p, const std::vector<ComponentSpec>& specs);

}  // namespace pcb
