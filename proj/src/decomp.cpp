#include "pcb/decomp.hpp"

#include <sstream>

namespace pcb {

namespace {

constexpr long kMaxEnumeratedComponents = 1'000'000;
constexpr unsigned kF2PowerSearchBound = 16;

std::int64_t to_int64(const Integer& z, const char* what) {
  if (!z.fits_slong_p()) throw std::out_of_range(std::string(what) + " does not fit in 64 bits");
  return z.get_si();
}

}  // namespace

std::string ComponentSpec::describe() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < coeff_exponents.size(); ++i)
    os << (i ? ", " : "") << "x_" << i + 1 << " ↦ ζ^" << coeff_exponents[i] << " t^" << weights[i].get_str();
  return os.str();
}

std::vector<ComponentSpec> enumerate_components(const PcbMatrix& p) {
  return enumerate_components(p, normalized_snf(p));
}

std::vector<ComponentSpec> enumerate_components(const PcbMatrix& p, const SnfResult& snf) {
  const std::size_t n = p.size();
  const AssociatedVector av = associated_vector(p);
  if (snf.invariant_factors.size() != n - 1 || !snf_contract_holds(p.signed_matrix(), snf) ||
      snf.P.row(n - 1) != av.nu)
    throw std::invalid_argument("enumerate_components: not a normal decomposition with last row nu");
  if (av.d > kMaxEnumeratedComponents)
    throw std::length_error("enumerate_components: d = " + av.d.get_str() + " is beyond desk scale");

  std::vector<std::int64_t> dims;
  for (const auto& f : snf.invariant_factors) dims.push_back(to_int64(f, "invariant factor"));
  const std::int64_t r = dims.back();

  std::vector<ComponentSpec> out;
  std::vector<std::int64_t> k(n - 1, 0);
  while (true) {
    ComponentSpec spec;
    spec.weights = av.nu;
    spec.lambda_index = k;
    spec.root_order = r;
    for (std::size_t i = 0; i < n; ++i) {
      Integer e = 0;
      for (std::size_t j = 0; j + 1 < n; ++j) e += Integer(k[j] * (r / dims[j])) * snf.P(j, i);
      Integer red;
      mpz_fdiv_r(red.get_mpz_t(), e.get_mpz_t(), Integer(r).get_mpz_t());
      spec.coeff_exponents.push_back(red.get_si());
    }
    out.push_back(std::move(spec));

    std::size_t j = n - 1;
    while (j > 0) {
      --j;
      if (++k[j] < dims[j]) break;
      k[j] = 0;
      if (j == 0) return out;
    }
    if (n - 1 == 0) return out;
  }
}

bool hull_is_prime(const PcbMatrix& p) { return associated_vector(p).d == 1; }

ComponentCounts component_count(const PcbMatrix& p) { return analyze(p).counts; }

BadPrime::BadPrime(std::uint64_t p, const Integer& r)
    : std::invalid_argument("BadPrime(" + std::to_string(p) + "," + r.get_str() + "): need p ≡ 1 (mod " +
                            r.get_str() + ")"),
      p_(p) {}

template <class F>
Polynomial<F> monomial_poly(const F& field, const ExponentVector& e) {
  return Polynomial<F>::term(field, e.size(), Monomial(e), field.one());
}

template <class F>
Polynomial<F> binomial_poly(const F& field, const Binomial& b) {
  return Polynomial<F>::binomial(field, Monomial(b.plus), Monomial(b.minus));
}

template <class F>
Ideal<F> pcb_ideal(const PcbMatrix& p, const F& field) {
  std::vector<Polynomial<F>> gens;
  for (const auto& f : generators(p)) gens.push_back(binomial_poly(field, f));
  return Ideal<F>(field, p.size(), std::move(gens));
}

template <class F>
Ideal<F> leading_generators_ideal(const PcbMatrix& p, const F& field) {
  std::vector<Polynomial<F>> gens;
  auto fs = generators(p);
  fs.pop_back();
  for (const auto& f : fs) gens.push_back(binomial_poly(field, f));
  return Ideal<F>(field, p.size(), std::move(gens));
}

template <class F>
Ideal<F> hull(const PcbMatrix& p, const F& field) {
  const ExponentVector bn = syzygy_vectors(p).back();
  return colon(pcb_ideal(p, field), monomial_poly(field, bn));
}

template <class F>
HullRoutes<F> hull_routes(const PcbMatrix& p, const F& field) {
  const Ideal<F> i = pcb_ideal(p, field);
  const Ideal<F> j = leading_generators_ideal(p, field);
  const auto xb = monomial_poly(field, syzygy_vectors(p).back());
  ExponentVector e1(p.size(), 0);
  e1[0] = 1;
  Saturation<F> sat = saturate(i, monomial_poly(field, e1));
  return HullRoutes<F>{colon(i, xb), colon(j, xb), sat.ideal, sat.exponent};
}

template <class F>
EmbeddedComponent<F> embedded_component(const PcbMatrix& p, const F& field) {
  const std::size_t n = p.size();
  if (n < 4) throw DimensionTooSmall("embedded_component: requires n >= 4");
  const Ideal<F> i = pcb_ideal(p, field);
  const ExponentVector bn = syzygy_vectors(p).back();
  const auto xb = monomial_poly(field, bn);

  EmbeddedComponent<F> out{i + Ideal<F>(field, n, {xb}), bn, 0, {}, false};

  const Saturation<F> sat = saturate(i, xb);
  out.stabilization = sat.exponent;
  if (sat.exponent > 1) throw HypothesisFailed("embedded_component: I : x^b(n) is not saturated");

  for (std::size_t v = 0; v < n; ++v) {
    auto power_in = [&](unsigned e) {
      ExponentVector ev(n, 0);
      ev[v] = e;
      return out.ideal.contains(monomial_poly(field, ev));
    };
    unsigned hi = 1;
    while (!power_in(hi)) {
      if (hi >= (1u << 16)) throw HypothesisFailed("embedded_component: component is not m-primary");
      hi *= 2;
    }
    unsigned lo = hi / 2;  // power_in(lo) is false or lo == 0
    while (hi - lo > 1) {
      unsigned mid = lo + (hi - lo) / 2;
      (power_in(mid) ? hi : lo) = mid;
    }
    out.nilpotency.push_back(hi);
  }

  const Ideal<F> s = sat.ideal;
  out.irredundant = (intersect(s, out.ideal) == i) && !(s == i);
  if (!out.irredundant) throw HypothesisFailed("embedded_component: hull ∩ component != I or hull == I");
  return out;
}

template <class F>
bool unmixedness_test(const PcbMatrix& p, const F& field) {
  const Ideal<F> i = pcb_ideal(p, field);
  ExponentVector e1(p.size(), 0);
  e1[0] = 1;
  return colon(i, monomial_poly(field, e1)) == i;
}

std::uint32_t root_of_unity(std::uint32_t p, std::int64_t r) {
  if (r <= 0 || (p - 1) % static_cast<std::uint64_t>(r) != 0) throw BadPrime(p, Integer(static_cast<long>(r)));
  const PrimeField f(p);
  return f.pow(least_primitive_root(p), (p - 1) / static_cast<std::uint64_t>(r));
}

std::vector<Ideal<PrimeField>> realize_over_prime_field(const PcbMatrix& p, std::uint32_t prime) {
  const PrimeField field(prime);
  const auto specs = enumerate_components(p);
  const std::int64_t r = specs.front().root_order;
  const std::uint32_t zeta = root_of_unity(prime, r);
  std::vector<Ideal<PrimeField>> out;
  for (const auto& spec : specs) {
    std::vector<Polynomial<PrimeField>> images;
    for (std::size_t i = 0; i < p.size(); ++i) {
      Monomial tw(1);
      tw.set(0, static_cast<std::int32_t>(to_int64(spec.weights[i], "weight")));
      images.push_back(Polynomial<PrimeField>::term(field, 1, tw, field.pow(zeta, spec.coeff_exponents[i])));
    }
    out.push_back(ring_map_kernel(images));
  }
  return out;
}

bool is_simplest_n4(const PcbMatrix& p) {
  if (p.size() != 4) return false;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (p.a(i, j) != (i == j ? 3 : 1)) return false;
  return true;
}

std::vector<std::string> FullDecompositionReport::failures() const {
  std::vector<std::string> out;
  if (mode == Mode::F2SpecialCase) {
    if (!power_contained) out.push_back("prime_power_in_hull");
    if (!hull_in_prime) out.push_back("hull_in_prime");
    if (!hull_differs) out.push_back("hull_differs_from_ideal");
    if (!hull_meets_embedded) out.push_back("hull_meets_embedded");
    return out;
  }
  if (!intersection_equals_ideal) out.push_back("intersection_equals_ideal");
  if (!distinct_components) out.push_back("distinct_components");
  for (std::size_t k = 0; k < irredundant.size(); ++k)
    if (!irredundant[k]) out.push_back("irredundant[" + std::to_string(k) + "]");
  return out;
}

void FullDecompositionReport::require_ok() const {
  const auto f = failures();
  if (f.empty()) return;
  long index = -1;
  for (std::size_t k = 0; k < irredundant.size(); ++k)
    if (!irredundant[k]) {
      index = static_cast<long>(k);
      break;
    }
  throw VerificationFailed("VerificationFailed: " + f.front(), index);
}

namespace {

FullDecompositionReport verify_f2_special_case(const PcbMatrix& p) {
  const PrimeField f2(2);
  FullDecompositionReport rep;
  rep.mode = FullDecompositionReport::Mode::F2SpecialCase;
  rep.prime = 2;
  rep.isolated = 1;
  rep.has_embedded = true;
  using Poly = Polynomial<PrimeField>;
  const Ideal<PrimeField> i = pcb_ideal(p, f2);
  const Ideal<PrimeField> s = hull(p, f2);
  std::vector<Poly> lin;
  for (std::size_t v = 0; v < 3; ++v) lin.push_back(Poly::variable(f2, 4, v) - Poly::variable(f2, 4, 3));
  const Ideal<PrimeField> a(f2, 4, lin);
  Ideal<PrimeField> an = a;
  for (unsigned e = 1; e <= kF2PowerSearchBound; ++e, an = an * a)
    if (s.contains(an)) {
      rep.primary_exponent = e;
      break;
    }
  rep.power_contained = rep.primary_exponent != 0;
  rep.fourth_power_contained = rep.power_contained && rep.primary_exponent <= 4;
  rep.hull_in_prime = a.contains(s);
  rep.hull_differs = !(s == i);
  const auto emb = embedded_component(p, f2);
  rep.hull_meets_embedded = intersect(s, emb.ideal) == i;
  return rep;
}

}  // namespace

FullDecompositionReport verify_full_decomposition(const PcbMatrix& p, std::uint32_t prime) {
  const PrimeField field(prime);
  const AssociatedVector av = associated_vector(p);
  const SnfResult snf = normalized_snf(p);
  const Integer r = snf.invariant_factors.back();
  const bool good = mpz_divisible_ui_p(Integer(prime - 1).get_mpz_t(), r.get_ui()) != 0 && r.fits_ulong_p();
  if (!good) {
    if (prime == 2 && is_simplest_n4(p)) return verify_f2_special_case(p);
    throw BadPrime(prime, r);
  }

  FullDecompositionReport rep;
  rep.prime = prime;
  std::vector<Ideal<PrimeField>> comps = realize_over_prime_field(p, prime);
  rep.isolated = comps.size();

  rep.distinct_components = true;
  for (std::size_t a = 0; a < comps.size() && rep.distinct_components; ++a)
    for (std::size_t b = a + 1; b < comps.size(); ++b)
      if (comps[a] == comps[b]) {
        rep.distinct_components = false;
        break;
      }

  const Ideal<PrimeField> i = pcb_ideal(p, field);
  if (p.size() >= 4) {
    rep.has_embedded = true;
    comps.push_back(embedded_component(p, field).ideal);
  }

  const std::size_t m = comps.size();
  const Ideal<PrimeField> unit(field, p.size(), {i.one()});
  std::vector<Ideal<PrimeField>> prefix, suffix(m, unit);
  for (std::size_t k = 0; k < m; ++k) prefix.push_back(k == 0 ? comps[0] : intersect(prefix[k - 1], comps[k]));
  for (std::size_t k = m; k-- > 0;) suffix[k] = (k + 1 == m) ? comps[k] : intersect(comps[k], suffix[k + 1]);

  rep.intersection_equals_ideal = prefix.back() == i;
  for (std::size_t k = 0; k < m; ++k) {
    Ideal<PrimeField> rest = unit;
    if (k > 0 && k + 1 < m)
      rest = intersect(prefix[k - 1], suffix[k + 1]);
    else if (k > 0)
      rest = prefix[k - 1];
    else if (k + 1 < m)
      rest = suffix[k + 1];
    // I ⊆ rest always; strictly larger iff rest ⊄ I
    rep.irredundant.push_back(!i.contains(rest));
  }
  return rep;
}

bool components_kill_columns(const PcbMatrix& p, const std::vector<ComponentSpec>& specs) {
  const IntMatrix& l = p.signed_matrix();
  for (const auto& spec : specs)
    for (std::size_t c = 0; c < p.size(); ++c) {
      Integer s = 0;
      for (std::size_t i = 0; i < p.size(); ++i) s += Integer(static_cast<long>(spec.coeff_exponents[i])) * l(i, c);
      if (!mpz_divisible_ui_p(s.get_mpz_t(), static_cast<unsigned long>(spec.root_order))) return false;
    }
  return true;
}

#define PCB_INSTANTIATE(F)                                                                       \
  template Polynomial<F> monomial_poly<F>(const F&, const ExponentVector&);                     \
  template Polynomial<F> binomial_poly<F>(const F&, const Binomial&);                           \
  template Ideal<F> pcb_ideal<F>(const PcbMatrix&, const F&);                                   \
  template Ideal<F> leading_generators_ideal<F>(const PcbMatrix&, const F&);                    \
  template Ideal<F> hull<F>(const PcbMatrix&, const F&);                                        \
  template HullRoutes<F> hull_routes<F>(const PcbMatrix&, const F&);                            \
  template EmbeddedComponent<F> embedded_component<F>(const PcbMatrix&, const F&);              \
  template bool unmixedness_test<F>(const PcbMatrix&, const F&);

PCB_INSTANTIATE(Rationals)
PCB_INSTANTIATE(PrimeField)

#undef PCB_INSTANTIATE

}  // namespace pcb
