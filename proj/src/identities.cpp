#include "pcb/decomp.hpp"

namespace pcb {

bool syzygy_identity_holds(const PcbMatrix& p) {
  const Rationals q;
  const auto fs = generators(p);
  const auto bs = syzygy_vectors(p);
  Polynomial<Rationals> sum(q, p.size());
  for (std::size_t i = 0; i < fs.size(); ++i) sum = sum + monomial_poly(q, bs[i]) * binomial_poly(q, fs[i]);
  return sum.is_zero();
}

bool witness_identity_holds(const PcbMatrix& p) {
  const std::size_t n = p.size();
  const Rationals q;
  const auto fs = generators(p);
  const Binomial g = mixedness_witness(p);
  const auto [g1, g2] = witness_cofactors(p);
  ExponentVector x1(n, 0), xn(n, 0);
  x1[0] = 1;
  xn[n - 1] = p.a(n - 1, n - 1) - p.a(n - 1, 0);
  const auto lhs = monomial_poly(q, x1) * binomial_poly(q, g);
  const auto rhs = monomial_poly(q, xn) * binomial_poly(q, fs.front()) + monomial_poly(q, g1) * binomial_poly(q, fs.back());
  return lhs == rhs;
}

bool adjugate_rows_agree(const PcbMatrix& p) {
  const IntMatrix adj = adjugate(p.signed_matrix());
  for (std::size_t i = 0; i < adj.rows(); ++i)
    for (std::size_t j = 0; j < adj.cols(); ++j)
      if (adj(i, j) <= 0 || adj(i, j) != adj(0, j)) return false;
  return true;
}

bool generators_homogeneous(const PcbMatrix& p) {
  const IntVector nu = associated_vector(p).nu;
  for (const auto& f : generators(p))
    if (grading_degree(nu, f.plus) != grading_degree(nu, f.minus)) return false;
  return true;
}

template <class F>
bool vanishes_on_curve(const Ideal<F>& ideal, const IntVector& m) {
  const F& field = ideal.field();
  std::vector<Polynomial<F>> images;
  for (const auto& mi : m) {
    if (!mi.fits_sint_p()) throw std::out_of_range("vanishes_on_curve: weight too large");
    Monomial tw(1);
    tw.set(0, static_cast<std::int32_t>(mi.get_si()));
    images.push_back(Polynomial<F>::term(field, 1, tw, field.one()));
  }
  for (const auto& g : ideal.groebner())
    if (!substitute(g, images).is_zero()) return false;
  return true;
}

template bool vanishes_on_curve<Rationals>(const Ideal<Rationals>&, const IntVector&);
template bool vanishes_on_curve<PrimeField>(const Ideal<PrimeField>&, const IntVector&);

}  // namespace pcb
