#include "pcb/pcb_core.hpp"

#include <sstream>

namespace pcb {

namespace {

std::string code_name(ValidationCode c) {
  switch (c) {
    case ValidationCode::NonSquare: return "NonSquare";
    case ValidationCode::TooSmall: return "TooSmall";
    case ValidationCode::DiagonalSignError: return "DiagonalSignError";
    case ValidationCode::NonPositiveOffDiagonal: return "NonPositiveOffDiagonal";
    case ValidationCode::RowSumNonzero: return "RowSumNonzero";
  }
  return "?";
}

[[noreturn]] void reject(ValidationCode code, std::size_t row = 0, std::size_t col = 0) {
  std::ostringstream os;
  os << code_name(code);
  if (row && col)
    os << '(' << row << ',' << col << ')';
  else if (row)
    os << '(' << row << ')';
  throw ValidationError(code, row, col, os.str());
}

}  // namespace

ValidationError::ValidationError(ValidationCode code, std::size_t row, std::size_t col,
                                 const std::string& what)
    : std::invalid_argument(what), code_(code), row_(row), col_(col) {}

PcbMatrix::PcbMatrix(IntMatrix l) : signed_(std::move(l)) {
  const std::size_t n = signed_.rows();
  magnitudes_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Integer mag = abs(signed_(i, j));
      if (!mag.fits_slong_p()) throw std::out_of_range("PCB entry does not fit a machine exponent");
      magnitudes_[i * n + j] = mag.get_si();
    }
}

PcbMatrix PcbMatrix::validate(const IntMatrix& raw) {
  if (!raw.is_square()) reject(ValidationCode::NonSquare);
  const std::size_t n = raw.rows();
  if (n < 2) reject(ValidationCode::TooSmall);
  for (std::size_t i = 0; i < n; ++i) {
    if (raw(i, i) <= 0) reject(ValidationCode::DiagonalSignError, i + 1);
    Integer sum = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i && raw(i, j) >= 0) reject(ValidationCode::NonPositiveOffDiagonal, i + 1, j + 1);
      sum += raw(i, j);
    }
    if (sum != 0) reject(ValidationCode::RowSumNonzero, i + 1);
  }
  return PcbMatrix(raw);
}

std::vector<Binomial> generators(const PcbMatrix& p) {
  const std::size_t n = p.size();
  std::vector<Binomial> out;
  for (std::size_t j = 0; j < n; ++j) {
    Binomial f{ExponentVector(n, 0), ExponentVector(n, 0)};
    f.plus[j] = p.a(j, j);
    for (std::size_t i = 0; i < n; ++i)
      if (i != j) f.minus[i] = p.a(i, j);
    out.push_back(std::move(f));
  }
  return out;
}

AssociatedVector associated_vector(const PcbMatrix& p) {
  const std::size_t n = p.size();
  const IntMatrix adj = adjugate(p.signed_matrix());
  AssociatedVector out;
  out.m = adj.row(n - 1);
  for (const auto& x : out.m)
    if (x <= 0) throw std::logic_error("associated_vector: non-positive adjugate entry");
  out.d = gcd_of(out.m);
  for (const auto& x : out.m) out.nu.push_back(x / out.d);
  return out;
}

Integer grading_degree(const IntVector& nu, const ExponentVector& e) {
  if (nu.size() != e.size()) throw std::invalid_argument("grading_degree: dimension mismatch");
  Integer deg = 0;
  for (std::size_t i = 0; i < nu.size(); ++i) deg += nu[i] * Integer(static_cast<long>(e[i]));
  return deg;
}

std::vector<ExponentVector> syzygy_vectors(const PcbMatrix& p) {
  const std::size_t n = p.size();
  std::vector<ExponentVector> out;
  for (std::size_t i = 0; i < n; ++i) {
    ExponentVector b(n, 0);
    const std::size_t next = (i + 1) % n;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || j == next) continue;
      std::int64_t entry = p.a(j, j);
      for (std::size_t k = (j + 1) % n;; k = (k + 1) % n) {
        entry -= p.a(j, k);
        if (k == i) break;
      }
      if (entry < 0) {
        std::ostringstream os;
        os << "NegativeEntry(" << i + 1 << ',' << j + 1 << ')';
        throw std::logic_error(os.str());
      }
      b[j] = entry;
    }
    out.push_back(std::move(b));
  }
  return out;
}

std::pair<ExponentVector, ExponentVector> witness_cofactors(const PcbMatrix& p) {
  const std::size_t n = p.size();
  ExponentVector g1(n, 0), g2(n, 0);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    g1[i] = p.a(i, 0);
    g2[i] = p.a(i, n - 1);
  }
  return {g1, g2};
}

Binomial mixedness_witness(const PcbMatrix& p) {
  const std::size_t n = p.size();
  if (n < 4) throw DimensionTooSmall("mixedness_witness: requires n >= 4");
  auto [g1, g2] = witness_cofactors(p);
  Binomial g{ExponentVector(n, 0), ExponentVector(n, 0)};
  g.plus[0] = p.a(0, 0) - 1;
  g.plus[n - 1] = p.a(n - 1, n - 1) - p.a(n - 1, 0);
  g.minus[0] = p.a(0, n - 1) - 1;
  for (std::size_t i = 0; i < n; ++i) g.minus[i] += g1[i] + g2[i];
  return g;
}

SnfResult normalized_snf(const PcbMatrix& p) {
  SnfResult snf = smith_normal_form(p.signed_matrix());
  const AssociatedVector av = associated_vector(p);
  const std::size_t last = p.size() - 1;
  IntVector row = snf.P.row(last);
  if (row != av.nu) {
    snf.P.negate_row(last);
    row = snf.P.row(last);
    if (row != av.nu) throw std::logic_error("normalized_snf: last row of P is not +-nu");
  }
  return snf;
}

namespace {

struct Bezout {
  Integer g, s, t;  // g = s*x + t*y
};

Bezout bezout(const Integer& x, const Integer& y) {
  Bezout b;
  mpz_gcdext(b.g.get_mpz_t(), b.s.get_mpz_t(), b.t.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return b;
}

SnfResult from_transforms(const PcbMatrix& p, IntMatrix P, IntMatrix Q) {
  IntMatrix D = P * p.signed_matrix() * Q;
  SnfResult out{std::move(P), std::move(Q), std::move(D), {}};
  for (std::size_t i = 0; i + 1 < p.size(); ++i) out.invariant_factors.push_back(out.D(i, i));
  return out;
}

}  // namespace

std::optional<SnfResult> small_dim_decomposition(const PcbMatrix& p) {
  const std::size_t n = p.size();
  if (n == 2) {
    const Integer a11 = p.a(0, 0), a22 = p.a(1, 1);
    const Bezout bz = bezout(a11, a22);
    IntMatrix P(2, 2), Q{{1, 1}, {0, 1}};
    P(0, 0) = bz.s;
    P(0, 1) = -bz.t;
    P(1, 0) = a22 / bz.g;
    P(1, 1) = a11 / bz.g;
    return from_transforms(p, std::move(P), std::move(Q));
  }
  if (n != 3) return std::nullopt;

  const IntMatrix& l = p.signed_matrix();
  const Integer d1 = minors_gcd(l, 1);
  const Integer a31 = p.a(2, 0), a32 = p.a(2, 1);
  const Bezout bc = bezout(a31, a32);
  if (bc.g != d1) return std::nullopt;
  const Integer& c1 = bc.s;
  const Integer& c2 = bc.t;
  const Integer alpha1 = (-c1 * p.a(0, 0) + c2 * p.a(0, 1)) / d1;
  const Integer alpha2 = (c1 * p.a(1, 0) - c2 * p.a(1, 1)) / d1;

  const AssociatedVector av = associated_vector(p);
  const Bezout bs = bezout(av.nu[0], av.nu[1]);
  if (bs.g != 1) throw std::logic_error("small_dim_decomposition: gcd(nu_1, nu_2) != 1");
  const Integer& s1 = bs.s;
  const Integer& s2 = bs.t;
  const Integer c = s2 * alpha1 - s1 * alpha2;

  IntMatrix P(3, 3), Q(3, 3);
  P(0, 2) = 1;
  P(1, 0) = s2;
  P(1, 1) = -s1;
  P(1, 2) = -c;
  for (std::size_t j = 0; j < 3; ++j) P(2, j) = av.nu[j];
  Q(0, 0) = -c1;
  Q(0, 1) = a32 / bc.g;
  Q(1, 0) = -c2;
  Q(1, 1) = -(a31 / bc.g);
  Q(0, 2) = Q(1, 2) = Q(2, 2) = 1;
  return from_transforms(p, std::move(P), std::move(Q));
}

TorsionProfile torsion_profile(const PcbMatrix& p) {
  const IntMatrix& l = p.signed_matrix();
  const long n = static_cast<long>(p.size());
  TorsionProfile t;
  t.fit0 = minors_gcd(l, n);
  t.fit1 = minors_gcd(l, n - 1);
  const SnfResult snf = smith_normal_form(l);
  t.torsion_order = 1;
  for (const auto& f : snf.invariant_factors) {
    t.torsion_order *= f;
    if (f != 1) t.cyclic_factors.push_back(f);
  }
  if (t.torsion_order != t.fit1) throw std::logic_error("torsion_profile: Fit_1 disagrees with SNF");
  t.is_direct_summand = (t.torsion_order == 1);
  return t;
}

PcbAnalysis analyze(const PcbMatrix& p) {
  PcbAnalysis a;
  a.assoc = associated_vector(p);
  a.invariant_factors = normalized_snf(p).invariant_factors;
  a.syzygy_exponents = syzygy_vectors(p);
  a.hull_prime = (a.assoc.d == 1);
  a.counts.isolated = a.assoc.d;
  a.counts.embedded = p.size() >= 4 ? 1 : 0;
  a.counts.exact = true;
  a.counts.assumption =
      "k contains the d_{n-1}-th roots of unity and char k is 0 or does not divide d_{n-1}";
  a.counts_bound = a.counts;
  a.counts_bound.exact = false;
  a.counts_bound.assumption = "arbitrary field";
  return a;
}

}  // namespace pcb
