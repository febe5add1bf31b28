#include "pcb/intmat.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace pcb {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("IntMatrix: empty dimension");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : IntMatrix(rows.size(), rows.size() == 0 ? 0 : rows.begin()->size()) {
  std::size_t i = 0;
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
    std::size_t j = 0;
    for (long x : r) (*this)(i, j++) = x;
    ++i;
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows) {
  if (rows.empty()) throw std::invalid_argument("IntMatrix: no rows");
  IntMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw std::invalid_argument("IntMatrix: ragged rows");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: dimension mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

IntVector operator*(const IntMatrix& m, const IntVector& v) {
  if (m.cols() != v.size()) throw std::invalid_argument("matrix-vector product: dimension mismatch");
  IntVector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

IntVector operator*(const IntVector& v, const IntMatrix& m) {
  if (m.rows() != v.size()) throw std::invalid_argument("vector-matrix product: dimension mismatch");
  IntVector out(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) out[j] += v[i] * m(i, j);
  return out;
}

Integer gcd_of(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

Integer determinant(const IntMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant: matrix is not square");
  const std::size_t n = m.rows();
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && a(swap_with, k) == 0) ++swap_with;
      if (swap_with == n) return 0;
      a.swap_rows(k, swap_with);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

IntMatrix submatrix(const IntMatrix& m, const std::vector<std::size_t>& rows,
                    const std::vector<std::size_t>& cols) {
  IntMatrix s(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = m(rows[i], cols[j]);
  return s;
}

std::vector<std::size_t> all_but(std::size_t n, std::size_t skip) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < n; ++i)
    if (i != skip) idx.push_back(i);
  return idx;
}

// Calls visit(subset) for every k-subset of {0..n-1}, in lexicographic order,
// until visit returns false.
void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!visit(idx)) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

IntMatrix adjugate(const IntMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("adjugate: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 1) return IntMatrix::identity(1);
  IntMatrix adj(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // h_{i,j} = (-1)^{i+j} det(m with row j and column i removed)
      Integer c = determinant(submatrix(m, all_but(n, j), all_but(n, i)));
      adj(i, j) = ((i + j) % 2 == 0) ? c : Integer(-c);
    }
  return adj;
}

Integer minors_gcd(const IntMatrix& m, long t) {
  if (t <= 0) return 1;
  const auto k = static_cast<std::size_t>(t);
  if (k > std::min(m.rows(), m.cols())) return 0;
  Integer g = 0;
  for_each_subset(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
    for_each_subset(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
      Integer minor = determinant(submatrix(m, rows, cols));
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), minor.get_mpz_t());
      return g != 1;
    });
    return g != 1;
  });
  return g;
}

namespace {

// Applies the unimodular column map (c_a, c_b) <- (s c_a + t c_b, u c_a + v c_b).
void mix_columns(IntMatrix& m, std::size_t a, std::size_t b, const Integer& s, const Integer& t,
                 const Integer& u, const Integer& v) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer ca = m(i, a), cb = m(i, b);
    m(i, a) = s * ca + t * cb;
    m(i, b) = u * ca + v * cb;
  }
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& m) {
  if (m.is_zero()) throw std::invalid_argument("smith_normal_form: zero matrix");
  IntMatrix a = m;
  IntMatrix P = IntMatrix::identity(m.rows());
  IntMatrix Q = IntMatrix::identity(m.cols());
  const std::size_t limit = std::min(m.rows(), m.cols());
  std::size_t rank = 0;

  for (std::size_t s = 0; s < limit; ++s) {
    bool found = true;
    while (true) {
      std::size_t pr = 0, pc = 0;
      found = false;
      for (std::size_t i = s; i < a.rows(); ++i)
        for (std::size_t j = s; j < a.cols(); ++j) {
          if (a(i, j) == 0) continue;
          if (!found || mpz_cmpabs(a(i, j).get_mpz_t(), a(pr, pc).get_mpz_t()) < 0) {
            pr = i;
            pc = j;
            found = true;
          }
        }
      if (!found) break;
      a.swap_rows(s, pr);
      P.swap_rows(s, pr);
      a.swap_cols(s, pc);
      Q.swap_cols(s, pc);

      bool clean = true;
      Integer q;
      for (std::size_t i = s + 1; i < a.rows(); ++i) {
        if (a(i, s) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a(i, s).get_mpz_t(), a(s, s).get_mpz_t());
        q = -q;
        a.add_row_multiple(i, s, q);
        P.add_row_multiple(i, s, q);
        if (a(i, s) != 0) clean = false;
      }
      for (std::size_t j = s + 1; j < a.cols(); ++j) {
        if (a(s, j) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a(s, j).get_mpz_t(), a(s, s).get_mpz_t());
        q = -q;
        a.add_col_multiple(j, s, q);
        Q.add_col_multiple(j, s, q);
        if (a(s, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (!found) break;
    ++rank;
  }

  // divisibility chain
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = i + 1; j < rank; ++j) {
      Integer x = a(i, i), y = a(j, j);
      if (mpz_divisible_p(y.get_mpz_t(), x.get_mpz_t())) continue;
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
      a.add_row_multiple(i, j, 1);
      P.add_row_multiple(i, j, 1);
      Integer xg = x / g, yg = y / g;
      mix_columns(a, i, j, s, t, -yg, xg);
      mix_columns(Q, i, j, s, t, -yg, xg);
      Integer f = -(t * y / g);
      a.add_row_multiple(j, i, f);
      P.add_row_multiple(j, i, f);
    }

  SnfResult out{P, Q, a, {}};
  for (std::size_t i = 0; i < rank; ++i) {
    if (out.D(i, i) < 0) {
      out.D.negate_row(i);
      out.P.negate_row(i);
    }
    out.invariant_factors.push_back(out.D(i, i));
  }
  return out;
}

std::optional<IntVector> lattice_contains(const IntMatrix& m, const IntVector& v) {
  if (v.size() != m.rows()) throw std::invalid_argument("lattice_contains: dimension mismatch");
  if (m.is_zero()) {
    if (std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; }))
      return IntVector(m.cols());
    return std::nullopt;
  }
  const SnfResult snf = smith_normal_form(m);
  const IntVector w = snf.P * v;
  IntVector y(m.cols());
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i < snf.rank()) {
      const Integer& d = snf.invariant_factors[i];
      if (!mpz_divisible_p(w[i].get_mpz_t(), d.get_mpz_t())) return std::nullopt;
      y[i] = w[i] / d;
    } else if (w[i] != 0) {
      return std::nullopt;
    }
  }
  return snf.Q * y;
}

bool snf_contract_holds(const IntMatrix& m, const SnfResult& snf) {
  if (!(snf.P * m * snf.Q == snf.D)) return false;
  if (abs(determinant(snf.P)) != 1 || abs(determinant(snf.Q)) != 1) return false;
  const std::size_t r = snf.invariant_factors.size();
  for (std::size_t i = 0; i < snf.D.rows(); ++i)
    for (std::size_t j = 0; j < snf.D.cols(); ++j) {
      const Integer expected = (i == j && i < r) ? snf.invariant_factors[i] : Integer(0);
      if (snf.D(i, j) != expected) return false;
    }
  Integer prefix = 1;
  for (std::size_t t = 0; t < r; ++t) {
    if (snf.invariant_factors[t] <= 0) return false;
    if (t > 0 && !mpz_divisible_p(snf.invariant_factors[t].get_mpz_t(), snf.invariant_factors[t - 1].get_mpz_t()))
      return false;
    prefix *= snf.invariant_factors[t];
    if (minors_gcd(m, static_cast<long>(t + 1)) != prefix) return false;
  }
  return minors_gcd(m, static_cast<long>(r + 1)) == 0;
}

}  // namespace pcb
