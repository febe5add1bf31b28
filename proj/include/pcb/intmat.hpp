#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace pcb {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

/// Dense integer matrix with arbitrary-precision entries, stored row-major.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector row(std::size_t i) const;
  IntVector column(std::size_t j) const;
  IntMatrix transpose() const;
  bool is_zero() const;

  // elementary operations, used by the normal form reductions
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  void negate_row(std::size_t i);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);

  std::string to_string() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVector operator*(const IntMatrix& m, const IntVector& v);
/// Row vector times matrix.
IntVector operator*(const IntVector& v, const IntMatrix& m);

Integer gcd_of(const IntVector& v);

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix& m);

/// Transpose of the cofactor matrix; m * adjugate(m) == det(m) * Id.
IntMatrix adjugate(const IntMatrix& m);

/// gcd of all t x t minors. 1 for t <= 0, 0 for t > min(rows, cols).
Integer minors_gcd(const IntMatrix& m, long t);

struct SnfResult {
  IntMatrix P;
  IntMatrix Q;
  IntMatrix D;
  IntVector invariant_factors;  // d_1 | d_2 | ... | d_r, all positive

  std::size_t rank() const { return invariant_factors.size(); }
};

/// Smith normal form P * m * Q = D with unimodular P, Q.
///
/// Pivot rule: the nonzero entry of least absolute value in the remaining
/// submatrix, ties to the lowest (row, col). The divisibility chain is
/// repaired afterwards by gcd absorption between diagonal entries, and
/// negative diagonal entries are fixed by negating the row of P.
/// Throws std::invalid_argument for the zero matrix.
SnfResult smith_normal_form(const IntMatrix& m);

/// P*m*Q == D, |det P| = |det Q| = 1, D diagonal with the divisibility
/// chain, and d_1...d_t == minors_gcd(m, t) for every t up to the rank.
bool snf_contract_holds(const IntMatrix& m, const SnfResult& snf);

/// Decides whether v lies in the Z-span of the columns of m. On success the
/// returned vector c satisfies m * c == v.
std::optional<IntVector> lattice_contains(const IntMatrix& m, const IntVector& v);

}  // namespace pcb
