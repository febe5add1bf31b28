#pragma once

#include "pcb/intmat.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pcb {

using ExponentVector = std::vector<std::int64_t>;

enum class ValidationCode {
  NonSquare,
  TooSmall,
  DiagonalSignError,
  NonPositiveOffDiagonal,
  RowSumNonzero,
};

/// Raised by PcbMatrix::validate. Row/column indices are 1-based, matching
/// the usual matrix notation in messages such as "RowSumNonzero(3)".
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(ValidationCode code, std::size_t row, std::size_t col, const std::string& what);
  ValidationCode code() const { return code_; }
  std::size_t row() const { return row_; }
  std::size_t col() const { return col_; }

 private:
  ValidationCode code_;
  std::size_t row_;
  std::size_t col_;
};

/// A positive critical binomial matrix: positive diagonal, negative
/// off-diagonal entries, every row summing to zero.
class PcbMatrix {
 public:
  static PcbMatrix validate(const IntMatrix& raw);

  std::size_t size() const { return signed_.rows(); }
  /// Magnitude a_{i,j} (0-based indices).
  std::int64_t a(std::size_t i, std::size_t j) const { return magnitudes_[i * size() + j]; }
  const IntMatrix& signed_matrix() const { return signed_; }

 private:
  explicit PcbMatrix(IntMatrix l);

  IntMatrix signed_;
  std::vector<std::int64_t> magnitudes_;
};

/// x^plus - x^minus
struct Binomial {
  ExponentVector plus;
  ExponentVector minus;

  friend bool operator==(const Binomial&, const Binomial&) = default;
};

/// f_j: x_j^{a_jj} - prod_{i != j} x_i^{a_ij}, read off column j.
std::vector<Binomial> generators(const PcbMatrix& p);

struct AssociatedVector {
  IntVector m;   // last row of adj(L)
  Integer d;     // gcd(m)
  IntVector nu;  // m / d
};

AssociatedVector associated_vector(const PcbMatrix& p);

/// sum_i nu_i e_i
Integer grading_degree(const IntVector& nu, const ExponentVector& e);

/// Exponents b(1..n) of the relation sum_i x^{b(i)} f_i = 0. Entry j of b(i)
/// is a_jj minus a_{j,k} for k running cyclically from j+1 through i; the
/// two positions i and i+1 (cyclically) are zero.
std::vector<ExponentVector> syzygy_vectors(const PcbMatrix& p);

class DimensionTooSmall : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// g with x_1 g = x_n^{a_nn - a_n1} f_1 + g_1 f_n and g not in I (n >= 4).
Binomial mixedness_witness(const PcbMatrix& p);

/// Monomials g_1 = prod_{1<i<n} x_i^{a_i1} and g_2 = prod_{1<i<n} x_i^{a_in}
/// entering the witness.
std::pair<ExponentVector, ExponentVector> witness_cofactors(const PcbMatrix& p);

/// SNF of L with the last row of P equal to +nu.
SnfResult normalized_snf(const PcbMatrix& p);

/// Closed-form normal decompositions for n = 2, and for n = 3 when
/// gcd(a_31, a_32) equals the first invariant factor. nullopt otherwise.
std::optional<SnfResult> small_dim_decomposition(const PcbMatrix& p);

struct TorsionProfile {
  Integer fit0;  // generator of I_n(L)
  Integer fit1;  // generator of I_{n-1}(L)
  Integer torsion_order;
  bool is_direct_summand = false;
  IntVector cyclic_factors;  // nontrivial d_i
};

TorsionProfile torsion_profile(const PcbMatrix& p);

struct ComponentCounts {
  Integer isolated;
  int embedded = 0;
  bool exact = true;  // false: the numbers are upper bounds ("at most")
  std::string assumption;
};

struct PcbAnalysis {
  AssociatedVector assoc;
  IntVector invariant_factors;
  std::vector<ExponentVector> syzygy_exponents;
  bool hull_prime = false;
  ComponentCounts counts;         // good characteristic
  ComponentCounts counts_bound;   // arbitrary field
};

PcbAnalysis analyze(const PcbMatrix& p);

}  // namespace pcb
