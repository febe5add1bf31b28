#pragma once

// Generators and independent oracles shared by the test binaries. Nothing
// here calls into the code under test except for constructing inputs.

#include "pcb/intmat.hpp"

#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace support {

using pcb::IntMatrix;
using pcb::IntVector;
using pcb::Integer;

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = uniform(rng, lo, hi);
  return m;
}

/// Signed PCB matrix with off-diagonal magnitudes in [1, max_off].
inline IntMatrix random_pcb_matrix(Rng& rng, std::size_t n, long max_off) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    long sum = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const long a = uniform(rng, 1, max_off);
      m(i, j) = -a;
      sum += a;
    }
    m(i, i) = sum;
  }
  return m;
}

inline IntMatrix diagonal_family(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = (i == j) ? long(n - 1) : -1L;
  return m;
}

/// Product of random elementary operations; determinant +-1 by construction.
inline IntMatrix random_unimodular(Rng& rng, std::size_t n, int steps) {
  IntMatrix u = IntMatrix::identity(n);
  for (int s = 0; s < steps; ++s) {
    const auto i = static_cast<std::size_t>(uniform(rng, 0, long(n) - 1));
    const auto j = static_cast<std::size_t>(uniform(rng, 0, long(n) - 1));
    if (i == j) {
      u.negate_row(i);
    } else {
      u.add_row_multiple(i, j, Integer(uniform(rng, -2, 2)));
    }
  }
  return u;
}

inline IntMatrix minor_matrix(const IntMatrix& m, const std::vector<std::size_t>& rows,
                              const std::vector<std::size_t>& cols) {
  IntMatrix out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = m(rows[i], cols[j]);
  return out;
}

/// Laplace expansion along the first row.
inline Integer laplace_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  Integer det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    std::vector<std::size_t> rows, cols;
    for (std::size_t r = 1; r < n; ++r) rows.push_back(r);
    for (std::size_t c = 0; c < n; ++c)
      if (c != j) cols.push_back(c);
    const Integer sub = laplace_det(minor_matrix(m, rows, cols));
    det += (j % 2 == 0 ? 1 : -1) * m(0, j) * sub;
  }
  return det;
}

inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) s.push_back(i);
    out.push_back(s);
  }
  return out;
}

/// gcd of all t x t minors by exhaustive enumeration.
inline Integer brute_minors_gcd(const IntMatrix& m, std::size_t t) {
  Integer g = 0;
  for (const auto& rows : subsets(m.rows(), t))
    for (const auto& cols : subsets(m.cols(), t)) {
      const Integer d = laplace_det(minor_matrix(m, rows, cols));
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    }
  return g;
}

/// Searches c in [-bound, bound]^cols with m * c == v.
inline bool brute_lattice(const IntMatrix& m, const IntVector& v, long bound) {
  const std::size_t k = m.cols();
  std::vector<long> c(k, -bound);
  while (true) {
    bool hit = true;
    for (std::size_t i = 0; i < m.rows() && hit; ++i) {
      Integer s = 0;
      for (std::size_t j = 0; j < k; ++j) s += m(i, j) * c[j];
      hit = (s == v[i]);
    }
    if (hit) return true;
    std::size_t j = 0;
    while (j < k && c[j] == bound) c[j++] = -bound;
    if (j == k) return false;
    ++c[j];
  }
}

/// Sparse integer polynomial as exponent -> coefficient, for expansion checks
/// that do not touch the library's polynomial type.
using TermMap = std::map<std::vector<long>, long>;

inline void add_term(TermMap& p, const std::vector<long>& e, long c) {
  auto& v = p[e];
  v += c;
  if (v == 0) p.erase(e);
}

inline std::vector<long> add_exponents(const std::vector<long>& a, const std::vector<long>& b) {
  std::vector<long> s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
  return s;
}

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string golden_path(const std::string& name) {
  return std::string(PCB_SOURCE_DIR) + "/data/golden/" + name + ".json";
}

}  // namespace support
