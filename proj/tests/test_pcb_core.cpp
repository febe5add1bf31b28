#include "pcb/pcb_core.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace pcb;
using support::Rng;

namespace {

PcbMatrix simplest() { return PcbMatrix::validate(support::diagonal_family(4)); }
PcbMatrix onecomp() {
  return PcbMatrix::validate(IntMatrix{{4, -2, -1, -1}, {-1, 4, -2, -1}, {-1, -1, 3, -1}, {-1, -1, -1, 3}});
}
PcbMatrix n2(long a, long b) { return PcbMatrix::validate(IntMatrix{{a, -a}, {-b, b}}); }

ValidationCode code_of(const IntMatrix& m) {
  try {
    PcbMatrix::validate(m);
  } catch (const ValidationError& e) {
    return e.code();
  }
  FAIL("expected a ValidationError");
  return ValidationCode::NonSquare;
}

std::vector<long> to_long(const ExponentVector& e) { return {e.begin(), e.end()}; }

// b(i)_j after simplifying with the row sums: the sum of a_{j,k} over k in
// the cyclic open interval (i, j); zero at positions i and i+1.
ExponentVector simplified_b(const PcbMatrix& p, std::size_t i) {
  const std::size_t n = p.size();
  ExponentVector b(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    if (j == i || j == (i + 1) % n) continue;
    for (std::size_t k = (i + 1) % n; k != j; k = (k + 1) % n) b[j] += p.a(j, k);
  }
  return b;
}

// sum_i x^{b(i)} f_i expanded without the library's polynomial type
support::TermMap syzygy_expansion(const PcbMatrix& p) {
  support::TermMap sum;
  const auto fs = generators(p);
  const auto bs = syzygy_vectors(p);
  for (std::size_t i = 0; i < fs.size(); ++i) {
    support::add_term(sum, support::add_exponents(to_long(bs[i]), to_long(fs[i].plus)), 1);
    support::add_term(sum, support::add_exponents(to_long(bs[i]), to_long(fs[i].minus)), -1);
  }
  return sum;
}

}  // namespace

TEST_CASE("validate accepts and rejects") {
  CHECK(simplest().size() == 4);
  CHECK(simplest().a(0, 1) == 1);
  CHECK(n2(1, 1).a(1, 0) == 1);

  try {
    PcbMatrix::validate(IntMatrix{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 3}});
    FAIL("row sum accepted");
  } catch (const ValidationError& e) {
    CHECK(e.code() == ValidationCode::RowSumNonzero);
    CHECK(e.row() == 3);
    CHECK(std::string(e.what()) == "RowSumNonzero(3)");
  }
  CHECK(code_of(IntMatrix(2, 3)) == ValidationCode::NonSquare);
  CHECK(code_of(IntMatrix{{0}}) == ValidationCode::TooSmall);
  CHECK(code_of(IntMatrix{{-1, 1}, {-1, 1}}) == ValidationCode::DiagonalSignError);
  CHECK(code_of(IntMatrix{{0, 0}, {-1, 1}}) == ValidationCode::DiagonalSignError);
  CHECK(code_of(IntMatrix{{2, 0, -2}, {-1, 2, -1}, {-1, -1, 2}}) == ValidationCode::NonPositiveOffDiagonal);
  CHECK(code_of(IntMatrix{{1, 1, -2}, {-1, 2, -1}, {-1, -1, 2}}) == ValidationCode::NonPositiveOffDiagonal);
  try {
    PcbMatrix::validate(IntMatrix{{2, 0, -2}, {-1, 2, -1}, {-1, -1, 2}});
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()) == "NonPositiveOffDiagonal(1,2)");
  }
}

TEST_CASE("generators read off the columns") {
  const auto f = generators(simplest());
  CHECK(f[0] == Binomial{{3, 0, 0, 0}, {0, 1, 1, 1}});
  CHECK(f[3] == Binomial{{0, 0, 0, 3}, {1, 1, 1, 0}});
  CHECK(generators(onecomp())[1] == Binomial{{0, 4, 0, 0}, {2, 0, 1, 1}});
  const auto g = generators(n2(1, 1));
  CHECK(g[0] == Binomial{{1, 0}, {0, 1}});
  CHECK(g[1] == Binomial{{0, 1}, {1, 0}});
}

TEST_CASE("associated vector") {
  const auto s = associated_vector(simplest());
  CHECK(s.m == IntVector{16, 16, 16, 16});
  CHECK(s.d == 16);
  CHECK(s.nu == IntVector{1, 1, 1, 1});
  const auto o = associated_vector(onecomp());
  CHECK(o.m == IntVector{20, 24, 31, 25});
  CHECK(o.d == 1);
  for (long a = 1; a <= 6; ++a)
    for (long b = 1; b <= 6; ++b) CHECK(associated_vector(n2(a, b)).m == IntVector{b, a});
}

TEST_CASE("grading degree") {
  CHECK(grading_degree(IntVector{1, 1, 1, 1}, {3, 0, 0, 0}) == 3);
  const IntVector nu{20, 24, 31, 25};
  CHECK(grading_degree(nu, {0, 4, 0, 0}) == 96);
  CHECK(grading_degree(nu, {2, 0, 1, 1}) == 96);
  CHECK(grading_degree(nu, {0, 0, 0, 0}) == 0);
  CHECK_THROWS_AS(grading_degree(nu, {1, 2}), std::invalid_argument);
}

TEST_CASE("syzygy vectors") {
  const PcbMatrix p3 = PcbMatrix::validate(IntMatrix{{3, -1, -2}, {-4, 7, -3}, {-5, -6, 11}});
  const auto b3 = syzygy_vectors(p3);
  CHECK(b3[0] == ExponentVector{0, 0, 6});  // a32
  CHECK(b3[1] == ExponentVector{2, 0, 0});  // a13
  CHECK(b3[2] == ExponentVector{0, 4, 0});  // a21
  CHECK(syzygy_vectors(simplest())[3] == ExponentVector{0, 1, 2, 0});
  const auto b2 = syzygy_vectors(n2(3, 5));
  CHECK(b2[0] == ExponentVector{0, 0});
  CHECK(b2[1] == ExponentVector{0, 0});
}

TEST_CASE("syzygy vectors match the displayed n=4 relation") {
  Rng rng(201);
  for (int c = 0; c < 50; ++c) {
    const PcbMatrix p = PcbMatrix::validate(support::random_pcb_matrix(rng, 4, 7));
    auto a = [&](int i, int j) { return p.a(i - 1, j - 1); };
    const auto b = syzygy_vectors(p);
    CHECK(b[0] == ExponentVector{0, 0, a(3, 2), a(4, 2) + a(4, 3)});
    CHECK(b[1] == ExponentVector{a(1, 3) + a(1, 4), 0, 0, a(4, 3)});
    CHECK(b[2] == ExponentVector{a(1, 4), a(2, 4) + a(2, 1), 0, 0});
    CHECK(b[3] == ExponentVector{0, a(2, 1), a(3, 1) + a(3, 2), 0});
  }
}

TEST_CASE("mixedness witness") {
  const Binomial g = mixedness_witness(simplest());
  CHECK(g.plus == ExponentVector{2, 0, 0, 2});
  CHECK(g.minus == ExponentVector{0, 2, 2, 0});
  CHECK_THROWS_AS(mixedness_witness(PcbMatrix::validate(support::diagonal_family(3))), DimensionTooSmall);
  Rng rng(202);
  for (int c = 0; c < 30; ++c) {
    const PcbMatrix p = PcbMatrix::validate(support::random_pcb_matrix(rng, 5, 6));
    CHECK(mixedness_witness(p).plus[4] == p.a(4, 4) - p.a(4, 0));
    CHECK(mixedness_witness(p).plus[4] >= 0);
  }
}

TEST_CASE("normalized SNF") {
  const auto s = normalized_snf(simplest());
  CHECK(s.P.row(3) == IntVector{1, 1, 1, 1});
  CHECK(s.D == (IntMatrix{{1, 0, 0, 0}, {0, 4, 0, 0}, {0, 0, 4, 0}, {0, 0, 0, 0}}));
  CHECK(s.invariant_factors == IntVector{1, 4, 4});

  for (long a = 1; a <= 8; ++a)
    for (long b = 1; b <= 8; ++b) {
      const long d = std::gcd(a, b);
      CHECK(normalized_snf(n2(a, b)).P.row(1) == IntVector{b / d, a / d});
    }
}

TEST_CASE("the displayed normal decomposition of the simplest matrix is valid") {
  const IntMatrix l = simplest().signed_matrix();
  const IntMatrix p{{1, 0, 0, 0}, {-1, 1, 0, 0}, {0, -1, 1, 0}, {1, 1, 1, 1}};
  const IntMatrix q{{1, 2, 1, 1}, {1, 3, 1, 1}, {1, 3, 2, 1}, {0, 0, 0, 1}};
  CHECK(p * l * q == (IntMatrix{{1, 0, 0, 0}, {0, 4, 0, 0}, {0, 0, 4, 0}, {0, 0, 0, 0}}));
  CHECK(abs(determinant(p)) == 1);
  CHECK(abs(determinant(q)) == 1);
  CHECK(p.row(3) == associated_vector(simplest()).nu);
}

TEST_CASE("small dimension closed forms") {
  const auto s2 = small_dim_decomposition(n2(6, 4));
  REQUIRE(s2);
  CHECK(s2->D == (IntMatrix{{2, 0}, {0, 0}}));
  CHECK(s2->P * n2(6, 4).signed_matrix() * s2->Q == s2->D);

  const PcbMatrix p3 = PcbMatrix::validate(IntMatrix{{3, -1, -2}, {-1, 2, -1}, {-2, -1, 3}});
  const auto s3 = small_dim_decomposition(p3);
  REQUIRE(s3);
  CHECK(s3->D == normalized_snf(p3).D);
  CHECK(s3->P.row(0) == IntVector{0, 0, 1});
  CHECK(s3->P.row(2) == associated_vector(p3).nu);
  CHECK(s3->P * p3.signed_matrix() * s3->Q == s3->D);

  CHECK_FALSE(small_dim_decomposition(simplest()));
  // gcd(a31, a32) = 2 but d_1 = 1
  CHECK_FALSE(small_dim_decomposition(PcbMatrix::validate(IntMatrix{{3, -1, -2}, {-1, 3, -2}, {-2, -2, 4}})));
}

TEST_CASE("torsion profile") {
  const auto s = torsion_profile(simplest());
  CHECK(s.fit0 == 0);
  CHECK(s.fit1 == 16);
  CHECK(s.torsion_order == 16);
  CHECK_FALSE(s.is_direct_summand);
  CHECK(s.cyclic_factors == IntVector{4, 4});
  const auto o = torsion_profile(onecomp());
  CHECK(o.torsion_order == 1);
  CHECK(o.is_direct_summand);
  CHECK(torsion_profile(n2(1, 1)).torsion_order == 1);
}

TEST_CASE("analysis summary") {
  const auto a = analyze(simplest());
  CHECK(a.counts.isolated == 16);
  CHECK(a.counts.embedded == 1);
  CHECK(a.counts.exact);
  CHECK_FALSE(a.counts_bound.exact);
  CHECK_FALSE(a.hull_prime);
  CHECK(analyze(onecomp()).hull_prime);
  CHECK(analyze(PcbMatrix::validate(support::diagonal_family(3))).counts.embedded == 0);
  CHECK(analyze(PcbMatrix::validate(support::diagonal_family(5))).counts.isolated == 125);
}

TEST_CASE("property: adjugate rows equal and positive, m L = 0, d = prod d_i") {
  Rng rng(203);
  for (int c = 0; c < 120; ++c) {
    const auto n = static_cast<std::size_t>(support::uniform(rng, 2, 6));
    const IntMatrix l = support::random_pcb_matrix(rng, n, 9);
    const PcbMatrix p = PcbMatrix::validate(l);
    const IntMatrix adj = adjugate(l);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        CHECK(adj(i, j) > 0);
        CHECK(adj(i, j) == adj(0, j));
      }
    const auto av = associated_vector(p);
    CHECK(av.m * l == IntVector(n, 0));
    Integer prod = 1;
    for (const auto& f : smith_normal_form(l).invariant_factors) prod *= f;
    CHECK(prod == av.d);
    CHECK(support::brute_minors_gcd(l, n - 1) == av.d);
    CHECK(gcd_of(av.nu) == 1);
  }
}

TEST_CASE("property: syzygy identity, homogeneity, non-negative b(i)") {
  Rng rng(204);
  for (int c = 0; c < 120; ++c) {
    const auto n = static_cast<std::size_t>(support::uniform(rng, 2, 6));
    const PcbMatrix p = PcbMatrix::validate(support::random_pcb_matrix(rng, n, 9));
    CHECK(syzygy_expansion(p).empty());
    const auto bs = syzygy_vectors(p);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(bs[i] == simplified_b(p, i));
      for (auto e : bs[i]) CHECK(e >= 0);
    }
    const auto nu = associated_vector(p).nu;
    for (const auto& f : generators(p)) CHECK(grading_degree(nu, f.plus) == grading_degree(nu, f.minus));
  }
}

TEST_CASE("property: witness identity x1 g = x_n^e f_1 + g_1 f_n") {
  Rng rng(205);
  for (int c = 0; c < 100; ++c) {
    const auto n = static_cast<std::size_t>(support::uniform(rng, 4, 6));
    const PcbMatrix p = PcbMatrix::validate(support::random_pcb_matrix(rng, n, 6));
    const Binomial g = mixedness_witness(p);
    const auto fs = generators(p);
    const auto [g1, g2] = witness_cofactors(p);
    std::vector<long> x1(n, 0), xn(n, 0);
    x1[0] = 1;
    xn[n - 1] = p.a(n - 1, n - 1) - p.a(n - 1, 0);
    support::TermMap sum;
    support::add_term(sum, support::add_exponents(x1, to_long(g.plus)), 1);
    support::add_term(sum, support::add_exponents(x1, to_long(g.minus)), -1);
    support::add_term(sum, support::add_exponents(xn, to_long(fs[0].plus)), -1);
    support::add_term(sum, support::add_exponents(xn, to_long(fs[0].minus)), 1);
    support::add_term(sum, support::add_exponents(to_long(g1), to_long(fs[n - 1].plus)), -1);
    support::add_term(sum, support::add_exponents(to_long(g1), to_long(fs[n - 1].minus)), 1);
    CHECK(sum.empty());
  }
}

TEST_CASE("property: normalized SNF and closed forms") {
  Rng rng(206);
  int closed_n3 = 0;
  for (int c = 0; c < 150; ++c) {
    const auto n = static_cast<std::size_t>(support::uniform(rng, 2, 5));
    const PcbMatrix p = PcbMatrix::validate(support::random_pcb_matrix(rng, n, 8));
    const SnfResult s = normalized_snf(p);
    CHECK(snf_contract_holds(p.signed_matrix(), s));
    CHECK(s.P.row(n - 1) == associated_vector(p).nu);
    if (const auto small = small_dim_decomposition(p)) {
      CHECK(small->D == s.D);
      CHECK(small->P * p.signed_matrix() * small->Q == small->D);
      CHECK(abs(determinant(small->P)) == 1);
      CHECK(abs(determinant(small->Q)) == 1);
      if (n == 3) ++closed_n3;
    }
    if (n == 2) CHECK(small_dim_decomposition(p).has_value());
  }
  CHECK(closed_n3 > 5);
}
