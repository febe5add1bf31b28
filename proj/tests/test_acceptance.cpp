// One PASS/FAIL line per acceptance criterion. Exits nonzero if any fails.

#include "pcb/decomp.hpp"
#include "support.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace pcb;
using support::Rng;

namespace {

using Clock = std::chrono::steady_clock;
using QPoly = Polynomial<Rationals>;
using FPoly = Polynomial<PrimeField>;
using QIdeal = Ideal<Rationals>;
using FIdeal = Ideal<PrimeField>;

const Rationals Q;

struct Outcome {
  bool pass = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      pass = false;
      note += (note.empty() ? "" : "; ") + what;
    }
  }
};

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.note = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (secs >= limit_s) o.require(false, "over time limit");
  if (!o.pass) ++failures;
  std::printf("%s criterion %d: %s [%.3f s, limit %.0f s]%s%s\n", o.pass ? "PASS" : "FAIL", id, title, secs, limit_s,
              o.note.empty() ? "" : " -- ", o.note.c_str());
  std::fflush(stdout);
}

PcbMatrix simplest() { return PcbMatrix::validate(support::diagonal_family(4)); }
PcbMatrix onecomp() {
  return PcbMatrix::validate(IntMatrix{{4, -2, -1, -1}, {-1, 4, -2, -1}, {-1, -1, 3, -1}, {-1, -1, -1, 3}});
}

template <class F>
Polynomial<F> var(const F& f, std::size_t n, std::size_t i) {
  return Polynomial<F>::variable(f, n, i);
}

QPoly qmono(const ExponentVector& e) { return QPoly::term(Q, e.size(), Monomial(e), 1); }
QPoly qbin(const ExponentVector& a, const ExponentVector& b) { return qmono(a) - qmono(b); }

std::vector<long> to_long(const ExponentVector& e) { return {e.begin(), e.end()}; }

// f_j read straight off column j of L.
std::pair<std::vector<long>, std::vector<long>> column_binomial(const IntMatrix& l, std::size_t j) {
  const std::size_t n = l.rows();
  std::vector<long> plus(n, 0), minus(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (i == j)
      plus[i] = l(i, j).get_si();
    else
      minus[i] = -l(i, j).get_si();
  }
  return {plus, minus};
}

support::TermMap syzygy_expansion(const PcbMatrix& p) {
  support::TermMap sum;
  const auto bs = syzygy_vectors(p);
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto [plus, minus] = column_binomial(p.signed_matrix(), i);
    support::add_term(sum, support::add_exponents(to_long(bs[i]), plus), 1);
    support::add_term(sum, support::add_exponents(to_long(bs[i]), minus), -1);
  }
  return sum;
}

std::vector<PcbMatrix> criterion4_corpus() {
  Rng rng(2024);
  std::vector<PcbMatrix> out;
  for (int c = 0; c < 24; ++c) out.push_back(PcbMatrix::validate(support::random_pcb_matrix(rng, c % 2 ? 4 : 3, 4)));
  return out;
}

template <class V>
std::string show(const V& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

}  // namespace

int main() {
  criterion(1, "simplest n=4 golden", 1, [] {
    Outcome o;
    const PcbMatrix p = simplest();
    const auto av = associated_vector(p);
    const auto snf = normalized_snf(p);
    o.require(av.m == IntVector{16, 16, 16, 16}, "m = " + show(av.m));
    o.require(av.d == 16, "d = " + av.d.get_str());
    o.require(snf.invariant_factors == IntVector{1, 4, 4}, "invariant factors " + show(snf.invariant_factors));
    o.require(snf.D == (IntMatrix{{1, 0, 0, 0}, {0, 4, 0, 0}, {0, 0, 4, 0}, {0, 0, 0, 0}}), "D");
    o.require(snf.P.row(3) == IntVector{1, 1, 1, 1}, "last row of P = " + show(snf.P.row(3)));
    return o;
  });

  criterion(2, "onecomp golden", 1, [] {
    Outcome o;
    const PcbMatrix p = onecomp();
    const auto av = associated_vector(p);
    o.require(av.m == IntVector{20, 24, 31, 25}, "m = " + show(av.m));
    o.require(av.d == 1, "d = " + av.d.get_str());
    o.require(hull_is_prime(p), "hull not prime");
    const auto c = embedded_component(p, Q);
    o.require(c.generator == ExponentVector{0, 1, 2, 0}, "embedded generator " + show(c.generator));
    o.require(c.ideal == pcb_ideal(p, Q) + QIdeal(Q, 4, {qmono({0, 1, 2, 0})}), "embedded ideal");
    return o;
  });

  criterion(3, "colon(I, x1) over Q and saturation exponent", 30, [] {
    Outcome o;
    const QIdeal i = pcb_ideal(simplest(), Q);
    const QIdeal listed =
        i + QIdeal(Q, 4, {qbin({2, 2, 0, 0}, {0, 0, 2, 2}), qbin({2, 0, 2, 0}, {0, 2, 0, 2}), qbin({2, 0, 0, 2}, {0, 2, 2, 0})});
    const QIdeal c = colon(i, var(Q, 4, 0));
    o.require(c.contains(listed), "listed binomials not in I : x1");
    o.require(listed.contains(c), "I : x1 larger than listed");
    const auto sat = saturate(i, var(Q, 4, 0));
    o.require(sat.exponent == 1, "saturation exponent " + std::to_string(sat.exponent));
    return o;
  });

  const auto corpus = criterion4_corpus();

  criterion(4, "hull triple agreement on 24 random matrices, n in {3,4}, entries <= 4", 300, [&] {
    Outcome o;
    for (std::size_t c = 0; c < corpus.size(); ++c) {
      const auto r = hull_routes(corpus[c], Q);
      o.require(r.colon_i == r.colon_j, "case " + std::to_string(c) + ": I:x^b != J:x^b");
      o.require(r.colon_j == r.saturated, "case " + std::to_string(c) + ": J:x^b != I:x1^inf");
    }
    return o;
  });

  criterion(5, "unmixedness dichotomy with symbolic witness", 300, [&] {
    Outcome o;
    for (std::size_t c = 0; c < corpus.size(); ++c) {
      const PcbMatrix& p = corpus[c];
      const bool unmixed = unmixedness_test(p, Q);
      const std::string tag = "case " + std::to_string(c);
      if (p.size() <= 3) {
        o.require(unmixed, tag + ": n <= 3 reported mixed");
        continue;
      }
      o.require(!unmixed, tag + ": n >= 4 reported unmixed");
      o.require(witness_identity_holds(p), tag + ": witness identity does not expand to zero");
      const Binomial g = mixedness_witness(p);
      const QIdeal i = pcb_ideal(p, Q);
      const QPoly gp = qbin(g.plus, g.minus);
      o.require(!i.contains(gp), tag + ": witness lies in I");
      o.require(i.contains(var(Q, 4, 0) * gp), tag + ": x1 g not in I");
    }
    return o;
  });

  criterion(6, "full decomposition over F5, 16 + 1 components, all irredundant", 120, [] {
    Outcome o;
    const auto rep = verify_full_decomposition(simplest(), 5);
    o.require(rep.isolated == 16, "isolated = " + std::to_string(rep.isolated));
    o.require(rep.has_embedded, "no embedded component");
    o.require(rep.intersection_equals_ideal, "intersection differs from I");
    o.require(rep.irredundant.size() == 17, "irredundancy vector size");
    for (std::size_t k = 0; k < rep.irredundant.size(); ++k)
      o.require(rep.irredundant[k], "component " + std::to_string(k + 1) + " redundant");
    return o;
  });

  criterion(7, "F2: a^4 in S(I) in a, S(I) != I, two primary components", 30, [] {
    Outcome o;
    const PrimeField f2(2);
    const PcbMatrix p = simplest();
    const FIdeal i = pcb_ideal(p, f2);
    const FIdeal s = hull(p, f2);
    const FIdeal a(f2, 4, {var(f2, 4, 0) - var(f2, 4, 3), var(f2, 4, 1) - var(f2, 4, 3), var(f2, 4, 2) - var(f2, 4, 3)});
    const auto rep = verify_full_decomposition(p, 2);
    o.require(a.contains(s), "S(I) not inside a");
    o.require(!(s == i), "S(I) == I");
    o.require(rep.hull_meets_embedded, "S(I) cap (I + x2 x3^2) != I");
    const bool fourth = s.contains(power(a, 4));
    std::string least = "none up to 16";
    if (rep.primary_exponent) least = std::to_string(rep.primary_exponent);
    o.require(rep.primary_exponent > 0, "no power of a inside S(I)");
    o.require(fourth, "a^4 is not contained in S(I); least N with a^N in S(I) is " + least +
                          " (S(I) is still a-primary, so the two-component conclusion holds)");
    return o;
  });

  criterion(8, "diagonal family n = 3, 4, 5", 1, [] {
    Outcome o;
    for (std::size_t n : {3u, 4u, 5u}) {
      const PcbMatrix p = PcbMatrix::validate(support::diagonal_family(n));
      IntVector want(n - 1, Integer(long(n)));
      want[0] = 1;
      Integer d = 1;
      for (std::size_t k = 0; k + 2 < n; ++k) d *= long(n);
      const auto snf = normalized_snf(p);
      o.require(snf.invariant_factors == want, "n=" + std::to_string(n) + " factors " + show(snf.invariant_factors));
      o.require(associated_vector(p).d == d, "n=" + std::to_string(n) + " d");
    }
    return o;
  });

  criterion(9, "property suites, >= 100 cases each", 600, [] {
    Outcome o;
    const int kCases = 120;

    Rng rng(9001);
    for (int c = 0; c < kCases; ++c) {
      const auto n = static_cast<std::size_t>(support::uniform(rng, 2, 5));
      const PcbMatrix p = PcbMatrix::validate(support::random_pcb_matrix(rng, n, 6));
      const IntMatrix& l = p.signed_matrix();
      const std::string tag = " (case " + std::to_string(c) + ")";

      // SNF contract with brute-force Delta_t
      const SnfResult snf = smith_normal_form(l);
      bool snf_ok = snf.P * l * snf.Q == snf.D && abs(support::laplace_det(snf.P)) == 1 &&
                    abs(support::laplace_det(snf.Q)) == 1;
      Integer prev = 1;
      for (std::size_t t = 1; t <= snf.rank(); ++t) {
        const Integer delta = support::brute_minors_gcd(l, t);
        snf_ok = snf_ok && delta == prev * snf.invariant_factors[t - 1];
        if (t > 1) snf_ok = snf_ok && snf.invariant_factors[t - 1] % snf.invariant_factors[t - 2] == 0;
        prev = delta;
      }
      o.require(snf_ok, "SNF contract" + tag);

      // adjugate rows equal and positive, from Laplace cofactors
      bool adj_ok = true;
      std::vector<Integer> row0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          std::vector<std::size_t> rows, cols;
          for (std::size_t r = 0; r < n; ++r)
            if (r != j) rows.push_back(r);
          for (std::size_t s = 0; s < n; ++s)
            if (s != i) cols.push_back(s);
          const Integer cof = (n == 1) ? Integer(1)
                                       : Integer(((i + j) % 2 ? -1 : 1) *
                                                 support::laplace_det(support::minor_matrix(l, rows, cols)));
          if (i == 0) row0.push_back(cof);
          adj_ok = adj_ok && cof > 0 && cof == row0[j];
        }
      o.require(adj_ok, "adjugate rows" + tag);

      // d = product of invariant factors
      Integer prod = 1;
      for (const auto& f : snf.invariant_factors) prod *= f;
      o.require(associated_vector(p).d == prod, "d != prod d_i" + tag);

      o.require(syzygy_expansion(p).empty(), "syzygy identity" + tag);
    }

    Rng lrng(9002);
    for (int c = 0; c < kCases; ++c) {
      const IntMatrix m = support::random_matrix(lrng, 3, 3, -5, 5);
      IntVector v(3);
      for (auto& x : v) x = support::uniform(lrng, -8, 8);
      if (c % 2 == 0) v = m * IntVector{support::uniform(lrng, -4, 4), support::uniform(lrng, -4, 4), 0};
      const auto cert = lattice_contains(m, v);
      const bool brute = support::brute_lattice(m, v, 8);
      o.require(!brute || cert.has_value(), "lattice_contains missed a point (case " + std::to_string(c) + ")");
      o.require(!cert || m * *cert == v, "bad lattice certificate (case " + std::to_string(c) + ")");
    }

    Rng krng(9003);
    int killed = 0;
    while (killed < kCases) {
      const auto n = static_cast<std::size_t>(support::uniform(krng, 2, 4));
      const PcbMatrix p = PcbMatrix::validate(support::random_pcb_matrix(krng, n, 4));
      if (associated_vector(p).d > 2000) continue;
      for (const auto& s : enumerate_components(p))
        for (std::size_t j = 0; j < n; ++j) {
          Integer acc = 0;
          for (std::size_t i = 0; i < n; ++i) acc += p.signed_matrix()(i, j) * s.coeff_exponents[i];
          o.require(acc % s.root_order == 0, "component does not kill column " + std::to_string(j + 1));
        }
      ++killed;
    }
    return o;
  });

  criterion(10, "conjugate pair over F5 intersects to I_{2,4} mod 5", 10, [] {
    Outcome o;
    const PrimeField f5(5);
    const auto specs = enumerate_components(simplest());
    const auto comps = realize_over_prime_field(simplest(), 5);
    o.require(root_of_unity(5, 4) == 2, "i is not realized as 2");
    // (t, -it, it, t) and (t, it, -it, t)
    const std::vector<std::vector<std::int64_t>> wanted = {{0, 3, 1, 0}, {0, 1, 3, 0}};
    std::vector<FIdeal> pair;
    for (const auto& w : wanted)
      for (std::size_t k = 0; k < specs.size(); ++k)
        if (specs[k].coeff_exponents == w) pair.push_back(comps[k]);
    o.require(pair.size() == 2, "conjugate components not found");
    if (pair.size() != 2) return o;
    const FIdeal expected(f5, 4, {var(f5, 4, 0) - var(f5, 4, 3), var(f5, 4, 1) + var(f5, 4, 2),
                                  var(f5, 4, 2).pow(2) + var(f5, 4, 3).pow(2)});
    o.require(intersect(pair[0], pair[1]) == expected, "intersection differs");
    return o;
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
