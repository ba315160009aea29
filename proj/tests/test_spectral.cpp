#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "thuemorse/spectral.hpp"

using namespace thuemorse;
using cplx = std::complex<double>;

namespace {

std::vector<long long> coeffs(const MonicIntPolynomial& p) {
  std::vector<long long> out;
  for (Int128 c : p.poly().coefficients()) out.push_back(static_cast<long long>(c));
  return out;
}

std::vector<std::vector<long long>> rows_of(const IntegerMatrix& m) {
  std::vector<std::vector<long long>> rows(m.dim(), std::vector<long long>(m.dim()));
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) rows[i][j] = static_cast<long long>(m(i, j));
  return rows;
}

IntegerMatrix random_matrix(std::size_t n, std::mt19937_64& rng) {
  IntegerMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<Int128>(rng() % 7) - 3;
  return m;
}

// p(M) by Horner in exact arithmetic.
IntegerMatrix evaluate_at(const MonicIntPolynomial& p, const IntegerMatrix& m) {
  const std::size_t n = m.dim();
  IntegerMatrix acc(n);
  for (int i = p.degree(); i >= 0; --i) {
    acc = acc * m;
    for (std::size_t d = 0; d < n; ++d) acc(d, d) = checked_add(acc(d, d), p[static_cast<std::size_t>(i)]);
  }
  return acc;
}

bool contains(const std::vector<cplx>& zs, cplx z, double tol) {
  for (const auto& w : zs)
    if (std::abs(w.real() - z.real()) <= tol && std::abs(w.imag() - z.imag()) <= tol) return true;
  return false;
}

}  // namespace

TEST_CASE("char_poly examples") {
  CHECK(coeffs(char_poly(IntegerMatrix::identity(2))) == std::vector<long long>{1, -2, 1});
  const auto a = build_transfer(3).transfer().transpose();
  CHECK(coeffs(char_poly(a)) == std::vector<long long>{-2, 3, -2, 1});
  CHECK(char_poly(a).to_string() == "x^3 - 2x^2 + 3x - 2");
  const auto a1 = build_transfer(5).transfer().transpose();
  CHECK(coeffs(char_poly(a1)) == std::vector<long long>{2, -5, 4, 0, -2, 1});
  CHECK(char_poly(a1).poly() == IntPoly{1, -2, 1} * IntPoly{2, -1, 0, 1});
}

TEST_CASE("char_poly agrees with cofactor expansion") {
  for (Natural q = 3; q <= 9; q += 2) {
    const auto t = build_transfer(q).transfer();
    REQUIRE(coeffs(char_poly(t)) == oracle::char_poly(rows_of(t)));
    REQUIRE(coeffs(char_poly(t.transpose())) == oracle::char_poly(rows_of(t)));
  }
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const auto m = random_matrix(1 + trial % 7, rng);
    REQUIRE(coeffs(char_poly(m)) == oracle::char_poly(rows_of(m)));
  }
}

TEST_CASE("Cayley-Hamilton holds exactly up to dimension 8") {
  std::mt19937_64 rng(5);
  for (std::size_t n = 1; n <= 8; ++n)
    for (int trial = 0; trial < 5; ++trial) {
      const auto m = random_matrix(n, rng);
      REQUIRE(evaluate_at(char_poly(m), m) == IntegerMatrix(n));
    }
  for (Natural q : {3, 5, 7}) {
    const auto t = build_transfer(q).transfer();
    REQUIRE(evaluate_at(char_poly(t), t) == IntegerMatrix(t.dim()));
  }
}

TEST_CASE("char_poly reports overflow instead of wrapping") {
  IntegerMatrix m(6);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) m(i, j) = static_cast<Int128>(1 + (3 * i + 5 * j * j) % 7) << 40;
  CHECK_THROWS_AS(char_poly(m), std::overflow_error);
  CHECK_THROWS_AS(char_poly(IntegerMatrix(65)), std::invalid_argument);
}

TEST_CASE("roots examples") {
  const auto i_roots = roots(MonicIntPolynomial(IntPoly{1, 0, 1}));
  REQUIRE(i_roots.size() == 2);
  CHECK(contains(i_roots, {0.0, 1.0}, 1e-12));
  CHECK(contains(i_roots, {0.0, -1.0}, 1e-12));

  const auto cubic = roots(MonicIntPolynomial(IntPoly{-2, 3, -2, 1}));
  REQUIRE(cubic.size() == 3);
  const double s7 = std::sqrt(7.0) / 2.0;
  CHECK(contains(cubic, {1.0, 0.0}, 1e-9));
  CHECK(contains(cubic, {0.5, s7}, 1e-9));
  CHECK(contains(cubic, {0.5, -s7}, 1e-9));
  CHECK(std::abs(s7 - 1.3228756) < 1e-7);

  const auto c2 = roots(MonicIntPolynomial(IntPoly{2, -1, 0, 1}));
  double biggest = 0.0;
  for (const auto& z : c2) biggest = std::max(biggest, std::abs(z));
  CHECK(biggest == doctest::Approx(1.52138).epsilon(1e-5));
  CHECK(std::floor(biggest * 1e5) == 152137.0);  // truncated decimal 1.52137...
}

TEST_CASE("roots satisfy Vieta and the residual bound") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + trial % 7;
    const auto m = random_matrix(n, rng);
    const auto p = char_poly(m);
    const auto zs = roots(p);
    REQUIRE(zs.size() == n);
    cplx sum = 0.0, prod = 1.0;
    for (const auto& z : zs) {
      sum += z;
      prod *= z;
      REQUIRE(std::abs(p.evaluate(z)) <= 1e-6 * std::pow(1.0 + std::abs(z), static_cast<double>(n)));
    }
    const double tr = static_cast<double>(m.trace());
    const double c0 = static_cast<double>(p[0]) * (n % 2 ? -1.0 : 1.0);
    REQUIRE(std::abs(sum - tr) <= 1e-8 * std::max(1.0, std::abs(tr)) + 1e-8);
    REQUIRE(std::abs(prod - c0) <= 1e-8 * std::max(1.0, std::abs(c0)) + 1e-8);
    for (const auto& z : zs) REQUIRE(contains(zs, std::conj(z), 0.0));
  }
}

TEST_CASE("roots reports non-convergence") {
  RootOptions starved;
  starved.max_iterations = 0;
  starved.max_restarts = 0;
  CHECK_THROWS_AS(roots(MonicIntPolynomial(IntPoly{-2, 3, -2, 1}), 1e-12, starved), RootFindingError);
  CHECK_THROWS_AS(roots(MonicIntPolynomial(IntPoly{1})), std::invalid_argument);
  CHECK_THROWS_AS(MonicIntPolynomial(IntPoly{1, 2}), std::invalid_argument);
}

TEST_CASE("square-free decomposition") {
  const IntPoly f = IntPoly{-1, 1} * IntPoly{-1, 1} * IntPoly{-1, 1} * IntPoly{2, 0, 1} * IntPoly{2, 0, 1} *
                    IntPoly{3, 1};
  const auto parts = squarefree_decomposition(f);
  REQUIRE(parts.size() == 3);
  CHECK(parts[0].first == IntPoly{3, 1});
  CHECK(parts[0].second == 1);
  CHECK(parts[1].first == IntPoly{2, 0, 1});
  CHECK(parts[1].second == 2);
  CHECK(parts[2].first == IntPoly{-1, 1});
  CHECK(parts[2].second == 3);

  // Square-free with large coefficients: the gcd must not overflow.
  const IntPoly big{-9, 40, -311, 2048, -17, 999, 123456, -7, 3, 77, 1};
  const auto single = squarefree_decomposition(big);
  REQUIRE(single.size() == 1);
  CHECK(single[0].first == big);
}

TEST_CASE("spectral report for q = 3") {
  const auto rep = spectral_report(build_transfer(3));
  CHECK(std::abs(rep.radius - std::sqrt(2.0)) <= 1e-9);
  CHECK(std::abs(rep.exponent - 0.5) <= 1e-9);
  CHECK(rep.clustering_agrees);
  int total = 0;
  for (const auto& e : rep.eigenvalues) total += e.multiplicity;
  CHECK(total == 3);
}

TEST_CASE("spectral report for q = 5") {
  const auto rep = spectral_report(build_transfer(5));
  CHECK(rep.radius == doctest::Approx(1.52138).epsilon(1e-5));
  CHECK(rep.exponent >= 0.60537);
  CHECK(rep.exponent <= 0.60539);
  CHECK(std::abs(rep.exponent - 0.60538) <= 1e-4);
  bool double_one = false;
  for (const auto& e : rep.eigenvalues)
    if (std::abs(e.value - cplx{1.0, 0.0}) < 1e-12 && e.multiplicity == 2) double_one = true;
  CHECK(double_one);
  CHECK(rep.clustering_agrees);
  // The dominant root is the negative real root of x^3 - x + 2.
  CHECK(rep.eigenvalues.front().value.real() < 0.0);
}

TEST_CASE("spectral report for q = 7 has radius above 1") {
  const auto rep = spectral_report(build_transfer(7));
  CHECK(rep.radius > 1.0);
  CHECK(rep.radius == doctest::Approx((1.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-12));
}

TEST_CASE("spectral report is reproducible across seeds") {
  RootOptions a, b;
  b.seed = 99;
  CHECK(spectral_report(build_transfer(9), a).radius == spectral_report(build_transfer(9), b).radius);
}

TEST_CASE("power_growth") {
  const auto id = power_growth(IntegerMatrix::identity(3), {2, -5, 1}, 10);
  REQUIRE(id.size() == 11);
  for (const auto& s : id) CHECK(s.norm == 5);

  const double rho5 = spectral_report(build_transfer(5)).radius;
  struct Case {
    Natural q;
    double rho, lo, hi;
  };
  for (const Case c : {Case{3, std::sqrt(2.0), 0.25, 1.25}, Case{5, rho5, 0.1, 0.5}}) {
    const auto a = build_transfer(c.q).transfer().transpose();
    for (Natural s = 0; s < c.q; ++s) {
      std::vector<Int128> start(c.q, 0);
      start[s] = 1;
      for (const auto& g : power_growth(a, start, 80)) {
        if (g.j < 10) continue;
        const double ratio = static_cast<double>(g.norm) / std::pow(c.rho, static_cast<double>(g.j));
        REQUIRE(ratio >= c.lo);
        REQUIRE(ratio <= c.hi);
      }
    }
  }
  CHECK_THROWS_AS(power_growth(IntegerMatrix::identity(2), {1, 1}, 81), std::invalid_argument);
  const IntegerMatrix big{{1LL << 40, 0}, {0, 1}};
  CHECK_THROWS_AS(power_growth(big, {1, 0}, 80), std::overflow_error);
}

TEST_CASE("jordan_block_check") {
  CHECK(jordan_block_check(IntegerMatrix::identity(3), 1) == 0);
  CHECK(jordan_block_check(build_transfer(5).transfer(), 1) == 4);
  CHECK(jordan_block_check(build_transfer(5).transfer().transpose(), 1) == 4);
  CHECK(jordan_block_check(build_transfer(3).transfer(), 1) == 2);
  CHECK(jordan_block_check(IntegerMatrix{{2, 4}, {1, 2}}, 0) == 1);
  CHECK(jordan_block_check(IntegerMatrix{{0, 0}, {0, 0}}, 0) == 0);
}
