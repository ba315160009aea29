#pragma once

// Eigen-data of transfer matrices: exact characteristic polynomials, complex
// roots with multiplicities, spectral radius and the exponent log2(radius),
// exact matrix-power growth and Jordan-block certification by rank.

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "thuemorse/correlation.hpp"
#include "thuemorse/int_matrix.hpp"
#include "thuemorse/polynomial.hpp"

namespace thuemorse {

class MonicIntPolynomial {
 public:
  /// Throws std::invalid_argument unless the leading coefficient is 1.
  explicit MonicIntPolynomial(IntPoly p);

  const IntPoly& poly() const { return p_; }
  int degree() const { return p_.degree(); }
  Int128 operator[](std::size_t i) const { return p_[i]; }
  std::complex<double> evaluate(std::complex<double> z) const { return p_.evaluate(z); }
  std::string to_string() const { return p_.to_string(); }

  friend bool operator==(const MonicIntPolynomial&, const MonicIntPolynomial&) = default;

 private:
  IntPoly p_;
};

/// Faddeev-LeVerrier trace recursion in checked 128-bit arithmetic.
/// Throws std::overflow_error on overflow and std::invalid_argument for dim > 64.
MonicIntPolynomial char_poly(const IntegerMatrix& m);

class RootFindingError : public std::runtime_error {
 public:
  RootFindingError(const std::string& what, std::vector<double> residuals)
      : std::runtime_error(what), residuals_(std::move(residuals)) {}
  const std::vector<double>& residuals() const { return residuals_; }

 private:
  std::vector<double> residuals_;
};

inline constexpr std::uint64_t kDefaultSeed = 20240501;

struct RootOptions {
  int max_iterations = 500;
  int max_restarts = 8;
  std::uint64_t seed = kDefaultSeed;
};

/// All complex roots, repeated by multiplicity. Each square-free factor of p
/// is solved with Aberth-Ehrlich iteration, then polished by Newton steps;
/// every root satisfies |p(z)| <= tol * (1 + |z|)^deg. Real input gives
/// conjugate-symmetric output. Throws RootFindingError on non-convergence.
std::vector<std::complex<double>> roots(const MonicIntPolynomial& p, double tol = 1e-6,
                                        const RootOptions& options = {});

struct Eigenvalue {
  std::complex<double> value;
  int multiplicity;
};

struct SpectralReport {
  Natural q = 0;
  MonicIntPolynomial poly{IntPoly{1}};
  std::vector<Eigenvalue> eigenvalues;  // by decreasing modulus
  double radius = 0.0;
  double exponent = 0.0;  // log2(radius)
  /// Exact multiplicities agree with clustering the roots at 1e-6.
  bool clustering_agrees = true;
};

SpectralReport spectral_report(const CorrelationSystem& sys, const RootOptions& options = {});

struct GrowthSample {
  Natural j;
  Int128 norm;  // max |entry| of M^j start
};

/// Exact iterates M^j start for j = 0..J. J <= 80; throws on overflow.
std::vector<GrowthSample> power_growth(const IntegerMatrix& m, const std::vector<Int128>& start, Natural J);

/// rank(M - eigval I) by fraction-free Gaussian elimination. dim - rank is the
/// geometric multiplicity of eigval.
std::size_t jordan_block_check(const IntegerMatrix& m, Int128 eigval);

}  // namespace thuemorse
