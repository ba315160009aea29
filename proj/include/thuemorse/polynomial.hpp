#pragma once

// Dense univariate polynomials over checked 128-bit integers. Coefficients are
// stored lowest degree first.

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "thuemorse/int_matrix.hpp"

namespace thuemorse {

class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int128> coeffs);
  IntPoly(std::initializer_list<long long> coeffs);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Int128 leading() const { return c_.empty() ? 0 : c_.back(); }
  Int128 operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  const std::vector<Int128>& coefficients() const { return c_; }

  IntPoly derivative() const;
  std::complex<double> evaluate(std::complex<double> z) const;
  IntPoly operator-() const;
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  /// e.g. "x^3 - 2x^2 + 3x - 2".
  std::string to_string() const;

 private:
  void trim();
  std::vector<Int128> c_;
};

IntPoly operator*(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a, const IntPoly& b);

/// Largest integer dividing every coefficient (0 for the zero polynomial).
Int128 content(const IntPoly& p);
IntPoly primitive_part(const IntPoly& p);

/// Exact division by a monic divisor; throws if the remainder is nonzero.
IntPoly divide_exact(const IntPoly& a, const IntPoly& monic_divisor);

/// Monic gcd of two monic-divisible integer polynomials via the primitive
/// remainder sequence. Throws std::domain_error if the primitive gcd is not
/// monic up to sign.
IntPoly monic_gcd(const IntPoly& a, const IntPoly& b);

/// f = prod_k factor_k^k with pairwise coprime square-free monic factors.
/// Constant factors are omitted. Requires f monic.
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& f);

}  // namespace thuemorse
