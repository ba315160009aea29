#pragma once

// The Gelfond exponential sum S(alpha, X) = sum_{0<=n<X} eps(n) e(alpha n),
// e(t) = exp(2 pi i t), at rational phases.

#include <complex>
#include <cstdint>

#include "thuemorse/digitseq.hpp"

namespace thuemorse {

using ComplexValue = std::complex<double>;

inline constexpr Natural kExpsumNaiveLimit = 10'000'000;

/// alpha = p/Q reduced mod 1 and by gcd, so 0 <= p < Q.
class RationalPhase {
 public:
  /// Throws std::invalid_argument for Q == 0 or Q > 2^62.
  RationalPhase(std::int64_t p, Natural Q);

  Natural numerator() const { return p_; }
  Natural denominator() const { return q_; }
  double value() const { return static_cast<double>(p_) / static_cast<double>(q_); }

  /// 2 alpha mod 1, exact.
  RationalPhase doubled() const;

  /// e(alpha). Phases above 1/2 are evaluated as the conjugate of e(1 - alpha),
  /// so e(alpha) and e(-alpha) are exact conjugates.
  ComplexValue unit() const;

  friend bool operator==(const RationalPhase&, const RationalPhase&) = default;

 private:
  Natural p_;
  Natural q_;
};

/// Direct left-to-right sum; rejects X > kExpsumNaiveLimit.
ComplexValue expsum_naive(const RationalPhase& alpha, Natural X);

/// f(X, a) = f(ceil(X/2), 2a) - e(a) f(floor(X/2), 2a), f(0) = 0, f(1) = 1.
/// O(log X) complex operations.
ComplexValue expsum_fast(const RationalPhase& alpha, Natural X);

/// prod_{j<k} (1 - e(2^j alpha)), equal to S(alpha, 2^k).
ComplexValue product_formula(const RationalPhase& alpha, Natural k);

struct PhaseScan {
  Natural X;
  Natural grid;
  Natural p;  // maximising numerator of p/grid; lowest p on ties
  double modulus;
};

/// max over p = 1..grid-1 of |S(p/grid, X)|. Throws for grid < 2.
PhaseScan scan_alpha(Natural X, Natural grid);

/// Gelfond's exponent ln 3 / ln 4.
inline const double kGelfondLambda = std::log(3.0) / std::log(4.0);

}  // namespace thuemorse
