#include "thuemorse/expsum.hpp"

#include <bit>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "thuemorse/kernels.hpp"

namespace thuemorse {

RationalPhase::RationalPhase(std::int64_t p, Natural Q) {
  if (Q == 0) throw std::invalid_argument("phase denominator must be positive");
  if (Q > (Natural{1} << 62)) throw std::invalid_argument("phase denominator exceeds 2^62");
  const auto q128 = static_cast<__int128>(Q);
  auto r = static_cast<__int128>(p) % q128;
  if (r < 0) r += q128;
  Natural num = static_cast<Natural>(r);
  const Natural g = std::gcd(num, Q);
  p_ = num / g;
  q_ = Q / g;
}

RationalPhase RationalPhase::doubled() const {
  RationalPhase out = *this;
  if (q_ % 2 == 0) {
    // p is odd here, so p/(Q/2) is already reduced.
    out.q_ = q_ / 2;
    out.p_ = p_ % out.q_;
  } else {
    out.p_ = (2 * p_) % q_;
  }
  return out;
}

ComplexValue RationalPhase::unit() const {
  if (p_ == 0) return {1.0, 0.0};
  if (2 * p_ == q_) return {-1.0, 0.0};
  if (2 * p_ > q_) return std::conj(RationalPhase(static_cast<std::int64_t>(q_ - p_), q_).unit());
  const double angle = 2.0 * std::numbers::pi * (static_cast<double>(p_) / static_cast<double>(q_));
  return std::polar(1.0, angle);
}

ComplexValue expsum_naive(const RationalPhase& alpha, Natural X) {
  if (X > kExpsumNaiveLimit) throw std::out_of_range("expsum_naive: X exceeds 10^7");
  const Natural Q = alpha.denominator();
  const Natural p = alpha.numerator();
  ComplexValue sum{0.0, 0.0};
  for (Natural n = 0; n < X; ++n) {
    const auto phase = static_cast<Natural>((static_cast<unsigned __int128>(p) * n) % Q);
    const ComplexValue term = RationalPhase(static_cast<std::int64_t>(phase), Q).unit();
    sum += eps(n).value() > 0 ? term : -term;
  }
  return sum;
}

ComplexValue expsum_fast(const RationalPhase& alpha, Natural X) {
  if (X > kMaxNatural) throw std::out_of_range("expsum_fast: X exceeds 2^62");
  const int depth = std::bit_width(X);
  if (depth <= 1) return X == 0 ? ComplexValue{0.0, 0.0} : ComplexValue{1.0, 0.0};

  std::vector<ComplexValue> twist(static_cast<std::size_t>(depth));
  RationalPhase a = alpha;
  for (int d = 0; d < depth; ++d) {
    twist[static_cast<std::size_t>(d)] = a.unit();
    a = a.doubled();
  }

  // Level d only needs f at floor(X/2^d) and floor(X/2^d) + 1.
  Natural low = 0;
  ComplexValue f_low{0.0, 0.0};
  ComplexValue f_high{1.0, 0.0};
  for (int d = depth - 1; d >= 0; --d) {
    const Natural base = X >> d;
    auto lookup = [&](Natural x) -> ComplexValue {
      if (x == low) return f_low;
      if (x == low + 1) return f_high;
      throw std::logic_error("halving recursion left its two-value window");
    };
    const ComplexValue e = twist[static_cast<std::size_t>(d)];
    auto compute = [&](Natural x) -> ComplexValue {
      if (x <= 1) return x == 0 ? ComplexValue{0.0, 0.0} : ComplexValue{1.0, 0.0};
      return lookup((x + 1) / 2) - e * lookup(x / 2);
    };
    const ComplexValue next_low = compute(base);
    const ComplexValue next_high = compute(base + 1);
    f_low = next_low;
    f_high = next_high;
    low = base;
  }
  return f_low;
}

ComplexValue product_formula(const RationalPhase& alpha, Natural k) {
  if (k > 62) throw std::out_of_range("product_formula: k exceeds 62");
  ComplexValue prod{1.0, 0.0};
  RationalPhase a = alpha;
  for (Natural j = 0; j < k; ++j) {
    prod *= ComplexValue{1.0, 0.0} - a.unit();
    a = a.doubled();
  }
  return prod;
}

PhaseScan scan_alpha(Natural X, Natural grid) {
  if (grid < 2) throw std::invalid_argument("grid must be at least 2");
  if (grid > (Natural{1} << 24)) throw std::out_of_range("grid exceeds 2^24");
  const std::vector<double> moduli = kernels::parallel::phase_moduli(X, grid);
  PhaseScan best{X, grid, 1, moduli.front()};
  for (Natural p = 2; p < grid; ++p) {
    const double m = moduli[p - 1];
    if (m > best.modulus) {
      best.modulus = m;
      best.p = p;
    }
  }
  return best;
}

}  // namespace thuemorse
