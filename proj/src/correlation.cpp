#include "thuemorse/correlation.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>
#include <string>

#include "thuemorse/kernels.hpp"

namespace thuemorse {

namespace {

void require_odd(Natural q) {
  if (q % 2 == 0) throw std::invalid_argument("multiplier must be odd");
  if (q < 3) throw std::invalid_argument("multiplier must be at least 3");
  if (q > (Natural{1} << 20)) throw std::out_of_range("multiplier too large");
}

void require_shift(Natural q, Natural r) {
  if (r >= q) throw std::invalid_argument("shift must satisfy r < q (got r=" + std::to_string(r) + ")");
}

void require_fast_range(Natural X) {
  if (X > kMaxNatural) throw std::out_of_range("X exceeds 2^62");
}

void require_naive_range(Natural q, Natural r, Natural X) {
  if (X > kNaiveLimit) throw std::out_of_range("X exceeds the direct-loop guard 2^32; use the fast path");
  if (X != 0 && (std::numeric_limits<Natural>::max() - r) / q < X) throw std::out_of_range("q*X + r overflows");
}

using Vec = std::vector<std::int64_t>;

}  // namespace

HalvingStep halving_step(Natural q, Natural r, SumKind kind) {
  HalvingStep step{};
  if (r % 2 == 0) {
    // 2qk + r = 2(qk + r/2);  q(2k+1) + r = 2(qk + (q+r-1)/2) + 1.
    step.even_shift = static_cast<std::size_t>(r / 2);
    step.even_sign = +1;
    step.odd_shift = static_cast<std::size_t>((q + r - 1) / 2);
    step.odd_sign = -1;
  } else {
    // 2qk + r = 2(qk + (r-1)/2) + 1;  q(2k+1) + r = 2(qk + (q+r)/2).
    step.even_shift = static_cast<std::size_t>((r - 1) / 2);
    step.even_sign = -1;
    step.odd_shift = static_cast<std::size_t>((q + r) / 2);
    step.odd_sign = +1;
  }
  // The correlation also carries eps(2k+1) = -eps(k) from the first factor.
  if (kind == SumKind::correlation) step.odd_sign = -step.odd_sign;
  return step;
}

CorrelationSystem::CorrelationSystem(Natural q) : q_(q) {
  require_odd(q);
  if (q > 4095) throw std::out_of_range("transfer matrix limited to q < 4096");
  transfer_ = IntegerMatrix(static_cast<std::size_t>(q));
  for (Natural r = 0; r < q; ++r) {
    const HalvingStep s = halving_step(q, r);
    if (s.even_shift >= q || s.odd_shift >= q) throw std::logic_error("shift alphabet not closed under halving");
    transfer_(r, s.even_shift) += s.even_sign;
    transfer_(r, s.odd_shift) += s.odd_sign;
  }
}

CorrelationSystem build_transfer(Natural q) { return CorrelationSystem(q); }

Vec prefix_sums_from_zero(Natural q, std::size_t alphabet, Natural X, SumKind kind) {
  if (alphabet < q) throw std::invalid_argument("alphabet must cover 0..q-1");
  std::vector<HalvingStep> steps(alphabet);
  for (std::size_t r = 0; r < alphabet; ++r) {
    steps[r] = halving_step(q, r, kind);
    if (steps[r].even_shift >= alphabet || steps[r].odd_shift >= alphabet)
      throw std::logic_error("shift alphabet not closed under halving");
  }

  Vec base(alphabet);
  for (std::size_t r = 0; r < alphabet; ++r) base[r] = eps(r).value();

  // Level d only needs the sums at floor(X/2^d) and floor(X/2^d) - 1.
  const int depth = std::bit_width(X);
  Natural top = 0;
  Vec hi = base;  // sums at `top`
  Vec lo;         // sums at `top - 1`, valid when top >= 1

  for (int d = depth - 1; d >= 0; --d) {
    const Natural t = X >> d;
    auto lookup = [&](Natural x) -> const Vec& {
      if (x == top) return hi;
      if (top >= 1 && x == top - 1) return lo;
      throw std::logic_error("halving recursion left its two-value window");
    };
    auto compute = [&](Natural x) -> Vec {
      if (x == 0) return base;
      const Vec& even = lookup(x / 2);
      const Vec& odd = lookup((x - 1) / 2);
      Vec out(alphabet);
      for (std::size_t r = 0; r < alphabet; ++r)
        out[r] = steps[r].even_sign * even[steps[r].even_shift] + steps[r].odd_sign * odd[steps[r].odd_shift];
      return out;
    };
    Vec new_hi = compute(t);
    Vec new_lo = t >= 1 ? compute(t - 1) : Vec{};
    hi = std::move(new_hi);
    lo = std::move(new_lo);
    top = t;
  }
  return hi;
}

namespace {

Vec exact_all(Natural q, std::size_t alphabet, Natural X, SumKind kind) {
  Vec v = prefix_sums_from_zero(q, alphabet, X, kind);
  for (std::size_t r = 0; r < alphabet; ++r) v[r] -= eps(r).value();
  return v;
}

}  // namespace

std::int64_t corr_naive(Natural q, Natural r, Natural X) {
  require_odd(q);
  require_shift(q, r);
  require_naive_range(q, r, X);
  return kernels::parallel::correlation(q, r, X);
}

std::int64_t dilation_naive(Natural q, Natural r, Natural X) {
  require_odd(q);
  require_shift(q, r);
  require_naive_range(q, r, X);
  return kernels::parallel::dilation(q, r, X);
}

Vec corr_fast_all(Natural q, Natural X) {
  require_odd(q);
  require_fast_range(X);
  return exact_all(q, static_cast<std::size_t>(q), X, SumKind::correlation);
}

Vec dilation_sum_all(Natural q, Natural X) {
  require_odd(q);
  require_fast_range(X);
  return exact_all(q, static_cast<std::size_t>(q), X, SumKind::dilation);
}

std::int64_t corr_fast(Natural q, Natural r, Natural X) {
  require_odd(q);
  require_shift(q, r);
  return corr_fast_all(q, X)[r];
}

std::int64_t dilation_sum(Natural q, Natural r, Natural X) {
  require_odd(q);
  require_shift(q, r);
  return dilation_sum_all(q, X)[r];
}

namespace extension {

namespace {

std::int64_t evaluate(Natural q, Natural r, Natural X, SumKind kind) {
  require_odd(q);
  require_fast_range(X);
  if (r > (Natural{1} << 20)) throw std::out_of_range("extension shift too large");
  const auto alphabet = static_cast<std::size_t>(std::max(q, r + 1));
  return exact_all(q, alphabet, X, kind)[r];
}

}  // namespace

std::int64_t correlation(Natural q, Natural r, Natural X) { return evaluate(q, r, X, SumKind::correlation); }
std::int64_t dilation(Natural q, Natural r, Natural X) { return evaluate(q, r, X, SumKind::dilation); }

}  // namespace extension

}  // namespace thuemorse
