#include "thuemorse/counting.hpp"

#include <bit>
#include <limits>
#include <stdexcept>

#include "thuemorse/correlation.hpp"
#include "thuemorse/kernels.hpp"

namespace thuemorse {

namespace {

void require_problem(Natural q, Natural r, Natural X, bool naive) {
  if (q % 2 == 0) throw std::invalid_argument("multiplier must be odd");
  if (q < 3) throw std::invalid_argument("multiplier must be at least 3");
  if (r >= q) throw std::invalid_argument("shift must satisfy r < q");
  if (naive) {
    if (X > kNaiveLimit) throw std::out_of_range("X exceeds the direct-loop guard 2^32; use the fast path");
    if (X != 0 && (std::numeric_limits<Natural>::max() - r) / q < X) throw std::out_of_range("q*X + r overflows");
  } else if (X > kMaxNatural) {
    throw std::out_of_range("X exceeds 2^62");
  }
}

CountTable from_sums(Natural q, Natural r, Natural X, std::int64_t dil, std::int64_t corr) {
  const std::int64_t P = eps_partial_sum(X);
  CountTable t{q, r, X, {}};
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k) {
      const std::int64_t si = i ? -1 : 1;
      const std::int64_t sk = k ? -1 : 1;
      const std::int64_t four = static_cast<std::int64_t>(X) + si * P + sk * dil + si * sk * corr;
      if (four < 0 || four % 4 != 0) throw std::logic_error("class-count identity is not integral");
      t.cells[i][k] = static_cast<Natural>(four / 4);
    }
  return t;
}

// #{ 0 <= a <= A : class_of(a) = c }
Natural class_count_from_zero(Natural A, int c) {
  const std::int64_t signed_sum = eps_partial_sum(A) + 1;  // sum over 0..A
  const auto n = static_cast<std::int64_t>(A) + 1;
  return static_cast<Natural>(c == 0 ? (n + signed_sum) / 2 : (n - signed_sum) / 2);
}

}  // namespace

CountTable count_classes_naive(Natural q, Natural r, Natural X) {
  require_problem(q, r, X, true);
  const kernels::PairCounts c = kernels::parallel::class_pairs(q, r, X);
  return CountTable{q, r, X, {{{c[0], c[1]}, {c[2], c[3]}}}};
}

CountTable count_classes_fast(Natural q, Natural r, Natural X) {
  require_problem(q, r, X, false);
  return from_sums(q, r, X, dilation_sum(q, r, X), corr_fast(q, r, X));
}

CountTable count_classes_extension(Natural q, Natural r, Natural X) {
  if (X > kMaxNatural) throw std::out_of_range("X exceeds 2^62");
  return from_sums(q, r, X, extension::dilation(q, r, X), extension::correlation(q, r, X));
}

AdjacentTable count_adjacent(Natural X) {
  if (X > kNaiveLimit) throw std::out_of_range("X exceeds the direct-loop guard 2^32; use count_adjacent_fast");
  const kernels::PairCounts c = kernels::parallel::adjacent_pairs(X);
  return AdjacentTable{X, {{{c[0], c[1]}, {c[2], c[3]}}}};
}

AdjacentTable count_adjacent_fast(Natural X) {
  if (X > kMaxNatural) throw std::out_of_range("X exceeds 2^62");
  AdjacentTable table{X, {}};
  if (X < 2) return table;
  const Natural m_max = X - 1;
  for (int t = 0; t < 63; ++t) {
    const Natural tail = (Natural{1} << t) - 1;  // m = 2^{t+1} a + tail
    if (tail > m_max) break;
    const Natural a_max = (m_max - tail) >> (t + 1);
    for (int c = 0; c < 2; ++c) {
      Natural count = class_count_from_zero(a_max, c);
      if (t == 0 && c == 0) --count;  // a = 0, t = 0 is m = 0
      const int cls_m = c ^ (t & 1);
      const int cls_n = c ^ 1;
      table.cells[cls_n][cls_m] += count;
    }
  }
  return table;
}

}  // namespace thuemorse
