#pragma once

// Class-pair solution counts for n - q m = r and n - m = 1.

#include <array>
#include <cstdint>

#include "thuemorse/digitseq.hpp"

namespace thuemorse {

/// cells(i, k) = #{ 1 <= m <= X : m in N_i, qm + r in N_k }.
struct CountTable {
  Natural q = 0;
  Natural r = 0;
  Natural X = 0;
  std::array<std::array<Natural, 2>, 2> cells{};

  Natural cell(int i, int k) const { return cells[i][k]; }
  Natural total() const { return cells[0][0] + cells[0][1] + cells[1][0] + cells[1][1]; }

  /// 4 * (cells(i, k) - X/4), exact.
  std::int64_t deviation_quarters(int i, int k) const {
    return 4 * static_cast<std::int64_t>(cells[i][k]) - static_cast<std::int64_t>(X);
  }
  double deviation(int i, int k) const { return static_cast<double>(deviation_quarters(i, k)) / 4.0; }
  double main_term() const { return static_cast<double>(X) / 4.0; }

  friend bool operator==(const CountTable&, const CountTable&) = default;
};

CountTable count_classes_naive(Natural q, Natural r, Natural X);

/// 4 cells(i,k) = X + (-1)^i P + (-1)^k U + (-1)^{i+k} S with P the eps
/// partial sum, U the dilation sum and S the correlation sum.
CountTable count_classes_fast(Natural q, Natural r, Natural X);

/// Same identity for r >= q through the extended recursion.
CountTable count_classes_extension(Natural q, Natural r, Natural X);

/// F(i, k) = #{ (n, m) : n <= X, n - m = 1, m >= 1, n in N_i, m in N_k }.
struct AdjacentTable {
  Natural X = 0;
  std::array<std::array<Natural, 2>, 2> cells{};

  Natural cell(int i, int k) const { return cells[i][k]; }
  friend bool operator==(const AdjacentTable&, const AdjacentTable&) = default;
};

AdjacentTable count_adjacent(Natural X);

/// O(log X): split m by its number t of trailing ones, m = 2^{t+1} a + 2^t - 1,
/// so class_of(m) = class_of(a) ^ (t & 1) and class_of(m + 1) = class_of(a) ^ 1.
AdjacentTable count_adjacent_fast(Natural X);

/// Calibration constant for |F - X/3| and |F - X/6| <= C log2 X.
inline constexpr double kAdjacentToleranceConstant = 50.0;

}  // namespace thuemorse
