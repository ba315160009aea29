#include "thuemorse/expsum.hpp"
#include "thuemorse/kernels.hpp"

namespace thuemorse::kernels {

namespace serial {

std::int64_t eps_sum(Natural X) {
  std::int64_t sum = 0;
  for (Natural n = 1; n <= X; ++n) sum += eps(n).value();
  return sum;
}

std::int64_t correlation(Natural q, Natural r, Natural X) {
  std::int64_t sum = 0;
  for (Natural n = 1; n <= X; ++n) sum += (eps(n) * eps(q * n + r)).value();
  return sum;
}

std::int64_t dilation(Natural q, Natural r, Natural X) {
  std::int64_t sum = 0;
  for (Natural n = 1; n <= X; ++n) sum += eps(q * n + r).value();
  return sum;
}

PairCounts class_pairs(Natural q, Natural r, Natural X) {
  PairCounts c{};
  for (Natural m = 1; m <= X; ++m) ++c[2 * index(class_of(m)) + index(class_of(q * m + r))];
  return c;
}

PairCounts adjacent_pairs(Natural X) {
  PairCounts c{};
  for (Natural m = 1; m < X; ++m) ++c[2 * index(class_of(m + 1)) + index(class_of(m))];
  return c;
}

std::vector<double> phase_moduli(Natural X, Natural grid) {
  std::vector<double> out(grid - 1);
  for (Natural p = 1; p < grid; ++p)
    out[p - 1] = std::abs(expsum_fast(RationalPhase(static_cast<std::int64_t>(p), grid), X));
  return out;
}

}  // namespace serial

}  // namespace thuemorse::kernels
