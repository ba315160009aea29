#include <omp.h>

#include "thuemorse/expsum.hpp"
#include "thuemorse/kernels.hpp"

namespace thuemorse::kernels {

int thread_count() { return omp_get_max_threads(); }

namespace parallel {

std::int64_t eps_sum(Natural X) {
  std::int64_t sum = 0;
#pragma omp parallel for reduction(+ : sum) schedule(static)
  for (Natural n = 1; n <= X; ++n) sum += eps(n).value();
  return sum;
}

std::int64_t correlation(Natural q, Natural r, Natural X) {
  std::int64_t sum = 0;
#pragma omp parallel for reduction(+ : sum) schedule(static)
  for (Natural n = 1; n <= X; ++n) sum += (eps(n) * eps(q * n + r)).value();
  return sum;
}

std::int64_t dilation(Natural q, Natural r, Natural X) {
  std::int64_t sum = 0;
#pragma omp parallel for reduction(+ : sum) schedule(static)
  for (Natural n = 1; n <= X; ++n) sum += eps(q * n + r).value();
  return sum;
}

PairCounts class_pairs(Natural q, Natural r, Natural X) {
  Natural c00 = 0, c01 = 0, c10 = 0, c11 = 0;
#pragma omp parallel for reduction(+ : c00, c01, c10, c11) schedule(static)
  for (Natural m = 1; m <= X; ++m) {
    switch (2 * index(class_of(m)) + index(class_of(q * m + r))) {
      case 0: ++c00; break;
      case 1: ++c01; break;
      case 2: ++c10; break;
      default: ++c11; break;
    }
  }
  return {c00, c01, c10, c11};
}

PairCounts adjacent_pairs(Natural X) {
  Natural c00 = 0, c01 = 0, c10 = 0, c11 = 0;
  const Natural last = X == 0 ? 0 : X - 1;
#pragma omp parallel for reduction(+ : c00, c01, c10, c11) schedule(static)
  for (Natural m = 1; m <= last; ++m) {
    switch (2 * index(class_of(m + 1)) + index(class_of(m))) {
      case 0: ++c00; break;
      case 1: ++c01; break;
      case 2: ++c10; break;
      default: ++c11; break;
    }
  }
  return {c00, c01, c10, c11};
}

std::vector<double> phase_moduli(Natural X, Natural grid) {
  std::vector<double> out(grid - 1);
  const auto n = static_cast<std::int64_t>(grid);
  // Each phase writes its own slot, so the result does not depend on scheduling.
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t p = 1; p < n; ++p)
    out[static_cast<std::size_t>(p - 1)] = std::abs(expsum_fast(RationalPhase(p, grid), X));
  return out;
}

}  // namespace parallel

}  // namespace thuemorse::kernels
