#pragma once

// O(X) direct loops behind the naive paths and the phase-grid scan. The
// serial namespace is the reference; the parallel namespace is the OpenMP
// build of the same loops and is what the library calls. Inputs are assumed
// validated by the caller.

#include <array>
#include <cstdint>
#include <vector>

#include "thuemorse/digitseq.hpp"

namespace thuemorse::kernels {

/// Class-pair counts laid out as {00, 01, 10, 11}.
using PairCounts = std::array<Natural, 4>;

namespace serial {

std::int64_t eps_sum(Natural X);
std::int64_t correlation(Natural q, Natural r, Natural X);
std::int64_t dilation(Natural q, Natural r, Natural X);
/// m in 1..X, pair (class_of(m), class_of(qm + r)).
PairCounts class_pairs(Natural q, Natural r, Natural X);
/// m in 1..X-1, pair (class_of(m + 1), class_of(m)).
PairCounts adjacent_pairs(Natural X);
/// |S(p/grid, X)| for p = 1..grid-1.
std::vector<double> phase_moduli(Natural X, Natural grid);

}  // namespace serial

namespace parallel {

std::int64_t eps_sum(Natural X);
std::int64_t correlation(Natural q, Natural r, Natural X);
std::int64_t dilation(Natural q, Natural r, Natural X);
PairCounts class_pairs(Natural q, Natural r, Natural X);
PairCounts adjacent_pairs(Natural X);
std::vector<double> phase_moduli(Natural X, Natural grid);

}  // namespace parallel

int thread_count();

}  // namespace thuemorse::kernels
