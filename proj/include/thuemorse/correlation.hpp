#pragma once

// Correlation sums S_q(X, r) = sum_{1<=n<=X} eps(n) eps(qn + r) and dilation
// sums U_q(X, r) = sum_{1<=n<=X} eps(qn + r) for odd q, together with the
// q x q transfer matrix that carries them from X to X/2.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "thuemorse/digitseq.hpp"
#include "thuemorse/int_matrix.hpp"

namespace thuemorse {

/// How one shift r splits when n is grouped into even n = 2k and odd
/// n = 2k + 1. The even half lands on shift `even_shift` with sign
/// `even_sign`, the odd half on `odd_shift` with sign `odd_sign`.
struct HalvingStep {
  std::size_t even_shift;
  int even_sign;
  std::size_t odd_shift;
  int odd_sign;
};

enum class SumKind { correlation, dilation };

/// Signs and target shifts for eps(n)eps(qn+r) (correlation) or eps(qn+r)
/// (dilation); eps(2k) = eps(k), eps(2k+1) = -eps(k).
HalvingStep halving_step(Natural q, Natural r, SumKind kind = SumKind::correlation);

class CorrelationSystem {
 public:
  /// Throws std::invalid_argument for even q or q < 3.
  explicit CorrelationSystem(Natural q);

  Natural multiplier() const { return q_; }
  std::size_t shift_count() const { return static_cast<std::size_t>(q_); }

  /// Row r holds the coefficients expressing S'(X, r) through the half-size
  /// sums S'(X/2, .); the coefficient propagation acting on combinations of
  /// S'(X, r) is its transpose.
  const IntegerMatrix& transfer() const { return transfer_; }

 private:
  Natural q_;
  IntegerMatrix transfer_;
};

CorrelationSystem build_transfer(Natural q);

struct CorrelationValue {
  Natural X;
  Natural r;
  std::int64_t value;
};

/// Direct loop; rejects even q, r >= q and X above kNaiveLimit.
std::int64_t corr_naive(Natural q, Natural r, Natural X);
std::int64_t dilation_naive(Natural q, Natural r, Natural X);

/// O(q log X) evaluation through the exact halving recursion.
std::int64_t corr_fast(Natural q, Natural r, Natural X);
std::int64_t dilation_sum(Natural q, Natural r, Natural X);

/// All shifts 0..q-1 at once; element r equals corr_fast(q, r, X).
std::vector<std::int64_t> corr_fast_all(Natural q, Natural X);
std::vector<std::int64_t> dilation_sum_all(Natural q, Natural X);

/// Sums over 0 <= n <= X for every shift in 0..alphabet-1. The alphabet must
/// be closed under halving_step, i.e. alphabet >= q.
std::vector<std::int64_t> prefix_sums_from_zero(Natural q, std::size_t alphabet, Natural X, SumKind kind);

namespace extension {

/// Same sums for shifts r >= q. The recursion runs over the alphabet
/// {0..max(q-1, r)}, which is closed under halving.
std::int64_t correlation(Natural q, Natural r, Natural X);
std::int64_t dilation(Natural q, Natural r, Natural X);

}  // namespace extension

}  // namespace thuemorse
