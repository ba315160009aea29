#pragma once

// Thue-Morse signs eps(n) = (-1)^{popcount(n)}, the parity classes N_0 / N_1,
// and exact counters over binary digit sums.

#include <bit>
#include <cstdint>
#include <vector>

namespace thuemorse {

using Natural = std::uint64_t;

/// Largest X accepted by the O(log X) paths; all their sums fit in int64.
inline constexpr Natural kMaxNatural = Natural{1} << 62;

/// Largest X accepted by the O(X) direct loops.
inline constexpr Natural kNaiveLimit = Natural{1} << 32;

class Sign {
 public:
  constexpr Sign() = default;
  static constexpr Sign plus() { return Sign(1); }
  static constexpr Sign minus() { return Sign(-1); }

  constexpr int value() const { return value_; }
  constexpr Sign operator-() const { return Sign(-value_); }
  friend constexpr Sign operator*(Sign a, Sign b) { return Sign(a.value_ * b.value_); }
  friend constexpr bool operator==(Sign, Sign) = default;

 private:
  constexpr explicit Sign(int v) : value_(v) {}
  int value_ = 1;
};

/// N_0 holds the naturals with an even binary digit sum, N_1 the odd ones.
enum class ParityClass : std::uint8_t { even = 0, odd = 1 };

constexpr int index(ParityClass c) { return static_cast<int>(c); }

constexpr Sign eps(Natural n) {
  return (std::popcount(n) & 1) ? Sign::minus() : Sign::plus();
}

constexpr ParityClass class_of(Natural n) {
  return (std::popcount(n) & 1) ? ParityClass::odd : ParityClass::even;
}

/// Sum of eps(n) over 1 <= n <= X in O(1). Over 0..X the sum telescopes in
/// pairs (eps(2k) + eps(2k+1) = 0), leaving eps(X) for even X and 0 for odd X.
constexpr std::int64_t eps_partial_sum(Natural X) {
  const std::int64_t from_zero = (X % 2 == 0) ? eps(X).value() : 0;
  return from_zero - 1;
}

/// Counts of n in 1..X split by residue mod m and parity class:
/// counts[j][l] = #{ 1 <= n <= X : n = l (mod m), class_of(n) = j }.
struct ResidueClassTable {
  Natural modulus = 1;
  std::vector<Natural> even;  // indexed by residue
  std::vector<Natural> odd;

  Natural at(ParityClass j, Natural residue) const {
    return j == ParityClass::even ? even[residue] : odd[residue];
  }
};

/// Digit DP from the most significant bit of X with a tightness flag, residue
/// mod m and bit-sum parity as state. O(log X * m). Throws on m == 0.
ResidueClassTable gelfond_table(Natural X, Natural m);

/// T_j(X, l, m) = #{ 1 <= n <= X : n = l (mod m), n in N_j }. l is reduced mod m.
Natural gelfond_count(Natural X, Natural l, Natural m, ParityClass j);

}  // namespace thuemorse
