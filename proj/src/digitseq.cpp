#include "thuemorse/digitseq.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace thuemorse {

ResidueClassTable gelfond_table(Natural X, Natural m) {
  if (m == 0) throw std::invalid_argument("modulus must be positive");

  ResidueClassTable table;
  table.modulus = m;
  table.even.assign(m, 0);
  table.odd.assign(m, 0);
  if (X == 0) return table;

  // free[parity][residue]: prefixes already strictly below X's prefix.
  std::array<std::vector<Natural>, 2> free{std::vector<Natural>(m, 0), std::vector<Natural>(m, 0)};
  std::array<std::vector<Natural>, 2> next{std::vector<Natural>(m, 0), std::vector<Natural>(m, 0)};
  Natural tight_residue = 0;
  int tight_parity = 0;

  const int top = std::bit_width(X) - 1;
  for (int bit = top; bit >= 0; --bit) {
    for (auto& row : next) std::fill(row.begin(), row.end(), 0);
    for (int par = 0; par < 2; ++par) {
      for (Natural res = 0; res < m; ++res) {
        const Natural c = free[par][res];
        if (c == 0) continue;
        const Natural shifted = (2 * res) % m;
        next[par][shifted] += c;
        next[par ^ 1][(shifted + 1) % m] += c;
      }
    }
    const Natural shifted = (2 * tight_residue) % m;
    if ((X >> bit) & 1) {
      // Placing 0 under a 1 of X leaves the tight path.
      next[tight_parity][shifted] += 1;
      tight_residue = (shifted + 1) % m;
      tight_parity ^= 1;
    } else {
      tight_residue = shifted;
    }
    std::swap(free, next);
  }
  free[tight_parity][tight_residue] += 1;
  // n = 0 went through the all-zero free path; drop it.
  free[0][0] -= 1;

  table.even = std::move(free[0]);
  table.odd = std::move(free[1]);
  return table;
}

Natural gelfond_count(Natural X, Natural l, Natural m, ParityClass j) {
  if (m == 0) throw std::invalid_argument("modulus must be positive");
  return gelfond_table(X, m).at(j, l % m);
}

}  // namespace thuemorse
