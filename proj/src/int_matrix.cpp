#include "thuemorse/int_matrix.hpp"

#include <algorithm>

namespace thuemorse {

std::string to_string(Int128 v) {
  if (v == 0) return "0";
  const bool negative = v < 0;
  // Work on the negative side so INT128_MIN does not overflow.
  if (!negative) v = -v;
  std::string digits;
  while (v != 0) {
    digits.push_back(static_cast<char>('0' - static_cast<int>(v % 10)));
    v /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : dim_(rows.size()), a_(rows.size() * rows.size(), 0) {
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != dim_) throw std::invalid_argument("matrix must be square");
    std::size_t j = 0;
    for (long long v : row) (*this)(i, j++) = v;
    ++i;
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t dim) {
  IntegerMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix t(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Int128 IntegerMatrix::trace() const {
  Int128 t = 0;
  for (std::size_t i = 0; i < dim_; ++i) t = checked_add(t, (*this)(i, i));
  return t;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
  const std::size_t n = a.dim();
  IntegerMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Int128 aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) = checked_add(c(i, j), checked_mul(aik, b(k, j)));
    }
  return c;
}

std::vector<Int128> operator*(const IntegerMatrix& a, const std::vector<Int128>& v) {
  if (a.dim() != v.size()) throw std::invalid_argument("dimension mismatch");
  std::vector<Int128> out(v.size(), 0);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) out[i] = checked_add(out[i], checked_mul(a(i, j), v[j]));
  return out;
}

}  // namespace thuemorse
