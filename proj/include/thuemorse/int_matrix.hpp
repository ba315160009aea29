#pragma once

// Exact 128-bit integer arithmetic with overflow detection, and a small dense
// square matrix over it.

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace thuemorse {

using Int128 = __int128;

inline Int128 checked_add(Int128 a, Int128 b) {
  Int128 r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("128-bit integer overflow (add)");
  return r;
}

inline Int128 checked_sub(Int128 a, Int128 b) {
  Int128 r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("128-bit integer overflow (sub)");
  return r;
}

inline Int128 checked_mul(Int128 a, Int128 b) {
  Int128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("128-bit integer overflow (mul)");
  return r;
}

inline Int128 abs128(Int128 a) { return a < 0 ? checked_sub(0, a) : a; }

std::string to_string(Int128 v);

class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  explicit IntegerMatrix(std::size_t dim) : dim_(dim), a_(dim * dim, 0) {}
  IntegerMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntegerMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  Int128& operator()(std::size_t i, std::size_t j) { return a_[i * dim_ + j]; }
  Int128 operator()(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }

  IntegerMatrix transpose() const;
  Int128 trace() const;

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Int128> a_;
};

/// Checked product; throws std::overflow_error instead of wrapping.
IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
std::vector<Int128> operator*(const IntegerMatrix& a, const std::vector<Int128>& v);

}  // namespace thuemorse
