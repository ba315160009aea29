#include "thuemorse/polynomial.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>

namespace thuemorse {

namespace {

Int128 gcd128(Int128 a, Int128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    const Int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// A nonzero constant multiple of the remainder of a by b.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  std::vector<Int128> r = a.coefficients();
  const int db = b.degree();
  const Int128 lb = b.leading();
  while (static_cast<int>(r.size()) - 1 >= db && !r.empty()) {
    const int dr = static_cast<int>(r.size()) - 1;
    const Int128 lr = r.back();
    const int shift = dr - db;
    for (auto& v : r) v = checked_mul(v, lb);
    for (int i = 0; i <= db; ++i) {
      const auto idx = static_cast<std::size_t>(i + shift);
      r[idx] = checked_sub(r[idx], checked_mul(lr, b[static_cast<std::size_t>(i)]));
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    IntPoly reduced = primitive_part(IntPoly(r));
    r = reduced.coefficients();
  }
  return IntPoly(r);
}


constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % kPrime);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  for (; e != 0; e >>= 1, a = mulmod(a, a))
    if (e & 1) r = mulmod(r, a);
  return r;
}

std::vector<std::uint64_t> reduce_mod(const IntPoly& p) {
  std::vector<std::uint64_t> out;
  for (Int128 c : p.coefficients()) {
    Int128 m = c % static_cast<Int128>(kPrime);
    if (m < 0) m += kPrime;
    out.push_back(static_cast<std::uint64_t>(m));
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

// Degree of gcd(a, b) over Z/p, or -1 when both vanish mod p.
int gcd_degree_mod_prime(const IntPoly& a, const IntPoly& b) {
  auto x = reduce_mod(a), y = reduce_mod(b);
  while (!y.empty()) {
    const std::uint64_t inv = powmod(y.back(), kPrime - 2);
    while (x.size() >= y.size()) {
      const std::uint64_t f = mulmod(x.back(), inv);
      const std::size_t shift = x.size() - y.size();
      for (std::size_t i = 0; i < y.size(); ++i)
        x[shift + i] = (x[shift + i] + kPrime - mulmod(f, y[i])) % kPrime;
      while (!x.empty() && x.back() == 0) x.pop_back();
    }
    std::swap(x, y);
  }
  return static_cast<int>(x.size()) - 1;
}

}  // namespace

IntPoly::IntPoly(std::vector<Int128> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long long> coeffs) {
  for (long long v : coeffs) c_.push_back(v);
  trim();
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::derivative() const {
  std::vector<Int128> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(checked_mul(c_[i], static_cast<Int128>(i)));
  return IntPoly(std::move(d));
}

std::complex<double> IntPoly::evaluate(std::complex<double> z) const {
  std::complex<double> acc{0.0, 0.0};
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + static_cast<double>(*it);
  return acc;
}

IntPoly IntPoly::operator-() const {
  std::vector<Int128> n(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) n[i] = checked_sub(0, c_[i]);
  return IntPoly(std::move(n));
}

std::string IntPoly::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Int128 v = c_[static_cast<std::size_t>(i)];
    if (v == 0) continue;
    const Int128 mag = abs128(v);
    if (out.empty()) {
      if (v < 0) out += "-";
    } else {
      out += v < 0 ? " - " : " + ";
    }
    if (mag != 1 || i == 0) out += thuemorse::to_string(mag);
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Int128> c(static_cast<std::size_t>(a.degree() + b.degree() + 1), 0);
  for (std::size_t i = 0; i < a.coefficients().size(); ++i)
    for (std::size_t j = 0; j < b.coefficients().size(); ++j)
      c[i + j] = checked_add(c[i + j], checked_mul(a[i], b[j]));
  return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  const std::size_t n = std::max(a.coefficients().size(), b.coefficients().size());
  std::vector<Int128> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = checked_sub(a[i], b[i]);
  return IntPoly(std::move(c));
}

Int128 content(const IntPoly& p) {
  Int128 g = 0;
  for (Int128 v : p.coefficients()) g = gcd128(g, v);
  return g;
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  Int128 g = content(p);
  if (p.leading() < 0) g = -g;
  std::vector<Int128> c = p.coefficients();
  for (auto& v : c) v /= g;
  return IntPoly(std::move(c));
}

IntPoly divide_exact(const IntPoly& a, const IntPoly& monic_divisor) {
  if (monic_divisor.leading() != 1) throw std::invalid_argument("divisor must be monic");
  const int db = monic_divisor.degree();
  std::vector<Int128> r = a.coefficients();
  if (a.degree() < db) {
    if (!a.is_zero()) throw std::domain_error("polynomial division is not exact");
    return {};
  }
  std::vector<Int128> quot(static_cast<std::size_t>(a.degree() - db + 1), 0);
  for (int i = a.degree(); i >= db; --i) {
    const Int128 coef = r[static_cast<std::size_t>(i)];
    quot[static_cast<std::size_t>(i - db)] = coef;
    if (coef == 0) continue;
    for (int j = 0; j <= db; ++j) {
      const auto idx = static_cast<std::size_t>(i - db + j);
      r[idx] = checked_sub(r[idx], checked_mul(coef, monic_divisor[static_cast<std::size_t>(j)]));
    }
  }
  for (int i = 0; i < db; ++i)
    if (r[static_cast<std::size_t>(i)] != 0) throw std::domain_error("polynomial division is not exact");
  return IntPoly(std::move(quot));
}

IntPoly monic_gcd(const IntPoly& a, const IntPoly& b) {
  IntPoly x = a.degree() >= b.degree() ? a : b;
  IntPoly y = a.degree() >= b.degree() ? b : a;
  if (x.is_zero()) throw std::invalid_argument("gcd of two zero polynomials");
  x = primitive_part(x);
  y = primitive_part(y);
  while (!y.is_zero()) {
    IntPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = primitive_part(r);
  }
  IntPoly g = primitive_part(x);
  if (g.degree() == 0) return IntPoly{1};
  if (g.leading() != 1) throw std::domain_error("primitive gcd is not monic");
  return g;
}

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& f) {
  if (f.leading() != 1) throw std::invalid_argument("squarefree_decomposition needs a monic polynomial");
  auto radical = [](const IntPoly& p) {
    if (p.degree() <= 0) return IntPoly{1};
    return divide_exact(p, monic_gcd(p, p.derivative()));
  };

  std::vector<std::pair<IntPoly, int>> out;
  // A constant gcd mod p proves f square-free, since f' keeps its leading
  // coefficient mod p. This skips the PRS, whose coefficients can outgrow 128 bits.
  if (f.degree() >= 1 && static_cast<Int128>(f.degree()) % kPrime != 0 &&
      gcd_degree_mod_prime(f, f.derivative()) == 0) {
    out.emplace_back(f, 1);
    return out;
  }
  IntPoly remaining = f;
  IntPoly rad = radical(remaining);  // roots of multiplicity >= k
  for (int k = 1; rad.degree() > 0; ++k) {
    remaining = divide_exact(remaining, rad);
    IntPoly next = radical(remaining);  // roots of multiplicity >= k + 1
    IntPoly exact = divide_exact(rad, next);
    if (exact.degree() > 0) out.emplace_back(std::move(exact), k);
    rad = std::move(next);
  }
  return out;
}

}  // namespace thuemorse
