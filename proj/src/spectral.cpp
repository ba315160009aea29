#include "thuemorse/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace thuemorse {

using cplx = std::complex<double>;

MonicIntPolynomial::MonicIntPolynomial(IntPoly p) : p_(std::move(p)) {
  if (p_.leading() != 1) throw std::invalid_argument("polynomial is not monic");
}

MonicIntPolynomial char_poly(const IntegerMatrix& a) {
  const std::size_t n = a.dim();
  if (n > 64) throw std::invalid_argument("char_poly: dimension exceeds 64");
  std::vector<Int128> c(n + 1, 0);
  c[n] = 1;
  IntegerMatrix mk(n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    IntegerMatrix next = a * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) = checked_add(next(i, i), c[n - k + 1]);
    mk = std::move(next);
    const Int128 tr = (a * mk).trace();
    const auto kk = static_cast<Int128>(k);
    if (tr % kk != 0) throw std::logic_error("char_poly: trace not divisible by k");
    c[n - k] = checked_sub(0, tr / kk);
  }
  return MonicIntPolynomial(IntPoly(std::move(c)));
}

namespace {

double fujiwara_bound(const IntPoly& p) {
  const int n = p.degree();
  double bound = 0.0;
  for (int i = 0; i < n; ++i) {
    const double c = std::abs(static_cast<double>(p[static_cast<std::size_t>(i)]));
    if (c == 0.0) continue;
    const double term = std::pow(i == 0 ? c / 2.0 : c, 1.0 / (n - i));
    bound = std::max(bound, term);
  }
  return 2.0 * bound;
}

double residual_scale(double tol, const cplx& z, int degree) {
  return tol * std::pow(1.0 + std::abs(z), degree);
}

void enforce_conjugate_symmetry(std::vector<cplx>& z) {
  std::vector<bool> used(z.size(), false);
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (used[i]) continue;
    if (std::abs(z[i].imag()) <= 1e-8 * std::max(1.0, std::abs(z[i]))) {
      z[i] = {z[i].real(), 0.0};
      used[i] = true;
      continue;
    }
    std::size_t best = z.size();
    double best_dist = 0.0;
    for (std::size_t j = 0; j < z.size(); ++j) {
      if (j == i || used[j] || (z[j].imag() > 0) == (z[i].imag() > 0)) continue;
      const double d = std::abs(z[j] - std::conj(z[i]));
      if (best == z.size() || d < best_dist) {
        best = j;
        best_dist = d;
      }
    }
    if (best == z.size()) continue;
    cplx avg = 0.5 * (z[i] + std::conj(z[best]));
    if (avg.imag() < 0) avg = std::conj(avg);
    z[i] = avg;
    z[best] = std::conj(avg);
    used[i] = used[best] = true;
  }
}

// Aberth-Ehrlich with Gauss-Seidel updates. Returns false if the step sizes
// did not settle within the budget.
bool aberth(const IntPoly& p, std::vector<cplx>& z, int max_iterations) {
  const IntPoly dp = p.derivative();
  const std::size_t n = z.size();
  for (int it = 0; it < max_iterations; ++it) {
    bool settled = true;
    for (std::size_t i = 0; i < n; ++i) {
      const cplx value = p.evaluate(z[i]);
      if (value == cplx{0.0, 0.0}) continue;
      const cplx ratio = value / dp.evaluate(z[i]);
      cplx repulsion{0.0, 0.0};
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) repulsion += 1.0 / (z[i] - z[j]);
      const cplx step = ratio / (1.0 - ratio * repulsion);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) return false;
      z[i] -= step;
      if (std::abs(step) > 1e-14 * (1.0 + std::abs(z[i]))) settled = false;
    }
    if (settled) return true;
  }
  return false;
}

std::vector<cplx> initial_points(const IntPoly& p, std::mt19937_64& rng, bool perturb) {
  const int n = p.degree();
  const cplx center = -static_cast<double>(p[static_cast<std::size_t>(n - 1)]) / n;
  double radius = fujiwara_bound(p);
  if (radius == 0.0) radius = 1.0;
  double offset = 0.4;
  if (perturb) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    offset = 2.0 * std::numbers::pi * u(rng);
    radius *= 0.5 + u(rng);
  }
  std::vector<cplx> z(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k)
    z[static_cast<std::size_t>(k)] = center + std::polar(radius, offset + 2.0 * std::numbers::pi * k / n);
  return z;
}

std::vector<cplx> solve_squarefree(const IntPoly& p, double tol, const RootOptions& options, std::mt19937_64& rng) {
  const int n = p.degree();
  if (n == 1) return {cplx{-static_cast<double>(p[0]), 0.0}};

  std::vector<double> residuals;
  for (int attempt = 0; attempt <= options.max_restarts; ++attempt) {
    std::vector<cplx> z = initial_points(p, rng, attempt > 0);
    // An unsettled run is still accepted when its residuals pass; restarts
    // are for runs that stagnated away from the roots.
    aberth(p, z, options.max_iterations);
    const IntPoly dp = p.derivative();
    for (auto& root : z)
      for (int polish = 0; polish < 3; ++polish) {
        const cplx d = dp.evaluate(root);
        if (d == cplx{0.0, 0.0}) break;
        const cplx next = root - p.evaluate(root) / d;
        if (!std::isfinite(next.real()) || !std::isfinite(next.imag())) break;
        root = next;
      }
    enforce_conjugate_symmetry(z);

    residuals.clear();
    bool ok = true;
    for (const auto& root : z) {
      const double res = std::abs(p.evaluate(root));
      residuals.push_back(res);
      if (!(res <= residual_scale(tol, root, n))) ok = false;
    }
    if (ok) return z;
  }
  throw RootFindingError("root finding did not converge after " + std::to_string(options.max_restarts + 1) +
                             " attempts",
                         residuals);
}

bool by_modulus_desc(const cplx& a, const cplx& b) {
  const double ma = std::abs(a), mb = std::abs(b);
  if (std::abs(ma - mb) > 1e-12 * std::max(1.0, ma)) return ma > mb;
  if (a.real() != b.real()) return a.real() > b.real();
  return a.imag() > b.imag();
}

std::vector<Eigenvalue> eigenvalues_of(const MonicIntPolynomial& p, double tol, const RootOptions& options) {
  std::mt19937_64 rng(options.seed);
  std::vector<Eigenvalue> out;
  for (const auto& [factor, multiplicity] : squarefree_decomposition(p.poly()))
    for (const cplx& z : solve_squarefree(factor, tol, options, rng)) out.push_back({z, multiplicity});
  std::sort(out.begin(), out.end(), [](const Eigenvalue& a, const Eigenvalue& b) { return by_modulus_desc(a.value, b.value); });
  return out;
}

}  // namespace

std::vector<cplx> roots(const MonicIntPolynomial& p, double tol, const RootOptions& options) {
  if (p.degree() < 1) throw std::invalid_argument("roots: degree must be at least 1");
  if (!(tol > 0.0)) throw std::invalid_argument("roots: tolerance must be positive");
  std::vector<cplx> out;
  for (const Eigenvalue& e : eigenvalues_of(p, tol, options))
    for (int k = 0; k < e.multiplicity; ++k) out.push_back(e.value);

  std::vector<double> residuals;
  bool ok = true;
  for (const auto& z : out) {
    const double res = std::abs(p.evaluate(z));
    residuals.push_back(res);
    if (!(res <= residual_scale(tol, z, p.degree()))) ok = false;
  }
  if (!ok) throw RootFindingError("root residual above tolerance", residuals);
  return out;
}

SpectralReport spectral_report(const CorrelationSystem& sys, const RootOptions& options) {
  SpectralReport report;
  report.q = sys.multiplier();
  report.poly = char_poly(sys.transfer());
  report.eigenvalues = eigenvalues_of(report.poly, 1e-6, options);
  for (const auto& e : report.eigenvalues) report.radius = std::max(report.radius, std::abs(e.value));
  report.exponent = std::log2(report.radius);

  // Independent multiplicity estimate: solve the full polynomial directly,
  // where a k-fold root shows up as k nearby approximations.
  try {
    std::mt19937_64 rng(options.seed);
    std::vector<cplx> direct = initial_points(report.poly.poly(), rng, false);
    aberth(report.poly.poly(), direct, options.max_iterations);
    for (const auto& e : report.eigenvalues) {
      const auto near = std::count_if(direct.begin(), direct.end(),
                                      [&](const cplx& z) { return std::abs(z - e.value) <= 1e-6; });
      if (near != e.multiplicity) report.clustering_agrees = false;
    }
  } catch (const std::exception&) {
    report.clustering_agrees = false;
  }
  return report;
}

std::vector<GrowthSample> power_growth(const IntegerMatrix& m, const std::vector<Int128>& start, Natural J) {
  if (J > 80) throw std::invalid_argument("power_growth: J exceeds 80");
  if (start.size() != m.dim()) throw std::invalid_argument("power_growth: start vector has wrong length");
  auto max_norm = [](const std::vector<Int128>& v) {
    Int128 best = 0;
    for (Int128 x : v) best = std::max(best, abs128(x));
    return best;
  };
  std::vector<GrowthSample> out;
  std::vector<Int128> v = start;
  out.push_back({0, max_norm(v)});
  for (Natural j = 1; j <= J; ++j) {
    v = m * v;
    out.push_back({j, max_norm(v)});
  }
  return out;
}

std::size_t jordan_block_check(const IntegerMatrix& m, Int128 eigval) {
  const std::size_t n = m.dim();
  std::vector<std::vector<Int128>> a(n, std::vector<Int128>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = i == j ? checked_sub(m(i, j), eigval) : m(i, j);

  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < n; ++col) {
    std::size_t pivot = rank;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t i = rank + 1; i < n; ++i) {
      const Int128 factor = a[i][col];
      if (factor == 0) continue;
      const Int128 lead = a[rank][col];
      Int128 g = 0;
      for (std::size_t j = col; j < n; ++j) {
        a[i][j] = checked_sub(checked_mul(a[i][j], lead), checked_mul(factor, a[rank][j]));
        Int128 x = abs128(a[i][j]);
        while (x != 0) {
          const Int128 t = g % x;
          g = x;
          x = t;
        }
      }
      // Row content reduction keeps entries small and the elimination exact.
      if (g > 1)
        for (std::size_t j = col; j < n; ++j) a[i][j] /= g;
    }
    ++rank;
  }
  return rank;
}

}  // namespace thuemorse
