// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "thuemorse/correlation.hpp"
#include "thuemorse/counting.hpp"
#include "thuemorse/digitseq.hpp"
#include "thuemorse/expsum.hpp"
#include "thuemorse/report.hpp"
#include "thuemorse/spectral.hpp"

using namespace thuemorse;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome verdict(bool pass, std::string detail) { return {pass, std::move(detail)}; }

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

Natural pow2(int k) { return Natural{1} << k; }

template <class F>
bool throws_out_of_range(F f) {
  try {
    f();
  } catch (const std::out_of_range&) {
    return true;
  }
  return false;
}

// Every X <= 10^5 against running brute-force sums, which are the naive loops
// accumulated one term at a time.
Outcome oracle_equivalence() {
  constexpr Natural kLimit = 100'000;
  for (Natural q : {3, 5, 7, 9}) {
    std::vector<std::int64_t> corr(q, 0), dil(q, 0);
    std::vector<std::array<std::array<Natural, 2>, 2>> cells(q);
    for (Natural X = 1; X <= kLimit; ++X) {
      const int e = oracle::eps(X);
      for (Natural r = 0; r < q; ++r) {
        const int f = oracle::eps(q * X + r);
        corr[r] += e * f;
        dil[r] += f;
        ++cells[r][oracle::cls(X)][oracle::cls(q * X + r)];
        if (corr_fast(q, r, X) != corr[r] || dilation_sum(q, r, X) != dil[r])
          return verdict(false, "q=" + std::to_string(q) + " r=" + std::to_string(r) + " X=" + std::to_string(X));
        if (count_classes_fast(q, r, X).cells != cells[r])
          return verdict(false, "count q=" + std::to_string(q) + " X=" + std::to_string(X));
      }
    }
    for (Natural r = 0; r < q; ++r)
      for (Natural X : {Natural{0}, Natural{1}, Natural{777}, kLimit})
        if (corr_naive(q, r, X) != corr_fast(q, r, X) || dilation_naive(q, r, X) != dilation_sum(q, r, X) ||
            count_classes_naive(q, r, X) != count_classes_fast(q, r, X))
          return verdict(false, "naive path q=" + std::to_string(q));
  }
  for (Natural m = 1; m <= 16; ++m) {
    std::vector<Natural> even(m, 0), odd(m, 0);
    for (Natural X = 1; X <= kLimit; ++X) {
      (oracle::cls(X) ? odd : even)[X % m]++;
      const auto t = gelfond_table(X, m);
      if (t.even != even || t.odd != odd) return verdict(false, "gelfond m=" + std::to_string(m) + " X=" + std::to_string(X));
    }
  }
  return verdict(true, "X <= 100000, q in {3,5,7,9}, m <= 16");
}

SumLadder max_corr_ladder(Natural q, int lo, int hi) {
  SumLadder ladder;
  for (int k = lo; k <= hi; ++k) {
    const auto all = corr_fast_all(q, pow2(k));
    std::int64_t best = 0;
    for (auto v : all) best = std::max(best, v < 0 ? -v : v);
    ladder.add(pow2(k), static_cast<double>(best));
  }
  return ladder;
}

Outcome lemma_three() {
  const auto ladder = max_corr_ladder(3, 10, 34);
  const auto fit = fit_exponent(ladder);
  double ratio = 0.0;
  for (const auto& s : ladder.samples()) ratio = std::max(ratio, s.value / std::sqrt(static_cast<double>(s.X)));
  return verdict(fit.slope <= 0.55 && ratio <= 2.0,
                 fmt("slope %.4f", fit.slope) + fmt(", max |S|/sqrt(X) %.4f (<= 2)", ratio));
}

Outcome lemma_five() {
  const auto fit = fit_exponent(max_corr_ladder(5, 10, 34));
  const auto rep = spectral_report(build_transfer(5));
  return verdict(fit.slope <= 0.66 && std::abs(rep.exponent - 0.60538) <= 1e-4,
                 fmt("slope %.4f", fit.slope) + fmt(", exponent %.6f", rep.exponent));
}

Outcome eigenstructure() {
  const auto a = build_transfer(3).transfer().transpose();
  const auto zs = roots(char_poly(a));
  const double s7 = std::sqrt(7.0) / 2.0;
  const std::vector<std::complex<double>> want{{1.0, 0.0}, {0.5, s7}, {0.5, -s7}};
  bool matched = zs.size() == 3;
  double worst = 0.0;
  for (const auto& w : want) {
    double d = 1e300;
    for (const auto& z : zs) d = std::min(d, std::abs(z - w));
    worst = std::max(worst, d);
  }
  matched = matched && worst <= 1e-9;

  const auto a1 = build_transfer(5).transfer().transpose();
  const auto rep = spectral_report(build_transfer(5));
  int mult_one = 0;
  for (const auto& e : rep.eigenvalues)
    if (std::abs(e.value - std::complex<double>{1.0, 0.0}) < 1e-9) mult_one = e.multiplicity;
  const auto rank = jordan_block_check(a1, 1);
  return verdict(matched && mult_one == 2 && rank == 4,
                 fmt("q=3 root error %.2e", worst) + ", multiplicity of 1 for q=5: " + std::to_string(mult_one) +
                     ", rank(A1 - I) = " + std::to_string(rank));
}

const std::vector<std::pair<Natural, Natural>>& theorem_shifts() {
  static const std::vector<std::pair<Natural, Natural>> s{{3, 0}, {3, 1}, {3, 2}, {5, 0}, {5, 1},
                                                          {5, 2}, {5, 3}, {5, 4}};
  return s;
}

double max_deviation(Natural X) {
  double worst = 0.0;
  for (const auto& [q, r] : theorem_shifts()) {
    const auto t = count_classes_fast(q, r, X);
    for (int i = 0; i < 2; ++i)
      for (int k = 0; k < 2; ++k) worst = std::max(worst, std::abs(t.deviation(i, k)));
  }
  return worst;
}

Outcome main_term() {
  const Natural X = pow2(24);
  const double worst = max_deviation(X);
  const double bound = std::pow(static_cast<double>(X), 0.85);
  SumLadder ladder;
  for (int k = 10; k <= 30; ++k) ladder.add(pow2(k), max_deviation(pow2(k)));
  const auto fit = fit_exponent(ladder);
  return verdict(worst <= bound && fit.slope <= 0.80,
                 fmt("max deviation at 2^24 %.0f", worst) + fmt(" (bound %.0f)", bound) +
                     fmt(", slope %.4f", fit.slope));
}

Outcome gelfond_progressions() {
  const Natural X = pow2(20);
  const double bound = std::pow(static_cast<double>(X), 0.85);
  double worst = 0.0;
  for (Natural m : {3, 5, 7}) {
    for (Natural l = 0; l < m; ++l)
      for (auto j : {ParityClass::even, ParityClass::odd})
        worst = std::max(worst, std::abs(static_cast<double>(gelfond_count(X, l, m, j)) -
                                         static_cast<double>(X) / (2.0 * static_cast<double>(m))));
  }
  bool dp_ok = true;
  for (Natural m : {3, 5, 7}) {
    std::vector<Natural> even(m, 0), odd(m, 0);
    for (Natural n = 1; n <= 10'000 && dp_ok; ++n) {
      (oracle::cls(n) ? odd : even)[n % m]++;
      const auto t = gelfond_table(n, m);
      dp_ok = t.even == even && t.odd == odd;
    }
  }
  return verdict(worst <= bound && dp_ok,
                 fmt("max |T - X/2m| %.1f", worst) + fmt(" (bound %.0f)", bound) +
                     (dp_ok ? ", DP = brute force" : ", DP mismatch"));
}

Outcome gelfond_calibration() {
  const RationalPhase third(1, 3);
  double worst = 0.0;
  SumLadder third_ladder;
  for (int k = 0; k <= 40; ++k) {
    const double want = std::pow(3.0, k / 2.0);
    const double got = std::abs(expsum_fast(third, pow2(k)));
    worst = std::max(worst, std::abs(got - want) / want);
    if (k >= 1) third_ladder.add(pow2(k), got);
  }
  const double slope = fit_exponent(third_ladder).slope;
  SumLadder grid_ladder;
  for (int k = 10; k <= 30; ++k) grid_ladder.add(pow2(k), scan_alpha(pow2(k), 1025).modulus);
  const double grid_slope = fit_exponent(grid_ladder).slope;
  return verdict(worst <= 1e-6 && std::abs(slope - 0.7924818) <= 1e-3 && grid_slope <= kGelfondLambda + 0.02,
                 fmt("max rel. error %.2e", worst) + fmt(", slope %.7f", slope) +
                     fmt(", grid slope %.4f", grid_slope));
}

Outcome adjacent_sanity() {
  const Natural X = pow2(20);
  const auto t = count_adjacent_fast(X);
  const double tol = kAdjacentToleranceConstant * std::log2(static_cast<double>(X));
  const double x = static_cast<double>(X);
  const double d01 = std::abs(static_cast<double>(t.cell(0, 1)) - x / 3.0);
  const double d10 = std::abs(static_cast<double>(t.cell(1, 0)) - x / 3.0);
  const double d00 = std::abs(static_cast<double>(t.cell(0, 0)) - x / 6.0);
  const double d11 = std::abs(static_cast<double>(t.cell(1, 1)) - x / 6.0);
  const double worst = std::max({d01, d10, d00, d11});
  return verdict(worst <= tol && t == count_adjacent(X), fmt("max deviation %.2f", worst) + fmt(" (tolerance %.0f)", tol));
}

Outcome partition_and_boundedness() {
  for (Natural X = 0; X <= 100'000; X += 1 + X / 50)
    for (const auto& [q, r] : theorem_shifts()) {
      if (count_classes_fast(q, r, X).total() != X || count_classes_naive(q, r, X).total() != X)
        return verdict(false, "partition X=" + std::to_string(X));
    }
  for (Natural X = 1; X < pow2(62); X = X * 3 + 1)
    for (const auto& [q, r] : theorem_shifts())
      if (count_classes_fast(q, r, X).total() != X) return verdict(false, "partition X=" + std::to_string(X));
  std::int64_t running = 1;  // n = 0
  for (Natural X = 1; X <= 1'000'000; ++X) {
    running += oracle::eps(X);
    if (running < -1 || running > 1 || eps_partial_sum(X) + 1 != running)
      return verdict(false, "partial sum X=" + std::to_string(X));
  }
  return verdict(true, "cells sum to X; |sum eps| <= 1 for X <= 10^6");
}

double best_millis(const std::function<void()>& f) {
  double best = 1e300;
  for (int rep = 0; rep < 5; ++rep) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

Outcome performance() {
  const Natural X = pow2(40);
  volatile std::int64_t sink = 0;
  const double t_corr = best_millis([&] { sink = sink + corr_fast(5, 3, X); });
  const double t_count = best_millis([&] { sink = sink + static_cast<std::int64_t>(count_classes_fast(5, 3, X).cell(0, 0)); });
  const bool guards = throws_out_of_range([] { corr_naive(3, 0, kNaiveLimit + 1); }) &&
                      throws_out_of_range([] { dilation_naive(3, 0, kNaiveLimit + 1); }) &&
                      throws_out_of_range([] { count_classes_naive(3, 0, kNaiveLimit + 1); }) &&
                      throws_out_of_range([] { count_adjacent(kNaiveLimit + 1); }) &&
                      throws_out_of_range([] { expsum_naive(RationalPhase(1, 3), kExpsumNaiveLimit + 1); });
  return verdict(t_corr < 10.0 && t_count < 10.0 && guards,
                 fmt("corr_fast %.3f ms", t_corr) + fmt(", count_classes_fast %.3f ms", t_count) +
                     (guards ? ", guards reject" : ", guard missing"));
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"oracle equivalence", oracle_equivalence},
      {"S3 grows like sqrt(X)", lemma_three},
      {"S5 exponent", lemma_five},
      {"eigenstructure", eigenstructure},
      {"class counts near X/4", main_term},
      {"digit parity in progressions", gelfond_progressions},
      {"exponential sum calibration", gelfond_calibration},
      {"adjacent class counts", adjacent_sanity},
      {"partition and boundedness", partition_and_boundedness},
      {"performance and guards", performance},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("%s %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
