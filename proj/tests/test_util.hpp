#pragma once

#include <cmath>
#include <cstdint>
#include <functional>

// Small deterministic LCG for test sampling (same generator the verify
// suites document in their reports).
struct TestRng {
  std::uint64_t state;
  explicit TestRng(std::uint64_t seed = 0xB4A22A2ull) : state(seed) {}
  std::uint64_t next_u64() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return state;
  }
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
};

inline double rel_err(double got, double want) {
  if (want == 0.0) return std::fabs(got);
  return std::fabs(got - want) / std::fabs(want);
}

// Adaptive Simpson integrator used only as an independent test oracle.
inline double simpson_oracle(const std::function<double(double)>& f, double a, double b,
                             double tol = 1e-12, int depth = 28) {
  std::function<double(double, double, double, double, double, double, int)> rec =
      [&](double lo, double hi, double flo, double fmid, double fhi, double whole, int d) -> double {
    const double m = 0.5 * (lo + hi);
    const double lm = 0.5 * (lo + m), rm = 0.5 * (m + hi);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - lo) / 6.0 * (flo + 4.0 * flm + fmid);
    const double right = (hi - m) / 6.0 * (fmid + 4.0 * frm + fhi);
    if (d <= 0 || std::fabs(left + right - whole) < 15.0 * tol) {
      return left + right + (left + right - whole) / 15.0;
    }
    return rec(lo, m, flo, flm, fmid, left, d - 1) + rec(m, hi, fmid, frm, fhi, right, d - 1);
  };
  const double m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return rec(a, b, fa, fm, fb, whole, depth);
}
