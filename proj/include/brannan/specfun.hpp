#pragma once

// Real and complex special-function primitives shared by the whole pipeline.

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <string>

#include "brannan/constants.hpp"
#include "brannan/errors.hpp"

namespace brannan::specfun {

namespace detail {

// Lanczos approximation, g = 7, 9 terms.  Relative error is a few ulps of
// 1e-15 over the positive axis, well inside the 1e-14 budget on (0, 5].
inline constexpr double kLanczosG = 7.0;
inline constexpr double kLanczos[9] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7,
};

inline double lanczos_sum(double z) {
  double a = kLanczos[0];
  for (int i = 1; i < 9; ++i) a += kLanczos[i] / (z + static_cast<double>(i) - 1.0);
  return a;
}

}  // namespace detail

// Gamma function on (-1, 0) U (0, inf).  Negative arguments go through the
// reflection formula; nonpositive integers are poles.
inline double gamma(double x) {
  if (std::isnan(x)) throw domain_error("gamma: NaN argument");
  if (x <= 0.0) {
    if (x == std::floor(x)) throw domain_error("gamma: pole at nonpositive integer " + std::to_string(x));
    // 1/(Gamma(z)Gamma(1-z)) = sin(pi z)/pi
    return kPi / (std::sin(kPi * x) * gamma(1.0 - x));
  }
  if (x >= 0.5) {
    const double t = x + detail::kLanczosG - 0.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, x - 0.5) * std::exp(-t) * detail::lanczos_sum(x);
  }
  // x in (0, 0.5): reflect to keep the Lanczos argument comfortable.
  return kPi / (std::sin(kPi * x) * gamma(1.0 - x));
}

// 1/Gamma(x) extended by the limit value 0 at the poles x = 0, -1, -2, ...
inline double recip_gamma(double x) {
  if (x <= 0.0 && x == std::floor(x)) return 0.0;
  return 1.0 / gamma(x);
}

// sin(pi x), exactly zero at integers and fully accurate near them.
inline double sin_pi(double x) {
  const double m = std::round(x);
  const double r = x - m;
  if (r == 0.0) return 0.0;
  const double core = std::sin(kPi * r);
  return (std::fmod(std::fabs(m), 2.0) == 0.0) ? core : -core;
}

// sin(pi x)/x with the x = 0 limit pi.  Used where reflection-formula factors
// like sin(pi a)/(1 - a) must stay finite at a = 1.
inline double sin_pi_over(double x) {
  if (x == 0.0) return kPi;
  return sin_pi(x) / x;
}

namespace detail {

// Lower incomplete gamma by series, valid and fast for x < a + 1.
inline double lower_gamma_series(double a, double x) {
  double term = 1.0 / a;
  double sum = term;
  for (int k = 1; k < 500; ++k) {
    term *= x / (a + k);
    sum += term;
    if (std::fabs(term) < 1e-17 * std::fabs(sum)) break;
  }
  return std::pow(x, a) * std::exp(-x) * sum;
}

// Continued fraction for the upper tail (modified Lentz), for x >= a + 1.
inline double upper_gamma_cf(double a, double x) {
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 500; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < 1e-16) break;
  }
  return std::exp(-x + a * std::log(x)) * h;
}

}  // namespace detail

// Upper incomplete gamma Gamma(a, x) = int_x^inf t^(a-1) e^(-t) dt,
// for a in [2, 5] and x >= 0.
inline double upper_incomplete_gamma(double a, double x) {
  if (!(a >= 2.0 && a <= 5.0)) throw domain_error("upper_incomplete_gamma: a outside [2, 5]");
  if (!(x >= 0.0)) throw domain_error("upper_incomplete_gamma: x < 0");
  if (x == 0.0) return gamma(a);
  if (x < a + 1.0) return gamma(a) - detail::lower_gamma_series(a, x);
  return detail::upper_gamma_cf(a, x);
}

// Rising factorial (a)_k as a direct product, finite for every real a.
inline double pochhammer(double a, int k) {
  double p = 1.0;
  for (int i = 0; i < k; ++i) p *= a + static_cast<double>(i);
  return p;
}

// Generalized binomial coefficient binom(alpha, k) for alpha in (0, 1),
// via the reflection form (-1)^(k+1) Gamma(1+alpha) Gamma(k-alpha) sin(pi alpha) / (pi k!).
inline double binom_alpha(double alpha, int k) {
  if (k < 0) throw domain_error("binom_alpha: negative k");
  if (k == 0) return 1.0;
  if (k == 1) return alpha;
  const double sign = (k % 2 == 0) ? -1.0 : 1.0;
  double kfact = 1.0;
  for (int i = 2; i <= k; ++i) kfact *= i;
  return sign * gamma(1.0 + alpha) * gamma(static_cast<double>(k) - alpha) * sin_pi(alpha) /
         (kPi * kfact);
}

// Principal-branch complex power z^p, Arg z in (-pi, pi].
inline std::complex<double> principal_pow(std::complex<double> z, double p) {
  if (z == std::complex<double>(0.0, 0.0)) {
    if (p > 0.0) return {0.0, 0.0};
    throw domain_error("principal_pow: 0^p with p <= 0");
  }
  double arg = std::arg(z);
  if (arg == -kPi) arg = kPi;
  const double lr = std::log(std::abs(z));
  return std::polar(std::exp(p * lr), p * arg);
}

// R(s, phi) = |e^s - e^(+-i phi)| = sqrt(e^(2s) + 1 - 2 e^s cos phi).
// Computed as hypot(e^s - 1, 2 e^(s/2) sin(phi/2)), which is that same
// quantity with the cancellation removed; for s >= 1 the e^s factor is pulled
// out so only negative exponents appear.
inline double R(double s, double phi) {
  if (!(s >= 0.0)) throw domain_error("R: s < 0");
  if (!(phi >= 0.0 && phi <= kPi)) throw domain_error("R: phi outside [0, pi]");
  const double sh = std::sin(0.5 * phi);
  if (s < 1.0) return std::hypot(std::expm1(s), 2.0 * std::exp(0.5 * s) * sh);
  return std::exp(s) * std::hypot(-std::expm1(-s), 2.0 * std::exp(-0.5 * s) * sh);
}

// R(s, phi) * e^(-s), stable for every s >= 0; tends to 1 as s -> inf.
inline double R_scaled(double s, double phi) {
  const double sh = std::sin(0.5 * phi);
  return std::hypot(-std::expm1(-s), 2.0 * std::exp(-0.5 * s) * sh);
}

}  // namespace brannan::specfun
