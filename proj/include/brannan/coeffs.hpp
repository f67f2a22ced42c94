#pragma once

// Maclaurin coefficients A_n(alpha, beta, omega) of (1 + omega z)^alpha (1 - z)^(-beta),
// the scaled terminating hypergeometric w_n, and the Laplace-type integral
// representation of w_n used as an independent cross-check.

#include <cmath>
#include <complex>
#include <vector>

#include "brannan/constants.hpp"
#include "brannan/errors.hpp"
#include "brannan/quadrature.hpp"
#include "brannan/specfun.hpp"

namespace brannan::coeffs {

using cplx = std::complex<double>;

struct CoeffParams {
  double alpha = 0.0;  // in [0, 1]
  double beta = 0.0;   // in [0, 1]
  int n = 1;           // >= 1
};

// omega = e^{i theta} on the unit circle; x = -1/omega = e^{i phi} with
// phi = pi - theta, reduced into [0, pi] by conjugate symmetry.
struct OmegaPoint {
  double theta = 0.0;
  cplx omega() const { return std::polar(1.0, theta); }
  double phi() const {
    double t = std::remainder(theta, 2.0 * kPi);  // in [-pi, pi]
    return kPi - std::fabs(t);
  }
};

namespace detail {

inline double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace detail

// Coefficients c_k of A_n(alpha, beta, omega) = sum c_k omega^k,
// c_k = binom(alpha, k) * (beta)_(n-k) / (n-k)!.
inline std::vector<double> a_n_poly(double alpha, double beta, int n) {
  if (n < 0) throw domain_error("a_n_poly: n < 0");
  // (beta)_m / m! by upward recurrence; finite at beta = 0 (value 0 for m >= 1).
  std::vector<double> ratio(n + 1);
  ratio[0] = 1.0;
  for (int m = 1; m <= n; ++m) ratio[m] = ratio[m - 1] * (beta + m - 1.0) / m;
  std::vector<double> c(n + 1);
  for (int k = 0; k <= n; ++k) c[k] = specfun::binom_alpha(alpha, k) * ratio[n - k];
  return c;
}

inline cplx eval_poly(const std::vector<double>& c, cplx w) {
  cplx acc(0.0, 0.0);
  for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k) acc = acc * w + c[k];
  return acc;
}

inline cplx a_n(double alpha, double beta, cplx omega, int n) {
  return eval_poly(a_n_poly(alpha, beta, n), omega);
}

// Same coefficient through the terminating 2F1 series
// A_n = (beta)_n / n! * 2F1(-n, -alpha; 1 - beta - n; -omega).
inline cplx a_n_via_2f1(double alpha, double beta, cplx omega, int n) {
  if (beta == 0.0) throw domain_error("a_n_via_2f1: beta = 0 (use a_n)");
  cplx term(1.0, 0.0);
  cplx sum = term;
  for (int k = 0; k < n; ++k) {
    const double num = (-static_cast<double>(n) + k) * (-alpha + k);
    const double den = (1.0 - beta - n + k) * (k + 1.0);
    term *= (num / den) * (-omega);
    sum += term;
  }
  return specfun::pochhammer(beta, n) / detail::factorial(n) * sum;
}

// w_n(alpha, beta, x) = Gamma(n - alpha) Gamma(1 + alpha) sin(pi alpha) / n!
//                       * 2F1(beta, -n; alpha - n + 1; x),
// with the closed-form limits at alpha = 0 and alpha = 1.
inline cplx w_n(double alpha, double beta, cplx x, int n) {
  if (n < 1) throw domain_error("w_n: n < 1");
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw domain_error("w_n: alpha outside [0, 1]");
  const double nfact = detail::factorial(n);
  if (alpha == 0.0) {
    return -kPi * specfun::pochhammer(beta, n) / nfact * specfun::principal_pow(x, static_cast<double>(n));
  }
  if (alpha == 1.0) {
    const cplx xm = specfun::principal_pow(x, static_cast<double>(n - 1));
    return kPi * specfun::pochhammer(beta, n - 1) / nfact *
           (static_cast<double>(n) - (beta + n - 1.0) * x) * xm;
  }
  cplx term(1.0, 0.0);
  cplx sum = term;
  for (int k = 0; k < n; ++k) {
    const double num = (beta + k) * (k - static_cast<double>(n));
    const double den = (alpha - n + 1.0 + k) * (k + 1.0);
    term *= (num / den) * x;
    sum += term;
  }
  const double pref =
      specfun::gamma(n - alpha) * specfun::gamma(1.0 + alpha) * specfun::sin_pi(alpha) / nfact;
  return pref * sum;
}

namespace detail {

// log(e^s - 1) from a quadrature node anchored at s = 0.
inline double ln_expm1(const quad::QuadNode& nd) {
  if (nd.s > 1e-250) return std::log(std::expm1(nd.s));
  return nd.ln_dl;  // e^s - 1 ~ s
}

}  // namespace detail

// Laplace representation: for x off [0, inf),
//   w_n = (-1)^(n+1) sin(pi beta) (-x)^(n-alpha) T1 + sin(pi alpha) (-x)^(-beta) T2,
//   T1 = int_0^inf (e^s-1)^(-beta) (e^s-x)^alpha  e^(-ns) ds,
//   T2 = int_0^inf (e^s-1)^alpha  (e^s-1/x)^(-beta) e^(-ns) ds.
// At beta = 1 the first term is replaced by its limit value
//   (-1)^(n+1) pi (-x)^(n-alpha) (1-x)^alpha,
// obtained by splitting off the s^(-beta) endpoint mass of T1, whose
// 1/(1-beta) pole cancels against sin(pi beta); everything else carries a
// factor sin(pi beta) -> 0.
inline cplx w_n_laplace(double alpha, double beta, cplx x, int n) {
  if (n < 1) throw domain_error("w_n_laplace: n < 1");
  if (x.imag() == 0.0 && x.real() >= 0.0) throw domain_error("w_n_laplace: x on [0, inf)");
  if (!(alpha >= 0.0 && alpha <= 1.0 && beta >= 0.0 && beta <= 1.0))
    throw domain_error("w_n_laplace: parameters outside [0, 1]");

  const double sign = (n % 2 == 0) ? -1.0 : 1.0;  // (-1)^(n+1)
  const cplx mx = -x;
  cplx first(0.0, 0.0);
  if (beta == 1.0) {
    first = sign * kPi * specfun::principal_pow(mx, n - alpha) *
            specfun::principal_pow(1.0 - x, alpha);
  } else if (beta > 0.0) {
    // T1 integrand is s^(-beta) psi(s); the endpoint mass psi(0) S^(1-beta)/(1-beta)
    // is split off analytically so convergence stays uniform as beta -> 1.
    const double decay = n - 1.0 + beta - alpha;
    const double S = std::min(60.0, 48.0 / std::max(0.75, decay));
    const cplx one_minus_x = 1.0 - x;
    const cplx psi0 = specfun::principal_pow(one_minus_x, alpha);
    auto psi = [&](double s) -> cplx {
      const double pref = (s == 0.0) ? 1.0 : std::pow(s / std::expm1(s), beta);
      return pref * std::exp(-n * s) *
             specfun::principal_pow(one_minus_x + std::expm1(s), alpha);
    };
    const cplx sub = quad::tanh_sinh_nodes<cplx>(
        [&](const quad::QuadNode& nd) -> cplx {
          const cplx diff = psi(nd.s) - psi0;
          const double ln = -beta * nd.ln_dl + nd.ln_w;
          if (ln < -720.0) return {0.0, 0.0};
          return diff * std::exp(ln);
        },
        0.0, S, 1e-14, 5e-13);
    const cplx t1 = sub + psi0 * std::pow(S, 1.0 - beta) / (1.0 - beta);
    first = sign * specfun::sin_pi(beta) * specfun::principal_pow(mx, n - alpha) * t1;
  }

  cplx second(0.0, 0.0);
  if (alpha > 0.0) {
    const double decay = n - 1.0 + beta - alpha;
    const double S = std::min(60.0, 48.0 / std::max(0.75, decay));
    const cplx one_minus_rx = 1.0 - 1.0 / x;
    const cplx t2 = quad::tanh_sinh_nodes<cplx>(
        [&](const quad::QuadNode& nd) -> cplx {
          const double ln_amp = alpha * detail::ln_expm1(nd) + nd.ln_w - n * nd.s;
          if (ln_amp < -720.0) return {0.0, 0.0};
          return std::exp(ln_amp) * specfun::principal_pow(one_minus_rx + std::expm1(nd.s), -beta);
        },
        0.0, S, 1e-14, 5e-13);
    second = specfun::sin_pi(alpha) * specfun::principal_pow(mx, -beta) * t2;
  }
  return first + second;
}

// real(A_n(alpha, beta, 1)) - |A_n(alpha, beta, e^{i theta})|.
inline double brannan_margin(double alpha, double beta, double theta, int n) {
  const auto poly = a_n_poly(alpha, beta, n);
  const cplx at_one = eval_poly(poly, cplx(1.0, 0.0));
  if (std::fabs(at_one.imag()) > 1e-12)
    throw numerical_error("brannan_margin: A_n(1) has a nonreal component");
  const cplx at_omega = eval_poly(poly, std::polar(1.0, theta));
  return at_one.real() - std::abs(at_omega);
}

}  // namespace brannan::coeffs
