#pragma once

// Quantitative objects of the positivity proof: the lower-bound integrals
// I1, I2 and their combination h; the scaled form H and its two-term Watson
// main part H2 with remainder integrals E0, Einf; the certified bound pair
// P_n, Q_n; the monotonicity objects J, g, dJ/dn; and the derivative lower
// bounds F1, F2, F.

#include <cmath>

#include "brannan/constants.hpp"
#include "brannan/coeffs.hpp"
#include "brannan/errors.hpp"
#include "brannan/kernels.hpp"
#include "brannan/quadrature.hpp"
#include "brannan/specfun.hpp"

namespace brannan::bounds {

struct BoundParams {
  double alpha = 0.0, beta = 0.0;
  double phi = kPhi0;
};

namespace detail {

// Integrand numerator of I1 without the (e^s-1)^(-beta) factor:
//   [(e^s+1)^alpha - R^alpha] / dl^2, with its phi = pi limit.
// Safe at s = 0 (value dl^2 C1 / dl^2 > 0).
inline double i1_amplitude(double alpha, const kernels::detail::PhiCache& T, double s) {
  if (T.at_pi) {
    const double u = std::exp(-s);
    return 0.5 * alpha * std::exp((alpha - 1.0) * s + (alpha - 2.0) * std::log1p(u));
  }
  const double lnq = kernels::detail::ln_q(s, T);
  const double lnP = s + std::log1p(std::exp(-s));
  double diff;  // (e^s+1)^alpha - R^alpha
  const double x = alpha * lnq;
  if (x != 0.0) {
    diff = std::exp(alpha * lnP) * (-std::expm1(x));
  } else {
    diff = std::exp(alpha * lnP + std::log(alpha) + kernels::detail::ln_neg_ln_q(s, T));
  }
  return diff / T.dl2;
}

// [(e^s+1)^(-beta) - R^(-beta)] / dl^2 (<= 0), with its phi = pi limit.
inline double i2_amplitude(double beta, const kernels::detail::PhiCache& T, double s) {
  if (T.at_pi) {
    // -(beta/2) e^s (e^s+1)^(-beta-2) = -(beta/2) e^(-(1+beta)s) (1+u)^(-beta-2)
    const double u = std::exp(-s);
    return -0.5 * beta * std::exp(-(1.0 + beta) * s + (-beta - 2.0) * std::log1p(u));
  }
  const double lnq = kernels::detail::ln_q(s, T);
  const double lnP = s + std::log1p(std::exp(-s));
  const double x = -beta * lnq;
  if (x != 0.0) return -std::exp(-beta * lnP) * std::expm1(x) / T.dl2;
  return -std::exp(-beta * lnP + std::log(beta) + kernels::detail::ln_neg_ln_q(s, T)) / T.dl2;
}

inline double trunc_upper(double n) { return std::min(60.0, 2.0 + 50.0 / n); }

}  // namespace detail

// I1 = dl^(-2) int_0^inf (e^s-1)^(-beta) [(e^s+1)^alpha - R^alpha] e^(-ns) ds  (>= 0).
// The integrand is s^(-beta) psi(s) with psi smooth; the endpoint mass
// psi(0) S^(1-beta)/(1-beta) is split off analytically so the quadrature sees
// only the O(s^(1-beta)) remainder.  This keeps convergence uniform in beta
// up to 1 (where I1 itself diverges like 1/(1-beta)).
inline double i1(double alpha, double beta, double phi, double n) {
  if (!(n >= 1.0)) throw domain_error("i1: n < 1");
  if (beta == 1.0) throw domain_error("i1: divergent at beta = 1 (h handles the limit)");
  if (alpha == 0.0) return 0.0;
  kernels::detail::PhiCache T(phi);
  const double S = detail::trunc_upper(n);
  const double psi0 = detail::i1_amplitude(alpha, T, 0.0);
  auto psi = [&](double s) {
    const double pref = (s == 0.0) ? 1.0 : std::pow(s / std::expm1(s), beta);
    return pref * detail::i1_amplitude(alpha, T, s) * std::exp(-n * s);
  };
  const double sub = quad::tanh_sinh_nodes<double>(
      [&](const quad::QuadNode& nd) {
        const double diff = psi(nd.s) - psi0;
        if (diff == 0.0) return 0.0;
        const double ln = -beta * nd.ln_dl + nd.ln_w;
        return (ln > -720.0) ? diff * std::exp(ln) : 0.0;
      },
      0.0, S, 1e-14, 5e-12);
  return sub + psi0 * std::pow(S, 1.0 - beta) / (1.0 - beta);
}

// I2 = dl^(-2) int_0^inf (e^s-1)^alpha [(e^s+1)^(-beta) - R^(-beta)] e^(-ns) ds  (<= 0).
inline double i2(double alpha, double beta, double phi, double n) {
  if (!(n >= 1.0)) throw domain_error("i2: n < 1");
  if (beta == 0.0) return 0.0;
  kernels::detail::PhiCache T(phi);
  const double S = detail::trunc_upper(n);
  return quad::tanh_sinh_nodes<double>(
      [&](const quad::QuadNode& nd) {
        const double lnem1 = (nd.s > 1e-250) ? std::log(std::expm1(nd.s)) : nd.ln_dl;
        const double ln = alpha * lnem1 + nd.ln_w - n * nd.s;
        if (ln < -720.0) return 0.0;
        return std::exp(ln) * detail::i2_amplitude(beta, T, nd.s);
      },
      0.0, S, 1e-14, 5e-12);
}

// h = sin(pi beta) I1 + sin(pi alpha) I2.  At beta = 1 the first product has
// the finite limit pi C1(alpha, phi) (the 1/(1-beta) endpoint mass of I1
// against sin(pi beta) -> 0).
inline double h(double alpha, double beta, double phi, double n) {
  double first = 0.0;
  if (beta == 1.0) {
    first = kPi * kernels::c1(alpha, phi);
  } else if (beta > 0.0) {
    first = specfun::sin_pi(beta) * i1(alpha, beta, phi, n);
  }
  double second = 0.0;
  if (alpha > 0.0 && alpha < 1.0) {
    second = specfun::sin_pi(alpha) * i2(alpha, beta, phi, n);
  }
  return first + second;
}

// H = (1-alpha) n^(1+alpha-beta) h / ((alpha+beta) sin(pi a) sin(pi b) Gamma(1-b) Gamma(1+a)).
inline double h_scaled(double alpha, double beta, double phi, double n) {
  if (!(alpha > 0.0 && alpha < 1.0 && beta > 0.0 && beta < 1.0))
    throw domain_error("h_scaled: alpha, beta must be interior");
  const double nu = alpha + beta;
  return (1.0 - alpha) * std::pow(n, 1.0 + alpha - beta) * h(alpha, beta, phi, n) /
         (nu * specfun::sin_pi(alpha) * specfun::sin_pi(beta) * specfun::gamma(1.0 - beta) *
          specfun::gamma(1.0 + alpha));
}

namespace detail {

// Two-term Watson main part shared by H2 and P_n:
//   (1/nu) [A1 n^alpha {1 + (a-b)(1-b)/(2n)} - A2 n^(-beta) {1 + (a-b)(1+a)/(2n)}],
// with the joint (alpha, beta) -> (0,0) limit
//   A1(0,phi) [ln n + gamma_E - (1/2) ln(csc(phi/2)/4)].
inline double main_term(double alpha, double beta, double phi, double n) {
  if (alpha == 0.0 && beta == 0.0) {
    const double half_ln_csc_over4 = -0.5 * (kernels::ln_sin_half(phi) + 1.3862943611198906);
    return kernels::a1_coef(0.0, phi) * (std::log(n) + kEulerGamma - half_ln_csc_over4);
  }
  const double nu = alpha + beta;
  const double b1 = 1.0 + 0.5 * (alpha - beta) * (1.0 - beta) / n;
  const double b2 = 1.0 + 0.5 * (alpha - beta) * (1.0 + alpha) / n;
  return (kernels::a1_coef(alpha, phi) * std::pow(n, alpha) * b1 -
          kernels::a2_coef(alpha, beta, phi) * std::pow(n, -beta) * b2) /
         nu;
}

}  // namespace detail

inline double h2_main(double alpha, double beta, double phi, double n) {
  return detail::main_term(alpha, beta, phi, n);
}

// E0 = n^(1+alpha-beta) int_0^1 L e^(-ns) ds.
inline double e0(double alpha, double beta, double phi, double n) {
  const double val = quad::tanh_sinh<double>(
      [&](double s) { return kernels::L(alpha, beta, phi, s) * std::exp(-n * s); }, 0.0, 1.0,
      1e-13, 1e-11);
  return std::pow(n, 1.0 + alpha - beta) * val;
}

// Einf = n^(1+alpha-beta) int_1^inf L e^(-ns) ds.
inline double einf(double alpha, double beta, double phi, double n) {
  const double S = 1.0 + 55.0 / n;
  const double val = quad::tanh_sinh<double>(
      [&](double s) { return kernels::L(alpha, beta, phi, s) * std::exp(-n * s); }, 1.0, S,
      1e-14, 1e-11);
  return std::pow(n, 1.0 + alpha - beta) * val;
}

// P_n: the certified lower-bound main part minus the remainder bounds,
// with |m0|, |m_inf| supplied by the caller (frozen or recomputed).
inline double p_n(double alpha, double beta, double phi, double n, double m0_abs,
                  double minf_abs) {
  const double main = detail::main_term(alpha, beta, phi, n);
  const double t0 = m0_abs * specfun::gamma(2.0 - beta) * std::pow(n, alpha - 1.0);
  const double ti =
      minf_abs * specfun::upper_incomplete_gamma(3.0 + alpha, n) * std::pow(n, -2.0 - beta);
  return main - t0 - ti;
}

// Q_n = pi nu sin(pi alpha) Gamma(1+alpha) (pi-phi)^2 / ((1-alpha) Gamma(beta) n^(1+alpha-beta)),
// with sin(pi alpha)/(1-alpha) -> pi at alpha = 1 and 1/Gamma(0) = 0 at beta = 0.
inline double q_n(double alpha, double beta, double phi, double n) {
  const double dl = kPi - phi;
  return kPi * (alpha + beta) * specfun::sin_pi_over(1.0 - alpha) *
         specfun::gamma(1.0 + alpha) * dl * dl * specfun::recip_gamma(beta) /
         std::pow(n, 1.0 + alpha - beta);
}

// J = n^(1-alpha) P_n, in the expanded form used for the n-derivative.
inline double j_fn(double alpha, double beta, double phi, double n, double m0_abs,
                   double minf_abs) {
  if (alpha == 0.0 && beta == 0.0) return n * p_n(0.0, 0.0, phi, n, m0_abs, minf_abs);
  const double nu = alpha + beta;
  const double cc1 = 0.5 * (alpha - beta) * (1.0 - beta);
  const double cc2 = 0.5 * (alpha - beta) * (1.0 + alpha);
  return (kernels::a1_coef(alpha, phi) * (n + cc1) -
          std::pow(n, -nu) * kernels::a2_coef(alpha, beta, phi) * (n + cc2)) /
             nu -
         m0_abs * specfun::gamma(2.0 - beta) -
         minf_abs * specfun::upper_incomplete_gamma(3.0 + alpha, n) * std::pow(n, -1.0 - nu);
}

// g(n) = Gamma(3+alpha, n) n^(-1-nu).
inline double g_fn(double alpha, double beta, double n) {
  return specfun::upper_incomplete_gamma(3.0 + alpha, n) *
         std::pow(n, -1.0 - (alpha + beta));
}

// g'(n) = -(1+nu) n^(-2-nu) Gamma(3+alpha, n) - n^(1-beta) e^(-n)  (< 0).
inline double g_prime(double alpha, double beta, double n) {
  const double nu = alpha + beta;
  return -(1.0 + nu) * std::pow(n, -2.0 - nu) * specfun::upper_incomplete_gamma(3.0 + alpha, n) -
         std::pow(n, 1.0 - beta) * std::exp(-n);
}

// Closed-form dJ/dn, with the (0,0) limit
//   A1(0,phi) [ln n + 1 + gamma_E + (1/2) ln(4 sin(phi/2))] - |m_inf| g'(n).
inline double dj_dn(double alpha, double beta, double phi, double n, double minf_abs) {
  if (alpha == 0.0 && beta == 0.0) {
    const double half_ln_4sin = 0.5 * (kernels::ln_sin_half(phi) + 1.3862943611198906);
    return kernels::a1_coef(0.0, phi) * (std::log(n) + 1.0 + kEulerGamma + half_ln_4sin) -
           minf_abs * g_prime(0.0, 0.0, n);
  }
  const double nu = alpha + beta;
  const double cc2 = 0.5 * (alpha - beta) * (1.0 + alpha);
  const double a2 = kernels::a2_coef(alpha, beta, phi);
  return kernels::a1_coef(alpha, phi) / nu - (1.0 - nu) * a2 * std::pow(n, -nu) / nu +
         a2 * cc2 * std::pow(n, -1.0 - nu) - minf_abs * g_prime(alpha, beta, n);
}

// F1 = (1/nu) [A1 - max{1-nu, 0} 5^(-nu) A2]   (case alpha >= beta).
inline double f1(double alpha, double beta, double phi) {
  if (alpha == 0.0 && beta == 0.0) {
    // joint limit: A1(0,phi) [1 + gamma_E + ln 10 + (1/2) ln sin(phi/2)]
    return kernels::a1_coef(0.0, phi) *
           (1.0 + kEulerGamma + 2.302585092994046 + 0.5 * kernels::ln_sin_half(phi));
  }
  const double nu = alpha + beta;
  const double w = std::max(1.0 - nu, 0.0) * std::pow(5.0, -nu);
  return (kernels::a1_coef(alpha, phi) - w * kernels::a2_coef(alpha, beta, phi)) / nu;
}

// F2 = (1/nu) [A1 - 5^(-nu) {|1-nu| + nu |c2|/5} A2]   (case alpha < beta).
inline double f2(double alpha, double beta, double phi) {
  if (alpha == 0.0 && beta == 0.0) return f1(alpha, beta, phi);
  const double nu = alpha + beta;
  const double cc2 = 0.5 * (alpha - beta) * (1.0 + alpha);
  const double w = std::pow(5.0, -nu) * (std::fabs(1.0 - nu) + nu * std::fabs(cc2) / 5.0);
  return (kernels::a1_coef(alpha, phi) - w * kernels::a2_coef(alpha, beta, phi)) / nu;
}

// F = F1 on alpha >= beta, F2 on alpha < beta.
inline double f_combined(double alpha, double beta, double phi) {
  return (alpha >= beta) ? f1(alpha, beta, phi) : f2(alpha, beta, phi);
}

}  // namespace brannan::bounds
