#pragma once

// Double-exponential (tanh-sinh) quadrature on a finite interval.
//
// The integrands in this project have at worst an algebraic singularity
// s^(-beta), beta in [0, 1), at the left endpoint; the substitution
// s = a + (b-a)/(1+e^(-2u)), u = (pi/2) sinh t absorbs it.  Each node hands
// the integrand both the abscissa and exact logarithms of the distance to the
// left endpoint and of the jacobian weight, so singular factors can be folded
// in log space even where the raw quantities underflow.

#include <cmath>
#include <complex>
#include <cstdint>
#include <string>

#include "brannan/errors.hpp"

namespace brannan::quad {

struct QuadNode {
  double s;      // abscissa in (a, b)
  double dl;     // s - a; may underflow to zero at extreme nodes
  double ln_dl;  // log(s - a), always finite
  double w;      // jacobian ds/dt; may underflow to zero
  double ln_w;   // log of the jacobian, always finite
};

namespace detail {

inline double ln_cosh(double u) {
  const double au = std::fabs(u);
  return au + std::log1p(std::exp(-2.0 * au)) - 0.6931471805599453;
}

inline QuadNode make_node(double t, double a, double b) {
  const double len = b - a;
  const double u = 1.5707963267948966 * std::sinh(t);
  QuadNode nd;
  if (u >= 0.0) {
    const double e2mu = std::exp(-2.0 * u);
    const double dr = len * e2mu / (1.0 + e2mu);  // b - s
    nd.dl = len / (1.0 + e2mu);
    nd.s = b - dr;
    nd.ln_dl = std::log(len) - std::log1p(e2mu);
  } else {
    const double e2u = std::exp(2.0 * u);
    nd.dl = len * e2u / (1.0 + e2u);
    nd.s = a + nd.dl;
    nd.ln_dl = std::log(len) + 2.0 * u - std::log1p(e2u);
  }
  nd.ln_w = std::log(0.25 * 3.141592653589793 * len) + std::log(std::cosh(t)) - 2.0 * ln_cosh(u);
  nd.w = (nd.ln_w > -745.0) ? std::exp(nd.ln_w) : 0.0;
  return nd;
}

inline double magnitude(double x) { return std::fabs(x); }
inline double magnitude(const std::complex<double>& x) { return std::abs(x); }

}  // namespace detail

// Integrate f(QuadNode) (the integrand already multiplied by the node weight,
// or assembled in log space from ln_w) over (a, b).  T is double or
// complex<double>.
template <class T, class F>
T tanh_sinh_nodes(F&& f, double a, double b, double abs_tol, double rel_tol,
                  long* eval_count = nullptr) {
  constexpr double kTMax = 6.8;
  constexpr int kMaxLevel = 10;
  long evals = 0;

  auto sweep = [&](double h, bool odd_only) -> T {
    T acc{};
    // outward from t = 0 in both directions
    for (int dir : {+1, -1}) {
      int tiny_run = 0;
      int k = odd_only ? 1 : (dir > 0 ? 0 : 1);
      const int step = odd_only ? 2 : 1;
      for (; k * h <= kTMax; k += step) {
        const double t = dir * k * h;
        const QuadNode nd = detail::make_node(t, a, b);
        const T term = f(nd);
        ++evals;
        acc += term;
        const double mag = detail::magnitude(term);
        if (mag < 1e-300 + 1e-18 * detail::magnitude(acc)) {
          if (++tiny_run >= 2) break;
        } else {
          tiny_run = 0;
        }
      }
    }
    return acc;
  };

  double h = 1.0;
  T integral = sweep(h, false) * h;
  for (int level = 1; level <= kMaxLevel; ++level) {
    h *= 0.5;
    const T refined = integral * 0.5 + sweep(h, true) * h;
    const double diff = detail::magnitude(refined - integral);
    integral = refined;
    if (eval_count) *eval_count = evals;
    if (level >= 2 && diff <= std::max(abs_tol, rel_tol * detail::magnitude(integral))) {
      return integral;
    }
  }
  throw numerical_error("tanh_sinh: no convergence on [" + std::to_string(a) + ", " +
                        std::to_string(b) + "]");
}

// Convenience overload for bounded integrands g(s).
template <class T, class F>
T tanh_sinh(F&& g, double a, double b, double abs_tol, double rel_tol,
            long* eval_count = nullptr) {
  return tanh_sinh_nodes<T>([&](const QuadNode& nd) -> T { return g(nd.s) * nd.w; }, a, b,
                            abs_tol, rel_tol, eval_count);
}

}  // namespace brannan::quad
