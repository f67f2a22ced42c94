#pragma once

// Watson-expansion coefficient functions C1, C2, A1, A2 and remainder kernels
// K1, K2, G1, G2, L, L0, Linf, with every removable-singularity boundary
// limit (alpha, beta in {0, 1}, phi = pi) and large-s stable forms.
//
// The two difference quotients at the heart of K1/K2,
//   ((e^s+1)^a - R^a) / (2^a - (2 sin(phi/2))^a)        and
//   (R^(-b) - (e^s+1)^(-b)) / ((2 sin(phi/2))^(-b) - 2^(-b)),
// are evaluated as expm1(a*lnq)/expm1(a*lnsin) style ratios with
//   lnq   = log(R / (e^s + 1))   <= 0,
//   lnsin = log(sin(phi/2))      <= 0,
// both computed in cancellation-free form.  Every boundary limit then
// follows by continuity of expm1(c x)/c at c = 0 or lnsin -> 0, so the
// closed-form dispatch below agrees with interior evaluation to full
// precision right up to the edges.  For s >= 1 all exponentials are
// rearranged so only negative exponents appear, with products assembled in
// log space to dodge 0 * inf at very large s.

#include <cmath>
#include <string>

#include "brannan/constants.hpp"
#include "brannan/errors.hpp"
#include "brannan/specfun.hpp"

namespace brannan::kernels {

struct KernelPoint {
  double alpha = 0.0, beta = 0.0;
  double phi = kPhi0;
  double s = 0.0;
};

enum class Edge { interior, zero, one };
enum class PhiEdge { interior, pi };

// Exact-equality boundary classification; grids place nodes exactly on edges.
struct BoundaryTag {
  Edge alpha_edge = Edge::interior;
  Edge beta_edge = Edge::interior;
  PhiEdge phi_edge = PhiEdge::interior;
};

inline BoundaryTag classify(double alpha, double beta, double phi) {
  BoundaryTag t;
  t.alpha_edge = (alpha == 0.0) ? Edge::zero : (alpha == 1.0 ? Edge::one : Edge::interior);
  t.beta_edge = (beta == 0.0) ? Edge::zero : (beta == 1.0 ? Edge::one : Edge::interior);
  t.phi_edge = (phi == kPi) ? PhiEdge::pi : PhiEdge::interior;
  return t;
}

namespace detail {

inline void check_phi(double phi) {
  if (!(phi >= kPhi0 && phi <= kPi))
    throw domain_error("kernels: phi outside [phi0, pi], got " + std::to_string(phi));
}

// Trigonometric quantities of phi shared by every kernel; all stable at
// phi -> pi where sin(phi/2) -> 1.
struct PhiCache {
  double phi, dl, dl2;
  double sin_half;      // sin(phi/2)
  double one_m_sin;     // 1 - sin(phi/2) = 2 sin^2(dl/4)
  double ln_sin;        // log(sin(phi/2)) <= 0
  double sin2_hd;       // sin^2(dl/2) = (1 + cos phi)/2
  double cos_phi;
  bool at_pi;

  explicit PhiCache(double p) {
    check_phi(p);
    phi = p;
    dl = kPi - p;
    dl2 = dl * dl;
    sin_half = std::sin(0.5 * p);
    const double sq = std::sin(0.25 * dl);
    one_m_sin = 2.0 * sq * sq;
    ln_sin = std::log1p(-one_m_sin);
    const double sh = std::sin(0.5 * dl);
    sin2_hd = sh * sh;
    cos_phi = std::cos(p);
    at_pi = (p == kPi);
  }
};

// log(R(s,phi)/(e^s+1)) via R^2 = (e^s+1)^2 - 4 e^s sin^2(dl/2).
inline double ln_q(double s, const PhiCache& T) {
  const double u = std::exp(-s);
  const double opu = 1.0 + u;
  const double t = 4.0 * u * T.sin2_hd / (opu * opu);
  return 0.5 * std::log1p(-t);
}

// log(-ln_q) for the regime where ln_q underflows (s beyond ~745).
inline double ln_neg_ln_q(double s, const PhiCache& T) {
  const double u = std::exp(-s);
  return std::log(2.0 * T.sin2_hd) - s - 2.0 * std::log1p(u);
}

// log(e^s - 1), valid down to denormal s.
inline double ln_em1(double s) {
  return (s < 1.0) ? std::log(std::expm1(s)) : s + std::log1p(-std::exp(-s));
}

// log(-expm1(c * lnq)) where c > 0; falls back to log(c) + log(-lnq) when
// c * lnq underflows to zero.
inline double ln_abs_expm1_clnq(double c, double lnq, double s, const PhiCache& T) {
  const double x = c * lnq;
  if (x != 0.0) return std::log(-std::expm1(x));
  return std::log(c) + ln_neg_ln_q(s, T);
}

}  // namespace detail

// log(sin(phi/2)), stable up to phi = pi where it vanishes quadratically.
inline double ln_sin_half(double phi) { return detail::PhiCache(phi).ln_sin; }

// 1 - sin(phi/2) = 2 sin^2((pi - phi)/4), cancellation free.
inline double one_minus_sin_half(double phi) { return detail::PhiCache(phi).one_m_sin; }

// --- coefficient functions ---------------------------------------------------

// C1(alpha, phi) = [2^alpha - (2 sin(phi/2))^alpha] / (pi - phi)^2, with the
// phi -> pi limit 2^alpha alpha / 8.
inline double c1(double alpha, double phi) {
  detail::PhiCache T(phi);
  if (T.at_pi) return std::pow(2.0, alpha) * alpha / 8.0;
  return std::pow(2.0, alpha) * (-std::expm1(alpha * T.ln_sin)) / T.dl2;
}

// C2(beta, phi) = [(2 sin(phi/2))^(-beta) - 2^(-beta)] / (pi - phi)^2, with
// the phi -> pi limit 2^(-beta) beta / 8.
inline double c2(double beta, double phi) {
  detail::PhiCache T(phi);
  if (T.at_pi) return std::pow(2.0, -beta) * beta / 8.0;
  return std::pow(2.0, -beta) * std::expm1(-beta * T.ln_sin) / T.dl2;
}

// A1(alpha, phi) = (1 - alpha) C1 / (sin(pi alpha) Gamma(1 + alpha)).
inline double a1_coef(double alpha, double phi) {
  detail::PhiCache T(phi);
  if (T.at_pi) return std::pow(2.0, alpha) * specfun::gamma(2.0 - alpha) / (8.0 * kPi);
  if (alpha == 0.0) return -T.ln_sin / (kPi * T.dl2);
  if (alpha == 1.0) return 2.0 * T.one_m_sin / (kPi * T.dl2);
  return (1.0 - alpha) * c1(alpha, phi) / (specfun::sin_pi(alpha) * specfun::gamma(1.0 + alpha));
}

// A2(alpha, beta, phi) = (1 - alpha) Gamma(beta) [(2 sin(phi/2))^(-beta) - 2^(-beta)] / (pi dl^2).
inline double a2_coef(double alpha, double beta, double phi) {
  detail::PhiCache T(phi);
  if (T.at_pi)
    return (1.0 - alpha) * specfun::gamma(1.0 + beta) / (8.0 * kPi * std::pow(2.0, beta));
  if (beta == 0.0) return -(1.0 - alpha) * T.ln_sin / (kPi * T.dl2);
  if (beta == 1.0) return (1.0 - alpha) * (T.one_m_sin / T.sin_half) / (2.0 * kPi * T.dl2);
  return (1.0 - alpha) * specfun::gamma(beta) * std::pow(2.0, -beta) *
         std::expm1(-beta * T.ln_sin) / (kPi * T.dl2);
}

namespace detail {

// X1 = (s/(e^s-1))^beta * ((e^s+1)^alpha - R^alpha) / (2^alpha - (2 sin(phi/2))^alpha).
inline double x1_factor(double alpha, double beta, const PhiCache& T, double s) {
  const double u = std::exp(-s);
  if (T.at_pi) {
    // ratio -> 4 e^s (e^s+1)^(alpha-2) / 2^alpha
    const double ln = (2.0 - alpha) * 0.6931471805599453 + (alpha - 1.0) * s +
                      (alpha - 2.0) * std::log1p(u) + beta * (std::log(s) - ln_em1(s));
    return std::exp(ln);
  }
  const double lnq = ln_q(s, T);
  if (alpha == 0.0) {
    double ratio;
    if (lnq != 0.0) {
      ratio = lnq / T.ln_sin;
    } else {
      ratio = -std::exp(ln_neg_ln_q(s, T)) / T.ln_sin;
    }
    const double pref = (s < 1.0) ? std::pow(s / std::expm1(s), beta)
                                  : std::exp(beta * (std::log(s) - ln_em1(s)));
    return pref * ratio;
  }
  if (s < 1.0) {
    const double pref = std::pow(s / std::expm1(s), beta);
    const double mid = std::pow(0.5 * (std::exp(s) + 1.0), alpha);
    return pref * mid * std::expm1(alpha * lnq) / std::expm1(alpha * T.ln_sin);
  }
  const double ln = beta * (std::log(s) - ln_em1(s)) +
                    alpha * (s + std::log1p(u) - 0.6931471805599453) +
                    ln_abs_expm1_clnq(alpha, lnq, s, T) - std::log(-std::expm1(alpha * T.ln_sin));
  return (ln > -745.0) ? std::exp(ln) : 0.0;
}

// X2 = ((e^s-1)/s)^alpha * (R^(-beta) - (e^s+1)^(-beta)) / ((2 sin(phi/2))^(-beta) - 2^(-beta)).
inline double x2_factor(double alpha, double beta, const PhiCache& T, double s) {
  const double u = std::exp(-s);
  if (T.at_pi) {
    // ratio -> 2^(2+beta) e^s (e^s+1)^(-2-beta)
    const double ln = (2.0 + beta) * 0.6931471805599453 - (1.0 + beta) * s -
                      (2.0 + beta) * std::log1p(u) + alpha * (ln_em1(s) - std::log(s));
    return std::exp(ln);
  }
  const double lnq = ln_q(s, T);
  if (beta == 0.0) {
    if (s < 1.0) {
      return std::pow(std::expm1(s) / s, alpha) * lnq / T.ln_sin;
    }
    // The prefactor grows like e^(alpha s) while the log ratio decays like
    // e^(-s); combine in log space.
    const double ln_ratio = (lnq != 0.0) ? std::log(lnq / T.ln_sin)
                                         : ln_neg_ln_q(s, T) - std::log(-T.ln_sin);
    const double ln = alpha * (ln_em1(s) - std::log(s)) + ln_ratio;
    return (ln > -745.0) ? std::exp(ln) : 0.0;
  }
  if (s < 1.0) {
    const double pref = std::pow(std::expm1(s) / s, alpha);
    const double mid = std::pow(2.0 / (std::exp(s) + 1.0), beta);
    return pref * mid * std::expm1(-beta * lnq) / std::expm1(-beta * T.ln_sin);
  }
  double lnE2;
  const double x = -beta * lnq;
  if (x != 0.0) {
    lnE2 = std::log(std::expm1(x));
  } else {
    lnE2 = std::log(beta) + ln_neg_ln_q(s, T);
  }
  const double ln = alpha * (ln_em1(s) - std::log(s)) +
                    beta * (0.6931471805599453 - s - std::log1p(u)) + lnE2 -
                    std::log(std::expm1(-beta * T.ln_sin));
  return (ln > -745.0) ? std::exp(ln) : 0.0;
}

}  // namespace detail

// Remainder kernels: K_j = (X_j - 1 - (alpha - beta) s / 2) / s^2.
inline double k1(double alpha, double beta, double phi, double s) {
  if (!(s > 0.0)) throw domain_error("k1: s must be positive");
  detail::PhiCache T(phi);
  return (detail::x1_factor(alpha, beta, T, s) - 1.0 - 0.5 * (alpha - beta) * s) / (s * s);
}

inline double k2(double alpha, double beta, double phi, double s) {
  if (!(s > 0.0)) throw domain_error("k2: s must be positive");
  detail::PhiCache T(phi);
  return (detail::x2_factor(alpha, beta, T, s) - 1.0 - 0.5 * (alpha - beta) * s) / (s * s);
}

// Scaled integrands of the lower-bound integrals:
//   G1 = [(e^s+1)^alpha - R^alpha] / (dl^2 (e^s-1)^beta),
//   G2 = (e^s-1)^alpha [(e^s+1)^(-beta) - R^(-beta)] / dl^2   (<= 0).
inline double g1(double alpha, double beta, double phi, double s) {
  if (!(s > 0.0)) throw domain_error("g1: s must be positive");
  detail::PhiCache T(phi);
  const double u = std::exp(-s);
  if (T.at_pi) {
    if (alpha == 0.0) return 0.0;
    const double ln = std::log(0.5 * alpha) + (alpha - 1.0) * s + (alpha - 2.0) * std::log1p(u) -
                      beta * detail::ln_em1(s);
    return std::exp(ln);
  }
  if (alpha == 0.0) return 0.0;
  const double lnq = detail::ln_q(s, T);
  if (s < 1.0) {
    return -std::pow(std::exp(s) + 1.0, alpha) * std::expm1(alpha * lnq) /
           (T.dl2 * std::pow(std::expm1(s), beta));
  }
  const double ln = alpha * (s + std::log1p(u)) + detail::ln_abs_expm1_clnq(alpha, lnq, s, T) -
                    beta * detail::ln_em1(s);
  return std::exp(ln) / T.dl2;
}

inline double g2(double alpha, double beta, double phi, double s) {
  if (!(s > 0.0)) throw domain_error("g2: s must be positive");
  detail::PhiCache T(phi);
  const double u = std::exp(-s);
  if (T.at_pi) {
    if (beta == 0.0) return 0.0;
    const double ln = std::log(0.5 * beta) + alpha * detail::ln_em1(s) - (1.0 + beta) * s -
                      (2.0 + beta) * std::log1p(u);
    return -std::exp(ln);
  }
  if (beta == 0.0) return 0.0;
  const double lnq = detail::ln_q(s, T);
  if (s < 1.0) {
    return -std::pow(std::expm1(s), alpha) * std::pow(std::exp(s) + 1.0, -beta) *
           std::expm1(-beta * lnq) / T.dl2;
  }
  double lnE2;
  const double x = -beta * lnq;
  lnE2 = (x != 0.0) ? std::log(std::expm1(x)) : std::log(beta) + detail::ln_neg_ln_q(s, T);
  const double ln = alpha * detail::ln_em1(s) - beta * (s + std::log1p(u)) + lnE2;
  return -std::exp(ln) / T.dl2;
}

namespace detail {

// L at the (alpha, beta) = (0, 0) corner.
inline double l_corner00(const PhiCache& T, double s) {
  if (T.at_pi) {
    if (s < 1e-4) {
      return s * s * (std::log(0.5 * s) + 1.0 / 3.0) / (32.0 * kPi);
    }
    const double u = std::exp(-s);
    const double sech2 = 4.0 * u / ((1.0 + u) * (1.0 + u));
    const double ln_coth = std::log1p(u) - std::log(-std::expm1(-s));
    return (sech2 * ln_coth + std::log(0.5 * s)) / (8.0 * kPi);
  }
  if (s < 1e-4) {
    const double tn = std::tan(0.5 * T.dl);  // cot(phi/2)
    return tn * tn * s * s * std::log(s) / (8.0 * kPi * T.dl2);
  }
  const double u = std::exp(-s);
  const double lnq = ln_q(s, T);
  const double lnP = s + std::log1p(u);  // log(e^s + 1)
  const double lnE = ln_em1(s);
  const double lnR = lnP + lnq;
  const double bracket =
      lnq * (2.0 * lnE - lnP - lnR) +
      T.ln_sin * (1.3862943611198906 + T.ln_sin - 2.0 * std::log(s));  // ln 4 = 1.386...
  return bracket / (2.0 * kPi * T.dl2);
}

// L at (alpha, beta) = (0, 1).
inline double l_corner01(const PhiCache& T, double s) {
  const double u = std::exp(-s);
  if (T.at_pi) {
    const double opu = 1.0 + u;
    return ((1.0 - 0.5 * s) / 16.0 - 0.5 * u * u / (opu * opu * opu)) / kPi;
  }
  const double cscm1 = T.one_m_sin / T.sin_half;  // csc(phi/2) - 1
  const double invR = (s < 1.0) ? 1.0 / specfun::R(s, T.phi) : u / specfun::R_scaled(s, T.phi);
  return (0.5 * cscm1 * (1.0 - 0.5 * s) - invR + u / (1.0 + u)) / (kPi * T.dl2);
}

// L at (alpha, beta) = (1, 0).
inline double l_corner10(const PhiCache& T, double s) {
  const double u = std::exp(-s);
  if (T.at_pi) {
    return (0.5 / (1.0 + u) - (s + 2.0) / 8.0) / kPi;
  }
  // e^s - R = (2 cos(phi) - e^(-s)) / (1 + R e^(-s))
  const double es_minus_R = (2.0 * T.cos_phi - u) / (1.0 + specfun::R_scaled(s, T.phi));
  return (T.sin_half * (s + 2.0) + es_minus_R - s - 1.0) / (kPi * T.dl2);
}

struct LParts {
  double term1 = 0.0;  // A1 M1 s^(-beta) / Gamma(1-beta), with M = s^2 K
  double term2 = 0.0;  // A2 s^alpha M2 / Gamma(1+alpha)
  double nu = 0.0;
};

enum class Corner { generic, c00, c01, c10, c11 };

inline Corner corner_of(double alpha, double beta) {
  if (alpha == 0.0 && beta == 0.0) return Corner::c00;
  if (alpha == 0.0 && beta == 1.0) return Corner::c01;
  if (alpha == 1.0 && beta == 0.0) return Corner::c10;
  if (alpha == 1.0 && beta == 1.0) return Corner::c11;
  return Corner::generic;
}

}  // namespace detail

// L(alpha, beta, phi; s) of the remainder integrals, boundary limits included.
inline double L(double alpha, double beta, double phi, double s) {
  if (s == 0.0) return 0.0;
  if (!(s > 0.0)) throw domain_error("L: s < 0");
  // |L| <= C s^(2-beta); below this threshold the remainder-kernel
  // cancellation has no representable digits left, and 0 is exact to 1e-30.
  if (s < 1e-30) return 0.0;
  detail::PhiCache T(phi);
  switch (detail::corner_of(alpha, beta)) {
    case detail::Corner::c00: return detail::l_corner00(T, s);
    case detail::Corner::c01: return detail::l_corner01(T, s);
    case detail::Corner::c10: return detail::l_corner10(T, s);
    case detail::Corner::c11: return 0.0;
    case detail::Corner::generic: break;
  }
  const double nu = alpha + beta;
  double term1 = 0.0;
  if (beta < 1.0) {
    const double M1 = detail::x1_factor(alpha, beta, T, s) - 1.0 - 0.5 * (alpha - beta) * s;
    term1 = a1_coef(alpha, phi) * M1 * std::pow(s, -beta) / specfun::gamma(1.0 - beta);
  }
  double term2 = 0.0;
  if (alpha < 1.0) {
    const double M2 = detail::x2_factor(alpha, beta, T, s) - 1.0 - 0.5 * (alpha - beta) * s;
    term2 = a2_coef(alpha, beta, phi) * std::pow(s, alpha) * M2 / specfun::gamma(1.0 + alpha);
  }
  return (term1 - term2) / nu;
}

// L0 = s^(beta-1) L on s in [0, 1], with L0(..., 0) = 0 exactly.
inline double L0(double alpha, double beta, double phi, double s) {
  if (s == 0.0) return 0.0;
  if (!(s > 0.0 && s <= 1.0)) throw domain_error("L0: s outside [0, 1]");
  if (s < 1e-30) return 0.0;  // L0 = O(s)
  detail::PhiCache T(phi);
  switch (detail::corner_of(alpha, beta)) {
    case detail::Corner::c00: return detail::l_corner00(T, s) / s;
    case detail::Corner::c01: return detail::l_corner01(T, s);
    case detail::Corner::c10: return detail::l_corner10(T, s) / s;
    case detail::Corner::c11: return 0.0;
    case detail::Corner::generic: break;
  }
  const double nu = alpha + beta;
  double term1 = 0.0;
  if (beta < 1.0) {
    const double M1 = detail::x1_factor(alpha, beta, T, s) - 1.0 - 0.5 * (alpha - beta) * s;
    term1 = a1_coef(alpha, phi) * (M1 / s) / specfun::gamma(1.0 - beta);
  }
  double term2 = 0.0;
  if (alpha < 1.0) {
    const double M2 = detail::x2_factor(alpha, beta, T, s) - 1.0 - 0.5 * (alpha - beta) * s;
    term2 = a2_coef(alpha, beta, phi) * std::pow(s, nu - 1.0) * M2 / specfun::gamma(1.0 + alpha);
  }
  return (term1 - term2) / nu;
}

// Linf = s^(-2-alpha) L on s >= 1, evaluated through the stable large-s forms.
inline double Linf(double alpha, double beta, double phi, double s) {
  if (!(s >= 1.0)) throw domain_error("Linf: s < 1");
  detail::PhiCache T(phi);
  switch (detail::corner_of(alpha, beta)) {
    case detail::Corner::c00: return detail::l_corner00(T, s) / (s * s);
    case detail::Corner::c01: return detail::l_corner01(T, s) / (s * s);
    case detail::Corner::c10: return detail::l_corner10(T, s) / (s * s * s);
    case detail::Corner::c11: return 0.0;
    case detail::Corner::generic: break;
  }
  const double nu = alpha + beta;
  const double s2 = s * s;
  double term1 = 0.0;
  if (beta < 1.0) {
    const double K1v = (detail::x1_factor(alpha, beta, T, s) - 1.0 - 0.5 * (alpha - beta) * s) / s2;
    term1 = a1_coef(alpha, phi) * K1v * std::pow(s, -nu) / specfun::gamma(1.0 - beta);
  }
  double term2 = 0.0;
  if (alpha < 1.0) {
    const double K2v = (detail::x2_factor(alpha, beta, T, s) - 1.0 - 0.5 * (alpha - beta) * s) / s2;
    term2 = a2_coef(alpha, beta, phi) * K2v / specfun::gamma(1.0 + alpha);
  }
  return (term1 - term2) / nu;
}

// Fixed-(alpha, beta, phi) slice of L0/Linf with the phi trigonometry and
// coefficient functions precomputed; the hot path of the box searches.
class LSlice {
 public:
  LSlice(double alpha, double beta, double phi)
      : alpha_(alpha), beta_(beta), nu_(alpha + beta), T_(phi),
        corner_(detail::corner_of(alpha, beta)) {
    if (corner_ == detail::Corner::generic) {
      t1_coef_ = (beta < 1.0) ? a1_coef(alpha, phi) / specfun::gamma(1.0 - beta) : 0.0;
      t2_coef_ = (alpha < 1.0) ? a2_coef(alpha, beta, phi) / specfun::gamma(1.0 + alpha) : 0.0;
    }
  }

  double l0(double s) const {
    if (s < 1e-30) return 0.0;
    switch (corner_) {
      case detail::Corner::c00: return detail::l_corner00(T_, s) / s;
      case detail::Corner::c01: return detail::l_corner01(T_, s);
      case detail::Corner::c10: return detail::l_corner10(T_, s) / s;
      case detail::Corner::c11: return 0.0;
      case detail::Corner::generic: break;
    }
    double t1 = 0.0, t2 = 0.0;
    if (t1_coef_ != 0.0) t1 = t1_coef_ * (m1(s) / s);
    if (t2_coef_ != 0.0) t2 = t2_coef_ * std::pow(s, nu_ - 1.0) * m2(s);
    return (t1 - t2) / nu_;
  }

  double linf(double s) const {
    switch (corner_) {
      case detail::Corner::c00: return detail::l_corner00(T_, s) / (s * s);
      case detail::Corner::c01: return detail::l_corner01(T_, s) / (s * s);
      case detail::Corner::c10: return detail::l_corner10(T_, s) / (s * s * s);
      case detail::Corner::c11: return 0.0;
      case detail::Corner::generic: break;
    }
    const double s2 = s * s;
    double t1 = 0.0, t2 = 0.0;
    if (t1_coef_ != 0.0) t1 = t1_coef_ * (m1(s) / s2) * std::pow(s, -nu_);
    if (t2_coef_ != 0.0) t2 = t2_coef_ * (m2(s) / s2);
    return (t1 - t2) / nu_;
  }

 private:
  double m1(double s) const {
    return detail::x1_factor(alpha_, beta_, T_, s) - 1.0 - 0.5 * (alpha_ - beta_) * s;
  }
  double m2(double s) const {
    return detail::x2_factor(alpha_, beta_, T_, s) - 1.0 - 0.5 * (alpha_ - beta_) * s;
  }

  double alpha_, beta_, nu_;
  detail::PhiCache T_;
  detail::Corner corner_;
  double t1_coef_ = 0.0, t2_coef_ = 0.0;
};

// Human-readable formula provenance for reports: which closed form evaluates
// the point (alpha, beta, phi).
inline std::string provenance(double alpha, double beta, double phi) {
  const BoundaryTag t = classify(alpha, beta, phi);
  std::string which;
  switch (detail::corner_of(alpha, beta)) {
    case detail::Corner::c00: which = "corner (0,0) closed form"; break;
    case detail::Corner::c01: which = "corner (0,1) closed form"; break;
    case detail::Corner::c10: which = "corner (1,0) closed form"; break;
    case detail::Corner::c11: which = "identically zero at (1,1)"; break;
    case detail::Corner::generic:
      if (t.alpha_edge == Edge::interior && t.beta_edge == Edge::interior)
        which = "interior formula";
      else
        which = "edge limit (alpha or beta in {0,1})";
      break;
  }
  if (t.phi_edge == PhiEdge::pi) which += ", phi = pi limit";
  return which;
}

}  // namespace brannan::kernels
