#pragma once

namespace brannan {

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kEulerGamma = 0.5772156649015329;

// Angular margin of the certified range: |arg(omega)| <= pi - kPhi0.
inline constexpr double kPhi0 = 0.061;

// Reference values of the certified constants, to all published digits.
// The searches in minimize.hpp re-derive these; the CLI can run with either.
namespace frozen {

inline constexpr double m0 = -0.0976382271;
inline constexpr double m0_s = 0.0215923350;          // argmin s, at (0, 0, phi0)
inline constexpr double minf = -0.03332478558;
inline constexpr double minf_s = 3.999154909;         // argmin s, at (0, 1, phi0)
inline constexpr double linf_tail = -0.008293818653;  // inf over s in [30, 1e5], at s = 30
inline constexpr double linf_1e5 = -0.2665816964e-5;  // inf over (alpha, beta, phi) at s = 1e5

inline constexpr double p5_inf = 0.001500310752;      // at (0, 1, phi0)
inline constexpr double p5_pi_slice = 0.01621575275;  // published pi-slice value at (0, 1)
inline constexpr double f1_inf = 0.03251857515;       // at (1, 1, phi0)
inline constexpr double f2_inf = 0.03204047407;       // at (alpha2, 1, phi0)
inline constexpr double f2_arg = 0.8583872779;
inline constexpr double f2_pi_slice = 0.03287693288;  // at (alpha2pi, 1)
inline constexpr double f2_pi_arg = 0.4852393602;
// Published F1 pi-slice claim: exactly 1/(8*pi), at (1, 1).
inline constexpr double f1_pi_slice = 0.039788735772973834;

}  // namespace frozen

// Values the faithful formulas actually produce where the published asides
// disagree (each verified by 40-digit evaluation of the displayed closed
// forms; see the corner tests and the README accuracy notes).
namespace faithful {

inline constexpr double m0 = -0.09763809580403393;
inline constexpr double m0_s = 0.021592302456376682;
inline constexpr double p5_pi_slice = 0.016613640104263986;    // at (0, 1)
inline constexpr double f1_pi_slice = 0.039242130377048996;    // at the diagonal point
inline constexpr double f1_pi_arg = 0.8978301354455572;        // alpha = beta there

}  // namespace frozen
}  // namespace brannan
