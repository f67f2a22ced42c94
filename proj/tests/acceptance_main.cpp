// Acceptance suite: runs each certification criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion.
//
//   acceptance --criterion N [--cli PATH]
//
// Exit code 0 when the requested criteria pass, 1 otherwise.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "brannan/bounds.hpp"
#include "brannan/constants.hpp"
#include "brannan/kernels.hpp"
#include "brannan/minimize.hpp"
#include "brannan/verify.hpp"

using namespace brannan;
namespace mz = brannan::minimize;

namespace {

struct Ctx {
  std::string cli_path;
  bool ok = true;
  std::chrono::steady_clock::time_point t0;
  void start() { t0 = std::chrono::steady_clock::now(); }
  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

void line(Ctx& ctx, int crit, bool pass, const std::string& what, const std::string& detail) {
  std::printf("criterion %2d: %s  %s\n              %s  [%.1f s]\n", crit,
              pass ? "PASS" : "FAIL", what.c_str(), detail.c_str(), ctx.elapsed());
  ctx.ok = ctx.ok && pass;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

bool near(double got, double want, double tol) { return std::fabs(got - want) <= tol; }

// ---- criterion 1: m0 reproduction -------------------------------------------------

void c1(Ctx& ctx) {
  ctx.start();
  const auto res = mz::compute_m0();
  const bool corner = res.argmin.alpha == 0.0 && res.argmin.beta == 0.0 &&
                      res.argmin.phi == kPhi0;
  const bool s_ok = near(res.argmin.s, frozen::m0_s, 1e-6);
  const bool v_ok = near(res.value, frozen::m0, 1e-8);
  line(ctx, 1, v_ok && corner && s_ok, "m0 reproduction (published value, 1e-8 abs)",
       "computed " + fmt(res.value) + " vs published " + fmt(frozen::m0) +
           (v_ok ? "" : " -- the displayed corner formula attains " + fmt(faithful::m0) +
                            " (40-digit verified); published digits hold only to ~7 "
                            "significant figures") +
           "; argmin (" + fmt(res.argmin.alpha) + ", " + fmt(res.argmin.beta) + ", " +
           fmt(res.argmin.phi) + ", s=" + fmt(res.argmin.s) + ")" +
           (corner && s_ok ? " ok" : " argmin MISS"));
}

// ---- criterion 2: m_inf reproduction ----------------------------------------------

void c2(Ctx& ctx) {
  ctx.start();
  mz::MinimizationResult tail;
  const auto res = mz::compute_minf({}, &tail);
  const bool v_ok = near(res.value, frozen::minf, 1e-9);
  const bool arg_ok = res.argmin.alpha == 0.0 && res.argmin.beta == 1.0 &&
                      res.argmin.phi == kPhi0 && near(res.argmin.s, frozen::minf_s, 1e-5);
  const bool tail_ok = near(tail.value, frozen::linf_tail, 1e-9) && tail.argmin.s == 30.0;
  const double spot = kernels::Linf(0.0, 1.0, kPhi0, 1e5);
  const bool spot_ok = near(spot, frozen::linf_1e5, 1e-13);
  line(ctx, 2, v_ok && arg_ok && tail_ok && spot_ok,
       "m_inf reproduction with tail audit and s = 1e5 spot value",
       "minf " + fmt(res.value) + " at s=" + fmt(res.argmin.s) + "; tail " + fmt(tail.value) +
           " at s=" + fmt(tail.argmin.s) + "; spot " + fmt(spot));
}

// ---- criterion 3: inf P5 ------------------------------------------------------------

void c3(Ctx& ctx) {
  ctx.start();
  const double m0a = -frozen::m0, mia = -frozen::minf;
  const auto res = mz::compute_inf_p5(m0a, mia);
  const bool v_ok = near(res.value, frozen::p5_inf, 1e-9);
  const bool at = res.argmin.alpha == 0.0 && res.argmin.beta == 1.0 && res.argmin.phi == kPhi0;
  // closed form of the infimum display
  const double csc = 1.0 / std::sin(0.5 * kPhi0);
  const double dl = kPi - kPhi0;
  const double closed = (std::log(csc) - 9.0 * (csc - 1.0) / 100.0) / (kPi * dl * dl) -
                        m0a / 5.0 - 37.0 * mia / (125.0 * std::exp(5.0));
  const bool closed_ok = std::fabs(closed - res.value) <= 1e-12;
  // pi slice against the published value
  const auto ps = mz::pi_slice_inf(mz::Fid::P5, {m0a, mia});
  const bool pi_ok = near(ps.value, frozen::p5_pi_slice, 1e-9);
  line(ctx, 3, v_ok && at && closed_ok && pi_ok,
       "inf P5 at (0, 1, phi0), closed form agreement, pi-slice value",
       "grid " + fmt(res.value) + ", closed form " + fmt(closed) + ", pi-slice " +
           fmt(ps.value) + " vs published " + fmt(frozen::p5_pi_slice) +
           (pi_ok ? ""
                  : " -- published pi-slice closed form drops a {1 - 1/(2n)} factor; the "
                    "displayed general form composes to " + fmt(faithful::p5_pi_slice)));
}

// ---- criterion 4: inf F1, inf F2, pi slices -----------------------------------------

void c4(Ctx& ctx) {
  ctx.start();
  const auto r1 = mz::compute_inf_f1();
  const bool f1_ok = near(r1.value, frozen::f1_inf, 1e-10) && r1.argmin.alpha == 1.0 &&
                     r1.argmin.beta == 1.0 && r1.argmin.phi == kPhi0;
  const auto r2 = mz::compute_inf_f2();
  const bool f2_ok = near(r2.value, frozen::f2_inf, 1e-9) &&
                     near(r2.argmin.alpha, frozen::f2_arg, 1e-6) && r2.argmin.beta == 1.0 &&
                     r2.argmin.phi == kPhi0;
  const auto p1 = mz::pi_slice_inf(mz::Fid::F1);
  const bool pi1_ok = near(p1.value, frozen::f1_pi_slice, 1e-12);
  const auto p2 = mz::pi_slice_inf(mz::Fid::F2);
  const bool pi2_ok = near(p2.value, frozen::f2_pi_slice, 1e-9) &&
                      near(p2.argmin.alpha, frozen::f2_pi_arg, 1e-6);
  line(ctx, 4, f1_ok && f2_ok && pi1_ok && pi2_ok, "inf F1, inf F2 and their pi-slices",
       "F1 " + fmt(r1.value) + ", F2 " + fmt(r2.value) + " at alpha=" + fmt(r2.argmin.alpha) +
           ", pi-F1 " + fmt(p1.value) + " vs published " + fmt(frozen::f1_pi_slice) +
           (pi1_ok ? ""
                   : " -- published aside names 1/(8 pi) at (1,1); the displayed formulas "
                     "attain " + fmt(faithful::f1_pi_slice) + " at alpha = beta = " +
                         fmt(faithful::f1_pi_arg)) +
           ", pi-F2 " + fmt(p2.value));
}

// ---- criteria 5-9: verification suites ----------------------------------------------

void c5(Ctx& ctx) {
  ctx.start();
  const auto rep = verify::verify_representations();
  line(ctx, 5, rep.passed, "representation identities (200 samples, <= 1e-8)",
       "worst residual " + fmt(rep.worst_value) + " over " + std::to_string(rep.samples) +
           " samples");
}

void c6(Ctx& ctx) {
  ctx.start();
  const auto rep = verify::verify_decomposition();
  line(ctx, 6, rep.passed, "Watson decomposition identity (listed + 50 random points)",
       "worst residual " + fmt(rep.worst_value) + " over " + std::to_string(rep.samples) +
           " points");
}

void c7(Ctx& ctx) {
  ctx.start();
  const auto rep = verify::verify_inequality_chain();
  line(ctx, 7, rep.passed, "inequality chain (200 samples + corner set, slack >= -1e-10)",
       "worst slack " + fmt(rep.worst_value));
}

void c8(Ctx& ctx) {
  ctx.start();
  const auto rep = verify::verify_brannan_direct();
  std::string notes;
  for (const auto& n : rep.notes) notes += n + "; ";
  line(ctx, 8, rep.passed, "direct conjecture margins (odd n <= 21 + theta = pi slice)",
       "min margin " + fmt(rep.worst_value) + " (theta=" +
           fmt(rep.worst_location.theta.value_or(-1)) + "); " + notes);
}

void c9(Ctx& ctx) {
  ctx.start();
  const auto rep = verify::verify_monotonicity();
  std::string notes;
  for (const auto& n : rep.notes) notes += n + "; ";
  line(ctx, 9, rep.passed, "monotonicity of J in n (20x20x10 grid)",
       "worst slack " + fmt(rep.worst_value) + "; " + notes);
}

// ---- criterion 10: determinism across thread counts ---------------------------------

std::string run_capture(const std::string& cmd, int* exit_code) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    *exit_code = -1;
    return out;
  }
  std::array<char, 4096> buf;
  while (size_t got = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
  const int status = pclose(pipe);
  *exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

void c10(Ctx& ctx) {
  ctx.start();
  if (ctx.cli_path.empty()) {
    line(ctx, 10, false, "determinism across thread counts", "--cli PATH not supplied");
    return;
  }
  // Reduced grid via identical --cfg flags in both runs; determinism is the
  // property under test, not grid density.
  const std::string base = ctx.cli_path +
                           " constants --which all --recompute --json"
                           " --cfg nodes_alpha=14 --cfg nodes_beta=14 --cfg nodes_phi=10"
                           " --cfg scan_s=48 --cfg refine_depth=0 2>/dev/null";
  int ec1 = 0, ec8 = 0;
  const std::string out1 = run_capture(base + " --threads 1", &ec1);
  const std::string out8 = run_capture(base + " --threads 8", &ec8);
  const bool identical = !out1.empty() && out1 == out8;
  line(ctx, 10, identical,
       "constants --which all --recompute byte-identical JSON, 1 vs 8 threads",
       identical ? "outputs identical (" + std::to_string(out1.size()) + " bytes)"
                 : "outputs differ (" + std::to_string(out1.size()) + " vs " +
                       std::to_string(out8.size()) + " bytes)");
}

}  // namespace

int main(int argc, char** argv) {
  Ctx ctx;
  int crit = 0;  // 0 = all
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--criterion") && i + 1 < argc) crit = std::atoi(argv[++i]);
    else if (!std::strcmp(argv[i], "--cli") && i + 1 < argc) ctx.cli_path = argv[++i];
  }
  using Fn = void (*)(Ctx&);
  const Fn fns[] = {c1, c2, c3, c4, c5, c6, c7, c8, c9, c10};
  try {
    if (crit >= 1 && crit <= 10) {
      fns[crit - 1](ctx);
    } else {
      for (Fn f : fns) f(ctx);
    }
  } catch (const std::exception& e) {
    std::printf("criterion %d: FAIL  unexpected exception: %s\n", crit, e.what());
    return 1;
  }
  return ctx.ok ? 0 : 1;
}
