#pragma once

// Deterministic boundary-aware box minimization: edge-biased grids over the
// outer parameters, per-point one-dimensional refinement along the inner axis
// (s, phi or alpha depending on the search), optional whole-grid refinement,
// and the headline infima with their certification checks.

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "brannan/bounds.hpp"
#include "brannan/constants.hpp"
#include "brannan/errors.hpp"
#include "brannan/kernels.hpp"
#include "brannan/parallel.hpp"
#include "brannan/specfun.hpp"

namespace brannan::minimize {

// Universal evaluation coordinate.  Unused fields stay NaN.
struct ParameterPoint {
  double alpha = std::numeric_limits<double>::quiet_NaN();
  double beta = std::numeric_limits<double>::quiet_NaN();
  double phi = std::numeric_limits<double>::quiet_NaN();
  double s = std::numeric_limits<double>::quiet_NaN();
  double n = std::numeric_limits<double>::quiet_NaN();

  double get(const std::string& axis) const {
    if (axis == "alpha") return alpha;
    if (axis == "beta") return beta;
    if (axis == "phi") return phi;
    if (axis == "s") return s;
    if (axis == "n") return n;
    throw domain_error("ParameterPoint: unknown axis " + axis);
  }
  void set(const std::string& axis, double v) {
    if (axis == "alpha") alpha = v;
    else if (axis == "beta") beta = v;
    else if (axis == "phi") phi = v;
    else if (axis == "s") s = v;
    else if (axis == "n") n = v;
    else throw domain_error("ParameterPoint: unknown axis " + axis);
  }
};

// Lexicographic order in the canonical coordinate order (alpha, beta, phi, s).
inline bool lex_less(const ParameterPoint& a, const ParameterPoint& b) {
  auto cmp = [](double x, double y) {
    const bool nx = std::isnan(x), ny = std::isnan(y);
    if (nx && ny) return 0;
    if (nx != ny) return nx ? -1 : 1;
    if (x < y) return -1;
    if (x > y) return 1;
    return 0;
  };
  if (int c = cmp(a.alpha, b.alpha)) return c < 0;
  if (int c = cmp(a.beta, b.beta)) return c < 0;
  if (int c = cmp(a.phi, b.phi)) return c < 0;
  if (int c = cmp(a.s, b.s)) return c < 0;
  return cmp(a.n, b.n) < 0;
}

enum class Classification { interior_critical, axis_endpoint, box_corner };

inline const char* to_string(Classification c) {
  switch (c) {
    case Classification::interior_critical: return "interior-critical";
    case Classification::axis_endpoint: return "axis-endpoint";
    case Classification::box_corner: return "box-corner";
  }
  return "?";
}

struct MinimizationResult {
  double value = std::numeric_limits<double>::infinity();
  ParameterPoint argmin;
  Classification classification = Classification::interior_critical;
  std::string formula_provenance;
  long evaluations = 0;
  int faces_covered = 0;  // box faces holding at least one evaluated node
  int faces_total = 0;
  std::string cfg_echo;
};

// --- grids -------------------------------------------------------------------

struct GridAxis {
  std::string name;
  std::vector<double> nodes;  // strictly increasing, exact endpoints
};

struct GridSpec {
  std::vector<GridAxis> axes;
  int refine_depth = 0;
};

inline std::vector<double> uniform_nodes(double lo, double hi, int n) {
  if (n < 2) throw domain_error("uniform_nodes: need n >= 2");
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = lo + (hi - lo) * i / (n - 1);
  v.front() = lo;
  v.back() = hi;
  return v;
}

inline std::vector<double> log_nodes(double lo, double hi, int n) {
  if (!(lo > 0.0)) throw domain_error("log_nodes: lo must be positive");
  std::vector<double> v(n);
  const double llo = std::log(lo), lhi = std::log(hi);
  for (int i = 0; i < n; ++i) v[i] = std::exp(llo + (lhi - llo) * i / (n - 1));
  v.front() = lo;
  v.back() = hi;
  return v;
}

// Nodes clustered geometrically toward both endpoints (gap ratio 0.7 toward
// each end, smallest gap at the ends, exact endpoints).
inline std::vector<double> biased_nodes(double lo, double hi, int n) {
  if (n < 4) return uniform_nodes(lo, hi, n);
  const double ratio = 1.0 / 0.7;
  const int gaps = n - 1;
  const int left = (gaps + 1) / 2;
  const int right = gaps - left;
  const double half = 0.5 * (hi - lo);
  std::vector<double> v;
  v.reserve(n);
  // left side: gaps grow from the endpoint inward by `ratio`
  {
    const double c = half * (ratio - 1.0) / (std::pow(ratio, left) - 1.0);
    double x = lo, g = c;
    v.push_back(lo);
    for (int i = 0; i < left; ++i) {
      x += g;
      v.push_back(x);
      g *= ratio;
    }
    v.back() = lo + half;
  }
  // right side mirrors
  {
    const double c = half * (ratio - 1.0) / (std::pow(ratio, right) - 1.0);
    std::vector<double> tail;
    double x = hi, g = c;
    tail.push_back(hi);
    for (int i = 0; i < right - 1; ++i) {
      x -= g;
      tail.push_back(x);
      g *= ratio;
    }
    for (auto it = tail.rbegin(); it != tail.rend(); ++it) v.push_back(*it);
  }
  v.front() = lo;
  v.back() = hi;
  return v;
}

// One refinement pass: two equally spaced interior points in every cell.
inline std::vector<double> refine_once(const std::vector<double>& nodes) {
  std::vector<double> out;
  out.reserve(nodes.size() * 3);
  for (size_t i = 0; i + 1 < nodes.size(); ++i) {
    const double a = nodes[i], b = nodes[i + 1];
    out.push_back(a);
    out.push_back(a + (b - a) / 3.0);
    out.push_back(a + 2.0 * (b - a) / 3.0);
  }
  out.push_back(nodes.back());
  return out;
}

inline std::vector<double> refined(std::vector<double> nodes, int depth) {
  for (int i = 0; i < depth; ++i) nodes = refine_once(nodes);
  return nodes;
}

// --- configuration -------------------------------------------------------------

struct MinimizeCfg {
  int nodes_alpha = 60;
  int nodes_beta = 60;
  int nodes_phi = 40;
  int scan_s = 128;        // inner-axis dense-scan node count
  int refine_depth = 1;
  double tol_abscissa = 1e-10;
  int threads = 0;  // 0: BRANNAN_THREADS env or hardware concurrency

  std::string to_kv() const {
    std::ostringstream os;
    os << "nodes_alpha=" << nodes_alpha << " nodes_beta=" << nodes_beta
       << " nodes_phi=" << nodes_phi << " scan_s=" << scan_s
       << " refine_depth=" << refine_depth << " tol_abscissa=" << tol_abscissa;
    return os.str();
  }

  static MinimizeCfg from_kv(const std::string& text) {
    MinimizeCfg cfg;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
      const auto eq = tok.find('=');
      if (eq == std::string::npos) throw domain_error("cfg: expected key=value, got " + tok);
      const std::string key = tok.substr(0, eq);
      const std::string val = tok.substr(eq + 1);
      if (key == "nodes_alpha") cfg.nodes_alpha = std::stoi(val);
      else if (key == "nodes_beta") cfg.nodes_beta = std::stoi(val);
      else if (key == "nodes_phi") cfg.nodes_phi = std::stoi(val);
      else if (key == "scan_s") cfg.scan_s = std::stoi(val);
      else if (key == "refine_depth") cfg.refine_depth = std::stoi(val);
      else if (key == "tol_abscissa") cfg.tol_abscissa = std::stod(val);
      else throw domain_error("cfg: unknown key " + key);
    }
    return cfg;
  }
};

// --- one-dimensional minimization ---------------------------------------------

struct Cfg1D {
  int scan_nodes = 2048;
  double tol_abscissa = 1e-10;  // relative to the interval length
  bool log_spacing = false;
};

struct Result1D {
  double x = 0.0;
  double value = std::numeric_limits<double>::infinity();
  bool interior = false;  // argmin strictly inside (a, b)
  long evaluations = 0;
};

namespace detail {

// Brent-style derivative-free minimization on a bracket.
template <class F>
double brent_min(F&& f, double a, double b, double xatol, long& evals) {
  const double gold = 0.3819660112501051;
  double x = a + gold * (b - a), w = x, v = x;
  double fx = f(x), fw = fx, fv = fx;
  ++evals;
  double d = 0.0, e = 0.0;
  for (int iter = 0; iter < 200; ++iter) {
    const double m = 0.5 * (a + b);
    const double tol = xatol + 1e-15 * std::fabs(x);
    if (std::fabs(x - m) <= 2.0 * tol - 0.5 * (b - a)) break;
    double p = 0.0, q = 0.0, r = 0.0;
    bool parabolic = false;
    if (std::fabs(e) > tol) {
      r = (x - w) * (fx - fv);
      q = (x - v) * (fx - fw);
      p = (x - v) * q - (x - w) * r;
      q = 2.0 * (q - r);
      if (q > 0.0) p = -p;
      q = std::fabs(q);
      const double e_old = e;
      e = d;
      if (std::fabs(p) < std::fabs(0.5 * q * e_old) && p > q * (a - x) && p < q * (b - x)) {
        parabolic = true;
        d = p / q;
        const double u = x + d;
        if (u - a < 2.0 * tol || b - u < 2.0 * tol) d = (x < m) ? tol : -tol;
      }
    }
    if (!parabolic) {
      e = (x < m) ? b - x : a - x;
      d = gold * e;
    }
    const double u = (std::fabs(d) >= tol) ? x + d : x + ((d > 0.0) ? tol : -tol);
    const double fu = f(u);
    ++evals;
    if (fu <= fx) {
      if (u < x) b = x; else a = x;
      v = w; fv = fw;
      w = x; fw = fx;
      x = u; fx = fu;
    } else {
      if (u < x) a = u; else b = u;
      if (fu <= fw || w == x) {
        v = w; fv = fw;
        w = u; fw = fu;
      } else if (fu <= fv || v == x || v == w) {
        v = u; fv = fu;
      }
    }
  }
  return x;
}

}  // namespace detail

// Dense scan plus bracket refinement.  The result is the minimum over both
// endpoints and every refined interior local minimum; ties break toward the
// smaller abscissa.
template <class F>
Result1D minimize_1d(F&& f, double a, double b, const Cfg1D& cfg = {}) {
  if (!(b > a)) throw domain_error("minimize_1d: empty interval");
  const std::vector<double> xs =
      cfg.log_spacing ? log_nodes(a, b, cfg.scan_nodes) : uniform_nodes(a, b, cfg.scan_nodes);
  std::vector<double> fs(xs.size());
  Result1D res;
  for (size_t i = 0; i < xs.size(); ++i) {
    fs[i] = f(xs[i]);
    ++res.evaluations;
    if (!std::isfinite(fs[i]))
      throw numerical_error("minimize_1d: non-finite value at node " + std::to_string(xs[i]));
  }
  auto consider = [&](double x, double v, bool interior) {
    if (v < res.value || (v == res.value && x < res.x)) {
      res.value = v;
      res.x = x;
      res.interior = interior;
    }
  };
  consider(xs.front(), fs.front(), false);
  consider(xs.back(), fs.back(), false);
  const double xatol = cfg.tol_abscissa * (b - a);
  for (size_t i = 1; i + 1 < xs.size(); ++i) {
    if (fs[i] <= fs[i - 1] && fs[i] <= fs[i + 1]) {
      const double xm = detail::brent_min(f, xs[i - 1], xs[i + 1], xatol, res.evaluations);
      const double fm = f(xm);
      ++res.evaluations;
      consider(xm, fm, xm > a && xm < b);
      consider(xs[i], fs[i], true);
    }
  }
  return res;
}

// --- function registry ----------------------------------------------------------

enum class Fid {
  L0, Linf, L, K1, K2, G1, G2, C1, C2, A1, A2, P5, PN, J, F, F1, F2, SmokeQuad
};

inline std::string fid_name(Fid f) {
  switch (f) {
    case Fid::L0: return "L0";
    case Fid::Linf: return "Linf";
    case Fid::L: return "L";
    case Fid::K1: return "K1";
    case Fid::K2: return "K2";
    case Fid::G1: return "G1";
    case Fid::G2: return "G2";
    case Fid::C1: return "C1";
    case Fid::C2: return "C2";
    case Fid::A1: return "A1";
    case Fid::A2: return "A2";
    case Fid::P5: return "P5";
    case Fid::PN: return "Pn";
    case Fid::J: return "J";
    case Fid::F: return "F";
    case Fid::F1: return "F1";
    case Fid::F2: return "F2";
    case Fid::SmokeQuad: return "smoke-quad";
  }
  return "?";
}

inline std::optional<Fid> fid_from_name(const std::string& s) {
  static const std::map<std::string, Fid> table = {
      {"L0", Fid::L0},   {"Linf", Fid::Linf}, {"L", Fid::L},     {"K1", Fid::K1},
      {"K2", Fid::K2},   {"G1", Fid::G1},     {"G2", Fid::G2},   {"C1", Fid::C1},
      {"C2", Fid::C2},   {"A1", Fid::A1},     {"A2", Fid::A2},   {"P5", Fid::P5},
      {"Pn", Fid::PN},   {"J", Fid::J},       {"F", Fid::F},     {"F1", Fid::F1},
      {"F2", Fid::F2},   {"smoke-quad", Fid::SmokeQuad},
  };
  const auto it = table.find(s);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

// Remainder-bound magnitudes threaded into P5/Pn/J evaluations.
struct MConstants {
  double m0_abs = -frozen::m0;
  double minf_abs = -frozen::minf;
};

inline double eval_fid(Fid f, const ParameterPoint& p, const MConstants& mc = {}) {
  switch (f) {
    case Fid::L0: return kernels::L0(p.alpha, p.beta, p.phi, p.s);
    case Fid::Linf: return kernels::Linf(p.alpha, p.beta, p.phi, p.s);
    case Fid::L: return kernels::L(p.alpha, p.beta, p.phi, p.s);
    case Fid::K1: return kernels::k1(p.alpha, p.beta, p.phi, p.s);
    case Fid::K2: return kernels::k2(p.alpha, p.beta, p.phi, p.s);
    case Fid::G1: return kernels::g1(p.alpha, p.beta, p.phi, p.s);
    case Fid::G2: return kernels::g2(p.alpha, p.beta, p.phi, p.s);
    case Fid::C1: return kernels::c1(p.alpha, p.phi);
    case Fid::C2: return kernels::c2(p.beta, p.phi);
    case Fid::A1: return kernels::a1_coef(p.alpha, p.phi);
    case Fid::A2: return kernels::a2_coef(p.alpha, p.beta, p.phi);
    case Fid::P5: return bounds::p_n(p.alpha, p.beta, p.phi, 5.0, mc.m0_abs, mc.minf_abs);
    case Fid::PN: return bounds::p_n(p.alpha, p.beta, p.phi, p.n, mc.m0_abs, mc.minf_abs);
    case Fid::J: return bounds::j_fn(p.alpha, p.beta, p.phi, p.n, mc.m0_abs, mc.minf_abs);
    case Fid::F: return bounds::f_combined(p.alpha, p.beta, p.phi);
    case Fid::F1: return bounds::f1(p.alpha, p.beta, p.phi);
    case Fid::F2: return bounds::f2(p.alpha, p.beta, p.phi);
    case Fid::SmokeQuad: {
      const double x = std::isnan(p.s) ? p.alpha : p.s;
      return (x - 0.3) * (x - 0.3);
    }
  }
  throw domain_error("eval_fid: unknown function");
}

// --- the box search engine -------------------------------------------------------

// Inner-axis description: bounds may depend on the outer point (triangular
// restrictions alpha <= beta etc. use this).
struct InnerAxis {
  std::string name;
  std::function<std::pair<double, double>(const ParameterPoint&)> bounds;
  bool log_spacing = false;
};

struct BoxProblem {
  std::vector<GridAxis> outer;                              // refined node lists
  std::optional<InnerAxis> inner;
  std::function<bool(const ParameterPoint&)> keep;          // outer-point filter
  std::function<double(const ParameterPoint&)> eval;        // full-point target
  // Optional factory for a fast fixed-outer-point slice along the inner axis.
  std::function<std::function<double(double)>(const ParameterPoint&)> slice;
};

namespace detail {

struct Candidate {
  double value = std::numeric_limits<double>::infinity();
  ParameterPoint point;
  bool inner_interior = false;
  bool valid = false;
};

inline bool better(const Candidate& a, const Candidate& b) {
  if (!b.valid) return a.valid;
  if (!a.valid) return false;
  if (a.value != b.value) return a.value < b.value;
  return lex_less(a.point, b.point);
}

struct Local {
  Candidate best;
  long evals = 0;
  std::vector<long> face_hits;  // 2 entries per outer axis: lo face, hi face
};

}  // namespace detail

inline MinimizationResult grid_min(const BoxProblem& prob, const MinimizeCfg& cfg) {
  // Cartesian product of the outer axes.
  const int na = static_cast<int>(prob.outer.size());
  long total = 1;
  for (const auto& ax : prob.outer) total *= static_cast<long>(ax.nodes.size());

  const int threads = par::resolve_threads(cfg.threads);
  auto locals = par::chunked_for<detail::Local>(
      total, threads, [&](long lo, long hi, detail::Local& loc) {
        loc.face_hits.assign(2 * na, 0);
        for (long idx = lo; idx < hi; ++idx) {
          ParameterPoint p;
          long rem = idx;
          for (int a = na - 1; a >= 0; --a) {
            const auto& ax = prob.outer[a];
            p.set(ax.name, ax.nodes[rem % ax.nodes.size()]);
            rem /= ax.nodes.size();
          }
          if (prob.keep && !prob.keep(p)) continue;
          for (int a = 0; a < na; ++a) {
            const double v = p.get(prob.outer[a].name);
            if (v == prob.outer[a].nodes.front()) ++loc.face_hits[2 * a];
            if (v == prob.outer[a].nodes.back()) ++loc.face_hits[2 * a + 1];
          }
          detail::Candidate cand;
          cand.valid = true;
          cand.point = p;
          if (prob.inner) {
            const auto [ilo, ihi] = prob.inner->bounds(p);
            if (!(ihi > ilo)) {
              // Degenerate slice: single admissible inner value.
              p.set(prob.inner->name, ilo);
              cand.point = p;
              cand.value = prob.eval(p);
              ++loc.evals;
            } else {
              std::function<double(double)> f;
              if (prob.slice) {
                f = prob.slice(p);
              } else {
                ParameterPoint q = p;
                const std::string axis = prob.inner->name;
                f = [&prob, q, axis](double x) mutable {
                  q.set(axis, x);
                  return prob.eval(q);
                };
              }
              Cfg1D c1d;
              c1d.scan_nodes = cfg.scan_s;
              c1d.tol_abscissa = cfg.tol_abscissa;
              c1d.log_spacing = prob.inner->log_spacing;
              const Result1D r = minimize_1d(f, ilo, ihi, c1d);
              loc.evals += r.evaluations;
              cand.value = r.value;
              cand.inner_interior = r.interior;
              cand.point.set(prob.inner->name, r.x);
            }
          } else {
            cand.value = prob.eval(p);
            ++loc.evals;
          }
          if (detail::better(cand, loc.best)) loc.best = cand;
        }
      });

  detail::Candidate best;
  long evals = 0;
  std::vector<long> face_hits(2 * na, 0);
  for (const auto& loc : locals) {
    evals += loc.evals;
    for (size_t i = 0; i < loc.face_hits.size(); ++i) face_hits[i] += loc.face_hits[i];
    if (detail::better(loc.best, best)) best = loc.best;
  }
  if (!best.valid) throw numerical_error("grid_min: empty search domain");

  MinimizationResult res;
  res.value = best.value;
  res.argmin = best.point;
  res.evaluations = evals;
  res.cfg_echo = cfg.to_kv();

  // Classification: count coordinates pinned to the box hull.
  int on_edge = 0, coords = 0;
  for (const auto& ax : prob.outer) {
    ++coords;
    const double v = best.point.get(ax.name);
    if (v == ax.nodes.front() || v == ax.nodes.back()) ++on_edge;
  }
  if (prob.inner) {
    ++coords;
    if (!best.inner_interior) ++on_edge;
  }
  res.classification = (on_edge == 0) ? Classification::interior_critical
                       : (on_edge == coords) ? Classification::box_corner
                                             : Classification::axis_endpoint;

  // Face-coverage audit: count faces that actually received evaluated nodes.
  res.faces_total = 2 * na;
  for (long hits : face_hits) res.faces_covered += (hits > 0) ? 1 : 0;
  return res;
}

// Cyclic coordinate descent from a starting point; the independent local
// check that grid results are not improvable beyond tolerance.
inline double coordinate_refine(const std::function<double(const ParameterPoint&)>& eval,
                                ParameterPoint start,
                                const std::vector<std::pair<std::string, std::pair<double, double>>>& axes,
                                int sweeps = 3, double tol = 1e-12) {
  double best = eval(start);
  ParameterPoint p = start;
  for (int sweep = 0; sweep < sweeps; ++sweep) {
    for (const auto& [axis, bounds] : axes) {
      const double x0 = p.get(axis);
      const double span = bounds.second - bounds.first;
      double lo = std::max(bounds.first, x0 - 0.05 * span);
      double hi = std::min(bounds.second, x0 + 0.05 * span);
      if (!(hi > lo)) continue;
      long evals = 0;
      auto f = [&](double x) {
        ParameterPoint q = p;
        q.set(axis, x);
        return eval(q);
      };
      const double xm = detail::brent_min(f, lo, hi, tol * span, evals);
      const double fm = f(xm);
      if (fm < best) {
        best = fm;
        p.set(axis, xm);
      }
    }
  }
  return best;
}

// --- headline searches -----------------------------------------------------------

namespace detail {

inline std::vector<GridAxis> alpha_beta_phi_axes(const MinimizeCfg& cfg) {
  return {
      {"alpha", refined(biased_nodes(0.0, 1.0, cfg.nodes_alpha), cfg.refine_depth)},
      {"beta", refined(biased_nodes(0.0, 1.0, cfg.nodes_beta), cfg.refine_depth)},
      {"phi", refined(uniform_nodes(kPhi0, kPi, cfg.nodes_phi), cfg.refine_depth)},
  };
}

}  // namespace detail

// m0 = inf L0 over alpha, beta in [0,1], phi in [phi0, pi], s in [0, 1].
inline MinimizationResult compute_m0(const MinimizeCfg& cfg = {}) {
  BoxProblem prob;
  prob.outer = detail::alpha_beta_phi_axes(cfg);
  prob.inner = InnerAxis{"s", [](const ParameterPoint&) { return std::make_pair(0.0, 1.0); }};
  prob.eval = [](const ParameterPoint& p) { return kernels::L0(p.alpha, p.beta, p.phi, p.s); };
  prob.slice = [](const ParameterPoint& p) -> std::function<double(double)> {
    kernels::LSlice sl(p.alpha, p.beta, p.phi);
    return [sl](double s) { return sl.l0(s); };
  };
  MinimizationResult res = grid_min(prob, cfg);
  res.formula_provenance =
      kernels::provenance(res.argmin.alpha, res.argmin.beta, res.argmin.phi);
  return res;
}

// m_inf = inf Linf over the same box with s in [1, 30], plus the tail audit
// over s in [30, 1e5] which must stay strictly above the main minimum.
inline MinimizationResult compute_minf(const MinimizeCfg& cfg = {},
                                       MinimizationResult* tail_out = nullptr) {
  BoxProblem prob;
  prob.outer = detail::alpha_beta_phi_axes(cfg);
  prob.inner = InnerAxis{"s", [](const ParameterPoint&) { return std::make_pair(1.0, 30.0); }};
  prob.eval = [](const ParameterPoint& p) { return kernels::Linf(p.alpha, p.beta, p.phi, p.s); };
  prob.slice = [](const ParameterPoint& p) -> std::function<double(double)> {
    kernels::LSlice sl(p.alpha, p.beta, p.phi);
    return [sl](double s) { return sl.linf(s); };
  };
  MinimizationResult res = grid_min(prob, cfg);
  res.formula_provenance =
      kernels::provenance(res.argmin.alpha, res.argmin.beta, res.argmin.phi);

  // Tail audit on the unrefined base grid; the search window [1, 30] must
  // contain the infimum, with the tail minimum sitting at s = 30.
  MinimizeCfg audit_cfg = cfg;
  audit_cfg.refine_depth = 0;
  BoxProblem tail = prob;
  tail.outer = detail::alpha_beta_phi_axes(audit_cfg);
  tail.inner =
      InnerAxis{"s", [](const ParameterPoint&) { return std::make_pair(30.0, 1e5); }, true};
  MinimizationResult audit = grid_min(tail, audit_cfg);
  audit.formula_provenance =
      kernels::provenance(audit.argmin.alpha, audit.argmin.beta, audit.argmin.phi);
  if (tail_out) *tail_out = audit;
  if (!(audit.value > res.value)) {
    throw certification_error("tail audit failed: inf over s in [30, 1e5] (" +
                              std::to_string(audit.value) +
                              ") does not exceed the [1, 30] minimum (" +
                              std::to_string(res.value) + ")");
  }
  return res;
}

// inf P5 over alpha, beta in [0,1], phi in [phi0, pi]; must be positive.
inline MinimizationResult compute_inf_p5(double m0_abs, double minf_abs,
                                         const MinimizeCfg& cfg = {}) {
  BoxProblem prob;
  prob.outer = {
      {"alpha", refined(biased_nodes(0.0, 1.0, cfg.nodes_alpha), cfg.refine_depth)},
      {"beta", refined(biased_nodes(0.0, 1.0, cfg.nodes_beta), cfg.refine_depth)},
  };
  prob.inner =
      InnerAxis{"phi", [](const ParameterPoint&) { return std::make_pair(kPhi0, kPi); }};
  prob.eval = [=](const ParameterPoint& p) {
    return bounds::p_n(p.alpha, p.beta, p.phi, 5.0, m0_abs, minf_abs);
  };
  MinimizationResult res = grid_min(prob, cfg);
  res.formula_provenance =
      kernels::provenance(res.argmin.alpha, res.argmin.beta, res.argmin.phi);
  if (!(res.value > 0.0)) {
    throw certification_error("inf P5 is not positive: " + std::to_string(res.value) +
                              " at alpha=" + std::to_string(res.argmin.alpha) +
                              " beta=" + std::to_string(res.argmin.beta) +
                              " phi=" + std::to_string(res.argmin.phi));
  }
  return res;
}

namespace detail {

// F1/F2 searches: (beta, phi) on grids, alpha minimized continuously on the
// half-triangle side so interior argmins are located to brent accuracy.
inline MinimizationResult f_search(bool is_f1, const MinimizeCfg& cfg, double phi_fixed = -1.0) {
  BoxProblem prob;
  prob.outer = {{"beta", refined(biased_nodes(0.0, 1.0, cfg.nodes_beta), cfg.refine_depth)}};
  if (phi_fixed < 0.0) {
    prob.outer.push_back(
        {"phi", refined(uniform_nodes(kPhi0, kPi, cfg.nodes_phi), cfg.refine_depth)});
  }
  prob.inner = InnerAxis{"alpha", [is_f1](const ParameterPoint& p) {
                           return is_f1 ? std::make_pair(p.beta, 1.0)
                                        : std::make_pair(0.0, p.beta);
                         }};
  prob.eval = [is_f1, phi_fixed](const ParameterPoint& p) {
    const double phi = (phi_fixed < 0.0) ? p.phi : phi_fixed;
    return is_f1 ? bounds::f1(p.alpha, p.beta, phi) : bounds::f2(p.alpha, p.beta, phi);
  };
  MinimizationResult res = grid_min(prob, cfg);
  if (phi_fixed >= 0.0) res.argmin.phi = phi_fixed;
  res.formula_provenance =
      kernels::provenance(res.argmin.alpha, res.argmin.beta, res.argmin.phi);
  if (!(res.value > 0.0)) {
    throw certification_error(std::string(is_f1 ? "inf F1" : "inf F2") +
                              " is not positive: " + std::to_string(res.value));
  }
  return res;
}

}  // namespace detail

inline MinimizationResult compute_inf_f1(const MinimizeCfg& cfg = {}) {
  return detail::f_search(true, cfg);
}

inline MinimizationResult compute_inf_f2(const MinimizeCfg& cfg = {}) {
  return detail::f_search(false, cfg);
}

// phi = pi slice searches for P5, F1, F2.
inline MinimizationResult pi_slice_inf(Fid fid, const MConstants& mc = {},
                                       const MinimizeCfg& cfg = {}) {
  if (fid == Fid::F1) return detail::f_search(true, cfg, kPi);
  if (fid == Fid::F2) return detail::f_search(false, cfg, kPi);
  if (fid != Fid::P5) throw domain_error("pi_slice_inf: supported for P5, F1, F2");
  BoxProblem prob;
  prob.outer = {{"beta", refined(biased_nodes(0.0, 1.0, cfg.nodes_beta), cfg.refine_depth)}};
  prob.inner =
      InnerAxis{"alpha", [](const ParameterPoint&) { return std::make_pair(0.0, 1.0); }};
  prob.eval = [mc](const ParameterPoint& p) {
    return bounds::p_n(p.alpha, p.beta, kPi, 5.0, mc.m0_abs, mc.minf_abs);
  };
  MinimizationResult res = grid_min(prob, cfg);
  res.argmin.phi = kPi;
  res.formula_provenance =
      kernels::provenance(res.argmin.alpha, res.argmin.beta, res.argmin.phi);
  return res;
}

}  // namespace brannan::minimize
