#include "gramcap/annulus.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "gramcap/errors.hpp"
#include "gramcap/hypgeo.hpp"

namespace gramcap {

namespace {

constexpr int kMaxSimpsonDepth = 40;

// Adaptive Simpson with the usual S(a,b) vs S(a,m)+S(m,b) estimate;
// accumulated |error| lands in *err so callers can pad conservatively.
double simpson_rec(const std::function<double(double)>& f, double a, double b,
                   double fa, double fm, double fb, double whole, double tol,
                   int depth, double* err) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = f(lm), frm = f(rm);
  double h = b - a;
  double left = h / 12.0 * (fa + 4.0 * flm + fm);
  double right = h / 12.0 * (fm + 4.0 * frm + fb);
  double delta = left + right - whole;
  if (std::abs(delta) <= 15.0 * tol || h < 1e-14) {
    *err += std::abs(delta) / 15.0;
    return left + right + delta / 15.0;
  }
  if (depth >= kMaxSimpsonDepth)
    throw convergence_error("quadrature tolerance unreachable within subdivision cap");
  return simpson_rec(f, a, m, fa, flm, fm, left, tol / 2.0, depth + 1, err) +
         simpson_rec(f, m, b, fm, frm, fb, right, tol / 2.0, depth + 1, err);
}

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol, double* err) {
  if (!(b > a)) return 0.0;
  double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_rec(f, a, b, fa, fm, fb, whole, tol, 0, err);
}

double wrap(double t, double L) {
  double r = std::fmod(t, L);
  if (r < 0.0) r += L;
  return r;
}

void check_segment(const BoundarySegment& seg, double L, const char* side,
                   std::size_t idx) {
  std::string tag = std::string(side) + " segment " + std::to_string(idx);
  if (!(seg.t1 > seg.t0))
    throw validation_error(tag + ": empty or reversed t-range");
  if (seg.t0 < -1e-12 || seg.t1 > L + 1e-12)
    throw validation_error(tag + ": t-range outside [0, L]");
  if (seg.kind == BoundarySegment::Kind::trirect_arc) {
    if (!(seg.w > 0.0)) throw validation_error(tag + ": nonpositive width");
    double pole = trirect_pole(seg.w);
    double umax = std::max(std::abs(seg.t0 - seg.t_foot), std::abs(seg.t1 - seg.t_foot));
    if (umax >= pole)
      throw infeasible_error(tag + ": arc reaches the pole offset asinh(1/sinh(w))");
  }
}

void check_boundary(const std::vector<BoundarySegment>& segs, double L,
                    const char* side) {
  if (segs.empty())
    throw validation_error(std::string(side) + " boundary has no segments");
  double cursor = 0.0;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    check_segment(segs[i], L, side, i);
    if (std::abs(segs[i].t0 - cursor) > 1e-9)
      throw validation_error(std::string(side) + " segments leave a gap or overlap at t=" +
                             std::to_string(cursor));
    cursor = segs[i].t1;
  }
  if (std::abs(cursor - L) > 1e-9)
    throw validation_error(std::string(side) + " segments do not reach t = L");
  // continuity across joints, including the cyclic one
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const BoundarySegment& cur = segs[i];
    const BoundarySegment& nxt = segs[(i + 1) % segs.size()];
    double t_join = cur.t1;
    double s_left = segment_s(cur, t_join);
    double s_right = segment_s(nxt, i + 1 == segs.size() ? 0.0 : t_join);
    if (std::abs(s_left - s_right) > 1e-9)
      throw validation_error(std::string(side) + " boundary discontinuous at t=" +
                             std::to_string(wrap(t_join, L)));
  }
}

// Segment active at parameter t (t in [0, L)). Boundaries tile [0, L], so a
// linear scan with the cyclic convention t1-inclusive-from-left suffices.
const BoundarySegment& segment_at(const std::vector<BoundarySegment>& segs, double t) {
  for (const BoundarySegment& s : segs)
    if (t >= s.t0 - 1e-12 && t <= s.t1 + 1e-12) return s;
  return segs.back();
}

}  // namespace

double segment_s(const BoundarySegment& seg, double t) {
  if (seg.kind == BoundarySegment::Kind::constant) return seg.s0;
  return seg.s_sign * trirect_boundary(seg.w, t - seg.t_foot);
}

HQ segment_H_and_q(const BoundarySegment& seg, double t) {
  HQ r;
  if (seg.kind == BoundarySegment::Kind::constant) {
    r.H = gudermann_h(seg.s0);
    r.q = 0.0;
    return r;
  }
  double u = t - seg.t_foot;
  double cothw = 1.0 / std::tanh(seg.w);
  double rad = (cothw - std::cosh(u)) * (cothw + std::cosh(u));
  if (!(rad > 0.0))
    throw infeasible_error("trirectangle arc evaluated at or beyond its pole offset");
  double d = trirect_boundary(seg.w, u);
  r.H = seg.s_sign > 0 ? gudermann_h(d) : M_PI - gudermann_h(d);
  r.q = seg.s_sign * std::sinh(u) / std::sqrt(rad);
  return r;
}

void validate(const Annulus& a) {
  if (!(std::isfinite(a.baseline_length) && a.baseline_length > 0.0))
    throw validation_error("baseline length must be positive and finite");
  check_boundary(a.lower_boundary, a.baseline_length, "lower");
  check_boundary(a.upper_boundary, a.baseline_length, "upper");
  // a1 < a2 spot check at joints and midpoints of all segments
  auto probe = [&](double t) {
    t = wrap(t, a.baseline_length);
    double s1 = segment_s(segment_at(a.lower_boundary, t), t);
    double s2 = segment_s(segment_at(a.upper_boundary, t), t);
    if (!(s1 < s2))
      throw validation_error("boundaries cross: a1(t) >= a2(t) at t=" + std::to_string(t));
  };
  for (const auto* side : {&a.lower_boundary, &a.upper_boundary})
    for (const BoundarySegment& s : *side) {
      probe(s.t0);
      probe(0.5 * (s.t0 + s.t1));
    }
}

double collar_capacity(double l, double w) {
  detail::require_positive_finite(l, "baseline length");
  detail::require_positive_finite(w, "collar half-width");
  return l / (M_PI - 2.0 * std::asin(1.0 / std::cosh(w)));
}

BoundInterval capacity_bounds(const Annulus& a, double tol) {
  validate(a);
  if (!(tol > 0.0)) throw validation_error("tolerance must be positive");
  double L = a.baseline_length;

  std::vector<double> bps{0.0, L};
  for (const auto* side : {&a.lower_boundary, &a.upper_boundary})
    for (const BoundarySegment& s : *side) {
      bps.push_back(wrap(s.t0, L));
      bps.push_back(wrap(s.t1, L));
    }
  std::sort(bps.begin(), bps.end());
  bps.erase(std::unique(bps.begin(), bps.end(),
                        [](double x, double y) { return std::abs(x - y) < 1e-12; }),
            bps.end());
  if (bps.back() < L - 1e-12) bps.push_back(L);

  double up = 0.0, lo = 0.0, up_err = 0.0, lo_err = 0.0;
  for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
    double x0 = bps[i], x1 = bps[i + 1];
    if (x1 - x0 < 1e-13) continue;
    double tm = 0.5 * (x0 + x1);
    const BoundarySegment& s_lo = segment_at(a.lower_boundary, tm);
    const BoundarySegment& s_up = segment_at(a.upper_boundary, tm);
    auto upper_f = [&](double t) {
      HQ h1 = segment_H_and_q(s_lo, t);
      HQ h2 = segment_H_and_q(s_up, t);
      double den = h2.H - h1.H;
      return (1.0 + (h1.q * h1.q + h1.q * h2.q + h2.q * h2.q) / 3.0) / den;
    };
    auto lower_f = [&](double t) {
      HQ h1 = segment_H_and_q(s_lo, t);
      HQ h2 = segment_H_and_q(s_up, t);
      return 1.0 / (h2.H - h1.H);
    };
    double piece_tol = tol * (x1 - x0) / L / 2.0;
    up += adaptive_simpson(upper_f, x0, x1, piece_tol, &up_err);
    lo += adaptive_simpson(lower_f, x0, x1, piece_tol, &lo_err);
  }

  BoundInterval r;
  r.upper = up + up_err;
  r.lower = lo - lo_err;
  if (r.lower > r.upper) r.lower = r.upper;
  return r;
}

}  // namespace gramcap
