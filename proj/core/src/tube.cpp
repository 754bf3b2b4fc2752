#include "gramcap/tube.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "gramcap/errors.hpp"
#include "gramcap/hypgeo.hpp"

namespace gramcap {

const HexagonData& hexagon_for(const QPieceGeometry& geo, CurveSelector which) {
  switch (which) {
    case CurveSelector::alpha_i: return geo.hex_i;
    case CurveSelector::alpha_tau: return geo.hex_tau;
    case CurveSelector::alpha_diag: return geo.hex_diag;
  }
  return geo.hex_i;
}

double length_for(const QPieceGeometry& geo, CurveSelector which) {
  switch (which) {
    case CurveSelector::alpha_i: return geo.alpha_i;
    case CurveSelector::alpha_tau: return geo.alpha_tau;
    case CurveSelector::alpha_diag: return geo.alpha_diag;
  }
  return geo.alpha_i;
}

double twist_for(const QPieceGeometry& geo, CurveSelector which) {
  switch (which) {
    case CurveSelector::alpha_i: return std::abs(geo.t_i);
    case CurveSelector::alpha_tau: return geo.t_tau;
    case CurveSelector::alpha_diag: return geo.t_diag;
  }
  return 0.0;
}

namespace {

double wrap(double t, double L) {
  double r = std::fmod(t, L);
  if (r < 0.0) r += L;
  return r;
}

struct LocalSegment {
  BoundarySegment::Kind kind;
  double t0, t1;
  double s0;      // constant cap height (unsigned)
  double w;       // arc width
  double t_foot;  // arc foot, local coordinate
};

// Offset at which a width-w arc reaches height h; inverse of trirect_boundary.
double arc_offset_at_height(double w, double h) {
  double x = std::tanh(h) / std::tanh(w);
  if (!(x >= 1.0))
    throw validation_error("trim too large: cap height drops below an arc foot");
  return detail::acosh_stable(x);
}

// Rim in local coordinates: t = 0 at the foot of the width-a perpendicular,
// the two width-b/2 arcs share their foot at alpha' + alpha''.
// Trimming cuts each c-corner at the lower of the two heights +-trim away
// from it; the cap extends on the taller side to where that rim crosses the
// cap height, so the boundary stays continuous.
std::vector<LocalSegment> local_rim(const HexagonData& hx, double L, double trim) {
  double ap = hx.alpha_prime, add = hx.alpha_dprime;
  std::vector<LocalSegment> segs;
  if (trim > 0.0) {
    double cap = std::min(trirect_boundary(hx.a, ap - trim),
                          trirect_boundary(hx.half_b, add - trim));
    double u_a = arc_offset_at_height(hx.a, cap);        // crossing on width-a arcs
    double u_b = arc_offset_at_height(hx.half_b, cap);   // crossing on width-b/2 arcs
    double t_l = u_a;                    // cap start left of the first corner
    double t_r = ap + add - u_b;         // cap end right of it
    double t_l2 = ap + add + u_b;        // mirror pair at the second corner
    double t_r2 = L - u_a;
    if (!(t_l > 1e-12 && t_r - t_l > 1e-12 && t_l2 - t_r > 1e-12 &&
          t_r2 - t_l2 > 1e-12 && L - t_r2 > 1e-12))
      throw validation_error("trim too large: caps swallow a rim arc");
    segs.push_back({BoundarySegment::Kind::trirect_arc, 0.0, t_l, 0.0, hx.a, 0.0});
    segs.push_back({BoundarySegment::Kind::constant, t_l, t_r, cap, 0.0, 0.0});
    segs.push_back({BoundarySegment::Kind::trirect_arc, t_r, t_l2, 0.0, hx.half_b, ap + add});
    segs.push_back({BoundarySegment::Kind::constant, t_l2, t_r2, cap, 0.0, 0.0});
    segs.push_back({BoundarySegment::Kind::trirect_arc, t_r2, L, 0.0, hx.a, L});
  } else {
    segs.push_back({BoundarySegment::Kind::trirect_arc, 0.0, ap, 0.0, hx.a, 0.0});
    segs.push_back({BoundarySegment::Kind::trirect_arc, ap, ap + 2.0 * add,
                    0.0, hx.half_b, ap + add});
    segs.push_back({BoundarySegment::Kind::trirect_arc, ap + 2.0 * add, L,
                    0.0, hx.a, L});
  }
  return segs;
}

// Shift a local rim by `shift`, apply the s-sign, and wrap into [0, L].
std::vector<BoundarySegment> place_rim(const std::vector<LocalSegment>& rim,
                                       double L, double shift, int s_sign) {
  std::vector<BoundarySegment> out;
  auto emit = [&](const LocalSegment& ls, double t0, double t1, double foot) {
    if (t1 - t0 < 1e-12) return;
    BoundarySegment b;
    b.kind = ls.kind;
    b.t0 = t0;
    b.t1 = t1;
    b.s_sign = s_sign;
    if (ls.kind == BoundarySegment::Kind::constant) {
      b.s0 = s_sign * ls.s0;
    } else {
      b.w = ls.w;
      b.t_foot = foot;
    }
    out.push_back(b);
  };
  for (const LocalSegment& ls : rim) {
    double g0 = ls.t0 + shift;
    double s = wrap(g0, L);
    double k = s - g0;
    double len = ls.t1 - ls.t0;
    double foot = ls.t_foot + shift + k;
    if (s + len <= L + 1e-12) {
      emit(ls, s, std::min(s + len, L), foot);
    } else {
      emit(ls, s, L, foot);
      emit(ls, 0.0, s + len - L, foot - L);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const BoundarySegment& x, const BoundarySegment& y) { return x.t0 < y.t0; });
  // close tiny wrap gaps left by the modulus arithmetic
  if (!out.empty()) {
    out.front().t0 = 0.0;
    for (std::size_t i = 0; i + 1 < out.size(); ++i)
      out[i + 1].t0 = out[i].t1;
    out.back().t1 = L;
  }
  return out;
}

}  // namespace

Annulus build_tube(const QPieceGeometry& geo, CurveSelector which, double trim) {
  const HexagonData& hx = hexagon_for(geo, which);
  double L = length_for(geo, which);
  double tw = twist_for(geo, which);
  if (!(trim >= 0.0) || trim >= std::min(hx.alpha_prime, hx.alpha_dprime))
    throw validation_error("trim must lie in [0, min(alpha', alpha''))");
  if (hx.alpha_prime >= trirect_pole(hx.a))
    throw infeasible_error("rim arc extent alpha' reaches asinh(1/sinh(a))");
  if (hx.alpha_dprime >= trirect_pole(hx.half_b))
    throw infeasible_error("rim arc extent alpha'' reaches asinh(1/sinh(b/2))");

  Annulus a;
  a.baseline_length = L;
  std::vector<LocalSegment> rim = local_rim(hx, L, trim);
  a.upper_boundary = place_rim(rim, L, 0.0, +1);
  a.lower_boundary = place_rim(rim, L, tw * L, -1);
  validate(a);
  return a;
}

double tube_upper_bound_qii(const QPieceGeometry& geo, CurveSelector which,
                            double tol, double trim) {
  return capacity_bounds(build_tube(geo, which, trim), tol).upper;
}

void write_tube_polyline(const Annulus& a, int n_samples, std::ostream& out) {
  double L = a.baseline_length;
  auto eval = [&](const std::vector<BoundarySegment>& segs, double t) {
    for (const BoundarySegment& s : segs)
      if (t >= s.t0 - 1e-12 && t <= s.t1 + 1e-12) return segment_s(s, t);
    return segment_s(segs.back(), t);
  };
  out << "t,a1,a2\n";
  for (int j = 0; j < n_samples; ++j) {
    double t = L * j / n_samples;
    out << t << ',' << eval(a.lower_boundary, t) << ',' << eval(a.upper_boundary, t)
        << '\n';
  }
}

}  // namespace gramcap
