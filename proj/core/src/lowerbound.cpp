#include "gramcap/lowerbound.hpp"

#include <cmath>
#include <functional>

#include "gramcap/errors.hpp"
#include "gramcap/hypgeo.hpp"

namespace gramcap {

namespace {

// Same adaptive Simpson shape as the annulus module, local copy kept simple.
double simpson_rec(const std::function<double(double)>& f, double a, double b,
                   double fa, double fm, double fb, double whole, double tol,
                   int depth, double* err) {
  double m = 0.5 * (a + b);
  double flm = f(0.5 * (a + m)), frm = f(0.5 * (m + b));
  double h = b - a;
  double left = h / 12.0 * (fa + 4.0 * flm + fm);
  double right = h / 12.0 * (fm + 4.0 * frm + fb);
  double delta = left + right - whole;
  if (std::abs(delta) <= 15.0 * tol || h < 1e-14) {
    *err += std::abs(delta) / 15.0;
    return left + right + delta / 15.0;
  }
  if (depth >= 40)
    throw convergence_error("lower-bound quadrature tolerance unreachable");
  return simpson_rec(f, a, m, fa, flm, fm, left, tol / 2.0, depth + 1, err) +
         simpson_rec(f, m, b, fm, frm, fb, right, tol / 2.0, depth + 1, err);
}

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol, double* err) {
  double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_rec(f, a, b, fa, fm, fb, whole, tol, 0, err);
}

// 2(atan(e^x) - atan(e^y)) = H(x) - H(y), the reciprocal of k2.
double inv_k2(double x, double half_b) {
  return gudermann_h(x) - gudermann_h(half_b);
}

}  // namespace

void lambda_nu(double half_b, double curve_len, double twist,
               double* lambda, double* nu) {
  detail::require_positive_finite(half_b, "half perpendicular b/2");
  detail::require_positive_finite(curve_len, "curve length");
  if (!(twist >= 0.0 && twist <= 0.5))
    throw validation_error("twist for the strip bound must lie in [0, 1/2]");
  double r = curve_len * twist / 2.0;
  // sinh(lambda/2) = hypot(sinh(b/2) cosh(r), sinh(r)), cancellation-free;
  // twist 0 then gives lambda = b and nu = pi/2 exactly
  double sl = std::hypot(std::sinh(half_b) * std::cosh(r), std::sinh(r));
  *lambda = 2.0 * std::asinh(sl);
  double snu = std::sinh(half_b) / sl;
  if (snu > 1.0) snu = 1.0;
  *nu = std::asin(snu);
}

double k1_value(double lambda, double nu) {
  detail::require_positive_finite(lambda, "lambda");
  return std::sin(nu) / inv_k2(lambda / 2.0, -lambda / 2.0);
}

double k2_value(double x, double half_b) {
  if (!(x > half_b + 1e-9))
    throw infeasible_error("degenerate strip: x does not exceed b/2");
  return 1.0 / inv_k2(x, half_b);
}

double x_of_t(const HexagonData& hx, double t0) {
  double u = std::abs(t0);
  if (u > hx.alpha_dprime + 1e-12)
    throw validation_error("offset exceeds alpha''");
  if (u >= hx.alpha_dprime) return hx.c;
  return trirect_boundary(hx.half_b, u);
}

SkewedStripData skewed_strip(const QPieceGeometry& geo, CurveSelector which) {
  const HexagonData& hx = hexagon_for(geo, which);
  SkewedStripData s;
  s.half_b = hx.half_b;
  s.alpha_dprime = hx.alpha_dprime;
  s.c = hx.c;
  s.curve_len = length_for(geo, which);
  s.twist = twist_for(geo, which);
  lambda_nu(s.half_b, s.curve_len, s.twist, &s.lambda, &s.nu);
  s.k1 = k1_value(s.lambda, s.nu);
  return s;
}

double lower_bound_qii(const QPieceGeometry& geo, CurveSelector which, double tol) {
  if (!(tol > 0.0)) throw validation_error("tolerance must be positive");
  SkewedStripData s = skewed_strip(geo, which);
  const HexagonData& hx = hexagon_for(geo, which);
  // k1 k2 / (k2 + 2 k1) = k1 / (1 + 2 k1 / k2); 1/k2 stays finite at t = 0
  // where k2 itself diverges.
  auto g = [&](double t) {
    return s.k1 / (1.0 + 2.0 * s.k1 * inv_k2(x_of_t(hx, t), s.half_b));
  };
  double err = 0.0;
  double v = 2.0 * adaptive_simpson(g, 0.0, hx.alpha_dprime, tol / 2.0, &err);
  v -= 2.0 * err;
  return v > 0.0 ? v : 0.0;
}

BoundInterval simplified_bounds(const QPieceGeometry& geo, CurveSelector which) {
  SkewedStripData s = skewed_strip(geo, which);
  const HexagonData& hx = hexagon_for(geo, which);
  double wp = std::min(hx.a, hx.half_b);
  BoundInterval r;
  r.upper = s.curve_len / inv_k2(wp, -wp);
  r.lower = 2.0 * hx.alpha_dprime * s.k1 / (1.0 + 2.0 * s.k1 * inv_k2(hx.c, s.half_b));
  return r;
}

bool low_quality(double twist, double lower, double upper) {
  return twist > 0.25 || lower < 0.01 * upper;
}

}  // namespace gramcap
