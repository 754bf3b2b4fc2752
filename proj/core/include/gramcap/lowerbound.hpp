#pragma once

#include "gramcap/annulus.hpp"
#include "gramcap/tube.hpp"

namespace gramcap {

// Skewed-strip data for the projection lower bound around one curve.
struct SkewedStripData {
  double lambda = 0.0;  // arc connecting the two cut midpoints across the twist
  double nu = 0.0;      // angle of that arc against the baseline
  double half_b = 0.0;
  double alpha_dprime = 0.0;
  double c = 0.0;
  double k1 = 0.0;
  double curve_len = 0.0;
  double twist = 0.0;
};

// lambda = 2 acosh(cosh(b/2) cosh(l t / 2)),
// sin(nu) = sinh(b/2) / sinh(lambda/2). Twist 0 gives lambda = b, nu = pi/2.
void lambda_nu(double half_b, double curve_len, double twist,
               double* lambda, double* nu);

// Energy density of the skewed strip of height lambda at slope nu.
double k1_value(double lambda, double nu);

// Energy density of the strip between heights b/2 and x; diverges as
// x -> b/2, guarded below a 1e-9 gap.
double k2_value(double x, double half_b);

// Rim height of the width-b/2 arc at offset t0 from its foot; x_of_t(+-alpha'')
// equals c. Even in t0.
double x_of_t(const HexagonData& hx, double t0);

SkewedStripData skewed_strip(const QPieceGeometry& geo, CurveSelector which);

// Projection lower bound 2 * integral_0^{alpha''} k1 k2(t) / (k2(t) + 2 k1) dt,
// quadrature error subtracted.
double lower_bound_qii(const QPieceGeometry& geo, CurveSelector which, double tol);

// Closed-form two-sided bound: upper l/(2(atan e^{w'} - atan e^{-w'})) with
// w' = min(a, b/2); lower 2 alpha'' k1 k2(c) / (k2(c) + 2 k1).
BoundInterval simplified_bounds(const QPieceGeometry& geo, CurveSelector which);

// Loose-bound heuristic: twist above 0.25 or lower under 1% of upper.
bool low_quality(double twist, double lower, double upper);

}  // namespace gramcap
