#pragma once

#include <cstddef>
#include <vector>

namespace gramcap {

struct BoundInterval {
  double lower = 0.0;
  double upper = 0.0;
};

// One piece of an annulus boundary over a t-interval, either at constant
// signed distance from the baseline or following the far boundary arc of a
// trirectangle of width w whose foot sits at t = t_foot.
struct BoundarySegment {
  enum class Kind { constant, trirect_arc };
  Kind kind = Kind::constant;
  double t0 = 0.0, t1 = 0.0;  // t1 > t0, subset of [0, L]

  // constant: signed distance s0.
  double s0 = 0.0;

  // trirect_arc: distance = s_sign * atanh(cosh(t - t_foot) tanh(w)).
  double w = 0.0;
  double t_foot = 0.0;
  int s_sign = 1;
};

// Annulus in Fermi coordinates around a closed baseline of length L,
// bounded below by a1(t) and above by a2(t), each given as a cyclic tiling
// of [0, L] by segments.
struct Annulus {
  double baseline_length = 0.0;
  std::vector<BoundarySegment> lower_boundary;
  std::vector<BoundarySegment> upper_boundary;
};

// Signed distance of a segment's curve at parameter t (t inside its range).
double segment_s(const BoundarySegment& seg, double t);

// H(s(t)) and its t-derivative q(t) in closed form. Constant segments have
// q = 0; trirectangle arcs use q = s_sign * sinh(u)/sqrt(coth^2 w - cosh^2 u)
// with u = t - t_foot.
struct HQ {
  double H = 0.0;
  double q = 0.0;
};
HQ segment_H_and_q(const BoundarySegment& seg, double t);

// Tiling, continuity (to 1e-9) and a1 < a2 checks; throws validation_error
// or infeasible_error (pole inside a segment range) naming the offender.
void validate(const Annulus& a);

// Exact capacity of the constant-width collar: l / (pi - 2 asin(1/cosh w)).
double collar_capacity(double l, double w);

// Certified capacity interval by adaptive quadrature of the two boundary
// integrals: quadrature error is added to the upper end and subtracted from
// the lower end.
BoundInterval capacity_bounds(const Annulus& a, double tol);

}  // namespace gramcap
