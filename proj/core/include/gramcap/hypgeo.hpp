#pragma once

// Closed-form hyperbolic trigonometry: collar widths, the boundary-value
// function H(s) = 2*atan(exp(s)), and the right-angled polygon relations
// (trirectangle, pentagon, hexagon) used by the tube and bound modules.
//
// All functions are pure and stateless. Infeasible geometry raises
// infeasible_error; it never leaks NaN.

namespace gramcap {

// Margin by which radicands/arguments must clear their pole value before a
// relation is considered solvable.
inline constexpr double kEpsGeo = 1e-12;

// Half-width of the embedded collar around a simple closed geodesic of
// length gamma: asinh(1/sinh(gamma/2)).
double collar_half_width(double gamma);

// H(s) = 2*atan(exp(s)). Strictly increasing, range (0, pi), H(s)+H(-s) = pi.
double gudermann_h(double s);

// Distance from the baseline of the far boundary arc of a trirectangle with
// short perpendicular side w, at baseline offset t from the foot of w:
// atanh(cosh(t) * tanh(w)). Diverges at t = asinh(1/sinh(w)).
double trirect_boundary(double w, double t);

// Largest baseline offset a trirectangle of width w admits.
double trirect_pole(double w);

// Pentagon relation: half of the perpendicular b between the two copies of
// the cut curve, sinh(b/2) = cosh(beta/4) / sinh(alpha2/2).
double pentagon_half_b(double beta, double alpha2);

// Hexagon relation: coth(a) = tanh(b/2) * cosh(alpha2/2), where a is the
// perpendicular between the boundary geodesic and the cut curve.
double hexagon_a(double half_b, double alpha2, double eps_geo = kEpsGeo);

// cosh(delta') = sinh(alpha2/2) / sqrt(tanh^2(b/2) cosh^2(alpha2/2) - 1).
double delta_prime(double half_b, double alpha2, double eps_geo = kEpsGeo);

// coth(alpha'') = cosh^2(b/2) * tanh(alpha2/2); alpha' = alpha2/2 - alpha''.
double alpha_double_prime(double half_b, double alpha2, double eps_geo = kEpsGeo);

// sinh(c) = cosh(beta/4) / sqrt(tanh^2(b/2) cosh^2(alpha2/2) - 1).
double arc_c(double beta, double half_b, double alpha2, double eps_geo = kEpsGeo);

namespace detail {
// acosh evaluated through log1p so that arguments barely above 1 keep
// full relative accuracy.
double acosh_stable(double x);
// arccoth(x) for x > 1.
double acoth(double x);
void require_positive_finite(double x, const char* what);
void require_finite(double x, const char* what);
}  // namespace detail

}  // namespace gramcap
