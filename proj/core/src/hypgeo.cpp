#include "gramcap/hypgeo.hpp"

#include <cmath>
#include <string>

#include "gramcap/errors.hpp"

namespace gramcap {

namespace detail {

double acosh_stable(double x) {
  // For x near 1, acosh(x) = sqrt(2d) * (1 - d/12 + ...) with d = x-1;
  // log1p(d + sqrt(d*(d+2))) keeps relative accuracy either way.
  double d = x - 1.0;
  if (d < 0.0) {
    if (d > -1e-15) d = 0.0;
    else throw infeasible_error("acosh argument below 1");
  }
  return std::log1p(d + std::sqrt(d * (d + 2.0)));
}

double acoth(double x) { return std::atanh(1.0 / x); }

void require_positive_finite(double x, const char* what) {
  if (!(std::isfinite(x) && x > 0.0))
    throw validation_error(std::string(what) + " must be positive and finite");
}

void require_finite(double x, const char* what) {
  if (!std::isfinite(x))
    throw validation_error(std::string(what) + " must be finite");
}

}  // namespace detail

double collar_half_width(double gamma) {
  detail::require_positive_finite(gamma, "geodesic length");
  return std::asinh(1.0 / std::sinh(gamma / 2.0));
}

double gudermann_h(double s) {
  detail::require_finite(s, "argument of H");
  // 2*atan(exp(s)) overflows exp for large s; atan saturates safely below 710.
  if (s > 700.0) return M_PI;
  if (s < -700.0) return 0.0;
  return 2.0 * std::atan(std::exp(s));
}

double trirect_pole(double w) {
  detail::require_positive_finite(w, "trirectangle width");
  return std::asinh(1.0 / std::sinh(w));
}

double trirect_boundary(double w, double t) {
  detail::require_positive_finite(w, "trirectangle width");
  detail::require_finite(t, "baseline offset");
  double u = std::cosh(t) * std::tanh(w);
  if (u >= 1.0)
    throw infeasible_error(
        "trirectangle relation tanh(d) = cosh(t) tanh(w): offset t at or "
        "beyond the pole asinh(1/sinh(w))");
  return std::atanh(u);
}

double pentagon_half_b(double beta, double alpha2) {
  detail::require_positive_finite(beta, "boundary length");
  detail::require_positive_finite(alpha2, "cut curve length");
  return std::asinh(std::cosh(beta / 4.0) / std::sinh(alpha2 / 2.0));
}

// Shared radicand of the hexagon-derived relations:
// tanh^2(b/2) cosh^2(alpha2/2) - 1. Positive whenever the hexagon closes.
static double hexagon_radicand(double half_b, double alpha2, double eps_geo) {
  double p = std::tanh(half_b) * std::cosh(alpha2 / 2.0);
  double rad = (p - 1.0) * (p + 1.0);
  if (!(rad > eps_geo))
    throw infeasible_error(
        "hexagon relation coth(a) = tanh(b/2) cosh(alpha2/2): right side "
        "does not exceed 1");
  return rad;
}

double hexagon_a(double half_b, double alpha2, double eps_geo) {
  detail::require_positive_finite(half_b, "half perpendicular b/2");
  detail::require_positive_finite(alpha2, "cut curve length");
  double p = std::tanh(half_b) * std::cosh(alpha2 / 2.0);
  if (!(p > 1.0 + eps_geo))
    throw infeasible_error(
        "hexagon relation coth(a) = tanh(b/2) cosh(alpha2/2): right side "
        "does not exceed 1");
  return detail::acoth(p);
}

double delta_prime(double half_b, double alpha2, double eps_geo) {
  detail::require_positive_finite(half_b, "half perpendicular b/2");
  detail::require_positive_finite(alpha2, "cut curve length");
  double rad = hexagon_radicand(half_b, alpha2, eps_geo);
  return detail::acosh_stable(std::sinh(alpha2 / 2.0) / std::sqrt(rad));
}

double alpha_double_prime(double half_b, double alpha2, double eps_geo) {
  detail::require_positive_finite(half_b, "half perpendicular b/2");
  detail::require_positive_finite(alpha2, "cut curve length");
  double ch = std::cosh(half_b);
  double p = ch * ch * std::tanh(alpha2 / 2.0);
  if (!(p > 1.0 + eps_geo))
    throw infeasible_error(
        "arc split relation coth(a'') = cosh^2(b/2) tanh(alpha2/2): right "
        "side does not exceed 1");
  return detail::acoth(p);
}

double arc_c(double beta, double half_b, double alpha2, double eps_geo) {
  detail::require_positive_finite(beta, "boundary length");
  double rad = hexagon_radicand(half_b, alpha2, eps_geo);
  return std::asinh(std::cosh(beta / 4.0) / std::sqrt(rad));
}

}  // namespace gramcap
