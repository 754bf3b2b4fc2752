#include "gramcap/scenarios.hpp"

#include <cmath>

#include "gramcap/errors.hpp"
#include "gramcap/hypgeo.hpp"

namespace gramcap {

double necklace_testform_bound(int g, double gamma) {
  if (g < 2) throw validation_error("necklace genus must be at least 2");
  detail::require_positive_finite(gamma, "geodesic length");
  double w = collar_half_width(gamma);
  return gamma / ((g - 1) * (M_PI - 2.0 * std::asin(1.0 / std::cosh(w))));
}

LinearSurfaceFragment linear_surface_spec(int g, double eta) {
  if (g < 3) throw validation_error("chain surface genus must be at least 3");
  detail::require_positive_finite(eta, "eta");
  LinearSurfaceFragment f;
  f.genus = g;
  f.eta = eta;
  // remaining boundary length of the end pair of pants; fixed normalization,
  // the q22 gap claim only depends on eta
  f.end_piece.fn.beta = 4.0;
  f.end_piece.fn.curve = eta;
  f.end_piece.fn.twist = 0.0;
  f.end_piece.role = CurveRole::alpha_i;
  return f;
}

}  // namespace gramcap
