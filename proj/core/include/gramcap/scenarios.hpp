#pragma once

#include "gramcap/gram.hpp"

namespace gramcap {

// Test-form energy bound for the necklace of genus g: g-1 short geodesics of
// length gamma in a cycle, the dual form spread over all collars gives
// E <= gamma / ((g-1)(pi - 2 asin(1/cosh(w_gamma)))).
double necklace_testform_bound(int g, double gamma);

// End piece of a chain surface of genus g: a pair of pants with two boundary
// curves of length eta glued to each other, giving a Q-piece whose input
// curve is the closed eta-curve with twist 0.
struct LinearSurfaceFragment {
  int genus = 0;
  QPieceInput end_piece;
  // expectation carried as metadata: the relative gap of the q22 interval
  // shrinks as eta grows
  double eta = 0.0;
};

LinearSurfaceFragment linear_surface_spec(int g, double eta);

}  // namespace gramcap
