#pragma once

#include "gramcap/annulus.hpp"

namespace gramcap {

// Test-only ground-truth estimator: minimal Dirichlet energy of a bilinear
// grid function on a boundary-fitted (t, s) grid, 0 on the lower boundary,
// 1 on the upper, periodic in t. Upper estimate of the true capacity;
// decreases under refinement.
double discrete_capacity(const Annulus& a, int nt, int ns);

}  // namespace gramcap
