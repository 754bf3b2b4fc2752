#pragma once

#include <iosfwd>

#include "gramcap/annulus.hpp"
#include "gramcap/qpiece.hpp"

namespace gramcap {

// Selects which interior curve of the Q-piece the tube is built around.
enum class CurveSelector { alpha_i, alpha_tau, alpha_diag };

const HexagonData& hexagon_for(const QPieceGeometry& geo, CurveSelector which);
double length_for(const QPieceGeometry& geo, CurveSelector which);
double twist_for(const QPieceGeometry& geo, CurveSelector which);

// Annulus around the selected curve: each rim carries two width-a arcs and
// two width-b/2 arcs meeting at height c, the upper rim shifted against the
// lower one by twist * length. trim > 0 replaces the rim within +-trim of
// each c-corner by a constant cap at the lower of the two cut heights,
// which shrinks the annulus and keeps the upper bound valid.
Annulus build_tube(const QPieceGeometry& geo, CurveSelector which, double trim = 0.0);

// Upper end of capacity_bounds on the built tube.
double tube_upper_bound_qii(const QPieceGeometry& geo, CurveSelector which,
                            double tol, double trim = 0.0);

// Sampled boundary polyline "t,a1,a2" per line, for plotting.
void write_tube_polyline(const Annulus& a, int n_samples, std::ostream& out);

}  // namespace gramcap
