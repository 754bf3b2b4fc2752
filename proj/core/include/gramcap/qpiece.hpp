#pragma once

#include <string>

namespace gramcap {

// Which of the three interior simple closed geodesics of a one-holed torus
// an input Fenchel-Nielsen triple describes.
enum class CurveRole { alpha_i, alpha_tau, alpha_diag };

CurveRole parse_curve_role(const std::string& s);
const char* curve_role_name(CurveRole r);

// One Q-piece as the user states it: boundary geodesic length, one interior
// simple closed geodesic length, and its normalized twist.
struct FenchelNielsenTriple {
  double beta = 0.0;
  double curve = 0.0;
  double twist = 0.0;  // in (-1/2, 1/2]
};

// Throws validation_error if a field is out of range.
void validate(const FenchelNielsenTriple& fn);

// Lengths of one hexagon decomposition: the interior curve taken as baseline
// splits the Q-piece into two right-angled hexagons; each rim is made of two
// trirectangle arcs of widths a and b/2 meeting at height c.
struct HexagonData {
  double half_b = 0.0;       // half perpendicular between the two curve copies
  double a = 0.0;            // perpendicular from the boundary to the curve
  double delta_prime = 0.0;  // half the boundary arc between the feet
  double alpha_prime = 0.0;  // t-extent of the width-a arc
  double alpha_dprime = 0.0; // t-extent of the width-b/2 arc
  double c = 0.0;            // rim height at the corner where the arcs meet
};

// alpha_prime + alpha_dprime = baseline/2 by construction.
HexagonData hexagon_data(double beta, double baseline, double eps_geo = 1e-12);

// Complete derived geometry of one Q-piece. alpha_i is always the input
// curve; alpha_tau its dual (shortest perpendicular completion); alpha_diag
// the diagonal curve through both.
struct QPieceGeometry {
  double beta = 0.0;
  double alpha_i = 0.0, alpha_tau = 0.0, alpha_diag = 0.0;
  double t_i = 0.0, t_tau = 0.0, t_diag = 0.0;
  int twist_sign = 1;        // sign of the input twist; lengths use |t|
  double theta = 0.0;        // intersection angle of alpha_i and alpha_tau
  double eta1 = 0.0;         // perpendicular arc through alpha_i
  double r1 = 0.0, r2 = 0.0; // twist offsets along alpha_i, alpha_tau
  // Both normalization candidates for the dual and diagonal twists; t_tau
  // and t_diag hold the min, the raw values stay here as diagnostics.
  double t_tau_raw = 0.0, t_diag_raw = 0.0;
  HexagonData hex_i, hex_tau, hex_diag;
};

QPieceGeometry complete_from_triple(const FenchelNielsenTriple& fn);

struct SystoleCheck {
  bool ok = false;
  double lhs = 0.0;  // cosh(curve/2)
  double rhs = 0.0;  // cosh(beta/6) + 1/2
};

// Advisory short-curve condition cosh(curve/2) <= cosh(beta/6) + 1/2.
SystoleCheck check_systole_condition(const FenchelNielsenTriple& fn);

}  // namespace gramcap
