#include <algorithm>
#include <cmath>
#include <sstream>

#include <doctest.h>

#include "gramcap/errors.hpp"
#include "gramcap/hypgeo.hpp"
#include "gramcap/tube.hpp"

using namespace gramcap;

namespace {

double rel(double x, double y) { return std::abs(x - y) / std::abs(y); }

// Q-piece stub whose alpha_i slot carries a chosen (beta, length, twist);
// only the fields the tube builder touches are filled.
QPieceGeometry stub(double beta, double len, double twist) {
  QPieceGeometry g;
  g.beta = beta;
  g.alpha_i = len;
  g.t_i = twist;
  g.hex_i = hexagon_data(beta, len);
  return g;
}

double eval_boundary(const std::vector<BoundarySegment>& segs, double t) {
  for (const BoundarySegment& s : segs)
    if (t >= s.t0 - 1e-12 && t <= s.t1 + 1e-12) return segment_s(s, t);
  return segment_s(segs.back(), t);
}

}  // namespace

TEST_CASE("rim tiles the baseline and meets the corner height") {
  QPieceGeometry g = stub(4.0, 2.0, 0.0);
  Annulus a = build_tube(g, CurveSelector::alpha_i);
  CHECK(a.baseline_length == 2.0);
  double total = 0.0;
  for (const BoundarySegment& s : a.upper_boundary) total += s.t1 - s.t0;
  CHECK(total == doctest::Approx(2.0).epsilon(1e-14));
  // corner of the width-a and width-b/2 arcs sits at height c
  const HexagonData& hx = g.hex_i;
  CHECK(rel(eval_boundary(a.upper_boundary, hx.alpha_prime), hx.c) < 1e-10);
  // rim is even about the b/2-arc foot
  double f = hx.alpha_prime + hx.alpha_dprime;
  for (double d : {0.1, 0.3, 0.45}) {
    CHECK(rel(eval_boundary(a.upper_boundary, f - d),
              eval_boundary(a.upper_boundary, f + d)) < 1e-12);
  }
}

TEST_CASE("zero twist tube is mirror symmetric") {
  QPieceGeometry g = stub(4.0, 2.0, 0.0);
  Annulus a = build_tube(g, CurveSelector::alpha_i);
  for (double t : {0.0, 0.2, 0.5, 0.9, 1.3, 1.9})
    CHECK(eval_boundary(a.lower_boundary, t) ==
          doctest::Approx(-eval_boundary(a.upper_boundary, t)).epsilon(1e-12));
}

TEST_CASE("twist shifts the lower rim") {
  QPieceGeometry g = stub(4.0, 2.0, 0.1);
  Annulus a = build_tube(g, CurveSelector::alpha_i);
  double shift = 0.1 * 2.0;
  for (double t : {0.25, 0.6, 1.1, 1.7}) {
    double upper_at_shifted = eval_boundary(a.upper_boundary, std::fmod(t - shift + 2.0, 2.0));
    CHECK(eval_boundary(a.lower_boundary, t) ==
          doctest::Approx(-upper_at_shifted).epsilon(1e-12));
  }
}

TEST_CASE("golden capacity intervals") {
  QPieceGeometry g0 = stub(4.0, 2.0, 0.0);
  BoundInterval iv0 = capacity_bounds(build_tube(g0, CurveSelector::alpha_i), 1e-10);
  CHECK(rel(iv0.lower, 1.005696640537354590119272) < 1e-8);
  CHECK(rel(iv0.upper, 1.080737329473177784497897) < 1e-8);

  QPieceGeometry g1 = stub(4.0, 2.0, 0.1);
  BoundInterval iv1 = capacity_bounds(build_tube(g1, CurveSelector::alpha_i), 1e-10);
  CHECK(rel(iv1.lower, 1.00443397777500026134848) < 1e-8);
  CHECK(rel(iv1.upper, 1.157651156516342003956546) < 1e-8);

  CHECK(tube_upper_bound_qii(g1, CurveSelector::alpha_i, 1e-10) ==
        doctest::Approx(iv1.upper).epsilon(1e-12));
  CHECK(iv1.lower <= tube_upper_bound_qii(g1, CurveSelector::alpha_i, 1e-10));
}

TEST_CASE("trimmed corners keep a valid annulus and cap constant height") {
  QPieceGeometry g = stub(4.0, 2.0, 0.05);
  const HexagonData& hx = g.hex_i;
  double trim = 0.2 * std::min(hx.alpha_prime, hx.alpha_dprime);
  Annulus a = build_tube(g, CurveSelector::alpha_i, trim);
  BoundInterval iv = capacity_bounds(a, 1e-10);
  CHECK(iv.lower <= iv.upper);
  CHECK(iv.lower > 0.0);
  // cap height equals the lower of the two rim heights at the trim points
  double cap = std::min(trirect_boundary(hx.a, hx.alpha_prime - trim),
                        trirect_boundary(hx.half_b, hx.alpha_dprime - trim));
  CHECK(eval_boundary(a.upper_boundary, hx.alpha_prime) == doctest::Approx(cap).epsilon(1e-13));
  CHECK_THROWS_AS(build_tube(g, CurveSelector::alpha_i,
                             std::min(hx.alpha_prime, hx.alpha_dprime)),
                  validation_error);
}

TEST_CASE("full geometry tubes for all three curves") {
  QPieceGeometry g = complete_from_triple({4.0, 1.2, 0.2});
  for (auto sel : {CurveSelector::alpha_i, CurveSelector::alpha_tau, CurveSelector::alpha_diag}) {
    Annulus a = build_tube(g, sel);
    CHECK(a.baseline_length == doctest::Approx(length_for(g, sel)));
    BoundInterval iv = capacity_bounds(a, 1e-9);
    CHECK(iv.lower > 0.0);
    CHECK(iv.lower <= iv.upper);
  }
}

TEST_CASE("polyline export") {
  QPieceGeometry g = stub(4.0, 2.0, 0.0);
  Annulus a = build_tube(g, CurveSelector::alpha_i);
  std::ostringstream out;
  write_tube_polyline(a, 64, out);
  std::string s = out.str();
  CHECK(s.rfind("t,a1,a2\n", 0) == 0);
  CHECK(std::count(s.begin(), s.end(), '\n') == 65);
}
