#include <cmath>

#include <doctest.h>

#include "gramcap/errors.hpp"
#include "gramcap/hypgeo.hpp"
#include "gramcap/lowerbound.hpp"

using namespace gramcap;

namespace {

double rel(double x, double y) { return std::abs(x - y) / std::abs(y); }

QPieceGeometry stub(double beta, double len, double twist) {
  QPieceGeometry g;
  g.beta = beta;
  g.alpha_i = len;
  g.t_i = twist;
  g.hex_i = hexagon_data(beta, len);
  return g;
}

}  // namespace

TEST_CASE("lambda_nu golden and degenerate") {
  double lam, nu;
  lambda_nu(std::asinh(1.0), 2.0, 0.2, &lam, &nu);
  CHECK(rel(lam, 1.818402152700296668763307) < 1e-13);
  CHECK(rel(nu, 1.293404956699632843851115) < 1e-13);
  CHECK(rel(std::sinh(lam / 2.0) * std::sin(nu), std::sinh(std::asinh(1.0))) < 1e-12);

  lambda_nu(0.8, 2.0, 0.0, &lam, &nu);
  CHECK(std::abs(lam - 1.6) < 1e-12);
  CHECK(std::abs(nu - M_PI / 2.0) < 1e-12);

  // lambda grows and nu falls with the twist
  double prev_lam = 0.0, prev_nu = M_PI;
  for (double t : {0.0, 0.1, 0.2, 0.3, 0.4}) {
    lambda_nu(0.8, 2.0, t, &lam, &nu);
    CHECK(lam > prev_lam);
    CHECK(nu < prev_nu);
    prev_lam = lam;
    prev_nu = nu;
  }
  CHECK_THROWS_AS(lambda_nu(0.8, 2.0, 0.6, &lam, &nu), validation_error);
}

TEST_CASE("k1 golden and limits") {
  double lam, nu;
  lambda_nu(std::asinh(1.0), 2.0, 0.2, &lam, &nu);
  CHECK(rel(k1_value(lam, nu), 0.5974624556587733282979619) < 1e-13);
  // nu = pi/2, lambda = b: denominator is H(b/2) - H(-b/2)
  double b = 1.7;
  CHECK(rel(k1_value(b, M_PI / 2.0),
            1.0 / (gudermann_h(b / 2.0) - gudermann_h(-b / 2.0))) < 1e-14);
  CHECK(rel(k1_value(80.0, 0.7), std::sin(0.7) / M_PI) < 1e-10);
}

TEST_CASE("k2 golden, pole, monotone") {
  CHECK(rel(k2_value(1.5, 0.8), 2.465948199041536859616201) < 1e-14);
  CHECK_THROWS_AS(k2_value(0.8, 0.8), infeasible_error);
  CHECK_THROWS_AS(k2_value(0.8 + 1e-10, 0.8), infeasible_error);
  double prev = k2_value(0.9, 0.8);
  for (double x = 1.1; x < 3.0; x += 0.3) {
    double cur = k2_value(x, 0.8);
    CHECK(cur < prev);
    prev = cur;
  }
}

TEST_CASE("x_of_t hits b/2 at the foot and c at the ends") {
  HexagonData hx = hexagon_data(4.0, 2.0);
  CHECK(x_of_t(hx, 0.0) == doctest::Approx(hx.half_b).epsilon(1e-14));
  CHECK(x_of_t(hx, hx.alpha_dprime) == doctest::Approx(hx.c).epsilon(1e-12));
  CHECK(x_of_t(hx, -hx.alpha_dprime) == doctest::Approx(hx.c).epsilon(1e-12));
  CHECK(x_of_t(hx, 0.3) == doctest::Approx(x_of_t(hx, -0.3)).epsilon(1e-15));
  CHECK_THROWS_AS(x_of_t(hx, hx.alpha_dprime + 0.1), validation_error);
}

TEST_CASE("projection lower bound goldens") {
  CHECK(rel(lower_bound_qii(stub(4.0, 2.0, 0.0), CurveSelector::alpha_i, 1e-10),
            0.5346226590031259579842771) < 1e-8);
  CHECK(rel(lower_bound_qii(stub(4.0, 2.0, 0.1), CurveSelector::alpha_i, 1e-10),
            0.5286429900844486429935143) < 1e-8);
}

TEST_CASE("simplified bounds golden and sandwich") {
  QPieceGeometry g = stub(4.0, 2.0, 0.1);
  BoundInterval s = simplified_bounds(g, CurveSelector::alpha_i);
  CHECK(rel(s.lower, 0.4572262950194465689466421) < 1e-13);
  CHECK(rel(s.upper, 1.087055587038524085420851) < 1e-13);
  double integral = lower_bound_qii(g, CurveSelector::alpha_i, 1e-10);
  double tube_up = tube_upper_bound_qii(g, CurveSelector::alpha_i, 1e-10);
  CHECK(s.lower <= integral + 1e-8);
  CHECK(integral <= tube_up + 1e-8);
  // the closed-form upper only dominates the tube bound once min(a, b/2) is
  // small against the curve length; check it in that regime
  QPieceGeometry g2 = stub(4.2, 3.0, 0.08);
  BoundInterval s2 = simplified_bounds(g2, CurveSelector::alpha_i);
  double lq2 = lower_bound_qii(g2, CurveSelector::alpha_i, 1e-10);
  double tu2 = tube_upper_bound_qii(g2, CurveSelector::alpha_i, 1e-10);
  CHECK(s2.lower <= lq2 + 1e-8);
  CHECK(lq2 <= tu2 + 1e-8);
  CHECK(tu2 <= s2.upper + 1e-8);
}

TEST_CASE("optimal boundary value stays in (0, 1/2]") {
  for (double tw : {0.0, 0.1, 0.3}) {
    SkewedStripData s = skewed_strip(stub(4.0, 2.0, tw), CurveSelector::alpha_i);
    double k2c = k2_value(s.c, s.half_b);
    double c1 = s.k1 / (k2c + 2.0 * s.k1);
    CHECK(c1 > 0.0);
    CHECK(c1 <= 0.5);
  }
}

TEST_CASE("continuity in twist near zero") {
  double v0 = lower_bound_qii(stub(4.0, 2.0, 0.0), CurveSelector::alpha_i, 1e-10);
  double v1 = lower_bound_qii(stub(4.0, 2.0, 1e-6), CurveSelector::alpha_i, 1e-10);
  CHECK(std::abs(v1 - v0) / v0 < 1e-4);
}

TEST_CASE("quality heuristic") {
  CHECK(low_quality(0.3, 1.0, 1.1));
  CHECK(low_quality(0.1, 0.001, 1.0));
  CHECK_FALSE(low_quality(0.1, 0.5, 1.0));
}
