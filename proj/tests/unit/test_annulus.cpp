#include <cmath>

#include <doctest.h>

#include "gramcap/annulus.hpp"
#include "gramcap/errors.hpp"
#include "gramcap/hypgeo.hpp"

using namespace gramcap;

namespace {

double rel(double x, double y) { return std::abs(x - y) / std::abs(y); }

Annulus constant_annulus(double L, double s_lo, double s_hi) {
  Annulus a;
  a.baseline_length = L;
  BoundarySegment lo, hi;
  lo.kind = hi.kind = BoundarySegment::Kind::constant;
  lo.t0 = hi.t0 = 0.0;
  lo.t1 = hi.t1 = L;
  lo.s0 = s_lo;
  hi.s0 = s_hi;
  a.lower_boundary = {lo};
  a.upper_boundary = {hi};
  return a;
}

}  // namespace

TEST_CASE("collar_capacity closed form") {
  CHECK(rel(collar_capacity(2.0, 1.0), 1.155041866638748521521246) < 1e-15);
  CHECK(rel(collar_capacity(2.0, 40.0), 2.0 / M_PI) < 1e-12);
  CHECK(collar_capacity(4.0, 1.3) == doctest::Approx(2.0 * collar_capacity(2.0, 1.3)).epsilon(1e-15));
  double prev = collar_capacity(1.0, 0.2);
  for (double w = 0.4; w < 5.0; w += 0.4) {
    double cur = collar_capacity(1.0, w);
    CHECK(cur < prev);
    prev = cur;
  }
}

TEST_CASE("segment_H_and_q closed forms") {
  BoundarySegment c;
  c.kind = BoundarySegment::Kind::constant;
  c.t0 = 0.0;
  c.t1 = 1.0;
  c.s0 = 0.0;
  HQ r = segment_H_and_q(c, 0.5);
  CHECK(r.H == doctest::Approx(M_PI / 2.0).epsilon(1e-15));
  CHECK(r.q == 0.0);

  BoundarySegment arc;
  arc.kind = BoundarySegment::Kind::trirect_arc;
  arc.t0 = 0.0;
  arc.t1 = 1.0;
  arc.w = 0.5;
  arc.t_foot = 0.0;
  arc.s_sign = 1;
  HQ r0 = segment_H_and_q(arc, 0.0);
  CHECK(r0.H == doctest::Approx(gudermann_h(0.5)).epsilon(1e-14));
  CHECK(r0.q == 0.0);
  HQ r4 = segment_H_and_q(arc, 0.4);
  CHECK(rel(r4.H, 2.0939126101379214359706) < 1e-13);
  CHECK(rel(r4.q, 0.2191192737796514370041661) < 1e-13);
  CHECK(r4.H == doctest::Approx(gudermann_h(trirect_boundary(0.5, 0.4))).epsilon(1e-12));
  // q is dH(a2(t))/dt
  double h = 1e-6;
  double fd = (gudermann_h(trirect_boundary(0.5, 0.4 + h)) -
               gudermann_h(trirect_boundary(0.5, 0.4 - h))) / (2.0 * h);
  CHECK(std::abs(r4.q - fd) < 1e-6);
  // lower-rim sign: H flips around pi/2, q flips sign
  arc.s_sign = -1;
  HQ rl = segment_H_and_q(arc, 0.4);
  CHECK(rl.H == doctest::Approx(M_PI - r4.H).epsilon(1e-14));
  CHECK(rl.q == doctest::Approx(-r4.q).epsilon(1e-14));
}

TEST_CASE("constant annulus is exact") {
  for (auto [L, w] : {std::pair{2.0, 1.0}, std::pair{1.0, 0.5}, std::pair{4.5, 2.2}}) {
    BoundInterval iv = capacity_bounds(constant_annulus(L, -w, w), 1e-12);
    double exact = collar_capacity(L, w);
    CHECK(rel(iv.lower, exact) < 1e-10);
    CHECK(rel(iv.upper, exact) < 1e-10);
    CHECK(iv.lower <= iv.upper);
  }
}

TEST_CASE("widening the upper boundary never increases the bounds") {
  BoundInterval narrow = capacity_bounds(constant_annulus(2.0, -1.0, 1.0), 1e-12);
  BoundInterval wide = capacity_bounds(constant_annulus(2.0, -1.0, 1.2), 1e-12);
  CHECK(wide.upper <= narrow.upper + 1e-12);
  CHECK(wide.lower <= narrow.lower + 1e-12);
}

TEST_CASE("inclusion monotonicity on nested constant annuli") {
  BoundInterval inner = capacity_bounds(constant_annulus(2.0, -0.5, 0.5), 1e-12);
  BoundInterval outer = capacity_bounds(constant_annulus(2.0, -1.5, 1.5), 1e-12);
  CHECK(inner.lower >= outer.lower);
}

TEST_CASE("validation rejects broken annuli") {
  Annulus a = constant_annulus(2.0, -1.0, 1.0);
  a.upper_boundary[0].t1 = 1.5;  // gap
  CHECK_THROWS_AS(validate(a), validation_error);

  Annulus b = constant_annulus(2.0, 1.0, -1.0);  // crossed
  CHECK_THROWS_AS(validate(b), validation_error);

  Annulus c = constant_annulus(2.0, -1.0, 1.0);
  BoundarySegment arc;
  arc.kind = BoundarySegment::Kind::trirect_arc;
  arc.t0 = 0.0;
  arc.t1 = 2.0;
  arc.w = 0.5;
  arc.t_foot = 0.0;  // pole of w=0.5 sits near 1.18 < 2
  arc.s_sign = 1;
  c.upper_boundary = {arc};
  CHECK_THROWS_AS(validate(c), infeasible_error);
}

TEST_CASE("tolerance must be positive") {
  CHECK_THROWS_AS(capacity_bounds(constant_annulus(1.0, -1.0, 1.0), 0.0), validation_error);
}
