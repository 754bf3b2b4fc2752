#include "gramcap/qpiece.hpp"

#include <cmath>

#include "gramcap/errors.hpp"
#include "gramcap/hypgeo.hpp"

namespace gramcap {

CurveRole parse_curve_role(const std::string& s) {
  if (s == "alpha_i") return CurveRole::alpha_i;
  if (s == "alpha_tau") return CurveRole::alpha_tau;
  if (s == "alpha_diag") return CurveRole::alpha_diag;
  throw validation_error("curve_role must be alpha_i, alpha_tau or alpha_diag, got '" + s + "'");
}

const char* curve_role_name(CurveRole r) {
  switch (r) {
    case CurveRole::alpha_i: return "alpha_i";
    case CurveRole::alpha_tau: return "alpha_tau";
    case CurveRole::alpha_diag: return "alpha_diag";
  }
  return "?";
}

void validate(const FenchelNielsenTriple& fn) {
  if (!(std::isfinite(fn.beta) && fn.beta > 0.0))
    throw validation_error("boundary length beta must be positive and finite");
  if (!(std::isfinite(fn.curve) && fn.curve > 0.0))
    throw validation_error("interior curve length must be positive and finite");
  if (!(std::isfinite(fn.twist) && fn.twist > -0.5 && fn.twist <= 0.5))
    throw validation_error("twist must lie in (-1/2, 1/2]");
}

HexagonData hexagon_data(double beta, double baseline, double eps_geo) {
  HexagonData h;
  h.half_b = pentagon_half_b(beta, baseline);
  h.a = hexagon_a(h.half_b, baseline, eps_geo);
  h.delta_prime = delta_prime(h.half_b, baseline, eps_geo);
  h.alpha_dprime = alpha_double_prime(h.half_b, baseline, eps_geo);
  h.alpha_prime = baseline / 2.0 - h.alpha_dprime;
  h.c = arc_c(beta, h.half_b, baseline, eps_geo);
  if (!(h.alpha_prime > 0.0))
    throw infeasible_error(
        "hexagon rim split: alpha'' >= baseline/2, width-a arc has no extent");
  return h;
}

QPieceGeometry complete_from_triple(const FenchelNielsenTriple& fn) {
  validate(fn);
  QPieceGeometry g;
  g.beta = fn.beta;
  g.alpha_i = fn.curve;
  g.t_i = fn.twist;
  g.twist_sign = fn.twist < 0.0 ? -1 : 1;
  double t1 = std::abs(fn.twist);

  g.r1 = g.alpha_i * t1 / 2.0;
  double eta1_half = pentagon_half_b(fn.beta, g.alpha_i);
  g.eta1 = 2.0 * eta1_half;

  // cosh(alpha_tau/2) = cosh(r1) cosh(eta1/2); the dual curve crosses the
  // twisted gluing once.
  g.alpha_tau = 2.0 * detail::acosh_stable(std::cosh(g.r1) * std::cosh(eta1_half));
  double cos_th = std::tanh(g.r1) / std::tanh(g.alpha_tau / 2.0);
  g.theta = std::acos(cos_th);
  g.r2 = std::atanh(cos_th * std::tanh(g.alpha_i / 2.0));
  g.t_tau_raw = 2.0 * g.r2 / g.alpha_tau;
  g.t_tau = std::min(g.t_tau_raw, 1.0 - g.t_tau_raw);

  // Diagonal curve: same construction with the offset measured from the
  // other gluing foot. r1 <= alpha_i/4 so the offset stays below alpha_i.
  double d12 = g.alpha_i - g.r1;
  g.alpha_diag = 2.0 * detail::acosh_stable(std::cosh(d12) * std::cosh(eta1_half));
  double cos_th12 = std::tanh(d12) / std::tanh(g.alpha_diag / 2.0);
  double r12 = std::atanh(cos_th12 * std::tanh(g.alpha_i / 2.0));
  g.t_diag_raw = 2.0 * r12 / g.alpha_diag;
  g.t_diag = std::min(g.t_diag_raw, 1.0 - g.t_diag_raw);

  g.hex_i = hexagon_data(fn.beta, g.alpha_i);
  g.hex_tau = hexagon_data(fn.beta, g.alpha_tau);
  g.hex_diag = hexagon_data(fn.beta, g.alpha_diag);
  return g;
}

SystoleCheck check_systole_condition(const FenchelNielsenTriple& fn) {
  validate(fn);
  SystoleCheck s;
  s.lhs = std::cosh(fn.curve / 2.0);
  s.rhs = std::cosh(fn.beta / 6.0) + 0.5;
  s.ok = s.lhs <= s.rhs;
  return s;
}

}  // namespace gramcap
