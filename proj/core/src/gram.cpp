#include "gramcap/gram.hpp"

#include <algorithm>
#include <cmath>

#include "gramcap/errors.hpp"

namespace gramcap {

void validate(const SurfaceSpec& spec) {
  if (spec.genus < 2) throw validation_error("genus must be at least 2");
  if (static_cast<int>(spec.pieces.size()) != spec.genus)
    throw validation_error("expected exactly genus Q-pieces, got " +
                           std::to_string(spec.pieces.size()));
  for (const QPieceInput& p : spec.pieces) validate(p.fn);
}

void role_selectors(CurveRole role, CurveSelector out[3]) {
  switch (role) {
    case CurveRole::alpha_i:
      out[0] = CurveSelector::alpha_i;
      out[1] = CurveSelector::alpha_tau;
      out[2] = CurveSelector::alpha_diag;
      return;
    case CurveRole::alpha_tau:
      out[0] = CurveSelector::alpha_tau;
      out[1] = CurveSelector::alpha_i;
      out[2] = CurveSelector::alpha_diag;
      return;
    case CurveRole::alpha_diag:
      out[0] = CurveSelector::alpha_tau;
      out[1] = CurveSelector::alpha_diag;
      out[2] = CurveSelector::alpha_i;
      return;
  }
}

PieceBounds compute_piece_bounds(const QPieceGeometry& geo, CurveRole role,
                                 double tol, double trim) {
  PieceBounds pb;
  pb.geo = geo;
  pb.role = role;
  CurveSelector sel[3];
  role_selectors(role, sel);
  for (int k = 0; k < 3; ++k) {
    pb.twist[k] = twist_for(geo, sel[k]);
    pb.upper[k] = tube_upper_bound_qii(geo, sel[k], tol, trim);
    try {
      pb.lower[k] = lower_bound_qii(geo, sel[k], tol);
    } catch (const infeasible_error&) {
      pb.lower[k] = 0.0;
      pb.lower_failed[k] = true;
    }
  }
  return pb;
}

EntryBound diagonal_bounds(const PieceBounds& pb, int i) {
  if (i != 0 && i != 1) throw validation_error("diagonal index must be 0 or 1");
  // energy dual to curve i is sandwiched by the tube around its partner
  int k = 1 - i;
  EntryBound e;
  e.iv.lower = pb.lower[k];
  e.iv.upper = pb.upper[k];
  e.loose = pb.lower_failed[k] || low_quality(pb.twist[k], e.iv.lower, e.iv.upper);
  return e;
}

EntryBound paired_offdiag_bounds(const PieceBounds& pb) {
  EntryBound e;
  e.iv.lower = 0.5 * (pb.lower[2] - pb.upper[0] - pb.upper[1]);
  e.iv.upper = 0.5 * (pb.upper[2] - pb.lower[0] - pb.lower[1]);
  // Cauchy-Schwarz envelope from the two diagonal uppers
  double m = 0.5 * (pb.upper[0] + pb.upper[1]);
  e.iv.lower = std::max(e.iv.lower, -m);
  e.iv.upper = std::min(e.iv.upper, m);
  if (e.iv.lower > e.iv.upper) e.iv.lower = e.iv.upper;
  e.loose = pb.lower_failed[0] || pb.lower_failed[1] || pb.lower_failed[2] ||
            low_quality(std::max({pb.twist[0], pb.twist[1], pb.twist[2]}), pb.lower[2],
                        pb.upper[2]);
  return e;
}

EntryBound cross_offdiag_bound(const PieceBounds& pa, int i,
                               const PieceBounds& pb, int l) {
  EntryBound ea = diagonal_bounds(pa, i);
  EntryBound el = diagonal_bounds(pb, l);
  double m = 0.5 * ((ea.iv.upper - ea.iv.lower) + (el.iv.upper - el.iv.lower));
  EntryBound e;
  e.iv.lower = -m;
  e.iv.upper = m;
  e.loose = ea.loose || el.loose;
  return e;
}

GramIntervalMatrix assemble(const SurfaceSpec& spec, double tol, double trim) {
  validate(spec);
  GramIntervalMatrix m;
  m.n = 2 * static_cast<std::size_t>(spec.genus);
  m.entries.assign(m.n * m.n, BoundInterval{});
  m.loose.assign(m.n * m.n, 0);
  if (spec.genus == 2)
    m.warnings.push_back(
        "genus 2: the two Q-pieces share their boundary geodesic; bounds "
        "remain valid but the decomposition is degenerate");

  std::vector<PieceBounds> per_piece;
  per_piece.reserve(spec.pieces.size());
  for (std::size_t p = 0; p < spec.pieces.size(); ++p) {
    const QPieceInput& in = spec.pieces[p];
    SystoleCheck sc = check_systole_condition(in.fn);
    if (!sc.ok)
      m.warnings.push_back("piece " + std::to_string(p) +
                           ": short-curve condition violated (cosh(l/2) > "
                           "cosh(beta/6) + 1/2)");
    QPieceGeometry geo;
    try {
      geo = complete_from_triple(in.fn);
      per_piece.push_back(compute_piece_bounds(geo, in.role, tol, trim));
    } catch (const infeasible_error& ex) {
      throw infeasible_error("piece " + std::to_string(p) + ": " + ex.what());
    } catch (const convergence_error& ex) {
      throw convergence_error("piece " + std::to_string(p) + ": " + ex.what());
    }
  }

  auto set_entry = [&](std::size_t i, std::size_t j, const EntryBound& e) {
    m.at(i, j) = e.iv;
    m.at(j, i) = e.iv;
    m.loose[i * m.n + j] = m.loose[j * m.n + i] = e.loose ? 1 : 0;
  };

  for (std::size_t p = 0; p < per_piece.size(); ++p) {
    std::size_t bi = 2 * p;
    set_entry(bi, bi, diagonal_bounds(per_piece[p], 0));
    set_entry(bi + 1, bi + 1, diagonal_bounds(per_piece[p], 1));
    set_entry(bi, bi + 1, paired_offdiag_bounds(per_piece[p]));
    for (std::size_t q = p + 1; q < per_piece.size(); ++q) {
      std::size_t bj = 2 * q;
      for (int ii = 0; ii < 2; ++ii)
        for (int ll = 0; ll < 2; ++ll)
          set_entry(bi + ii, bj + ll,
                    cross_offdiag_bound(per_piece[p], ii, per_piece[q], ll));
    }
  }
  return m;
}

}  // namespace gramcap
