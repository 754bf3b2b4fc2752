#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gramcap/lowerbound.hpp"
#include "gramcap/qpiece.hpp"
#include "gramcap/tube.hpp"

namespace gramcap {

struct QPieceInput {
  FenchelNielsenTriple fn;
  CurveRole role = CurveRole::alpha_i;
};

// Genus-g surface glued from g Q-pieces; piece p carries the homology basis
// pair (2p, 2p+1).
struct SurfaceSpec {
  int genus = 0;
  std::vector<QPieceInput> pieces;
};

void validate(const SurfaceSpec& spec);

struct EntryBound {
  BoundInterval iv;
  bool loose = false;
};

// Tube upper and projection lower bounds for the three curves of one piece,
// relabeled so index 0 is the basis alpha_i curve, 1 its dual, 2 the
// diagonal, regardless of which curve the input triple described.
struct PieceBounds {
  QPieceGeometry geo;
  CurveRole role = CurveRole::alpha_i;
  double upper[3] = {0, 0, 0};
  double lower[3] = {0, 0, 0};
  bool lower_failed[3] = {false, false, false};
  double twist[3] = {0, 0, 0};
};

// Basis-relabeled curve selectors for a declared input role.
void role_selectors(CurveRole role, CurveSelector out[3]);

PieceBounds compute_piece_bounds(const QPieceGeometry& geo, CurveRole role,
                                 double tol, double trim = 0.0);

// Diagonal entry for basis index i (0 or 1) of the piece: the interval of the
// tube around the partner curve.
EntryBound diagonal_bounds(const PieceBounds& pb, int i);

// Within-piece off-diagonal from the diagonal-tube triple, intersected with
// the Cauchy-Schwarz envelope of the two diagonal uppers.
EntryBound paired_offdiag_bounds(const PieceBounds& pb);

// Cross-piece bound [-M, M] with M from the two diagonal interval gaps.
EntryBound cross_offdiag_bound(const PieceBounds& pa, int i,
                               const PieceBounds& pb, int l);

struct GramIntervalMatrix {
  std::size_t n = 0;
  std::vector<BoundInterval> entries;    // row-major n*n
  std::vector<std::uint8_t> loose;       // per-entry quality flag
  std::vector<std::string> warnings;

  BoundInterval& at(std::size_t i, std::size_t j) { return entries[i * n + j]; }
  const BoundInterval& at(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
  bool loose_at(std::size_t i, std::size_t j) const { return loose[i * n + j] != 0; }
};

GramIntervalMatrix assemble(const SurfaceSpec& spec, double tol, double trim = 0.0);

}  // namespace gramcap
