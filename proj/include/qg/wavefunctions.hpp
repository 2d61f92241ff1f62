#pragma once

#include <vector>

#include "qg/eigensolve.hpp"
#include "qg/graph.hpp"

namespace qg {

/// One smooth wave piece on a chart interval [lo, hi]:
/// psi(s) = alpha * sn(w (s - lo)) + beta * cn(w (s - lo)),
/// sn/cn = sin/cos (trigonometric) or sinh/cosh (bound states), w = x / L.
struct WavePiece {
  double lo = 0.0;
  double hi = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
};

/// Matched, normalized eigenstate stored as wave pieces per chart.
struct EigenState {
  Level level;
  double total_length = 1.0;
  /// pieces[c] covers chart c contiguously.
  std::vector<std::vector<WavePiece>> pieces;
  double norm_constant = 1.0;

  double wavenumber() const { return level.x / total_length; }
};

/// Matches the boundary conditions for one spectral level and returns the
/// normalized state. Amplitude ratios come from the motif node relations;
/// if any trigonometric region factor |sin(k * edge)| < 1e-6 the full
/// 2E x 2E homogeneous boundary system is solved by smallest-singular-
/// direction extraction instead. Throws InconsistentStateError when the
/// boundary residual exceeds 1e-7 and DegeneracyError when the nullspace
/// dimension exceeds 1.
EigenState assemble_state(const Geometry& geo, const Level& level);

/// Value of psi at arc position s on the given chart.
double evaluate_chart(const EigenState& state, int chart, double s);

/// Value of psi at arc position s measured from the origin of the given
/// geometry edge (the spec-level addressing).
double evaluate(const Geometry& geo, const EigenState& state, int edge_index, double s);

/// d psi / ds at arc position s on the given chart (one-sided at breaks).
double derivative_chart(const EigenState& state, int chart, double s);

}  // namespace qg
