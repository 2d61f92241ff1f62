#pragma once

#include <Eigen/Dense>
#include <vector>

#include "qg/graph.hpp"
#include "qg/wavefunctions.hpp"

namespace qg {

/// Energies, normalized energies and transition-moment matrices for the
/// retained states. Moments are lab-frame components built edge by edge;
/// xi are normalized by x01_max = 1 / sqrt(2 E10).
struct TransitionTable {
  int n_states = 0;
  Eigen::VectorXd energies;   // E_n
  Eigen::VectorXd e;          // (E_n - E_0) / E10
  Eigen::MatrixXd x, y;       // raw moments, graph units
  Eigen::MatrixXd xi_x, xi_y; // normalized moments
  double x01_max = 0.0;
  /// Largest |<n|m>| off-diagonal overlap seen while building (diagnostic).
  double max_cross_overlap = 0.0;
};

struct QuadratureOptions {
  int order = 16;
  /// Panels per wavelength of the fastest retained state.
  double panels_per_wavelength = 1.0;
  double accept_abs = 1e-10;
  int max_refinements = 3;
};

/// Single moment <n | c | m> with c the lab x- or y-coordinate of arc
/// position. Composite Gauss-Legendre, refined once and accepted when two
/// successive grids agree to accept_abs.
double transition_moment(const Geometry& geo, const EigenState& sn, const EigenState& sm,
                         char component, const QuadratureOptions& opts = QuadratureOptions{});

/// Full symmetric moment matrices plus normalized xi and e. Moments below
/// 1e-14 snap to zero. y-moments are computed only when some edge leaves the
/// x-axis; otherwise they are identically zero by construction.
TransitionTable build_table(const Geometry& geo, const std::vector<EigenState>& states,
                            const QuadratureOptions& opts = QuadratureOptions{});

/// Diagonal TRK sum-rule residual |1 - sum_{n < M} (e_n - e_p) |xi_pn|^2| for
/// row p over the lowest M states. |xi|^2 adds the x and y components, which
/// reduces to the x-only sum for straight graphs and keeps the unity target
/// for bent ones.
double sum_rule_residual(const TransitionTable& table, int p, int M);

/// Normalization integral of a single state (shared quadrature machinery).
double state_norm(const Geometry& geo, const EigenState& s,
                  const QuadratureOptions& opts = QuadratureOptions{});

}  // namespace qg
