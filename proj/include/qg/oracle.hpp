#pragma once

#include <Eigen/Dense>
#include <vector>

#include "qg/graph.hpp"
#include "qg/response.hpp"

namespace qg {

/// Independent finite-difference Schrodinger solver on a dense 1D grid,
/// wire topologies only. Hard walls; the standard three-point kinetic
/// stencil; each delta becomes a single-node potential of weight (g/L)/h at
/// the nearest grid node.
struct GridProblem {
  int n = 0;        // interior points
  double h = 0.0;   // L / (n + 1)
  Eigen::VectorXd potential;
};

GridProblem fd_discretize(const GraphSpec& spec, int n);

struct FdSolution {
  Eigen::VectorXd energies;            // lowest n_states
  Eigen::MatrixXd vectors;             // column per state, normalized with weight h
  double h = 0.0;
};

/// Lowest n_states eigenpairs of the symmetric tridiagonal system via Sturm
/// bisection plus inverse iteration.
FdSolution fd_solve(const GraphSpec& spec, int n_grid, int n_states);

/// Full response pipeline computed entirely from grid data: trapezoidal
/// moments, then the shared intrinsic-tensor assembly.
struct FdReport {
  Eigen::VectorXd energies;
  TransitionTable table;
  BetaTensor beta;
  GammaTensor gamma;
};
FdReport fd_response(const GraphSpec& spec, int n_grid, int n_states);

}  // namespace qg
