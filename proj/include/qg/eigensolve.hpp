#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qg/graph.hpp"
#include "qg/secular.hpp"

namespace qg {

/// One spectral level. x is the dimensionless root: kL for positive-energy
/// states and kappa L for bound states. Energies are E = x^2 / (2 L^2) with
/// the sign of the branch (hbar = m = 1).
struct Level {
  double x = 0.0;
  bool bound = false;
  /// Loop-only lollipop family (zero prong amplitude), injected analytically.
  bool loop_only = false;
  double energy = 0.0;
};

struct Spectrum {
  Topology topology = Topology::Wire1Delta;
  double total_length = 1.0;
  std::vector<Level> levels;

  int size() const { return static_cast<int>(levels.size()); }
  double energy(int n) const { return levels[n].energy; }
  int bound_count() const;
};

struct SolveOptions {
  int n_states = 25;
  /// root_scan density parameter; effective step is pi / (8 * density).
  int scan_density = 8;
  double bisect_rel_tol = 1e-12;
  double degeneracy_gap = 1e-8;
};

/// Sign-change bracket [lo, hi], or a collapsed even-multiplicity root when
/// lo == hi.
struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
};

/// All sign-change intervals of fn on [x_lo, x_hi] sampled with step
/// min(pi/(8 density), (x_hi - x_lo)/1e4). Even-multiplicity roots (no sign
/// change) are picked up by refining local minima of |fn| below 1e-10.
std::vector<Bracket> root_scan(const std::function<double(double)>& fn, double x_lo,
                               double x_hi, int density);

/// Bisect a sign-change bracket to relative tolerance.
double bisect(const std::function<double(double)>& fn, double lo, double hi, double rel_tol);

/// Lowest n_states eigenvalues of the graph: every negative-energy root of
/// the hyperbolic branch first, then positive roots, merged by energy.
/// Scan density doubles until the root count is stable across two successive
/// densities. Throws SolverError (with the scan trace) on a shortfall and
/// DegeneracyError when two roots coincide within 1e-8.
Spectrum solve_spectrum(const GraphSpec& spec, int n_states,
                        const SolveOptions& opts = SolveOptions{});

/// Spectra for each strength in g_grid applied to the template's deltas
/// (single-delta topologies). Used for the level-diagram sweeps.
std::vector<Spectrum> track_vs_g(const GraphSpec& spec_template, const std::vector<double>& g_grid,
                                 int n_states, const SolveOptions& opts = SolveOptions{});

}  // namespace qg
