#pragma once

#include <string>
#include <vector>

#include "qg/eigensolve.hpp"
#include "qg/moments.hpp"
#include "qg/response.hpp"

namespace qg {

struct PipelineOptions {
  SolveOptions solve;
  QuadratureOptions quad;
};

/// Everything the solver knows about one graph.
struct ResponseReport {
  GraphSpec spec;
  Spectrum spectrum;

  BetaTensor beta;
  double beta_norm = 0.0;
  double beta_theta_star = 0.0;
  double beta_max = 0.0;  // rotated extremum, = |beta_xxx| for straight wires
  SphericalBeta beta_spherical;

  GammaTensor gamma;
  double gamma_norm = 0.0;
  double gamma_theta_star = 0.0;
  double gamma_max = 0.0;
  double gamma_min = 0.0;
  SphericalGamma gamma_spherical;

  TlaDiagnostics tla;
  std::vector<double> sum_rule_residuals;  // residual at M = 1 .. n_states
  double max_cross_overlap = 0.0;
};

/// spec -> spectrum -> states -> moments -> tensors, one call.
ResponseReport solve_report(const GraphSpec& spec, const PipelineOptions& opts = PipelineOptions{});

/// Intermediate products for callers that need the states themselves.
struct SolvedGraph {
  Geometry geometry;
  Spectrum spectrum;
  std::vector<EigenState> states;
  TransitionTable table;
};
SolvedGraph solve_graph(const GraphSpec& spec, const PipelineOptions& opts = PipelineOptions{});

ResponseReport report_from_table(const GraphSpec& spec, const Spectrum& spectrum,
                                 const TransitionTable& table);

std::string report_to_json(const ResponseReport& report);

}  // namespace qg
