#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qg/pipeline.hpp"

namespace qg {

/// Deterministic grid scan over (omega, g) for the one-delta wire.
struct ScanConfig {
  std::vector<double> omega_values;
  std::vector<double> g_values;
  int n_states = 25;
  int threads = 0;  // 0 = hardware concurrency
  PipelineOptions pipeline;
};

/// The paper's 100 x 50 grid: omega midpoints of [-1, 1] in 100 steps,
/// g from -12 to +12.5 in steps of 0.5.
ScanConfig paper_grid();

/// Seeded Monte Carlo search configuration. Sampling is uniform over the
/// stated ranges; per-sample RNG streams are derived from (seed, index) so
/// records land in pre-assigned slots regardless of thread interleaving.
struct McConfig {
  Topology topology = Topology::Wire3Delta;
  long n_samples = 6000;
  std::uint64_t seed = 1;
  int n_states = 25;
  double g_min = -12.0;
  double g_max = 0.0;
  /// Wires: sample per-edge angles uniformly in (angle_min, angle_max)
  /// instead of keeping the wire straight.
  bool bent = false;
  double angle_min = -3.14159265358979323846;
  double angle_max = 3.14159265358979323846;
  /// Star / lollipop edge-length sampling bounds (relative; the graph is
  /// rescaled to unit length afterwards).
  double len_min = 0.1;
  double len_max = 1.0;
  int threads = 0;
  PipelineOptions pipeline;
};

/// One solved configuration. Failed samples keep their slot with the reason
/// recorded; extremal tracking skips them.
struct RunRecord {
  long index = -1;
  GraphSpec spec;
  bool failed = false;
  std::string failure_reason;

  double beta_xxx = 0.0;      // graph-frame diagonal component
  double beta_max = 0.0;      // lab-frame extremal via theta*
  double theta_star = 0.0;
  double gamma_xxxx = 0.0;
  double gamma_max = 0.0;
  double gamma_min = 0.0;
  double beta_norm = 0.0;
  double gamma_norm = 0.0;
  double X = 0.0;
  double E = 0.0;
  double fG = 0.0;
  double beta3 = 0.0, beta4 = 0.0;
  double gamma3 = 0.0, gamma4 = 0.0;
  double sum_rule_residual = 0.0;  // ground row at M = n_states
  int bound_states = 0;
};

struct McResult {
  std::vector<RunRecord> records;
  long best_beta_index = -1;   // by |beta_max|
  long best_gamma_index = -1;  // by gamma_max
  long min_gamma_index = -1;   // by gamma_min
};

/// One record per grid point, row-major (omega outer, g inner).
std::vector<RunRecord> run_scan(const ScanConfig& cfg);

McResult run_mc(const McConfig& cfg);

/// Known record fields exportable to CSV.
std::vector<std::string> record_field_names();

/// CSV with a header row; one row per record, stable column order, 17
/// significant digits. Throws ValidationError on unknown or empty fields.
std::string scatter_export(const std::vector<RunRecord>& records,
                           const std::vector<std::string>& fields);

/// Run metadata JSON (seed, sizes, timing) for reproducibility records.
std::string mc_metadata_json(const McConfig& cfg, const McResult& result, double seconds);

std::string mc_config_to_json(const McConfig& cfg);
McConfig mc_config_from_json(const std::string& text);
std::string scan_config_to_json(const ScanConfig& cfg);
ScanConfig scan_config_from_json(const std::string& text);

/// Deterministic per-index substream: splitmix64-scrambled (seed, index).
std::uint64_t substream_seed(std::uint64_t seed, long index);

}  // namespace qg
