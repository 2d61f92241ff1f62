#pragma once

#include <array>
#include <string>
#include <vector>

#include "qg/errors.hpp"

namespace qg {

enum class Topology { Wire1Delta, Wire2Delta, Wire3Delta, StarDelta, LollipopDelta };

std::string to_string(Topology t);
Topology topology_from_string(const std::string& name);

/// A straight metric edge. Angles are lab-frame radians in [-pi, pi).
struct EdgeSpec {
  double length = 0.0;
  double angle = 0.0;
};

/// A finite delta potential (g/L) delta(s - a). For wire topologies the
/// position is the arc length from the graph origin; stars and lollipops
/// carry their delta at the central vertex.
struct DeltaSpec {
  double strength = 0.0;
  double position = 0.0;
  bool at_center = false;
};

/// Full problem statement: topology, geometry and potential dressing.
/// Immutable by convention once validated; all operations return copies.
///
/// Lollipop convention: edges[0] is the prong, edges[1] stores the loop as a
/// single length; the loop is embedded as a circle of that circumference and
/// edges[1].angle is the direction from the central vertex to the circle
/// center.
struct GraphSpec {
  Topology topology = Topology::Wire1Delta;
  std::vector<EdgeSpec> edges;
  std::vector<DeltaSpec> deltas;
  double total_length = 0.0;
};

/// Throws ValidationError on any violated invariant. Checks edge lengths,
/// delta counts per topology, strictly interior / pairwise distinct delta
/// positions (1e-9 margin) and the total-length bookkeeping.
void validate(const GraphSpec& spec);

/// Straight wire with deltas at the given arc positions.
GraphSpec make_wire(const std::vector<double>& segment_angles_or_empty,
                    const std::vector<double>& edge_lengths,
                    const std::vector<double>& delta_positions,
                    const std::vector<double>& delta_strengths);

/// Convenience: unit-length straight 1-delta wire parametrized by asymmetry.
GraphSpec make_wire1_omega(double omega, double g);

/// Straight unit wire with n deltas at positions/strengths.
GraphSpec make_straight_wire(const std::vector<double>& delta_positions,
                             const std::vector<double>& delta_strengths,
                             double length = 1.0);

GraphSpec make_star(const std::array<double, 3>& lengths, const std::array<double, 3>& angles,
                    double g);

GraphSpec make_lollipop(double prong_length, double prong_angle, double loop_length,
                        double loop_center_angle, double g);

/// Returns an equivalent spec rescaled so total_length == 1. Delta strengths
/// are dimensionless and unchanged. Idempotent.
GraphSpec normalize_scale(const GraphSpec& spec);

/// Asymmetry of the delta location within its sub-wire: omega = 2a/Lsub - 1,
/// where the sub-wire spans the adjacent breakpoints (wire ends or
/// neighboring deltas). Wire topologies only.
double asymmetry(const GraphSpec& spec, int delta_index);

/// Expresses the same graph in a lab frame rotated by +theta; edge angles
/// shift by -theta. Moments transform as x' = cos(theta) x + sin(theta) y.
GraphSpec with_frame_rotated(const GraphSpec& spec, double theta);

int wire_delta_count(Topology t);

/// JSON (de)serialization against the documented schema:
/// {"topology": str, "edges": [{"length": f, "angle": f}],
///  "deltas": [{"g": f, "position": f | "center"}]}
std::string to_json(const GraphSpec& spec);
GraphSpec spec_from_json(const std::string& text);

// ---------------------------------------------------------------------------
// Compiled geometry: arc charts with lab-frame coordinates.
//
// A chart is a contiguous 1D parameter range on which eigenstates are smooth
// except at marked internal breakpoints:
//   wire:      one chart [0, L], breaks at bends and deltas
//   star:      three charts, s measured outward from the center
//   lollipop:  chart 0 = prong with s from the free end (vertex at s = a),
//              chart 1 = loop with s from the vertex around the circle
// ---------------------------------------------------------------------------

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

class Geometry {
 public:
  explicit Geometry(const GraphSpec& spec);

  int n_charts() const { return static_cast<int>(chart_lengths_.size()); }
  double chart_length(int c) const { return chart_lengths_[c]; }

  /// Lab coordinates of arc position s on chart c.
  Vec2 point(int c, double s) const;

  /// Positions interior to chart c where the lab direction changes (wire
  /// bends). Quadrature panels must not straddle these.
  const std::vector<double>& direction_breaks(int c) const { return breaks_[c]; }

  const GraphSpec& spec() const { return spec_; }

 private:
  GraphSpec spec_;
  std::vector<double> chart_lengths_;
  std::vector<std::vector<double>> breaks_;
  // wire: cumulative edge start arcs + origins/directions
  std::vector<double> edge_start_arc_;
  std::vector<Vec2> edge_origin_;
  std::vector<Vec2> edge_dir_;
  // lollipop circle
  Vec2 loop_center_;
  double loop_radius_ = 0.0;
  double loop_phase_ = 0.0;
};

}  // namespace qg
