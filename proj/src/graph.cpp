#include "qg/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "json.hpp"

namespace qg {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPlacementMargin = 1e-9;

double wrap_angle(double a) {
  double w = std::remainder(a, 2.0 * kPi);  // (-pi, pi]
  if (w >= kPi) w -= 2.0 * kPi;
  return w;
}

double edge_sum(const std::vector<EdgeSpec>& edges) {
  double s = 0.0;
  for (const auto& e : edges) s += e.length;
  return s;
}

}  // namespace

std::string to_string(Topology t) {
  switch (t) {
    case Topology::Wire1Delta: return "Wire1Delta";
    case Topology::Wire2Delta: return "Wire2Delta";
    case Topology::Wire3Delta: return "Wire3Delta";
    case Topology::StarDelta: return "StarDelta";
    case Topology::LollipopDelta: return "LollipopDelta";
  }
  return "unknown";
}

Topology topology_from_string(const std::string& name) {
  if (name == "Wire1Delta") return Topology::Wire1Delta;
  if (name == "Wire2Delta") return Topology::Wire2Delta;
  if (name == "Wire3Delta") return Topology::Wire3Delta;
  if (name == "StarDelta") return Topology::StarDelta;
  if (name == "LollipopDelta") return Topology::LollipopDelta;
  throw ValidationError("unknown topology: " + name);
}

int wire_delta_count(Topology t) {
  switch (t) {
    case Topology::Wire1Delta: return 1;
    case Topology::Wire2Delta: return 2;
    case Topology::Wire3Delta: return 3;
    default: return 0;
  }
}

void validate(const GraphSpec& spec) {
  if (spec.edges.empty()) throw ValidationError("graph has no edges");
  for (const auto& e : spec.edges) {
    if (!(e.length > 0.0) || !std::isfinite(e.length))
      throw ValidationError("edge length must be positive and finite");
    if (!std::isfinite(e.angle)) throw ValidationError("edge angle must be finite");
  }
  for (const auto& d : spec.deltas) {
    if (!std::isfinite(d.strength)) throw ValidationError("delta strength must be finite");
  }
  const double L = edge_sum(spec.edges);
  if (std::abs(spec.total_length - L) > 1e-9 * std::max(1.0, L))
    throw ValidationError("total_length does not match the edge sum");

  switch (spec.topology) {
    case Topology::Wire1Delta:
    case Topology::Wire2Delta:
    case Topology::Wire3Delta: {
      const int want = wire_delta_count(spec.topology);
      if (static_cast<int>(spec.deltas.size()) != want)
        throw ValidationError("wire delta count does not match topology");
      double prev = 0.0;
      for (const auto& d : spec.deltas) {
        if (d.at_center) throw ValidationError("wire deltas carry arc positions, not 'center'");
        if (d.position < kPlacementMargin || d.position > L - kPlacementMargin)
          throw ValidationError("delta position must be strictly interior");
        if (d.position - prev < kPlacementMargin)
          throw ValidationError("delta positions must be strictly increasing and distinct");
        prev = d.position;
      }
      break;
    }
    case Topology::StarDelta: {
      if (spec.edges.size() != 3) throw ValidationError("star must have exactly 3 edges");
      if (spec.deltas.size() != 1 || !spec.deltas[0].at_center)
        throw ValidationError("star carries exactly one central delta");
      break;
    }
    case Topology::LollipopDelta: {
      if (spec.edges.size() != 2)
        throw ValidationError("lollipop stores one prong edge plus the loop length");
      if (spec.deltas.size() != 1 || !spec.deltas[0].at_center)
        throw ValidationError("lollipop carries exactly one central delta");
      break;
    }
  }
}

GraphSpec make_straight_wire(const std::vector<double>& delta_positions,
                             const std::vector<double>& delta_strengths, double length) {
  if (delta_positions.size() != delta_strengths.size())
    throw ValidationError("positions/strengths size mismatch");
  GraphSpec spec;
  switch (delta_positions.size()) {
    case 1: spec.topology = Topology::Wire1Delta; break;
    case 2: spec.topology = Topology::Wire2Delta; break;
    case 3: spec.topology = Topology::Wire3Delta; break;
    default: throw ValidationError("wires support 1..3 deltas");
  }
  spec.edges = {{length, 0.0}};
  for (std::size_t i = 0; i < delta_positions.size(); ++i)
    spec.deltas.push_back({delta_strengths[i], delta_positions[i], false});
  spec.total_length = length;
  validate(spec);
  return spec;
}

GraphSpec make_wire(const std::vector<double>& segment_angles, const std::vector<double>& lengths,
                    const std::vector<double>& delta_positions,
                    const std::vector<double>& delta_strengths) {
  if (!segment_angles.empty() && segment_angles.size() != lengths.size())
    throw ValidationError("angles/lengths size mismatch");
  GraphSpec spec;
  switch (delta_positions.size()) {
    case 1: spec.topology = Topology::Wire1Delta; break;
    case 2: spec.topology = Topology::Wire2Delta; break;
    case 3: spec.topology = Topology::Wire3Delta; break;
    default: throw ValidationError("wires support 1..3 deltas");
  }
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    const double ang = segment_angles.empty() ? 0.0 : wrap_angle(segment_angles[i]);
    spec.edges.push_back({lengths[i], ang});
  }
  for (std::size_t i = 0; i < delta_positions.size(); ++i)
    spec.deltas.push_back({delta_strengths[i], delta_positions[i], false});
  spec.total_length = edge_sum(spec.edges);
  validate(spec);
  return spec;
}

GraphSpec make_wire1_omega(double omega, double g) {
  const double a = 0.5 * (1.0 + omega);
  return make_straight_wire({a}, {g}, 1.0);
}

GraphSpec make_star(const std::array<double, 3>& lengths, const std::array<double, 3>& angles,
                    double g) {
  GraphSpec spec;
  spec.topology = Topology::StarDelta;
  for (int i = 0; i < 3; ++i) spec.edges.push_back({lengths[i], wrap_angle(angles[i])});
  spec.deltas.push_back({g, 0.0, true});
  spec.total_length = edge_sum(spec.edges);
  validate(spec);
  return spec;
}

GraphSpec make_lollipop(double prong_length, double prong_angle, double loop_length,
                        double loop_center_angle, double g) {
  GraphSpec spec;
  spec.topology = Topology::LollipopDelta;
  spec.edges.push_back({prong_length, wrap_angle(prong_angle)});
  spec.edges.push_back({loop_length, wrap_angle(loop_center_angle)});
  spec.deltas.push_back({g, 0.0, true});
  spec.total_length = edge_sum(spec.edges);
  validate(spec);
  return spec;
}

GraphSpec normalize_scale(const GraphSpec& spec) {
  validate(spec);
  GraphSpec out = spec;
  const double L = spec.total_length;
  for (auto& e : out.edges) e.length /= L;
  for (auto& d : out.deltas)
    if (!d.at_center) d.position /= L;
  out.total_length = 1.0;
  return out;
}

double asymmetry(const GraphSpec& spec, int delta_index) {
  if (wire_delta_count(spec.topology) == 0)
    throw UnsupportedTopologyError("asymmetry is defined for wire topologies only");
  if (delta_index < 0 || delta_index >= static_cast<int>(spec.deltas.size()))
    throw DomainError("delta index out of range");
  const double left_neighbor =
      delta_index == 0 ? 0.0 : spec.deltas[delta_index - 1].position;
  const double right_neighbor = delta_index + 1 < static_cast<int>(spec.deltas.size())
                                    ? spec.deltas[delta_index + 1].position
                                    : spec.total_length;
  const double a = spec.deltas[delta_index].position - left_neighbor;
  const double lsub = right_neighbor - left_neighbor;
  return 2.0 * a / lsub - 1.0;
}

GraphSpec with_frame_rotated(const GraphSpec& spec, double theta) {
  GraphSpec out = spec;
  for (auto& e : out.edges) e.angle = wrap_angle(e.angle - theta);
  return out;
}

std::string to_json(const GraphSpec& spec) {
  nlohmann::json j;
  j["topology"] = to_string(spec.topology);
  j["edges"] = nlohmann::json::array();
  for (const auto& e : spec.edges) j["edges"].push_back({{"length", e.length}, {"angle", e.angle}});
  j["deltas"] = nlohmann::json::array();
  for (const auto& d : spec.deltas) {
    nlohmann::json dj;
    dj["g"] = d.strength;
    if (d.at_center)
      dj["position"] = "center";
    else
      dj["position"] = d.position;
    j["deltas"].push_back(dj);
  }
  return j.dump(2);
}

GraphSpec spec_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw DomainError(std::string("JSON parse failure: ") + ex.what());
  }
  GraphSpec spec;
  try {
    spec.topology = topology_from_string(j.at("topology").get<std::string>());
    for (const auto& ej : j.at("edges")) {
      spec.edges.push_back(
          {ej.at("length").get<double>(), wrap_angle(ej.value("angle", 0.0))});
    }
    for (const auto& dj : j.at("deltas")) {
      DeltaSpec d;
      d.strength = dj.at("g").get<double>();
      const auto& pos = dj.at("position");
      if (pos.is_string()) {
        if (pos.get<std::string>() != "center")
          throw ValidationError("delta position must be a number or \"center\"");
        d.at_center = true;
      } else {
        d.position = pos.get<double>();
      }
      spec.deltas.push_back(d);
    }
  } catch (const nlohmann::json::exception& ex) {
    throw DomainError(std::string("JSON schema failure: ") + ex.what());
  }
  spec.total_length = edge_sum(spec.edges);
  validate(spec);
  return spec;
}

Geometry::Geometry(const GraphSpec& spec) : spec_(spec) {
  validate(spec);
  switch (spec.topology) {
    case Topology::Wire1Delta:
    case Topology::Wire2Delta:
    case Topology::Wire3Delta: {
      chart_lengths_ = {spec.total_length};
      breaks_.resize(1);
      double arc = 0.0;
      Vec2 p{0.0, 0.0};
      for (const auto& e : spec.edges) {
        edge_start_arc_.push_back(arc);
        edge_origin_.push_back(p);
        edge_dir_.push_back({std::cos(e.angle), std::sin(e.angle)});
        if (arc > 0.0) breaks_[0].push_back(arc);
        arc += e.length;
        p.x += e.length * std::cos(e.angle);
        p.y += e.length * std::sin(e.angle);
      }
      break;
    }
    case Topology::StarDelta: {
      breaks_.resize(3);
      for (const auto& e : spec.edges) {
        chart_lengths_.push_back(e.length);
        edge_start_arc_.push_back(0.0);
        edge_origin_.push_back({0.0, 0.0});
        edge_dir_.push_back({std::cos(e.angle), std::sin(e.angle)});
      }
      break;
    }
    case Topology::LollipopDelta: {
      const auto& prong = spec.edges[0];
      const auto& loop = spec.edges[1];
      chart_lengths_ = {prong.length, loop.length};
      breaks_.resize(2);
      edge_origin_.push_back({0.0, 0.0});
      edge_dir_.push_back({std::cos(prong.angle), std::sin(prong.angle)});
      edge_start_arc_.push_back(0.0);
      const Vec2 vertex{prong.length * edge_dir_[0].x, prong.length * edge_dir_[0].y};
      loop_radius_ = loop.length / (2.0 * kPi);
      loop_center_ = {vertex.x + loop_radius_ * std::cos(loop.angle),
                      vertex.y + loop_radius_ * std::sin(loop.angle)};
      loop_phase_ = loop.angle + kPi;  // vertex sits opposite the center direction
      break;
    }
  }
}

Vec2 Geometry::point(int c, double s) const {
  switch (spec_.topology) {
    case Topology::Wire1Delta:
    case Topology::Wire2Delta:
    case Topology::Wire3Delta: {
      auto it = std::upper_bound(edge_start_arc_.begin(), edge_start_arc_.end(), s);
      int idx = static_cast<int>(it - edge_start_arc_.begin()) - 1;
      idx = std::clamp(idx, 0, static_cast<int>(edge_start_arc_.size()) - 1);
      const double local = s - edge_start_arc_[idx];
      return {edge_origin_[idx].x + local * edge_dir_[idx].x,
              edge_origin_[idx].y + local * edge_dir_[idx].y};
    }
    case Topology::StarDelta:
      return {s * edge_dir_[c].x, s * edge_dir_[c].y};
    case Topology::LollipopDelta: {
      if (c == 0) return {s * edge_dir_[0].x, s * edge_dir_[0].y};
      const double phi = loop_phase_ + s / loop_radius_;
      return {loop_center_.x + loop_radius_ * std::cos(phi),
              loop_center_.y + loop_radius_ * std::sin(phi)};
    }
  }
  return {};
}

}  // namespace qg
