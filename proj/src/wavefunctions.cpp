#include "qg/wavefunctions.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "qg/quadrature.hpp"

namespace qg {

// Piece bases: trigonometric pieces hold alpha sin(w u) + beta cos(w u).
// Bound-state pieces hold the exponential split p e^{w u} + m e^{-w u}
// (stored in the alpha/beta slots), which evaluates the decaying tails of
// deep wells without the sinh/cosh cancellation.

namespace {

constexpr double kCanonicalTol = 1e-6;
constexpr double kResidualTol = 1e-7;

double eval_piece(const WavePiece& p, bool hyper, double w, double s) {
  const double u = s - p.lo;
  if (hyper) return p.alpha * std::exp(w * u) + p.beta * std::exp(-w * u);
  return p.alpha * std::sin(w * u) + p.beta * std::cos(w * u);
}

double eval_piece_deriv(const WavePiece& p, bool hyper, double w, double s) {
  const double u = s - p.lo;
  if (hyper) return w * (p.alpha * std::exp(w * u) - p.beta * std::exp(-w * u));
  return w * (p.alpha * std::cos(w * u) - p.beta * std::sin(w * u));
}

// Endpoint-interpolating piece: psi(lo) = z_lo, psi(hi) = z_hi.
WavePiece interpolating_piece(double lo, double hi, double z_lo, double z_hi, bool hyper,
                              double w) {
  WavePiece p;
  p.lo = lo;
  p.hi = hi;
  const double ell = hi - lo;
  if (hyper) {
    const double ewl = std::exp(w * ell), ewml = std::exp(-w * ell);
    const double denom = ewl - ewml;
    p.alpha = (z_hi - z_lo * ewml) / denom;  // e^{+wu} coefficient
    p.beta = (z_lo * ewl - z_hi) / denom;    // e^{-wu} coefficient
  } else {
    const double sl = std::sin(w * ell);
    p.alpha = (z_hi - z_lo * std::cos(w * ell)) / sl;
    p.beta = z_lo;
  }
  return p;
}

struct NodeGeometry {
  std::vector<double> breakpoints;  // wire: 0, deltas..., L
  std::vector<double> strengths;
};

NodeGeometry wire_nodes(const GraphSpec& spec) {
  NodeGeometry ng;
  ng.breakpoints.push_back(0.0);
  for (const auto& d : spec.deltas) {
    ng.breakpoints.push_back(d.position);
    ng.strengths.push_back(d.strength);
  }
  ng.breakpoints.push_back(spec.total_length);
  return ng;
}

// Smallest-singular-direction null vector with residual and degeneracy
// checks. Rows are normalized to unit max amplitude first.
Eigen::VectorXd nullspace_vector(Eigen::MatrixXd m) {
  for (int r = 0; r < m.rows(); ++r) {
    const double s = m.row(r).cwiseAbs().maxCoeff();
    if (s > 0.0) m.row(r) /= s;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  const auto& sig = svd.singularValues();
  const int n = static_cast<int>(sig.size());
  if (sig(n - 1) > kResidualTol)
    throw InconsistentStateError("boundary-system residual " + std::to_string(sig(n - 1)));
  if (n >= 2 && sig(n - 2) < kResidualTol)
    throw DegeneracyError("boundary-system nullspace dimension > 1");
  return svd.matrixV().col(n - 1);
}

// Node values at the deltas from the motif flux relations (d x d system).
Eigen::VectorXd wire_node_values(const NodeGeometry& ng, double w, double L, bool hyper) {
  const int d = static_cast<int>(ng.strengths.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
  auto sn = [hyper](double v) { return hyper ? std::sinh(v) : std::sin(v); };
  auto ct = [hyper](double v) {
    return hyper ? std::cosh(v) / std::sinh(v) : std::cos(v) / std::sin(v);
  };
  for (int i = 0; i < d; ++i) {
    const double lm = ng.breakpoints[i + 1] - ng.breakpoints[i];
    const double lp = ng.breakpoints[i + 2] - ng.breakpoints[i + 1];
    m(i, i) = -w * (ct(w * lp) + ct(w * lm)) - 2.0 * ng.strengths[i] / L;
    if (i > 0) m(i, i - 1) = w / sn(w * lm);
    if (i + 1 < d) m(i, i + 1) = w / sn(w * lp);
  }
  if (d == 1) return Eigen::VectorXd::Ones(1);
  return nullspace_vector(m);
}

bool wire_canonical_ok(const NodeGeometry& ng, double w, bool hyper) {
  if (hyper) return true;  // sinh has no interior zeros
  for (std::size_t r = 0; r + 1 < ng.breakpoints.size(); ++r) {
    const double ell = ng.breakpoints[r + 1] - ng.breakpoints[r];
    if (std::abs(std::sin(w * ell)) < kCanonicalTol) return false;
  }
  return true;
}

// Full 2E x 2E homogeneous boundary system for a wire; unknowns are the
// per-region basis coefficients.
std::vector<WavePiece> wire_full_system(const NodeGeometry& ng, double w, double L, bool hyper) {
  const int d = static_cast<int>(ng.strengths.size());
  const int nr = d + 1;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(2 * nr, 2 * nr);
  auto val = [&](double u, double* ca, double* cb) {
    if (hyper) {
      *ca = std::exp(w * u);
      *cb = std::exp(-w * u);
    } else {
      *ca = std::sin(w * u);
      *cb = std::cos(w * u);
    }
  };
  auto dval = [&](double u, double* ca, double* cb) {
    if (hyper) {
      *ca = w * std::exp(w * u);
      *cb = -w * std::exp(-w * u);
    } else {
      *ca = w * std::cos(w * u);
      *cb = -w * std::sin(w * u);
    }
  };
  int row = 0;
  double ca, cb;
  // terminated ends
  val(0.0, &ca, &cb);
  m(row, 0) = ca;
  m(row, 1) = cb;
  ++row;
  const double ell_last = ng.breakpoints[nr] - ng.breakpoints[nr - 1];
  val(ell_last, &ca, &cb);
  m(row, 2 * (nr - 1)) = ca;
  m(row, 2 * (nr - 1) + 1) = cb;
  ++row;
  // continuity + flux at each delta
  for (int i = 0; i < d; ++i) {
    const double ell = ng.breakpoints[i + 1] - ng.breakpoints[i];
    val(ell, &ca, &cb);
    m(row, 2 * i) = ca;
    m(row, 2 * i + 1) = cb;
    double ca0, cb0;
    val(0.0, &ca0, &cb0);
    m(row, 2 * (i + 1)) = -ca0;
    m(row, 2 * (i + 1) + 1) = -cb0;
    ++row;
    // psi'_right(0) - psi'_left(ell) - (2 g / L) psi = 0
    dval(0.0, &ca0, &cb0);
    m(row, 2 * (i + 1)) = ca0;
    m(row, 2 * (i + 1) + 1) = cb0;
    dval(ell, &ca, &cb);
    m(row, 2 * i) -= ca;
    m(row, 2 * i + 1) -= cb;
    double va, vb;
    val(0.0, &va, &vb);
    m(row, 2 * (i + 1)) -= 2.0 * ng.strengths[i] / L * va;
    m(row, 2 * (i + 1) + 1) -= 2.0 * ng.strengths[i] / L * vb;
    ++row;
  }
  const Eigen::VectorXd v = nullspace_vector(m);
  std::vector<WavePiece> pieces;
  for (int r = 0; r < nr; ++r) {
    WavePiece p;
    p.lo = ng.breakpoints[r];
    p.hi = ng.breakpoints[r + 1];
    p.alpha = v(2 * r);
    p.beta = v(2 * r + 1);
    pieces.push_back(p);
  }
  return pieces;
}

std::vector<std::vector<WavePiece>> assemble_wire(const GraphSpec& spec, double w, bool hyper) {
  const NodeGeometry ng = wire_nodes(spec);
  const double L = spec.total_length;
  if (!wire_canonical_ok(ng, w, hyper)) {
    return {wire_full_system(ng, w, L, hyper)};
  }
  const Eigen::VectorXd z = wire_node_values(ng, w, L, hyper);
  std::vector<WavePiece> pieces;
  const int nr = static_cast<int>(ng.breakpoints.size()) - 1;
  for (int r = 0; r < nr; ++r) {
    const double z_lo = r == 0 ? 0.0 : z(r - 1);
    const double z_hi = r == nr - 1 ? 0.0 : z(r);
    pieces.push_back(
        interpolating_piece(ng.breakpoints[r], ng.breakpoints[r + 1], z_lo, z_hi, hyper, w));
  }
  return {pieces};
}

std::vector<std::vector<WavePiece>> assemble_star(const GraphSpec& spec, double w, bool hyper) {
  const double L = spec.total_length;
  const double g = spec.deltas[0].strength;
  std::array<double, 3> a{spec.edges[0].length, spec.edges[1].length, spec.edges[2].length};
  bool canonical = true;
  if (!hyper) {
    for (double ai : a)
      if (std::abs(std::sin(w * ai)) < kCanonicalTol) canonical = false;
  }
  std::vector<std::vector<WavePiece>> charts(3);
  if (canonical) {
    for (int i = 0; i < 3; ++i)
      charts[i] = {interpolating_piece(0.0, a[i], 1.0, 0.0, hyper, w)};
    return charts;
  }
  // full 6 x 6 boundary system; chart-local u from the center
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(6, 6);
  auto val = [&](double u, double* ca, double* cb) {
    if (hyper) {
      *ca = std::exp(w * u);
      *cb = std::exp(-w * u);
    } else {
      *ca = std::sin(w * u);
      *cb = std::cos(w * u);
    }
  };
  int row = 0;
  double ca, cb, ca0, cb0;
  val(0.0, &ca0, &cb0);
  for (int i = 0; i < 3; ++i) {  // terminated ends
    val(a[i], &ca, &cb);
    m(row, 2 * i) = ca;
    m(row, 2 * i + 1) = cb;
    ++row;
  }
  for (int i = 0; i + 1 < 3; ++i) {  // continuity at the center
    m(row, 2 * i) = ca0;
    m(row, 2 * i + 1) = cb0;
    m(row, 2 * (i + 1)) = -ca0;
    m(row, 2 * (i + 1) + 1) = -cb0;
    ++row;
  }
  // flux: sum of outward derivatives at the center = (2g/L) psi(center)
  for (int i = 0; i < 3; ++i) {
    if (hyper) {
      m(row, 2 * i) += w;
      m(row, 2 * i + 1) += -w;
    } else {
      m(row, 2 * i) += w;
    }
  }
  m(row, 0) -= 2.0 * g / L * ca0;
  m(row, 1) -= 2.0 * g / L * cb0;
  const Eigen::VectorXd v = nullspace_vector(m);
  for (int i = 0; i < 3; ++i) {
    WavePiece p;
    p.lo = 0.0;
    p.hi = a[i];
    p.alpha = v(2 * i);
    p.beta = v(2 * i + 1);
    charts[i] = {p};
  }
  return charts;
}

std::vector<std::vector<WavePiece>> assemble_lollipop(const GraphSpec& spec, double w,
                                                      bool hyper) {
  const double L = spec.total_length;
  const double g = spec.deltas[0].strength;
  const double a = spec.edges[0].length;
  const double lam = spec.edges[1].length;
  std::vector<std::vector<WavePiece>> charts(2);
  const bool canonical =
      hyper || (std::abs(std::sin(w * a)) >= kCanonicalTol &&
                std::abs(std::cos(0.5 * w * lam)) >= kCanonicalTol);
  if (canonical) {
    // prong chart runs from the free end; vertex value 1 at u = a
    charts[0] = {interpolating_piece(0.0, a, 0.0, 1.0, hyper, w)};
    WavePiece loop;
    loop.lo = 0.0;
    loop.hi = lam;
    if (hyper) {
      // cosh(wu) - tanh(w lam / 2) sinh(wu) in the exponential basis
      const double t = std::tanh(0.5 * w * lam);
      loop.alpha = 0.5 * (1.0 - t);
      loop.beta = 0.5 * (1.0 + t);
    } else {
      loop.alpha = std::tan(0.5 * w * lam);
      loop.beta = 1.0;
    }
    charts[1] = {loop};
    return charts;
  }
  // full 4 x 4 system: prong (u from free end) then loop (u from vertex)
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(4, 4);
  auto val = [&](double u, double* ca, double* cb) {
    if (hyper) {
      *ca = std::exp(w * u);
      *cb = std::exp(-w * u);
    } else {
      *ca = std::sin(w * u);
      *cb = std::cos(w * u);
    }
  };
  auto dval = [&](double u, double* ca, double* cb) {
    if (hyper) {
      *ca = w * std::exp(w * u);
      *cb = -w * std::exp(-w * u);
    } else {
      *ca = w * std::cos(w * u);
      *cb = -w * std::sin(w * u);
    }
  };
  double ca, cb, c0a, c0b;
  val(0.0, &c0a, &c0b);
  // prong free end
  m(0, 0) = c0a;
  m(0, 1) = c0b;
  // continuity prong(a) = loop(0)
  val(a, &ca, &cb);
  m(1, 0) = ca;
  m(1, 1) = cb;
  m(1, 2) = -c0a;
  m(1, 3) = -c0b;
  // loop closure loop(lam) = loop(0)
  val(lam, &ca, &cb);
  m(2, 2) = ca - c0a;
  m(2, 3) = cb - c0b;
  // flux at the vertex: -prong'(a) + loop'(0) - loop'(lam) = (2g/L) psi
  dval(a, &ca, &cb);
  m(3, 0) -= ca;
  m(3, 1) -= cb;
  dval(0.0, &ca, &cb);
  m(3, 2) += ca;
  m(3, 3) += cb;
  dval(lam, &ca, &cb);
  m(3, 2) -= ca;
  m(3, 3) -= cb;
  m(3, 2) -= 2.0 * g / L * c0a;
  m(3, 3) -= 2.0 * g / L * c0b;
  const Eigen::VectorXd v = nullspace_vector(m);
  WavePiece prong{0.0, a, v(0), v(1)};
  WavePiece loop{0.0, lam, v(2), v(3)};
  charts[0] = {prong};
  charts[1] = {loop};
  return charts;
}

std::vector<std::vector<WavePiece>> assemble_loop_only(const GraphSpec& spec) {
  WavePiece prong{0.0, spec.edges[0].length, 0.0, 0.0};
  WavePiece loop{0.0, spec.edges[1].length, 1.0, 0.0};
  return {{prong}, {loop}};
}

double piece_norm_sq(const WavePiece& p, bool hyper, double w) {
  const double span = p.hi - p.lo;
  const int panels = std::max(2, static_cast<int>(std::ceil(span * w / std::numbers::pi)));
  return integrate([&](double s) {
    const double v = eval_piece(p, hyper, w, s);
    return v * v;
  }, p.lo, p.hi, panels, 16);
}

void verify_state(const Geometry& geo, const EigenState& st) {
  const GraphSpec& spec = geo.spec();
  const double w = st.wavenumber();
  const bool hyper = st.level.bound;
  auto value = [&](int chart, double s) { return evaluate_chart(st, chart, s); };
  auto deriv = [&](int chart, double s) { return derivative_chart(st, chart, s); };
  const double scale = std::max(1.0, w);

  auto check_zero = [&](double v, const char* what) {
    if (std::abs(v) > 1e-8 * scale)
      throw InconsistentStateError(std::string("state violates ") + what);
  };
  auto check_flux = [&](double resid, double magnitude) {
    if (std::abs(resid) > 1e-6 * std::max(1.0, magnitude))
      throw InconsistentStateError("state violates the flux condition");
  };

  switch (spec.topology) {
    case Topology::Wire1Delta:
    case Topology::Wire2Delta:
    case Topology::Wire3Delta: {
      check_zero(value(0, 0.0), "left end value");
      check_zero(value(0, spec.total_length), "right end value");
      for (const auto& d : spec.deltas) {
        const double eps = 1e-12 * spec.total_length;
        const double v = value(0, d.position);
        const double jump = deriv(0, d.position + eps) - deriv(0, d.position - eps);
        const double rhs = 2.0 * (d.strength / spec.total_length) * v;
        check_flux(jump - rhs, std::abs(rhs) + w * std::abs(v) + w);
      }
      break;
    }
    case Topology::StarDelta: {
      for (int i = 0; i < 3; ++i) check_zero(value(i, spec.edges[i].length), "end value");
      const double v0 = value(0, 0.0);
      check_zero(value(1, 0.0) - v0, "center continuity");
      check_zero(value(2, 0.0) - v0, "center continuity");
      double flux = 0.0;
      for (int i = 0; i < 3; ++i) flux += deriv(i, 0.0);
      const double rhs = 2.0 * spec.deltas[0].strength / spec.total_length * v0;
      check_flux(flux - rhs, std::abs(rhs) + w);
      break;
    }
    case Topology::LollipopDelta: {
      const double a = spec.edges[0].length, lam = spec.edges[1].length;
      check_zero(value(0, 0.0), "prong end value");
      const double v0 = value(1, 0.0);
      check_zero(value(0, a) - v0, "vertex continuity");
      check_zero(value(1, lam) - v0, "loop closure");
      const double flux = -deriv(0, a) + deriv(1, 0.0) - deriv(1, lam);
      const double rhs = 2.0 * spec.deltas[0].strength / spec.total_length * v0;
      check_flux(flux - rhs, std::abs(rhs) + w);
      break;
    }
  }
}

}  // namespace

EigenState assemble_state(const Geometry& geo, const Level& level) {
  const GraphSpec& spec = geo.spec();
  EigenState st;
  st.level = level;
  st.total_length = spec.total_length;
  const double w = level.x / spec.total_length;
  const bool hyper = level.bound;

  switch (spec.topology) {
    case Topology::Wire1Delta:
    case Topology::Wire2Delta:
    case Topology::Wire3Delta:
      st.pieces = assemble_wire(spec, w, hyper);
      break;
    case Topology::StarDelta:
      st.pieces = assemble_star(spec, w, hyper);
      break;
    case Topology::LollipopDelta:
      st.pieces = level.loop_only ? assemble_loop_only(spec) : assemble_lollipop(spec, w, hyper);
      break;
  }

  // normalize
  double nsq = 0.0;
  for (const auto& chart : st.pieces)
    for (const auto& p : chart) nsq += piece_norm_sq(p, hyper, w);
  if (!(nsq > 0.0) || !std::isfinite(nsq))
    throw InconsistentStateError("state has vanishing or non-finite norm");
  const double scale = 1.0 / std::sqrt(nsq);
  for (auto& chart : st.pieces)
    for (auto& p : chart) {
      p.alpha *= scale;
      p.beta *= scale;
    }
  st.norm_constant = scale;

  // fix the overall phase: first nonvanishing lobe positive
  double maxabs = 0.0;
  for (int c = 0; c < static_cast<int>(st.pieces.size()); ++c)
    for (const auto& p : st.pieces[c])
      for (int j = 0; j <= 16; ++j) {
        const double s = p.lo + (p.hi - p.lo) * j / 16.0;
        maxabs = std::max(maxabs, std::abs(eval_piece(p, hyper, w, s)));
      }
  bool flipped = false;
  for (int c = 0; c < static_cast<int>(st.pieces.size()) && !flipped; ++c)
    for (const auto& p : st.pieces[c]) {
      bool done = false;
      for (int j = 0; j <= 64; ++j) {
        const double s = p.lo + (p.hi - p.lo) * j / 64.0;
        const double v = eval_piece(p, hyper, w, s);
        if (std::abs(v) > 1e-3 * maxabs) {
          if (v < 0.0)
            for (auto& chart : st.pieces)
              for (auto& q : chart) {
                q.alpha = -q.alpha;
                q.beta = -q.beta;
              }
          done = true;
          break;
        }
      }
      if (done) {
        flipped = true;
        break;
      }
    }

  verify_state(geo, st);
  return st;
}

double evaluate_chart(const EigenState& state, int chart, double s) {
  const auto& pieces = state.pieces.at(chart);
  const double w = state.wavenumber();
  for (const auto& p : pieces) {
    if (s <= p.hi || &p == &pieces.back()) return eval_piece(p, state.level.bound, w, s);
  }
  return 0.0;
}

double derivative_chart(const EigenState& state, int chart, double s) {
  const auto& pieces = state.pieces.at(chart);
  const double w = state.wavenumber();
  for (const auto& p : pieces) {
    if (s <= p.hi || &p == &pieces.back())
      return eval_piece_deriv(p, state.level.bound, w, s);
  }
  return 0.0;
}

double evaluate(const Geometry& geo, const EigenState& state, int edge_index, double s) {
  const GraphSpec& spec = geo.spec();
  if (edge_index < 0 || edge_index >= static_cast<int>(spec.edges.size()))
    throw DomainError("edge index out of range");
  if (s < 0.0 || s > spec.edges[edge_index].length + 1e-12)
    throw DomainError("arc position outside the edge");
  switch (spec.topology) {
    case Topology::Wire1Delta:
    case Topology::Wire2Delta:
    case Topology::Wire3Delta: {
      double arc = s;
      for (int i = 0; i < edge_index; ++i) arc += spec.edges[i].length;
      return evaluate_chart(state, 0, arc);
    }
    case Topology::StarDelta:
      return evaluate_chart(state, edge_index, s);
    case Topology::LollipopDelta:
      return evaluate_chart(state, edge_index, s);
  }
  return 0.0;
}

}  // namespace qg
