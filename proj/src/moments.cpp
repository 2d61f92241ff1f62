#include "qg/moments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qg/quadrature.hpp"

namespace qg {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kSnapTol = 1e-14;

struct SharedGrid {
  std::vector<double> weights;
  std::vector<double> cx, cy;                  // lab coordinates per node
  std::vector<std::pair<int, double>> where;   // (chart, arc) per node
};

// Composite grid over all charts. Segments never straddle piece boundaries
// or wire bends; panel density follows the fastest retained wavenumber.
SharedGrid make_grid(const Geometry& geo, const std::vector<EigenState>& states, double w_max,
                     const QuadratureOptions& opts, int refine_level) {
  SharedGrid grid;
  const double density = opts.panels_per_wavelength * (1 << refine_level);
  for (int c = 0; c < geo.n_charts(); ++c) {
    std::vector<double> cuts{0.0, geo.chart_length(c)};
    for (double b : geo.direction_breaks(c)) cuts.push_back(b);
    for (const auto& st : states)
      for (const auto& p : st.pieces[c]) {
        cuts.push_back(p.lo);
        cuts.push_back(p.hi);
      }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end(),
                           [](double a, double b) { return std::abs(a - b) < 1e-12; }),
               cuts.end());
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      const double lo = cuts[i], hi = cuts[i + 1];
      if (hi - lo < 1e-12) continue;
      const int panels =
          std::max(1, static_cast<int>(std::ceil((hi - lo) * w_max / kTwoPi * density)));
      std::vector<double> nodes, weights;
      composite_grid(lo, hi, panels, opts.order, nodes, weights);
      for (std::size_t j = 0; j < nodes.size(); ++j) {
        const Vec2 pt = geo.point(c, nodes[j]);
        grid.weights.push_back(weights[j]);
        grid.cx.push_back(pt.x);
        grid.cy.push_back(pt.y);
        grid.where.emplace_back(c, nodes[j]);
      }
    }
  }
  return grid;
}

Eigen::MatrixXd eval_states(const std::vector<EigenState>& states, const SharedGrid& grid) {
  const int n = static_cast<int>(states.size());
  const int m = static_cast<int>(grid.weights.size());
  Eigen::MatrixXd psi(n, m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j)
      psi(i, j) = evaluate_chart(states[i], grid.where[j].first, grid.where[j].second);
  return psi;
}

double max_abs_wavenumber(const std::vector<EigenState>& states) {
  double w = 0.0;
  for (const auto& st : states) w = std::max(w, st.wavenumber());
  return std::max(w, 1.0);
}

struct MomentMatrices {
  Eigen::MatrixXd x, y, overlap;
};

MomentMatrices moments_on_grid(const std::vector<EigenState>& states, const SharedGrid& grid) {
  const Eigen::MatrixXd psi = eval_states(states, grid);
  const int m = static_cast<int>(grid.weights.size());
  Eigen::VectorXd w(m), wx(m), wy(m);
  bool any_y = false;
  for (int j = 0; j < m; ++j) {
    w(j) = grid.weights[j];
    wx(j) = grid.weights[j] * grid.cx[j];
    wy(j) = grid.weights[j] * grid.cy[j];
    if (grid.cy[j] != 0.0) any_y = true;
  }
  MomentMatrices out;
  out.x = psi * wx.asDiagonal() * psi.transpose();
  out.y = any_y ? Eigen::MatrixXd(psi * wy.asDiagonal() * psi.transpose())
                : Eigen::MatrixXd::Zero(psi.rows(), psi.rows());
  out.overlap = psi * w.asDiagonal() * psi.transpose();
  return out;
}

}  // namespace

double state_norm(const Geometry& geo, const EigenState& s, const QuadratureOptions& opts) {
  std::vector<EigenState> one{s};
  const SharedGrid grid = make_grid(geo, one, std::max(s.wavenumber(), 1.0), opts, 0);
  const MomentMatrices mm = moments_on_grid(one, grid);
  return mm.overlap(0, 0);
}

double transition_moment(const Geometry& geo, const EigenState& sn, const EigenState& sm,
                         char component, const QuadratureOptions& opts) {
  std::vector<EigenState> pair{sn, sm};
  const double w_max = max_abs_wavenumber(pair);
  double prev = 0.0;
  for (int level = 0; level <= opts.max_refinements; ++level) {
    const SharedGrid grid = make_grid(geo, pair, w_max, opts, level);
    const MomentMatrices mm = moments_on_grid(pair, grid);
    const double cur = component == 'y' ? mm.y(0, 1) : mm.x(0, 1);
    if (level > 0 && std::abs(cur - prev) <= opts.accept_abs) return cur;
    prev = cur;
  }
  throw QuadratureError("transition moment failed to converge");
}

TransitionTable build_table(const Geometry& geo, const std::vector<EigenState>& states,
                            const QuadratureOptions& opts) {
  const int n = static_cast<int>(states.size());
  if (n < 8) throw DomainError("build_table requires at least 8 states");
  const double w_max = max_abs_wavenumber(states);

  MomentMatrices mm, prev;
  bool accepted = false;
  for (int level = 0; level <= opts.max_refinements; ++level) {
    const SharedGrid grid = make_grid(geo, states, w_max, opts, level);
    mm = moments_on_grid(states, grid);
    if (level > 0) {
      const double dx = (mm.x - prev.x).cwiseAbs().maxCoeff();
      const double dy = (mm.y - prev.y).cwiseAbs().maxCoeff();
      if (std::max(dx, dy) <= opts.accept_abs) {
        accepted = true;
        break;
      }
    }
    prev = mm;
  }
  if (!accepted) throw QuadratureError("moment table failed to converge");

  TransitionTable t;
  t.n_states = n;
  t.energies.resize(n);
  for (int i = 0; i < n; ++i) t.energies(i) = states[i].level.energy;
  const double e10 = t.energies(1) - t.energies(0);
  if (!(e10 > 0.0)) throw DomainError("E10 must be positive");
  t.x = mm.x;
  t.y = mm.y;
  auto snap = [](Eigen::MatrixXd& m) {
    m = m.unaryExpr([](double v) { return std::abs(v) < kSnapTol ? 0.0 : v; });
  };
  snap(t.x);
  snap(t.y);
  t.x01_max = 1.0 / std::sqrt(2.0 * e10);
  t.xi_x = t.x / t.x01_max;
  t.xi_y = t.y / t.x01_max;
  t.e = (t.energies.array() - t.energies(0)) / e10;

  double cross = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) cross = std::max(cross, std::abs(mm.overlap(i, j)));
  t.max_cross_overlap = cross;
  return t;
}

double sum_rule_residual(const TransitionTable& table, int p, int M) {
  if (M < 1 || M > table.n_states) throw DomainError("sum-rule truncation out of range");
  if (p < 0 || p >= table.n_states) throw DomainError("sum-rule row out of range");
  double s = 0.0;
  for (int n = 0; n < M; ++n) {
    const double mag2 = table.xi_x(p, n) * table.xi_x(p, n) + table.xi_y(p, n) * table.xi_y(p, n);
    s += (table.e(n) - table.e(p)) * mag2;
  }
  return std::abs(1.0 - s);
}

}  // namespace qg
