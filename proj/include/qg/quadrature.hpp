#pragma once

#include <functional>
#include <vector>

namespace qg {

/// Gauss-Legendre nodes/weights on [-1, 1]. Computed by Newton iteration on
/// the Legendre polynomial and cached per order.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussRule& gauss_legendre(int order);

/// Composite Gauss-Legendre grid over [lo, hi] split into n_panels equal
/// panels of the given order. Appends scaled nodes/weights.
void composite_grid(double lo, double hi, int n_panels, int order, std::vector<double>& nodes,
                    std::vector<double>& weights);

/// Integrate f over [lo, hi] with n_panels composite panels.
double integrate(const std::function<double(double)>& f, double lo, double hi, int n_panels,
                 int order = 16);

}  // namespace qg
