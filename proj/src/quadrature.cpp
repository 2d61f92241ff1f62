#include "qg/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace qg {

namespace {

GaussRule compute_rule(int order) {
  GaussRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  const int m = (order + 1) / 2;
  for (int i = 1; i <= m; ++i) {
    double z = std::cos(std::numbers::pi * (i - 0.25) / (order + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 1; j <= order; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
      }
      pp = order * (z * p1 - p2) / (z * z - 1.0);
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) < 1e-15) break;
    }
    rule.nodes[i - 1] = -z;
    rule.nodes[order - i] = z;
    rule.weights[i - 1] = 2.0 / ((1.0 - z * z) * pp * pp);
    rule.weights[order - i] = rule.weights[i - 1];
  }
  return rule;
}

}  // namespace

const GaussRule& gauss_legendre(int order) {
  if (order < 1) throw std::invalid_argument("quadrature order must be >= 1");
  static std::map<int, GaussRule> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, compute_rule(order)).first;
  return it->second;
}

void composite_grid(double lo, double hi, int n_panels, int order, std::vector<double>& nodes,
                    std::vector<double>& weights) {
  const GaussRule& rule = gauss_legendre(order);
  const double dw = (hi - lo) / n_panels;
  for (int p = 0; p < n_panels; ++p) {
    const double mid = lo + (p + 0.5) * dw;
    const double half = 0.5 * dw;
    for (int j = 0; j < order; ++j) {
      nodes.push_back(mid + half * rule.nodes[j]);
      weights.push_back(half * rule.weights[j]);
    }
  }
}

double integrate(const std::function<double(double)>& f, double lo, double hi, int n_panels,
                 int order) {
  std::vector<double> nodes, weights;
  composite_grid(lo, hi, n_panels, order, nodes, weights);
  double sum = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * f(nodes[i]);
  return sum;
}

}  // namespace qg
