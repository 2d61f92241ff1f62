#pragma once

#include <functional>
#include <vector>

#include "qg/graph.hpp"

namespace qg {

// Characteristic (secular) functions for every supported topology, in the
// expanded (sum) form whose g = 0 limit is sin(kL) for wires. Arguments are
// the dimensionless x = kL (positive branch) or x = kappa L (negative
// branch). Expanded forms have no spurious zeros where an intermediate
// sin(k * edge) vanishes; the product/expanded equivalence is exercised in
// tests only.

/// One-delta wire: -(1/x)[g (cos x - cos(omega x)) - x sin x]
///               = (2g/x) sin(x a/L) sin(x b/L) + sin x.
double f_delta(double g, double omega, double x);

/// Hyperbolic branch: (1/x)[g (cosh x - cosh(omega x)) + x sinh x].
double f_delta_neg(double g, double omega, double x);

/// Threshold strength below which the one-delta wire binds a negative-energy
/// state: g_c = 2 / (omega^2 - 1). Requires |omega| < 1.
double critical_strength_wire(double omega);

/// Two-delta wire, edges (a = left, b = right, c = inner), x = kL with
/// L = a + b + c, L1 = a + c, L2 = b + c:
///   (4 g1 g2 / x^2) sin ka sin kb sin kc
/// + (2/x)(g1 sin ka sin kL2 + g2 sin kb sin kL1) + sin kL.
double f_2delta(double g1, double g2, double a, double b, double c, double x);
double f_2delta_neg(double g1, double g2, double a, double b, double c, double x);

/// Series coefficients of the hyperbolic two-delta secular function:
/// -i F(i kappa) = C1 (kL) + C3 (kL)^3/3! + C5 (kL)^5/5! + ...
struct SeriesCoeffs2Delta {
  double c1 = 0.0;
  double c3 = 0.0;
  double c5 = 0.0;
};
SeriesCoeffs2Delta coeffs_2delta_neg(double g1, double g2, double a, double b, double c);

/// Three-delta wire with edges a|g1|b|g2|c|g3|d, normalized by (kL)^3 so the
/// g = 0 limit is sin kL.
double f_3delta(double g1, double g2, double g3, double a, double b, double c, double d,
                double x);
double f_3delta_neg(double g1, double g2, double g3, double a, double b, double c, double d,
                    double x);

/// Dressed 3-star, central delta of strength g:
/// F_star + (2g/x) sin ka sin kb sin kc, with
/// F_star = (1/4)[cos kL1 + cos kL2 + cos kL3 - 3 cos kL].
double f_star(double g, double a, double b, double c, double x);

/// Bare star part alone.
double f_star_bare(double a, double b, double c, double x);

/// Negative-energy star secular function:
/// (1/4)[cosh kL1 + cosh kL2 + cosh kL3 - 3 cosh kL] - (2g/x) prod sinh.
double f_star_neg(double g, double a, double b, double c, double x);

/// Threshold for the dressed star: g_c = -(a+b+c)(ab+ac+bc) / (2abc).
double critical_strength_star(double a, double b, double c);

/// Dressed lollipop, prong a and loop length Lloop, x = k (a + Lloop):
/// (1/2)[3 cos k(a + Lloop/2) - cos k(a - Lloop/2)]
/// + (2g/x) sin ka cos(k Lloop / 2).
double f_pop(double g, double a, double lloop, double x);
double f_pop_neg(double g, double a, double lloop, double x);

/// Topology-erased secular function bound to a graph. Evaluation is pure;
/// values are freely shareable.
class SecularFn {
 public:
  explicit SecularFn(const GraphSpec& spec);

  /// Positive-energy branch at x = kL.
  double positive(double x) const;
  /// Negative-energy branch at x = kappa L.
  double negative(double x) const;

  Topology topology() const { return topology_; }
  double total_length() const { return total_length_; }
  /// Number of negative-strength deltas (upper bound on bound states).
  int max_bound_states() const;
  /// Scan ceiling for the hyperbolic branch: sum |g_i| + 10.
  double negative_scan_limit() const;

 private:
  Topology topology_;
  double total_length_ = 1.0;
  std::vector<double> seg_;  // wire segment lengths between breakpoints
  std::vector<double> g_;
  double star_a_ = 0, star_b_ = 0, star_c_ = 0;
  double prong_ = 0, loop_ = 0;
};

}  // namespace qg
