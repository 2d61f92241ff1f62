#include "qg/secular.hpp"

#include <cmath>

namespace qg {

namespace {

void require_positive(double x) {
  if (!(x > 0.0)) throw DomainError("secular argument must be positive");
}

void require_geometry(std::initializer_list<double> lens) {
  for (double l : lens)
    if (!(l > 0.0)) throw DomainError("degenerate geometry: nonpositive edge length");
}

}  // namespace

double f_delta(double g, double omega, double x) {
  require_positive(x);
  // product form of -(1/x)[g(cos x - cos(omega x)) - x sin x]; no cancellation
  const double a = 0.5 * (1.0 + omega);
  const double b = 0.5 * (1.0 - omega);
  return (2.0 * g / x) * std::sin(x * a) * std::sin(x * b) + std::sin(x);
}

double f_delta_neg(double g, double omega, double x) {
  require_positive(x);
  const double a = 0.5 * (1.0 + omega);
  const double b = 0.5 * (1.0 - omega);
  return (2.0 * g / x) * std::sinh(x * a) * std::sinh(x * b) + std::sinh(x);
}

double critical_strength_wire(double omega) {
  if (!(std::abs(omega) < 1.0)) throw DomainError("asymmetry must satisfy |omega| < 1");
  return 2.0 / (omega * omega - 1.0);
}

double f_2delta(double g1, double g2, double a, double b, double c, double x) {
  require_positive(x);
  require_geometry({a, b, c});
  const double L = a + b + c;
  const double k = x / L;
  const double sa = std::sin(k * a), sb = std::sin(k * b), sc = std::sin(k * c);
  const double sl1 = std::sin(k * (a + c)), sl2 = std::sin(k * (b + c));
  return (4.0 * g1 * g2 / (x * x)) * sa * sb * sc +
         (2.0 / x) * (g1 * sa * sl2 + g2 * sb * sl1) + std::sin(x);
}

double f_2delta_neg(double g1, double g2, double a, double b, double c, double x) {
  require_positive(x);
  require_geometry({a, b, c});
  const double L = a + b + c;
  const double k = x / L;
  const double sa = std::sinh(k * a), sb = std::sinh(k * b), sc = std::sinh(k * c);
  const double sl1 = std::sinh(k * (a + c)), sl2 = std::sinh(k * (b + c));
  return (4.0 * g1 * g2 / (x * x)) * sa * sb * sc +
         (2.0 / x) * (g1 * sa * sl2 + g2 * sb * sl1) + std::sinh(x);
}

SeriesCoeffs2Delta coeffs_2delta_neg(double g1, double g2, double a, double b, double c) {
  require_geometry({a, b, c});
  const double L = a + b + c;
  const double l1 = a + c, l2 = b + c;
  const double L2 = L * L, L3 = L2 * L;
  SeriesCoeffs2Delta out;
  out.c1 = 4.0 * g1 * g2 * a * b * c / L3 + 2.0 * g1 * a * l2 / L2 + 2.0 * g2 * b * l1 / L2 + 1.0;
  const double q = 10.0 / 3.0;  // 5!/(3!3!)
  out.c3 = 4.0 * g1 * g2 * a * b * c * (a * a + b * b + c * c) / (L3 * L2) +
           2.0 * g1 * (a * l2 * l2 * l2 + a * a * a * l2) / (L2 * L2) +
           2.0 * g2 * (b * l1 * l1 * l1 + b * b * b * l1) / (L2 * L2) + 1.0;
  auto p4 = [](double v) { return v * v * v * v; };
  auto p5 = [](double v) { return v * v * v * v * v; };
  auto p3 = [](double v) { return v * v * v; };
  out.c5 = 4.0 * g1 * g2 * a * b * c *
               (p4(a) + p4(b) + p4(c) + q * (a * a * b * b + a * a * c * c + b * b * c * c)) /
               (L3 * L2 * L2) +
           2.0 * g1 * (a * p5(l2) + p5(a) * l2 + q * p3(a) * p3(l2)) / (L3 * L3) +
           2.0 * g2 * (b * p5(l1) + p5(b) * l1 + q * p3(b) * p3(l1)) / (L3 * L3) + 1.0;
  return out;
}

namespace {

// Shared body of the three-delta secular function; sn = sin or sinh.
template <typename Fn>
double three_delta_sum(double g1, double g2, double g3, double a, double b, double c, double d,
                       double x, Fn sn) {
  const double L = a + b + c + d;
  const double k = x / L;
  const double sa = sn(k * a), sb = sn(k * b), sc = sn(k * c), sd = sn(k * d);
  const double sab = sn(k * (a + b)), scd = sn(k * (c + d)), sbc = sn(k * (b + c));
  const double sbcd = sn(k * (b + c + d)), sabc = sn(k * (a + b + c));
  return (8.0 * g1 * g2 * g3 / (x * x * x)) * sa * sb * sc * sd +
         (4.0 / (x * x)) * (g1 * g2 * sa * sb * scd + g2 * g3 * sc * sd * sab +
                            g1 * g3 * sa * sd * sbc) +
         (2.0 / x) * (g1 * sa * sbcd + g3 * sd * sabc + g2 * sab * scd) + sn(x);
}

}  // namespace

double f_3delta(double g1, double g2, double g3, double a, double b, double c, double d,
                double x) {
  require_positive(x);
  require_geometry({a, b, c, d});
  return three_delta_sum(g1, g2, g3, a, b, c, d, x, [](double v) { return std::sin(v); });
}

double f_3delta_neg(double g1, double g2, double g3, double a, double b, double c, double d,
                    double x) {
  require_positive(x);
  require_geometry({a, b, c, d});
  return three_delta_sum(g1, g2, g3, a, b, c, d, x, [](double v) { return std::sinh(v); });
}

double f_star_bare(double a, double b, double c, double x) {
  require_positive(x);
  require_geometry({a, b, c});
  const double k = x / (a + b + c);
  // cyclic cos*sin*sin form: identical to
  // (1/4)[cos kL1 + cos kL2 + cos kL3 - 3 cos kL] and stable at small x
  return std::cos(k * a) * std::sin(k * b) * std::sin(k * c) +
         std::sin(k * a) * std::cos(k * b) * std::sin(k * c) +
         std::sin(k * a) * std::sin(k * b) * std::cos(k * c);
}

double f_star(double g, double a, double b, double c, double x) {
  const double k = x / (a + b + c);
  return f_star_bare(a, b, c, x) +
         (2.0 * g / x) * std::sin(k * a) * std::sin(k * b) * std::sin(k * c);
}

double f_star_neg(double g, double a, double b, double c, double x) {
  require_positive(x);
  require_geometry({a, b, c});
  const double k = x / (a + b + c);
  // -(cyclic cosh*sinh*sinh) = (1/4)[sum cosh kLi - 3 cosh kL]
  const double sym = -(std::cosh(k * a) * std::sinh(k * b) * std::sinh(k * c) +
                       std::sinh(k * a) * std::cosh(k * b) * std::sinh(k * c) +
                       std::sinh(k * a) * std::sinh(k * b) * std::cosh(k * c));
  return sym - (2.0 * g / x) * std::sinh(k * a) * std::sinh(k * b) * std::sinh(k * c);
}

double critical_strength_star(double a, double b, double c) {
  require_geometry({a, b, c});
  return -(a + b + c) * (a * b + a * c + b * c) / (2.0 * a * b * c);
}

double f_pop(double g, double a, double lloop, double x) {
  require_positive(x);
  require_geometry({a, lloop});
  const double k = x / (a + lloop);
  return 0.5 * (3.0 * std::cos(k * (a + 0.5 * lloop)) - std::cos(k * (a - 0.5 * lloop))) +
         (2.0 * g / x) * std::sin(k * a) * std::cos(0.5 * k * lloop);
}

double f_pop_neg(double g, double a, double lloop, double x) {
  require_positive(x);
  require_geometry({a, lloop});
  const double k = x / (a + lloop);
  return 0.5 * (3.0 * std::cosh(k * (a + 0.5 * lloop)) - std::cosh(k * (a - 0.5 * lloop))) +
         (2.0 * g / x) * std::sinh(k * a) * std::cosh(0.5 * k * lloop);
}

SecularFn::SecularFn(const GraphSpec& spec) : topology_(spec.topology) {
  validate(spec);
  total_length_ = spec.total_length;
  switch (spec.topology) {
    case Topology::Wire1Delta:
    case Topology::Wire2Delta:
    case Topology::Wire3Delta: {
      double prev = 0.0;
      for (const auto& d : spec.deltas) {
        seg_.push_back(d.position - prev);
        g_.push_back(d.strength);
        prev = d.position;
      }
      seg_.push_back(total_length_ - prev);
      break;
    }
    case Topology::StarDelta:
      star_a_ = spec.edges[0].length;
      star_b_ = spec.edges[1].length;
      star_c_ = spec.edges[2].length;
      g_.push_back(spec.deltas[0].strength);
      break;
    case Topology::LollipopDelta:
      prong_ = spec.edges[0].length;
      loop_ = spec.edges[1].length;
      g_.push_back(spec.deltas[0].strength);
      break;
  }
}

double SecularFn::positive(double x) const {
  switch (topology_) {
    case Topology::Wire1Delta: {
      const double omega = (seg_[0] - seg_[1]) / total_length_;
      return f_delta(g_[0], omega, x);
    }
    case Topology::Wire2Delta:
      return f_2delta(g_[0], g_[1], seg_[0], seg_[2], seg_[1], x);
    case Topology::Wire3Delta:
      return f_3delta(g_[0], g_[1], g_[2], seg_[0], seg_[1], seg_[2], seg_[3], x);
    case Topology::StarDelta:
      return f_star(g_[0], star_a_, star_b_, star_c_, x);
    case Topology::LollipopDelta:
      return f_pop(g_[0], prong_, loop_, x);
  }
  return 0.0;
}

double SecularFn::negative(double x) const {
  switch (topology_) {
    case Topology::Wire1Delta: {
      const double omega = (seg_[0] - seg_[1]) / total_length_;
      return f_delta_neg(g_[0], omega, x);
    }
    case Topology::Wire2Delta:
      return f_2delta_neg(g_[0], g_[1], seg_[0], seg_[2], seg_[1], x);
    case Topology::Wire3Delta:
      return f_3delta_neg(g_[0], g_[1], g_[2], seg_[0], seg_[1], seg_[2], seg_[3], x);
    case Topology::StarDelta:
      return f_star_neg(g_[0], star_a_, star_b_, star_c_, x);
    case Topology::LollipopDelta:
      return f_pop_neg(g_[0], prong_, loop_, x);
  }
  return 0.0;
}

int SecularFn::max_bound_states() const {
  int n = 0;
  for (double g : g_)
    if (g < 0.0) ++n;
  return n;
}

double SecularFn::negative_scan_limit() const {
  double s = 0.0;
  for (double g : g_) s += std::abs(g);
  return s + 10.0;
}

}  // namespace qg
