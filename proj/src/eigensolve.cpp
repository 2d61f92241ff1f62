#include "qg/eigensolve.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace qg {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEvenRootTol = 1e-10;

// Golden-section minimization of |fn| on [lo, hi].
double min_abs_refine(const std::function<double(double)>& fn, double lo, double hi) {
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = lo, b = hi;
  double c = b - gr * (b - a);
  double d = a + gr * (b - a);
  double fc = std::abs(fn(c)), fd = std::abs(fn(d));
  for (int it = 0; it < 200 && (b - a) > 1e-14 * std::max(1.0, std::abs(b)); ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = std::abs(fn(c));
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = std::abs(fn(d));
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

std::vector<Bracket> root_scan(const std::function<double(double)>& fn, double x_lo, double x_hi,
                               int density) {
  if (!(x_lo < x_hi)) throw DomainError("root_scan requires x_lo < x_hi");
  const double step = std::min(kPi / (8.0 * density), (x_hi - x_lo) / 1e4);
  const long n = static_cast<long>(std::ceil((x_hi - x_lo) / step));
  std::vector<Bracket> out;
  double x_prev = x_lo;
  double f_prev = fn(x_prev);
  double x_pp = x_prev, f_pp = f_prev;
  bool have_pp = false;
  for (long i = 1; i <= n; ++i) {
    const double x = std::min(x_lo + i * step, x_hi);
    const double f = fn(x);
    if (f_prev == 0.0) {
      out.push_back({x_prev, x_prev});
    } else if (f_prev * f < 0.0) {
      out.push_back({x_prev, x});
    } else if (have_pp && std::abs(f_prev) < std::abs(f_pp) && std::abs(f_prev) < std::abs(f) &&
               f_pp * f > 0.0) {
      // no sign change: possible even-multiplicity root at a |fn| minimum
      const double xm = min_abs_refine(fn, x_pp, x);
      if (std::abs(fn(xm)) < kEvenRootTol &&
          (out.empty() || std::abs(out.back().hi - xm) > 10.0 * step)) {
        out.push_back({xm, xm});
      }
    }
    x_pp = x_prev;
    f_pp = f_prev;
    have_pp = true;
    x_prev = x;
    f_prev = f;
    if (x >= x_hi) break;
  }
  return out;
}

double bisect(const std::function<double(double)>& fn, double lo, double hi, double rel_tol) {
  if (lo == hi) return lo;
  double flo = fn(lo);
  if (flo == 0.0) return lo;
  double mid = lo;
  for (int it = 0; it < 200; ++it) {
    mid = 0.5 * (lo + hi);
    if (hi - lo <= rel_tol * std::max(std::abs(mid), 1e-3)) break;
    const double fm = fn(mid);
    if (fm == 0.0) return mid;
    if (flo * fm < 0.0) {
      hi = mid;
    } else {
      lo = mid;
      flo = fm;
    }
  }
  return mid;
}

int Spectrum::bound_count() const {
  int n = 0;
  for (const auto& l : levels)
    if (l.bound) ++n;
  return n;
}

namespace {

// Scan with density doubling until the bracket count is stable across two
// successive densities. Appends the trace for error reporting.
std::vector<Bracket> stable_scan(const std::function<double(double)>& fn, double lo, double hi,
                                 int density0, std::ostringstream& trace, const char* label) {
  std::vector<Bracket> prev = root_scan(fn, lo, hi, density0);
  trace << label << " d=" << density0 << " n=" << prev.size() << ";";
  int density = density0 * 2;
  for (; density <= density0 * 128; density *= 2) {
    std::vector<Bracket> cur = root_scan(fn, lo, hi, density);
    trace << " d=" << density << " n=" << cur.size() << ";";
    if (cur.size() == prev.size()) return cur;
    prev = std::move(cur);
  }
  return prev;
}

}  // namespace

Spectrum solve_spectrum(const GraphSpec& spec, int n_states, const SolveOptions& opts) {
  if (n_states < 8) throw DomainError("solve_spectrum requires n_states >= 8");
  validate(spec);
  const SecularFn fn(spec);
  const double L = spec.total_length;
  std::ostringstream trace;

  Spectrum sp;
  sp.topology = spec.topology;
  sp.total_length = L;

  std::vector<Level> levels;

  // negative-energy branch
  if (fn.max_bound_states() > 0) {
    auto neg = [&fn](double x) { return fn.negative(x); };
    const auto brs = stable_scan(neg, 1e-9, fn.negative_scan_limit(), opts.scan_density, trace,
                                 "neg");
    if (static_cast<int>(brs.size()) > fn.max_bound_states()) {
      throw SolverError("more negative-energy roots than negative deltas [" + trace.str() + "]");
    }
    for (const auto& b : brs) {
      const double x = bisect(neg, b.lo, b.hi, opts.bisect_rel_tol);
      levels.push_back({x, true, false, -x * x / (2.0 * L * L)});
    }
  }
  const int n_neg = static_cast<int>(levels.size());

  // positive branch, extending the window on shortfall
  auto pos = [&fn](double x) { return fn.positive(x); };
  const int n_pos_needed = n_states - n_neg;
  double x_hi = (n_pos_needed + 6) * kPi;
  std::vector<double> pos_roots;
  for (int attempt = 0; attempt < 4; ++attempt) {
    pos_roots.clear();
    const auto brs = stable_scan(pos, 1e-9, x_hi, opts.scan_density, trace, "pos");
    for (const auto& b : brs)
      pos_roots.push_back(bisect(pos, b.lo, b.hi, opts.bisect_rel_tol));
    int available = static_cast<int>(pos_roots.size());
    if (spec.topology == Topology::LollipopDelta) {
      // loop-only family contributes too; count those below x_hi
      const double lloop = spec.edges[1].length;
      available += static_cast<int>(std::floor(x_hi * lloop / (2.0 * kPi * L)));
    }
    if (available >= n_pos_needed) break;
    x_hi *= 1.6;
  }

  for (double x : pos_roots) levels.push_back({x, false, false, x * x / (2.0 * L * L)});

  // lollipop loop-only family k = 2 pi n / Lloop, injected analytically
  if (spec.topology == Topology::LollipopDelta) {
    const double lloop = spec.edges[1].length;
    for (int nq = 1;; ++nq) {
      const double x = 2.0 * kPi * nq * L / lloop;  // x = k L
      if (x > x_hi) break;
      levels.push_back({x, false, true, x * x / (2.0 * L * L)});
    }
  }

  std::sort(levels.begin(), levels.end(),
            [](const Level& a, const Level& b) { return a.energy < b.energy; });

  if (static_cast<int>(levels.size()) < n_states) {
    throw SolverError("root-count shortfall: found " + std::to_string(levels.size()) + " of " +
                      std::to_string(n_states) + " [" + trace.str() + "]");
  }
  levels.resize(n_states);

  for (std::size_t i = 1; i < levels.size(); ++i) {
    if (levels[i].bound == levels[i - 1].bound &&
        std::abs(levels[i].x - levels[i - 1].x) < opts.degeneracy_gap) {
      throw DegeneracyError("near-degenerate roots at x = " + std::to_string(levels[i].x));
    }
    if (levels[i].energy <= levels[i - 1].energy) {
      throw DegeneracyError("energies not strictly increasing at level " + std::to_string(i));
    }
  }

  sp.levels = std::move(levels);
  return sp;
}

std::vector<Spectrum> track_vs_g(const GraphSpec& spec_template, const std::vector<double>& g_grid,
                                 int n_states, const SolveOptions& opts) {
  std::vector<Spectrum> out;
  out.reserve(g_grid.size());
  for (double g : g_grid) {
    GraphSpec s = spec_template;
    for (auto& d : s.deltas) d.strength = g;
    out.push_back(solve_spectrum(s, n_states, opts));
  }
  return out;
}

}  // namespace qg
