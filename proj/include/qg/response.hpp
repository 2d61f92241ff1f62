#pragma once

#include <complex>
#include <vector>

#include "qg/moments.hpp"

namespace qg {

/// Intrinsic first hyperpolarizability, fully symmetrized components.
struct BetaTensor {
  double xxx = 0.0;
  double xxy = 0.0;
  double xyy = 0.0;
  double yyy = 0.0;
};

/// Intrinsic second hyperpolarizability, fully symmetrized components.
struct GammaTensor {
  double xxxx = 0.0;
  double xxxy = 0.0;
  double xxyy = 0.0;
  double xyyy = 0.0;
  double yyyy = 0.0;
};

/// beta_ijk = (3/4)^{3/4} sum'_{n,m} xi^i_{0n} xibar^j_{nm} xi^k_{m0} / (e_n e_m),
/// xibar_nm = xi_nm - delta_nm xi_00, summed over the retained excited states
/// and symmetrized over index permutations. Needs >= 3 states.
BetaTensor beta_intrinsic(const TransitionTable& t);

/// gamma_ijkl = (1/4) sum'_{n,m,p} [xi^i_{0n} xibar^j_{nm} xibar^k_{mp} xi^l_{p0}
///              - delta_mp xi^i_{0n} xi^j_{n0} xi^k_{0m} xi^l_{m0}] / (e_n e_m e_p).
GammaTensor gamma_intrinsic(const TransitionTable& t);

/// Diagonal component in a frame rotated by theta.
double rotate_beta(const BetaTensor& t, double theta);
double rotate_gamma(const GammaTensor& t, double theta);

/// Orientation-invariant norms. The xyyy term enters squared.
double beta_norm(const BetaTensor& t);
double gamma_norm(const GammaTensor& t);

/// theta maximizing the rotated diagonal component: golden-section refinement
/// on each rising sub-interval of a 720-point grid over [0, 2 pi).
struct ThetaMax {
  double theta = 0.0;
  double value = 0.0;
};
ThetaMax max_rotation_beta(const BetaTensor& t);
ThetaMax max_rotation_gamma(const GammaTensor& t);
ThetaMax min_rotation_gamma(const GammaTensor& t);

/// Spherical (irreducible) components. Per-J norms are sums of |.|^2 over the
/// printed m components; the beta set reproduces the Cartesian norm exactly,
/// the gamma set does not and the discrepancy is reported, not asserted.
struct SphericalBeta {
  std::complex<double> s1_p1, s1_m1;          // J = 1
  std::complex<double> s3_p1, s3_m1, s3_p3, s3_m3;  // J = 3
  double j1_norm = 0.0;
  double j3_norm = 0.0;
  double total = 0.0;
  double cartesian_norm_sq = 0.0;
};
struct SphericalGamma {
  std::complex<double> t0_0;                      // J = 0
  std::complex<double> t2_0, t2_p2, t2_m2;        // J = 2
  std::complex<double> t4_0, t4_p2, t4_m2, t4_p4, t4_m4;  // J = 4
  double j0_norm = 0.0;
  double j2_norm = 0.0;
  double j4_norm = 0.0;
  double total = 0.0;
  double cartesian_norm_sq = 0.0;
};
SphericalBeta spherical_beta(const BetaTensor& t);
SphericalGamma spherical_gamma(const GammaTensor& t);

enum class ResponseKind { Beta, Gamma };

/// Excited states ranked by descending sum of |term| over every sum term of
/// the full diagonal (xxx / xxxx) response that involves the state; ties break
/// toward the lower index.
std::vector<int> importance_ranking(const TransitionTable& t, ResponseKind which);

/// Full diagonal sum recomputed over the ground state plus the top_k - 1 most
/// important excited states (so top_k = 3 is the conventional three-level
/// truncation).
double truncated_response(const TransitionTable& t, ResponseKind which, int top_k);

/// Three-level-model diagnostics.
struct TlaDiagnostics {
  double X = 0.0;        // |xi_01|
  double E = 0.0;        // E10 / E20
  double f = 0.0;        // (1-E)^{3/2} (E^2 + 3E/2 + 1)
  double G = 0.0;        // 3^{1/4} X sqrt(3/2 (1 - X^4))
  double fG = 0.0;
  double beta3L = 0.0;   // three-level model value (states 0, 1, 2)
  double beta3 = 0.0, beta4 = 0.0;
  double gamma3 = 0.0, gamma4 = 0.0;
  std::vector<int> beta_ranking;
  std::vector<int> gamma_ranking;
};
TlaDiagnostics tla_params(const TransitionTable& t);

double tla_f(double E);
double tla_G(double X);

}  // namespace qg
