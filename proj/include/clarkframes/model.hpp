#pragma once

#include <optional>

#include "clarkframes/kaczmarz.hpp"

namespace clarkframes {

// Finite Blaschke product B(z) = front * prod_k (z - a_k)/(1 - conj(a_k) z)
// with zeros inside the open disc and |front| = 1.
struct BlaschkeProduct {
  std::vector<cplx> zeros;
  cplx front{1.0, 0.0};

  int degree() const { return static_cast<int>(zeros.size()); }
  cplx eval(cplx z) const;
  cplx deriv(cplx z) const;  // product rule over factors
  TruncatedSeries series(int n_max) const;
};

BlaschkeProduct blaschke_product(std::vector<cplx> zeros, cplx front = {1.0, 0.0});

enum class PhiMode { ratio, series };

// Inner function attached to a singular probability measure (Herglotz
// quotient phi = (psi-1)/(psi+1) plus the Toeplitz-recursion Taylor
// polynomial) or given directly as a Blaschke product with B(0) = 0.
class InnerFunction {
 public:
  static InnerFunction from_measure(const Measure& mu, int n_max = 512);
  static InnerFunction from_blaschke(const BlaschkeProduct& b, int n_max = 512);

  // ratio mode evaluates the defining expression (exact for atomic sources
  // at any |z| < 1); series mode evaluates the cached Taylor polynomial
  // (tail < 1e-9 for |z| <= 0.9 at the default length).
  cplx eval(cplx z, PhiMode mode = PhiMode::ratio) const;

  // Radial limit of phi at a boundary point: exact evaluation for Blaschke
  // sources, Richardson-extrapolated radial sweep of the ratio mode for
  // atomic sources.  Self-similar and density sources are not supported
  // (their transforms are series-backed and unusable at r -> 1).
  cplx boundary_value(const TorusPoint& zeta) const;

  const UCoefficients& u() const { return u_; }
  const TruncatedSeries& taylor() const { return taylor_; }
  const Measure* measure() const { return mu_ ? &*mu_ : nullptr; }
  const BlaschkeProduct* blaschke() const { return b_ ? &*b_ : nullptr; }

 private:
  InnerFunction() = default;
  std::optional<Measure> mu_;
  std::optional<BlaschkeProduct> b_;
  UCoefficients u_;
  TruncatedSeries taylor_;
};

// | P[mu](z) - (1-|phi(z)|^2)/|1-phi(z)|^2 |, maximized over the grid.
double poisson_phi_residual(const Measure& mu, const InnerFunction& phi,
                            const std::vector<cplx>& grid);

// Reproducing kernel of H^2 ominus phi H^2:
//   k_z(w) = (1 - conj(phi(z)) phi(w)) / (1 - conj(z) w).
cplx model_kernel(const InnerFunction& phi, cplx z, cplx w);

// Projection of the monomial onto the model space, via the closed form
// P_phi(z^n)(w) = w^n + phi(w) * (g_n(w) - w^n).
cplx project_monomial(const InnerFunction& phi, int n, cplx w);

struct RadialSweep {
  std::vector<double> radii;       // r_j = 1 - 2^{-j}
  std::vector<cplx> values;        // P_phi(z^n)(r_j zeta)
  std::vector<cplx> extrapolated;  // v_j + (v_j - v_{j-1}), j >= 2
  cplx target;                     // g_n(zeta)
  double raw_distance = 0.0;       // |values.back() - target|
  double final_distance = 0.0;     // |extrapolated.back() - target|
  bool converged = false;          // last two extrapolated read-offs within tol
};

// Radial boundary behaviour of P_phi(z^n) at an atom zeta: values along
// r_j = 1 - 2^{-j}, their first-order Richardson read-off (the radial limit
// has first-order error in 1-r), and distances to g_n(zeta).
RadialSweep boundary_limit_check(const InnerFunction& phi, const FramePolynomial& g,
                                 const TorusPoint& zeta, int j_max = 20,
                                 double tol = 1e-6);

// K(g dmu)(z) / K(mu)(z) for atomic mu; the denominator equals
// 1/(1 - phi(z)) and never vanishes.
cplx normalized_cauchy(const AtomicMeasure& mu, const L2Vector& g, cplx z);

// (V_alpha g)(z) = (1 - conj(alpha) phi(z)) * K(g dmu_alpha)(z): the unitary
// from L^2(mu_alpha) onto the model space.  alpha = 1 with phi(0) = 0
// reduces to normalized_cauchy.
cplx v_alpha(const AtomicMeasure& mu_alpha, const InnerFunction& phi,
             const L2Vector& g, cplx alpha, cplx z);

// Taylor coefficients 0..n_max of V_alpha g, by convolving the series of
// (1 - conj(alpha) phi) with t_m = sum_j w_j g_j conj(zeta_j)^m.
std::vector<cplx> v_alpha_coefficients(const AtomicMeasure& mu_alpha,
                                       const InnerFunction& phi,
                                       const L2Vector& g, cplx alpha, int n_max);

// Spectral (Clark) measure of a finite Blaschke product with B(0) = 0 at
// |alpha| = 1: the d roots of B = alpha on the circle, weighted 1/|B'|.
// The weights are certified per instance by the Poisson-identity residual
//   | Re((alpha + B(z))/(alpha - B(z))) - P[mu_alpha](z) |
// over the probe grid, reported in certified_residual.
struct ClarkAtomSet {
  cplx alpha{1.0, 0.0};
  AtomicMeasure measure;
  double certified_residual = 0.0;
};

ClarkAtomSet clark_measure(const BlaschkeProduct& b, cplx alpha);

// Two-path check of the composition formula for Clark measures: the measure
// of theta(B(z)) at alpha computed directly (root-finding the composition)
// against the mixture of the measures of B over the atoms of theta's measure.
struct CompositionCheck {
  AtomicMeasure direct;
  AtomicMeasure mixture;
  double max_atom_distance = 0.0;    // circle distance between matched atoms
  double max_weight_distance = 0.0;  // weight gap between matched atoms
  double max_residual = 0.0;         // max of the two
};

CompositionCheck clark_composition_check(const BlaschkeProduct& b,
                                         const BlaschkeProduct& theta,
                                         cplx alpha);

// phi's boundary values at every atom of mu, in atom order.
L2Vector boundary_values(const AtomicMeasure& mu, const InnerFunction& phi);

// | integral |k_z|^2 dmu_test - (1 - |phi(z)|^2)/(1 - |z|^2) |.  Zero exactly
// when mu_test is the alpha = 1 spectral measure of phi; phi's boundary
// values at the atoms enter through boundary_value.
double aleksandrov_residual(const AtomicMeasure& mu_test, const InnerFunction& phi,
                            cplx z);

// Same residual with the boundary values precomputed (grid loops reuse them).
double aleksandrov_residual(const AtomicMeasure& mu_test, const InnerFunction& phi,
                            cplx z, const L2Vector& boundary_phi);

// (S*)^m: drops the first m Taylor coefficients and reindexes.
TruncatedSeries backward_shift(const TruncatedSeries& s, int m);

// True iff b1's zero multiset is contained in b2's (matching within tol).
bool divisor_check(const BlaschkeProduct& b1, const BlaschkeProduct& b2,
                   double tol = 1e-10);

}  // namespace clarkframes
