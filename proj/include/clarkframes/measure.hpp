#pragma once

#include <complex>
#include <stdexcept>
#include <variant>
#include <vector>

namespace clarkframes {

using cplx = std::complex<double>;

// Thrown when a request would materialize more data than the configured cap.
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when an iteration fails to reach its accuracy target.
struct numeric_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Point e^{2*pi*i*t} on the unit circle; t is kept in [0,1) and the complex
// value is cached at construction so repeated kernel sums share one cos/sin.
struct TorusPoint {
  double t = 0.0;
  cplx value{1.0, 0.0};
};

TorusPoint torus_point(double t);

// Finitely supported positive measure.  Atoms are sorted by t and pairwise
// distinct (exact duplicates are merged); every weight is strictly positive.
struct AtomicMeasure {
  std::vector<TorusPoint> points;
  std::vector<double> weights;

  std::size_t size() const { return points.size(); }
  double mass() const;
  bool is_probability(double tol = 1e-12) const;
};

AtomicMeasure atomic_measure(const std::vector<std::pair<double, double>>& atoms,
                             bool allow_non_probability = false);

// Self-similar measure: the distribution of sum_k X_k b^{-k} where the X_k
// are i.i.d. over `digits` with the given probabilities.  `product_depth`
// truncates that sum, so the object is semantically the depth-D atomization;
// every transform below is exact for it (up to summation tails < 1e-13).
struct SelfSimilarMeasure {
  int base = 3;
  std::vector<int> digits;
  std::vector<double> probs;
  int product_depth = 30;
};

SelfSimilarMeasure self_similar_measure(int base, std::vector<int> digits,
                                        std::vector<double> probs,
                                        int product_depth);

// Middle-third Cantor measure.
SelfSimilarMeasure cantor_measure(int product_depth = 30);

// Absolutely continuous measure with trigonometric-polynomial density
// rho(t) = 1 + 2*Re sum_{k>=1} coeffs[k-1] e^{2*pi*i*k*t}.  The constant
// coefficient is fixed to 1 (unit mass); rho must be nonnegative.
struct DensityMeasure {
  std::vector<cplx> coeffs;  // coefficient of e^{2*pi*i*k*t}, k = 1..K

  double density(double t) const;
};

DensityMeasure density_measure(std::vector<cplx> coeffs);

using Measure = std::variant<AtomicMeasure, SelfSimilarMeasure, DensityMeasure>;

const AtomicMeasure* as_atomic(const Measure& mu);
bool is_singular(const Measure& mu);  // atomic and self-similar carriers
double measure_mass(const Measure& mu);

// Fourier coefficient mu-hat(n) = integral of conj(zeta)^n d mu(zeta).
// Atomic and density measures are exact; the self-similar value is the
// digit-factor product over depths 1..product_depth.
cplx fourier_coeff(const Measure& mu, long long n);

// mu-hat(0..n_max) in one pass (the triangular recursions consume prefixes).
std::vector<cplx> fourier_coeffs(const Measure& mu, int n_max);

// Poisson integral P[mu](z), |z| < 1.  Always positive.
double poisson(const Measure& mu, cplx z);

// Herglotz transform psi(z) = integral (zeta+z)/(zeta-z) d mu(zeta), |z| < 1.
// Re psi = P[mu]; psi(0) = mass.
cplx herglotz(const Measure& mu, cplx z);

// Cauchy transform K(mu)(z) = integral 1/(1 - z*conj(zeta)) d mu(zeta).
cplx cauchy(const Measure& mu, cplx z);

// Cauchy transform of g d mu for g sampled on the atoms.
cplx cauchy(const AtomicMeasure& mu, const std::vector<cplx>& g, cplx z);

// Depth-d atomization of a self-similar measure: one atom per digit string,
// placed at the cylinder's left endpoint.  Mass is preserved.  Requests above
// 10^7 atoms are refused.
AtomicMeasure atomize(const SelfSimilarMeasure& mu, int depth);

// Midpoint-rule quadrature carrier for a density measure: grid_count atoms at
// t = (j+1/2)/grid_count weighted by rho(t)/grid_count.  grid_count must be
// even so a zero of the density cannot land on a node.
AtomicMeasure quadrature_measure(const DensityMeasure& mu, int grid_count);

// Deterministic evaluation grid: `count` points spiralling out to |z|=radius.
std::vector<cplx> disc_grid(double radius, int count);

namespace detail {

// Compensated (Kahan) accumulation used by every measure-level sum.
struct KahanSum {
  double s = 0.0, c = 0.0;
  void add(double x) {
    double y = x - c;
    double t = s + y;
    c = (t - s) - y;
    s = t;
  }
  double value() const { return s; }
};

struct KahanCSum {
  KahanSum re, im;
  void add(cplx x) {
    re.add(x.real());
    im.add(x.imag());
  }
  cplx value() const { return {re.value(), im.value()}; }
};

}  // namespace detail

}  // namespace clarkframes
