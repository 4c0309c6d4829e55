#include "clarkframes/measure.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>

namespace clarkframes {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// e^{2*pi*i*turns}
cplx unit_at(double turns) { return std::polar(1.0, kTwoPi * turns); }

double reduce_turns(double t) {
  if (!std::isfinite(t)) throw std::invalid_argument("atom position must be finite");
  double r = t - std::floor(t);
  if (r >= 1.0) r = 0.0;  // floor rounding at the wrap
  return r;
}

// Terms needed so that bound * |z|^{M+1} / (1 - |z|) < 1e-13, for the
// coefficient-series transforms of self-similar measures (|mu_hat| <= 1).
int series_terms_for(double r, double bound) {
  if (r <= 0.0) return 1;
  if (r >= 0.999995)
    throw numeric_error("series transform needs |z| below 0.999995; got " +
                        std::to_string(r));
  double target = 1e-13 * (1.0 - r) / bound;
  int m = static_cast<int>(std::ceil(std::log(target) / std::log(r)));
  m = std::max(m, 1);
  if (m > 2000000)
    throw numeric_error("series transform would need " + std::to_string(m) +
                        " terms; evaluation point too close to the circle");
  return m;
}

}  // namespace

TorusPoint torus_point(double t) {
  double r = reduce_turns(t);
  return TorusPoint{r, unit_at(r)};
}

double AtomicMeasure::mass() const {
  detail::KahanSum s;
  for (double w : weights) s.add(w);
  return s.value();
}

bool AtomicMeasure::is_probability(double tol) const {
  return std::abs(mass() - 1.0) <= tol;
}

AtomicMeasure atomic_measure(const std::vector<std::pair<double, double>>& atoms,
                             bool allow_non_probability) {
  if (atoms.empty()) throw std::invalid_argument("measure needs at least one atom");
  std::vector<std::pair<double, double>> reduced;
  reduced.reserve(atoms.size());
  for (const auto& [t, w] : atoms) {
    if (!std::isfinite(w) || w <= 0.0)
      throw std::invalid_argument("atom weights must be positive");
    reduced.emplace_back(reduce_turns(t), w);
  }
  std::sort(reduced.begin(), reduced.end());
  AtomicMeasure mu;
  for (const auto& [t, w] : reduced) {
    if (!mu.points.empty() && mu.points.back().t == t) {
      mu.weights.back() += w;
    } else {
      mu.points.push_back(torus_point(t));
      mu.weights.push_back(w);
    }
  }
  if (!allow_non_probability && !mu.is_probability())
    throw std::invalid_argument("atom weights must sum to 1 (got " +
                                std::to_string(mu.mass()) + ")");
  return mu;
}

SelfSimilarMeasure self_similar_measure(int base, std::vector<int> digits,
                                        std::vector<double> probs,
                                        int product_depth) {
  if (base < 2) throw std::invalid_argument("base must be at least 2");
  if (digits.empty()) throw std::invalid_argument("digit set must be nonempty");
  if (digits.size() != probs.size())
    throw std::invalid_argument("digits and probs must have equal length");
  if (product_depth < 1) throw std::invalid_argument("product depth must be >= 1");
  std::vector<int> sorted = digits;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 0 || sorted[i] >= base)
      throw std::invalid_argument("digits must lie in [0, base)");
    if (i > 0 && sorted[i] == sorted[i - 1])
      throw std::invalid_argument("digits must be distinct");
  }
  detail::KahanSum mass;
  for (double p : probs) {
    if (!std::isfinite(p) || p <= 0.0)
      throw std::invalid_argument("digit probabilities must be positive");
    mass.add(p);
  }
  if (std::abs(mass.value() - 1.0) > 1e-12)
    throw std::invalid_argument("digit probabilities must sum to 1");
  return SelfSimilarMeasure{base, std::move(digits), std::move(probs), product_depth};
}

SelfSimilarMeasure cantor_measure(int product_depth) {
  return self_similar_measure(3, {0, 2}, {0.5, 0.5}, product_depth);
}

double DensityMeasure::density(double t) const {
  detail::KahanSum s;
  s.add(1.0);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    cplx e = unit_at(static_cast<double>(k + 1) * t);
    s.add(2.0 * (coeffs[k] * e).real());
  }
  return s.value();
}

DensityMeasure density_measure(std::vector<cplx> coeffs) {
  DensityMeasure mu{std::move(coeffs)};
  int probes = 4096 * static_cast<int>(std::max<std::size_t>(1, mu.coeffs.size()));
  probes = std::min(probes, 1 << 18);
  for (int j = 0; j < probes; ++j) {
    double t = static_cast<double>(j) / probes;
    if (mu.density(t) < -1e-10)
      throw std::invalid_argument("density is negative at t = " + std::to_string(t));
  }
  return mu;
}

const AtomicMeasure* as_atomic(const Measure& mu) {
  return std::get_if<AtomicMeasure>(&mu);
}

bool is_singular(const Measure& mu) {
  return !std::holds_alternative<DensityMeasure>(mu);
}

double measure_mass(const Measure& mu) {
  if (const auto* a = std::get_if<AtomicMeasure>(&mu)) return a->mass();
  if (std::holds_alternative<SelfSimilarMeasure>(mu)) return 1.0;
  return 1.0;  // density has unit constant coefficient by construction
}

namespace {

cplx atomic_fourier(const AtomicMeasure& mu, long long n) {
  detail::KahanCSum s;
  for (std::size_t j = 0; j < mu.size(); ++j)
    s.add(mu.weights[j] * unit_at(-static_cast<double>(n) * mu.points[j].t));
  return s.value();
}

// Product over depths k = 1..D of sum_d p_d e^{-2*pi*i*n*d/base^k}: the
// Fourier coefficient of the depth-D digit sum, exact for every n.
cplx self_similar_fourier(const SelfSimilarMeasure& mu, long long n) {
  cplx prod{1.0, 0.0};
  double scale = 1.0;
  for (int k = 1; k <= mu.product_depth; ++k) {
    scale /= mu.base;
    detail::KahanCSum factor;
    for (std::size_t i = 0; i < mu.digits.size(); ++i)
      factor.add(mu.probs[i] * unit_at(-static_cast<double>(n) * mu.digits[i] * scale));
    prod *= factor.value();
  }
  return prod;
}

cplx density_fourier(const DensityMeasure& mu, long long n) {
  if (n == 0) return {1.0, 0.0};
  long long k = n > 0 ? n : -n;
  if (k > static_cast<long long>(mu.coeffs.size())) return {0.0, 0.0};
  cplx c = mu.coeffs[static_cast<std::size_t>(k - 1)];
  return n > 0 ? c : std::conj(c);
}

}  // namespace

cplx fourier_coeff(const Measure& mu, long long n) {
  if (const auto* a = std::get_if<AtomicMeasure>(&mu)) return atomic_fourier(*a, n);
  if (const auto* s = std::get_if<SelfSimilarMeasure>(&mu))
    return self_similar_fourier(*s, n);
  return density_fourier(std::get<DensityMeasure>(mu), n);
}

std::vector<cplx> fourier_coeffs(const Measure& mu, int n_max) {
  if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
  std::vector<cplx> fc(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) fc[static_cast<std::size_t>(n)] = fourier_coeff(mu, n);
  return fc;
}

namespace {

void require_disc(cplx z) {
  if (std::abs(z) >= 1.0)
    throw std::domain_error("evaluation point must lie in the open unit disc");
}

// psi(z) = 1 + 2 sum_{n>=1} mu_hat(n) z^n, summed to the 1e-13 tail.
cplx series_herglotz(const Measure& mu, cplx z) {
  int m = series_terms_for(std::abs(z), 2.0);
  detail::KahanCSum s;
  s.add(cplx{1.0, 0.0});
  cplx zn{1.0, 0.0};
  for (int n = 1; n <= m; ++n) {
    zn *= z;
    s.add(2.0 * fourier_coeff(mu, n) * zn);
  }
  return s.value();
}

}  // namespace

double poisson(const Measure& mu, cplx z) {
  require_disc(z);
  if (const auto* a = std::get_if<AtomicMeasure>(&mu)) {
    double num = 1.0 - std::norm(z);
    detail::KahanSum s;
    for (std::size_t j = 0; j < a->size(); ++j)
      s.add(a->weights[j] * num / std::norm(a->points[j].value - z));
    return s.value();
  }
  return herglotz(mu, z).real();
}

cplx herglotz(const Measure& mu, cplx z) {
  require_disc(z);
  if (const auto* a = std::get_if<AtomicMeasure>(&mu)) {
    detail::KahanCSum s;
    for (std::size_t j = 0; j < a->size(); ++j) {
      cplx zeta = a->points[j].value;
      s.add(a->weights[j] * (zeta + z) / (zeta - z));
    }
    return s.value();
  }
  if (const auto* d = std::get_if<DensityMeasure>(&mu)) {
    // finite sum: coefficients vanish beyond the polynomial degree
    detail::KahanCSum s;
    s.add(cplx{1.0, 0.0});
    cplx zn{1.0, 0.0};
    for (std::size_t k = 1; k <= d->coeffs.size(); ++k) {
      zn *= z;
      s.add(2.0 * d->coeffs[k - 1] * zn);
    }
    return s.value();
  }
  return series_herglotz(mu, z);
}

cplx cauchy(const Measure& mu, cplx z) {
  require_disc(z);
  if (const auto* a = std::get_if<AtomicMeasure>(&mu)) {
    detail::KahanCSum s;
    for (std::size_t j = 0; j < a->size(); ++j)
      s.add(a->weights[j] / (1.0 - z * std::conj(a->points[j].value)));
    return s.value();
  }
  if (const auto* d = std::get_if<DensityMeasure>(&mu)) {
    detail::KahanCSum s;
    s.add(cplx{1.0, 0.0});
    cplx zn{1.0, 0.0};
    for (std::size_t k = 1; k <= d->coeffs.size(); ++k) {
      zn *= z;
      s.add(d->coeffs[k - 1] * zn);
    }
    return s.value();
  }
  const auto& ss = std::get<SelfSimilarMeasure>(mu);
  int m = series_terms_for(std::abs(z), 1.0);
  detail::KahanCSum s;
  s.add(cplx{1.0, 0.0});
  cplx zn{1.0, 0.0};
  for (int n = 1; n <= m; ++n) {
    zn *= z;
    s.add(self_similar_fourier(ss, n) * zn);
  }
  return s.value();
}

cplx cauchy(const AtomicMeasure& mu, const std::vector<cplx>& g, cplx z) {
  require_disc(z);
  if (g.size() != mu.size())
    throw std::invalid_argument("g must be sampled at every atom");
  detail::KahanCSum s;
  for (std::size_t j = 0; j < mu.size(); ++j)
    s.add(g[j] * mu.weights[j] / (1.0 - z * std::conj(mu.points[j].value)));
  return s.value();
}

AtomicMeasure atomize(const SelfSimilarMeasure& mu, int depth) {
  if (depth < 1) throw std::invalid_argument("depth must be >= 1");
  double count = std::pow(static_cast<double>(mu.digits.size()), depth);
  if (count > 1e7)
    throw resource_error("atomization would create " + std::to_string(count) +
                         " atoms (cap 1e7)");
  std::vector<std::pair<double, double>> atoms{{0.0, 1.0}};
  double scale = 1.0;
  for (int k = 1; k <= depth; ++k) {
    scale /= mu.base;
    std::vector<std::pair<double, double>> next;
    next.reserve(atoms.size() * mu.digits.size());
    for (const auto& [t, w] : atoms)
      for (std::size_t i = 0; i < mu.digits.size(); ++i)
        next.emplace_back(t + mu.digits[i] * scale, w * mu.probs[i]);
    atoms = std::move(next);
  }
  return atomic_measure(atoms, true);
}

AtomicMeasure quadrature_measure(const DensityMeasure& mu, int grid_count) {
  if (grid_count < 2 || grid_count % 2 != 0)
    throw std::invalid_argument("grid count must be even and >= 2");
  std::vector<std::pair<double, double>> atoms;
  atoms.reserve(static_cast<std::size_t>(grid_count));
  for (int j = 0; j < grid_count; ++j) {
    double t = (j + 0.5) / grid_count;
    double w = mu.density(t) / grid_count;
    if (w < -1e-12) throw std::invalid_argument("density is negative on the grid");
    if (w > 1e-15) atoms.emplace_back(t, w);  // an exact-zero node carries no mass
  }
  return atomic_measure(atoms, true);
}

std::vector<cplx> disc_grid(double radius, int count) {
  if (radius <= 0.0 || radius >= 1.0)
    throw std::invalid_argument("grid radius must lie in (0, 1)");
  if (count < 1) throw std::invalid_argument("grid count must be >= 1");
  const double golden_angle = 3.1415926535897932 * (3.0 - std::sqrt(5.0));
  std::vector<cplx> grid(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    double r = radius * std::sqrt(static_cast<double>(k + 1) / count);
    grid[static_cast<std::size_t>(k)] = std::polar(r, golden_angle * k);
  }
  return grid;
}

}  // namespace clarkframes
