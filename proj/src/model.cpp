#include "clarkframes/model.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

namespace clarkframes {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kPi = 3.1415926535897932384626433832795;

void require_disc(cplx z) {
  if (std::abs(z) >= 1.0)
    throw std::domain_error("evaluation point must lie in the open unit disc");
}

cplx int_pow(cplx z, int n) {
  cplx acc{1.0, 0.0};
  for (int k = 0; k < n; ++k) acc *= z;
  return acc;
}

}  // namespace

BlaschkeProduct blaschke_product(std::vector<cplx> zeros, cplx front) {
  if (zeros.empty()) throw std::invalid_argument("Blaschke product needs a zero");
  for (cplx a : zeros)
    if (std::abs(a) >= 1.0)
      throw std::invalid_argument("Blaschke zeros must lie in the open disc");
  if (std::abs(std::abs(front) - 1.0) > 1e-12)
    throw std::invalid_argument("front factor must be unimodular");
  return BlaschkeProduct{std::move(zeros), front};
}

cplx BlaschkeProduct::eval(cplx z) const {
  cplx acc = front;
  for (cplx a : zeros) acc *= (z - a) / (1.0 - std::conj(a) * z);
  return acc;
}

cplx BlaschkeProduct::deriv(cplx z) const {
  // product rule over factors; safe at the zeros themselves
  std::vector<cplx> f(zeros.size()), df(zeros.size());
  for (std::size_t k = 0; k < zeros.size(); ++k) {
    cplx a = zeros[k];
    cplx den = 1.0 - std::conj(a) * z;
    f[k] = (z - a) / den;
    df[k] = (1.0 - std::norm(a)) / (den * den);
  }
  cplx sum{0.0, 0.0};
  for (std::size_t k = 0; k < zeros.size(); ++k) {
    cplx term = df[k];
    for (std::size_t j = 0; j < zeros.size(); ++j)
      if (j != k) term *= f[j];
    sum += term;
  }
  return front * sum;
}

TruncatedSeries BlaschkeProduct::series(int n_max) const {
  TruncatedSeries s;
  s.c.assign(static_cast<std::size_t>(n_max) + 1, cplx{0.0, 0.0});
  s.c[0] = front;
  for (cplx a : zeros) {
    // multiply by (z - a) * sum_k conj(a)^k z^k
    TruncatedSeries lin;
    lin.c = {-a, cplx{1.0, 0.0}};
    TruncatedSeries geo;
    geo.c.assign(static_cast<std::size_t>(n_max) + 1, cplx{0.0, 0.0});
    cplx p{1.0, 0.0};
    for (int k = 0; k <= n_max; ++k) {
      geo.c[static_cast<std::size_t>(k)] = p;
      p *= std::conj(a);
    }
    s = series_multiply(series_multiply(s, lin, n_max), geo, n_max);
  }
  return s;
}

InnerFunction InnerFunction::from_measure(const Measure& mu, int n_max) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  if (std::abs(measure_mass(mu) - 1.0) > 1e-9)
    throw std::invalid_argument("inner function needs a probability measure");
  InnerFunction h;
  h.mu_ = mu;
  h.u_ = u_coefficients(mu, n_max);
  h.taylor_ = phi_series(h.u_);
  return h;
}

InnerFunction InnerFunction::from_blaschke(const BlaschkeProduct& b, int n_max) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  InnerFunction h;
  h.b_ = b;
  h.taylor_ = b.series(n_max);
  h.u_.u.assign(h.taylor_.c.size(), cplx{0.0, 0.0});
  for (std::size_t n = 0; n < h.taylor_.c.size(); ++n) h.u_.u[n] = -h.taylor_.c[n];
  return h;
}

cplx InnerFunction::eval(cplx z, PhiMode mode) const {
  require_disc(z);
  if (mode == PhiMode::series) return taylor_.eval(z);
  if (b_) return b_->eval(z);
  cplx psi = herglotz(*mu_, z);
  return (psi - 1.0) / (psi + 1.0);
}

cplx InnerFunction::boundary_value(const TorusPoint& zeta) const {
  if (b_) return b_->eval(zeta.value);
  if (!as_atomic(*mu_))
    throw std::domain_error(
        "boundary values need an atomic source (series transforms fail at r -> 1)");
  // Two-stage Richardson read-off of the radial limit at h = 1-r in
  // {2^-24, 2^-26, 2^-28}: each stage divides h by 4, so the linear and
  // quadratic error terms cancel and O(h^3) remains. The Herglotz ratio is
  // stable as psi grows, so the deep radii cost nothing in conditioning.
  cplx v[3];
  for (int k = 0; k < 3; ++k) {
    double r = 1.0 - std::ldexp(1.0, -(24 + 2 * k));
    cplx psi = herglotz(*mu_, r * zeta.value);
    v[k] = (psi - 1.0) / (psi + 1.0);
  }
  cplx first = (4.0 * v[1] - v[0]) / 3.0;
  cplx second = (4.0 * v[2] - v[1]) / 3.0;
  return (16.0 * second - first) / 15.0;
}

double poisson_phi_residual(const Measure& mu, const InnerFunction& phi,
                            const std::vector<cplx>& grid) {
  double worst = 0.0;
  for (cplx z : grid) {
    double p = poisson(mu, z);
    cplx f = phi.eval(z, PhiMode::ratio);
    double rhs = (1.0 - std::norm(f)) / std::norm(1.0 - f);
    worst = std::max(worst, std::abs(p - rhs));
  }
  return worst;
}

cplx model_kernel(const InnerFunction& phi, cplx z, cplx w) {
  require_disc(z);
  require_disc(w);
  cplx fz = phi.eval(z, PhiMode::ratio);
  cplx fw = phi.eval(w, PhiMode::ratio);
  return (1.0 - std::conj(fz) * fw) / (1.0 - std::conj(z) * w);
}

cplx project_monomial(const InnerFunction& phi, int n, cplx w) {
  require_disc(w);
  FramePolynomial g = frame_polynomial(phi.u(), n);
  cplx wn = int_pow(w, n);
  return wn + phi.eval(w, PhiMode::ratio) * (g.eval(w) - wn);
}

RadialSweep boundary_limit_check(const InnerFunction& phi, const FramePolynomial& g,
                                 const TorusPoint& zeta, int j_max, double tol) {
  if (j_max < 3) throw std::invalid_argument("radial sweep needs j_max >= 3");
  RadialSweep sweep;
  sweep.target = g.eval(zeta.value);
  for (int j = 1; j <= j_max; ++j) {
    double r = 1.0 - std::ldexp(1.0, -j);
    cplx w = r * zeta.value;
    cplx wn = int_pow(w, g.n);
    cplx v = wn + phi.eval(w, PhiMode::ratio) * (g.eval(w) - wn);
    sweep.radii.push_back(r);
    sweep.values.push_back(v);
    if (j >= 2) {
      cplx prev = sweep.values[sweep.values.size() - 2];
      sweep.extrapolated.push_back(v + (v - prev));
    }
  }
  sweep.raw_distance = std::abs(sweep.values.back() - sweep.target);
  sweep.final_distance = std::abs(sweep.extrapolated.back() - sweep.target);
  double prev_distance =
      std::abs(sweep.extrapolated[sweep.extrapolated.size() - 2] - sweep.target);
  sweep.converged = sweep.final_distance < tol && prev_distance < tol;
  return sweep;
}

cplx normalized_cauchy(const AtomicMeasure& mu, const L2Vector& g, cplx z) {
  require_disc(z);
  detail::KahanCSum denom;
  for (std::size_t j = 0; j < mu.size(); ++j)
    denom.add(mu.weights[j] / (1.0 - z * std::conj(mu.points[j].value)));
  return cauchy(mu, g, z) / denom.value();
}

cplx v_alpha(const AtomicMeasure& mu_alpha, const InnerFunction& phi,
             const L2Vector& g, cplx alpha, cplx z) {
  require_disc(z);
  return (1.0 - std::conj(alpha) * phi.eval(z, PhiMode::ratio)) * cauchy(mu_alpha, g, z);
}

std::vector<cplx> v_alpha_coefficients(const AtomicMeasure& mu_alpha,
                                       const InnerFunction& phi,
                                       const L2Vector& g, cplx alpha, int n_max) {
  if (g.size() != mu_alpha.size())
    throw std::invalid_argument("g must be sampled at every atom");
  if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
  // moments t_m = sum_j w_j g_j conj(zeta_j)^m, the Taylor coefficients of
  // K(g dmu)
  std::vector<cplx> t(static_cast<std::size_t>(n_max) + 1);
  for (int m = 0; m <= n_max; ++m) {
    detail::KahanCSum s;
    for (std::size_t j = 0; j < mu_alpha.size(); ++j)
      s.add(mu_alpha.weights[j] * g[j] *
            std::polar(1.0, -kTwoPi * m * mu_alpha.points[j].t));
    t[static_cast<std::size_t>(m)] = s.value();
  }
  const TruncatedSeries& tay = phi.taylor();
  std::vector<cplx> out(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    detail::KahanCSum s;
    s.add(t[static_cast<std::size_t>(n)]);  // the k=0 factor term is 1
    for (int k = 1; k <= n && k < static_cast<int>(tay.c.size()); ++k)
      s.add(-std::conj(alpha) * tay.c[static_cast<std::size_t>(k)] *
            t[static_cast<std::size_t>(n - k)]);
    out[static_cast<std::size_t>(n)] = s.value();
  }
  return out;
}

namespace {

// Roots of map(zeta) = alpha on the unit circle for a boundary map whose
// continuous argument increases by exactly degree full turns per revolution
// (any finite Blaschke product, or a composition of them).  Returns the d
// parameters t in [0, 1).
std::vector<double> unimodular_roots(const std::function<cplx(cplx)>& map,
                                     const std::function<cplx(cplx)>& dmap,
                                     int degree, cplx alpha) {
  auto arg_at = [&](double t) {
    cplx zeta = std::polar(1.0, kTwoPi * t);
    return std::arg(map(zeta) * std::conj(alpha));
  };
  auto wrap = [](double a) {
    while (a <= -kPi) a += kTwoPi;
    while (a > kPi) a -= kTwoPi;
    return a;
  };

  int m = std::max(256, 64 * degree);
  std::vector<double> ts, args, theta;
  for (; m <= (1 << 21); m *= 2) {
    // start the sweep where the map is farthest from alpha, so every root
    // is strictly interior to a bracket
    double start = 0.0, best = -1.0;
    for (int j = 0; j < m; ++j) {
      double t = static_cast<double>(j) / m;
      double d = std::abs(map(std::polar(1.0, kTwoPi * t)) - alpha);
      if (d > best) {
        best = d;
        start = t;
      }
    }
    ts.assign(static_cast<std::size_t>(m) + 1, 0.0);
    args.assign(ts.size(), 0.0);
    theta.assign(ts.size(), 0.0);
    bool ok = true;
    for (std::size_t j = 0; j < ts.size(); ++j) {
      ts[j] = start + static_cast<double>(j) / m;
      args[j] = arg_at(ts[j]);
      if (j == 0) {
        theta[j] = args[j];
        continue;
      }
      double d = wrap(args[j] - args[j - 1]);
      if (d <= 0.0 || d >= 0.9 * kPi) {
        ok = false;  // undersampled: the argument is strictly increasing
        break;
      }
      theta[j] = theta[j - 1] + d;
    }
    if (ok && std::abs(theta.back() - theta.front() - kTwoPi * degree) < 1e-6) break;
    if (m == (1 << 21))
      throw numeric_error("root sweep failed to capture the winding number");
  }

  std::vector<double> roots;
  roots.reserve(static_cast<std::size_t>(degree));
  long long m_lo = static_cast<long long>(std::floor(theta.front() / kTwoPi)) + 1;
  for (long long q = m_lo; static_cast<double>(q) * kTwoPi <= theta.back(); ++q) {
    double target = static_cast<double>(q) * kTwoPi;
    std::size_t j = 0;
    while (j + 1 < theta.size() && theta[j + 1] < target) ++j;
    double lo = ts[j], hi = ts[j + 1];
    double arg_lo = args[j], theta_lo = theta[j];
    for (int it = 0; it < 60; ++it) {
      double mid = 0.5 * (lo + hi);
      double theta_mid = theta_lo + wrap(arg_at(mid) - arg_lo);
      if (theta_mid < target) {
        lo = mid;
        theta_lo = theta_mid;
        arg_lo = arg_at(mid);
      } else {
        hi = mid;
      }
    }
    // Newton polish: d/dt arg(map(e^{2 pi i t})) = 2 pi |map'| > 0 on T
    double t = 0.5 * (lo + hi);
    for (int it = 0; it < 6; ++it) {
      double f = wrap(arg_at(t));
      double speed = kTwoPi * std::abs(dmap(std::polar(1.0, kTwoPi * t)));
      if (!(speed > 0.0)) break;
      double step = f / speed;
      double next = t - step;
      if (next <= lo - (hi - lo) || next >= hi + (hi - lo)) break;
      if (next == t) break;
      t = next;
    }
    double reduced = t - std::floor(t);
    if (reduced >= 1.0) reduced = 0.0;
    roots.push_back(reduced);
  }
  if (static_cast<int>(roots.size()) != degree)
    throw numeric_error("expected " + std::to_string(degree) + " roots, found " +
                        std::to_string(roots.size()));
  return roots;
}

AtomicMeasure spectral_atoms(const std::function<cplx(cplx)>& map,
                             const std::function<cplx(cplx)>& dmap, int degree,
                             cplx alpha) {
  std::vector<double> roots = unimodular_roots(map, dmap, degree, alpha);
  std::vector<std::pair<double, double>> atoms;
  atoms.reserve(roots.size());
  for (double t : roots) {
    double speed = std::abs(dmap(std::polar(1.0, kTwoPi * t)));
    if (!(speed > 0.0)) throw numeric_error("vanishing derivative at a root");
    atoms.emplace_back(t, 1.0 / speed);
  }
  return atomic_measure(atoms, true);
}

void require_unimodular(cplx alpha) {
  if (std::abs(std::abs(alpha) - 1.0) > 1e-12)
    throw std::invalid_argument("alpha must be unimodular");
}

void require_vanishing_at_origin(const BlaschkeProduct& b, const char* name) {
  if (std::abs(b.eval(cplx{0.0, 0.0})) > 1e-12)
    throw std::invalid_argument(std::string(name) +
                                " must vanish at 0 so the spectral measure is a "
                                "probability measure");
}

}  // namespace

ClarkAtomSet clark_measure(const BlaschkeProduct& b, cplx alpha) {
  require_unimodular(alpha);
  require_vanishing_at_origin(b, "B");
  ClarkAtomSet set;
  set.alpha = alpha;
  set.measure = spectral_atoms([&](cplx z) { return b.eval(z); },
                               [&](cplx z) { return b.deriv(z); }, b.degree(), alpha);
  double worst = 0.0;
  for (cplx z : disc_grid(0.9, 50)) {
    cplx bz = b.eval(z);
    double lhs = ((alpha + bz) / (alpha - bz)).real();
    worst = std::max(worst, std::abs(lhs - poisson(Measure{set.measure}, z)));
  }
  set.certified_residual = worst;
  return set;
}

CompositionCheck clark_composition_check(const BlaschkeProduct& b,
                                         const BlaschkeProduct& theta,
                                         cplx alpha) {
  require_unimodular(alpha);
  require_vanishing_at_origin(b, "B");
  require_vanishing_at_origin(theta, "theta");
  CompositionCheck check;
  int degree = b.degree() * theta.degree();
  check.direct = spectral_atoms(
      [&](cplx z) { return theta.eval(b.eval(z)); },
      [&](cplx z) { return theta.deriv(b.eval(z)) * b.deriv(z); }, degree, alpha);

  ClarkAtomSet outer = clark_measure(theta, alpha);
  std::vector<std::pair<double, double>> pooled;
  pooled.reserve(static_cast<std::size_t>(degree));
  for (std::size_t j = 0; j < outer.measure.size(); ++j) {
    ClarkAtomSet inner = clark_measure(b, outer.measure.points[j].value);
    for (std::size_t k = 0; k < inner.measure.size(); ++k)
      pooled.emplace_back(inner.measure.points[k].t,
                          outer.measure.weights[j] * inner.measure.weights[k]);
  }
  check.mixture = atomic_measure(pooled, true);

  if (check.direct.size() != check.mixture.size()) {
    check.max_atom_distance = check.max_weight_distance = check.max_residual = 1.0;
    return check;
  }
  auto circle_distance = [](double a, double b2) {
    double d = std::abs(a - b2);
    return std::min(d, 1.0 - d);
  };
  std::vector<bool> used(check.mixture.size(), false);
  for (std::size_t j = 0; j < check.direct.size(); ++j) {
    std::size_t best = check.mixture.size();
    double best_d = 2.0;
    for (std::size_t k = 0; k < check.mixture.size(); ++k) {
      if (used[k]) continue;
      double d = circle_distance(check.direct.points[j].t, check.mixture.points[k].t);
      if (d < best_d) {
        best_d = d;
        best = k;
      }
    }
    used[best] = true;
    check.max_atom_distance = std::max(check.max_atom_distance, best_d);
    check.max_weight_distance =
        std::max(check.max_weight_distance,
                 std::abs(check.direct.weights[j] - check.mixture.weights[best]));
  }
  check.max_residual = std::max(check.max_atom_distance, check.max_weight_distance);
  return check;
}

L2Vector boundary_values(const AtomicMeasure& mu, const InnerFunction& phi) {
  L2Vector values(mu.size());
  for (std::size_t j = 0; j < mu.size(); ++j)
    values[j] = phi.boundary_value(mu.points[j]);
  return values;
}

double aleksandrov_residual(const AtomicMeasure& mu_test, const InnerFunction& phi,
                            cplx z, const L2Vector& boundary_phi) {
  require_disc(z);
  if (boundary_phi.size() != mu_test.size())
    throw std::invalid_argument("need one boundary value per atom");
  cplx fz = phi.eval(z, PhiMode::ratio);
  detail::KahanSum lhs;
  for (std::size_t j = 0; j < mu_test.size(); ++j) {
    cplx k = (1.0 - std::conj(fz) * boundary_phi[j]) /
             (1.0 - std::conj(z) * mu_test.points[j].value);
    lhs.add(mu_test.weights[j] * std::norm(k));
  }
  double rhs = (1.0 - std::norm(fz)) / (1.0 - std::norm(z));
  return std::abs(lhs.value() - rhs);
}

double aleksandrov_residual(const AtomicMeasure& mu_test, const InnerFunction& phi,
                            cplx z) {
  return aleksandrov_residual(mu_test, phi, z, boundary_values(mu_test, phi));
}

TruncatedSeries backward_shift(const TruncatedSeries& s, int m) {
  if (m < 0) throw std::invalid_argument("shift count must be >= 0");
  TruncatedSeries out;
  if (static_cast<std::size_t>(m) >= s.c.size()) {
    out.c = {cplx{0.0, 0.0}};
    return out;
  }
  out.c.assign(s.c.begin() + m, s.c.end());
  return out;
}

bool divisor_check(const BlaschkeProduct& b1, const BlaschkeProduct& b2,
                   double tol) {
  std::vector<bool> used(b2.zeros.size(), false);
  for (cplx a : b1.zeros) {
    bool matched = false;
    for (std::size_t k = 0; k < b2.zeros.size(); ++k) {
      if (used[k]) continue;
      if (std::abs(b2.zeros[k] - a) <= tol) {
        used[k] = true;
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

}  // namespace clarkframes
