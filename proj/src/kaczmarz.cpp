#include "clarkframes/kaczmarz.hpp"

#include <cmath>

namespace clarkframes {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

}

cplx l2_inner(const AtomicMeasure& mu, const L2Vector& f, const L2Vector& g) {
  if (f.size() != mu.size() || g.size() != mu.size())
    throw std::invalid_argument("vectors must be sampled at every atom");
  detail::KahanCSum s;
  for (std::size_t j = 0; j < mu.size(); ++j)
    s.add(f[j] * std::conj(g[j]) * mu.weights[j]);
  return s.value();
}

double l2_norm(const AtomicMeasure& mu, const L2Vector& f) {
  if (f.size() != mu.size())
    throw std::invalid_argument("vector must be sampled at every atom");
  detail::KahanSum s;
  for (std::size_t j = 0; j < mu.size(); ++j) s.add(std::norm(f[j]) * mu.weights[j]);
  return std::sqrt(std::max(0.0, s.value()));
}

L2Vector monomial_vector(const AtomicMeasure& mu, int n) {
  L2Vector e(mu.size());
  for (std::size_t j = 0; j < mu.size(); ++j)
    e[j] = std::polar(1.0, kTwoPi * n * mu.points[j].t);
  return e;
}

L2Vector frame_vector(const AtomicMeasure& mu, const FramePolynomial& g) {
  L2Vector v(mu.size());
  for (std::size_t j = 0; j < mu.size(); ++j) v[j] = g.eval(mu.points[j].value);
  return v;
}

KaczmarzTrace kaczmarz_run(const AtomicMeasure& mu, const L2Vector& f, int n_max) {
  if (f.size() != mu.size())
    throw std::invalid_argument("f must be sampled at every atom");
  if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
  KaczmarzTrace trace;
  trace.approximant.assign(mu.size(), cplx{0.0, 0.0});
  trace.residual_norms.reserve(static_cast<std::size_t>(n_max) + 1);
  trace.coefficients.reserve(static_cast<std::size_t>(n_max) + 1);
  L2Vector diff = f;
  for (int n = 0; n <= n_max; ++n) {
    L2Vector e = monomial_vector(mu, n);
    cplx c = l2_inner(mu, diff, e) / l2_inner(mu, e, e).real();
    trace.coefficients.push_back(c);
    for (std::size_t j = 0; j < mu.size(); ++j) {
      trace.approximant[j] += c * e[j];
      diff[j] -= c * e[j];
    }
    trace.residual_norms.push_back(l2_norm(mu, diff));
  }
  return trace;
}

std::vector<L2Vector> dual_sequence(const AtomicMeasure& mu, int n_max) {
  if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
  std::vector<L2Vector> gamma;
  gamma.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    L2Vector e = monomial_vector(mu, n);
    L2Vector g = e;
    for (int k = 0; k < n; ++k) {
      cplx inner = l2_inner(mu, e, monomial_vector(mu, k));
      const L2Vector& gk = gamma[static_cast<std::size_t>(k)];
      for (std::size_t j = 0; j < mu.size(); ++j) g[j] -= inner * gk[j];
    }
    gamma.push_back(std::move(g));
  }
  return gamma;
}

std::vector<double> parseval_sums(const AtomicMeasure& mu, const L2Vector& f,
                                  const std::vector<L2Vector>& duals) {
  std::vector<double> sums;
  sums.reserve(duals.size());
  detail::KahanSum acc;
  for (const L2Vector& gamma : duals) {
    acc.add(std::norm(l2_inner(mu, f, gamma)));
    sums.push_back(acc.value());
  }
  return sums;
}

}  // namespace clarkframes
