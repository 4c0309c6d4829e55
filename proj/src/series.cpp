#include "clarkframes/series.hpp"

namespace clarkframes {

cplx TruncatedSeries::eval(cplx z) const {
  cplx acc{0.0, 0.0};
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
  return acc;
}

TruncatedSeries series_multiply(const TruncatedSeries& a, const TruncatedSeries& b,
                                int n_max) {
  if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
  TruncatedSeries out;
  out.c.assign(static_cast<std::size_t>(n_max) + 1, cplx{0.0, 0.0});
  for (std::size_t i = 0; i < a.c.size() && i <= static_cast<std::size_t>(n_max); ++i) {
    if (a.c[i] == cplx{0.0, 0.0}) continue;
    std::size_t cap = static_cast<std::size_t>(n_max) - i;
    for (std::size_t j = 0; j < b.c.size() && j <= cap; ++j)
      out.c[i + j] += a.c[i] * b.c[j];
  }
  return out;
}

TruncatedSeries series_reciprocal(const TruncatedSeries& a, int n_max) {
  if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
  if (a.c.empty() || a.c[0] == cplx{0.0, 0.0})
    throw std::invalid_argument("reciprocal needs a nonzero constant term");
  TruncatedSeries out;
  out.c.assign(static_cast<std::size_t>(n_max) + 1, cplx{0.0, 0.0});
  cplx inv = 1.0 / a.c[0];
  out.c[0] = inv;
  for (std::size_t n = 1; n <= static_cast<std::size_t>(n_max); ++n) {
    detail::KahanCSum s;
    for (std::size_t k = 1; k <= n && k < a.c.size(); ++k)
      s.add(a.c[k] * out.c[n - k]);
    out.c[n] = -inv * s.value();
  }
  return out;
}

UCoefficients u_coefficients_from(const std::vector<cplx>& fourier) {
  if (fourier.empty()) throw std::invalid_argument("need mu_hat(0) at least");
  UCoefficients u;
  u.u.assign(fourier.size(), cplx{0.0, 0.0});
  for (std::size_t n = 1; n < fourier.size(); ++n) {
    detail::KahanCSum s;
    s.add(fourier[n]);
    for (std::size_t k = 1; k < n; ++k) s.add(fourier[n - k] * u.u[k]);
    u.u[n] = -s.value();
  }
  return u;
}

UCoefficients u_coefficients(const Measure& mu, int n_max) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  return u_coefficients_from(fourier_coeffs(mu, n_max));
}

double toeplitz_identity_residual(const Measure& mu, const UCoefficients& u) {
  std::vector<cplx> fc = fourier_coeffs(mu, u.n_max());
  double worst = 0.0;
  for (std::size_t n = 1; n < fc.size(); ++n) {
    // reverse-order accumulation, independent of the forward recursion
    detail::KahanCSum s;
    for (std::size_t k = n; k >= 1; --k) s.add(fc[n - k] * u.u[k]);
    s.add(fc[n]);
    worst = std::max(worst, std::abs(s.value()));
  }
  return worst;
}

TruncatedSeries phi_series(const UCoefficients& u) {
  TruncatedSeries s;
  s.c.assign(u.u.size(), cplx{0.0, 0.0});
  for (std::size_t n = 1; n < u.u.size(); ++n) s.c[n] = -u.u[n];
  return s;
}

cplx FramePolynomial::eval(cplx z) const {
  cplx acc{0.0, 0.0};
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
  return acc;
}

FramePolynomial frame_polynomial(const UCoefficients& u, int n) {
  if (n < 0 || n > u.n_max())
    throw std::out_of_range("frame polynomial index outside the recursion range");
  FramePolynomial g;
  g.n = n;
  g.c.assign(static_cast<std::size_t>(n) + 1, cplx{0.0, 0.0});
  g.c[static_cast<std::size_t>(n)] = cplx{1.0, 0.0};
  for (int k = 0; k < n; ++k)
    g.c[static_cast<std::size_t>(k)] = std::conj(u.u[static_cast<std::size_t>(n - k)]);
  return g;
}

}  // namespace clarkframes
