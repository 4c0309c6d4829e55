#pragma once

#include "clarkframes/measure.hpp"

namespace clarkframes {

// Polynomial / truncated power series with coefficients c[0..N].
struct TruncatedSeries {
  std::vector<cplx> c;

  int degree() const { return static_cast<int>(c.size()) - 1; }
  cplx eval(cplx z) const;  // Horner
};

TruncatedSeries series_multiply(const TruncatedSeries& a, const TruncatedSeries& b,
                                int n_max);
// 1/a truncated at n_max; requires a.c[0] != 0.
TruncatedSeries series_reciprocal(const TruncatedSeries& a, int n_max);

// Coefficients u_1..u_n of the Toeplitz recursion
//   u_n = -mu_hat(n) - sum_{k=1}^{n-1} mu_hat(n-k) u_k,
// stored with u[0] = 0 so u[n] is u_n.
struct UCoefficients {
  std::vector<cplx> u;

  int n_max() const { return static_cast<int>(u.size()) - 1; }
};

UCoefficients u_coefficients(const Measure& mu, int n_max);
UCoefficients u_coefficients_from(const std::vector<cplx>& fourier);

// Independent re-check of the defining identity: for each n the residual
//   | mu_hat(n) + sum_{k=1}^{n} mu_hat(n-k) u_k |
// is accumulated in reverse order with compensated sums, so it does not
// reuse the forward recursion's partial sums.  Returns the maximum over n.
double toeplitz_identity_residual(const Measure& mu, const UCoefficients& u);

// Taylor polynomial of the inner function: phi(z) = -sum_{n>=1} u_n z^n.
TruncatedSeries phi_series(const UCoefficients& u);

// Frame element g_n(zeta) = zeta^n + sum_{k=0}^{n-1} conj(u_{n-k}) zeta^k.
struct FramePolynomial {
  int n = 0;
  std::vector<cplx> c;  // c[k], k = 0..n; c[n] = 1

  cplx eval(cplx z) const;
};

FramePolynomial frame_polynomial(const UCoefficients& u, int n);

}  // namespace clarkframes
