#pragma once

#include "clarkframes/model.hpp"

namespace clarkframes {

// Gram matrix entries(n,m) = <g_n, g_m>_{L^2(mu)}, 0 <= n,m <= n_max.
// Hermitian with real positive diagonal.
struct GramMatrix {
  int n_max = 0;
  std::vector<cplx> entries;  // row-major (n_max+1)^2

  cplx at(int n, int m) const { return entries[static_cast<std::size_t>(n) * (n_max + 1) + m]; }
};

GramMatrix gram(const AtomicMeasure& mu, const UCoefficients& u, int n_max);

// Partial frame operator S_N = sum_{n<=N} g_n <., g_n> on the d-dimensional
// L^2(mu), with its distance to the identity in operator norm.
struct FrameOperatorSnapshot {
  int n_max = 0;
  std::vector<double> eigenvalues;  // of S_N, ascending
  double deviation = 0.0;           // max |eigenvalue - 1|
};

FrameOperatorSnapshot frame_operator_snapshot(const AtomicMeasure& mu,
                                              const UCoefficients& u, int n_max);

double frame_deviation(const AtomicMeasure& mu, const UCoefficients& u, int n_max);

// deviation for N = 0..n_max in one accumulation sweep.
std::vector<double> frame_deviation_profile(const AtomicMeasure& mu,
                                            const UCoefficients& u, int n_max);

// Frame expansion f = sum_n <f, g_n> omega^n: partial sums at the atoms and
// the L^2(mu) residual per N.
struct ExpansionTrace {
  std::vector<cplx> coefficients;  // <f, g_n>
  std::vector<double> residuals;   // ||f - partial_N||, N = 0..n_max
  L2Vector approximant;
};

ExpansionTrace expand(const AtomicMeasure& mu, const UCoefficients& u,
                      const L2Vector& f, int n_max);

// Double partial sum sum_{n,m<=N} <g_n, g_m> conj(z)^n w^m, which converges
// to model_kernel(phi, z, w) for |z|, |w| < 1.
cplx kernel_double_series(const GramMatrix& gm, cplx z, cplx w);

namespace detail {

// Eigenvalues of a Hermitian matrix (row-major d x d) by cyclic Jacobi
// rotations; returned ascending.  Intended for the small dense frame
// operators that arise here (d = atom count).
std::vector<double> hermitian_eigenvalues(std::vector<cplx> a, int d);

}  // namespace detail

}  // namespace clarkframes
