#pragma once

#include "clarkframes/series.hpp"

namespace clarkframes {

// Function in L^2(mu) for an atomic carrier: one value per atom.
using L2Vector = std::vector<cplx>;

// <f, g>_{L^2(mu)} = sum_j f_j conj(g_j) w_j, compensated.
cplx l2_inner(const AtomicMeasure& mu, const L2Vector& f, const L2Vector& g);
double l2_norm(const AtomicMeasure& mu, const L2Vector& f);

// zeta^n sampled on the atoms.
L2Vector monomial_vector(const AtomicMeasure& mu, int n);
// g_n sampled on the atoms.
L2Vector frame_vector(const AtomicMeasure& mu, const FramePolynomial& g);

struct KaczmarzTrace {
  std::vector<double> residual_norms;  // ||f - f_n||, n = 0..n_max
  std::vector<cplx> coefficients;      // c_n = <f, gamma_n> read off the sweep
  L2Vector approximant;                // f_{n_max}
};

// Cyclic Kaczmarz sweep over the monomials zeta^0, zeta^1, ... in L^2(mu):
//   f_0 = <f, e_0> e_0,   f_n = f_{n-1} + <f - f_{n-1}, e_n> e_n.
// The update coefficient at step n equals <f, gamma_n> for the dual sequence
// below, so the trace doubles as the frame expansion of f.
KaczmarzTrace kaczmarz_run(const AtomicMeasure& mu, const L2Vector& f, int n_max);

// Auxiliary (dual) sequence gamma_n = e_n - sum_{k<n} <e_n, e_k> gamma_k,
// sampled on the atoms.  Coincides with g_n at the atoms.
std::vector<L2Vector> dual_sequence(const AtomicMeasure& mu, int n_max);

// Cumulative sums sum_{n<=N} |<f, gamma_n>|^2, N = 0..duals.size()-1; for an
// effective sequence they increase to ||f||^2.
std::vector<double> parseval_sums(const AtomicMeasure& mu, const L2Vector& f,
                                  const std::vector<L2Vector>& duals);

}  // namespace clarkframes
