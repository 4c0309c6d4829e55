#include "clarkframes/frames.hpp"

#include <algorithm>
#include <cmath>

namespace clarkframes {

namespace detail {

std::vector<double> hermitian_eigenvalues(std::vector<cplx> a, int d) {
  if (d < 1 || a.size() != static_cast<std::size_t>(d) * d)
    throw std::invalid_argument("matrix shape mismatch");
  auto at = [&](int r, int c) -> cplx& { return a[static_cast<std::size_t>(r) * d + c]; };

  double norm = 0.0;
  for (const cplx& v : a) norm += std::norm(v);
  norm = std::sqrt(norm);
  const double stop = std::max(1e-300, 1e-26 * norm * norm);

  for (int sweep = 0; sweep < 80; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < d; ++p)
      for (int q = p + 1; q < d; ++q) off += std::norm(at(p, q));
    if (2.0 * off <= stop) break;
    if (sweep == 79) throw numeric_error("Jacobi iteration failed to converge");

    for (int p = 0; p < d; ++p) {
      for (int q = p + 1; q < d; ++q) {
        cplx apq = at(p, q);
        double mag = std::abs(apq);
        if (mag == 0.0) continue;
        // unitary rotation in the (p,q) plane annihilating the (p,q) entry
        double app = at(p, p).real();
        double aqq = at(q, q).real();
        double tau = (aqq - app) / (2.0 * mag);
        double t = (tau >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        double c = 1.0 / std::sqrt(1.0 + t * t);
        double s = t * c;
        cplx phase = apq / mag;  // e^{i arg(apq)}
        cplx sp = s * phase;

        for (int k = 0; k < d; ++k) {
          if (k == p || k == q) continue;
          cplx akp = at(k, p);
          cplx akq = at(k, q);
          at(k, p) = c * akp - std::conj(sp) * akq;
          at(k, q) = sp * akp + c * akq;
          at(p, k) = std::conj(at(k, p));
          at(q, k) = std::conj(at(k, q));
        }
        at(p, p) = cplx{app - t * mag, 0.0};
        at(q, q) = cplx{aqq + t * mag, 0.0};
        at(p, q) = cplx{0.0, 0.0};
        at(q, p) = cplx{0.0, 0.0};
      }
    }
  }

  std::vector<double> eig(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) eig[static_cast<std::size_t>(k)] = at(k, k).real();
  std::sort(eig.begin(), eig.end());
  return eig;
}

}  // namespace detail

namespace {

// g_n sampled at every atom, for n = 0..n_max (row n)
std::vector<L2Vector> frame_samples(const AtomicMeasure& mu, const UCoefficients& u,
                                    int n_max) {
  if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
  if (n_max > u.n_max())
    throw std::out_of_range("n_max exceeds the recursion length");
  std::vector<L2Vector> rows;
  rows.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n)
    rows.push_back(frame_vector(mu, frame_polynomial(u, n)));
  return rows;
}

}  // namespace

GramMatrix gram(const AtomicMeasure& mu, const UCoefficients& u, int n_max) {
  std::vector<L2Vector> rows = frame_samples(mu, u, n_max);
  GramMatrix gm;
  gm.n_max = n_max;
  gm.entries.assign(rows.size() * rows.size(), cplx{0.0, 0.0});
  for (int n = 0; n <= n_max; ++n) {
    for (int m = 0; m <= n; ++m) {
      cplx v = l2_inner(mu, rows[static_cast<std::size_t>(n)],
                        rows[static_cast<std::size_t>(m)]);
      gm.entries[static_cast<std::size_t>(n) * (n_max + 1) + m] = v;
      gm.entries[static_cast<std::size_t>(m) * (n_max + 1) + n] = std::conj(v);
    }
  }
  return gm;
}

namespace {

// S_N = sum_{n<=N} v_n v_n^H on L^2(mu), with v_n[j] = sqrt(w_j) g_n(zeta_j)
// so that the matrix is Hermitian in the weighted inner product's frame.
std::vector<cplx> frame_operator(const AtomicMeasure& mu,
                                 const std::vector<L2Vector>& rows) {
  int d = static_cast<int>(mu.size());
  std::vector<double> root_w(mu.size());
  for (std::size_t j = 0; j < mu.size(); ++j) root_w[j] = std::sqrt(mu.weights[j]);
  std::vector<cplx> s(static_cast<std::size_t>(d) * d, cplx{0.0, 0.0});
  std::vector<cplx> v(mu.size());
  for (const L2Vector& row : rows) {
    for (std::size_t j = 0; j < mu.size(); ++j) v[j] = root_w[j] * row[j];
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c)
        s[static_cast<std::size_t>(r) * d + c] +=
            v[static_cast<std::size_t>(r)] * std::conj(v[static_cast<std::size_t>(c)]);
  }
  return s;
}

double deviation_from(const std::vector<double>& eigenvalues) {
  double worst = 0.0;
  for (double e : eigenvalues) worst = std::max(worst, std::abs(e - 1.0));
  return worst;
}

}  // namespace

FrameOperatorSnapshot frame_operator_snapshot(const AtomicMeasure& mu,
                                              const UCoefficients& u, int n_max) {
  FrameOperatorSnapshot snap;
  snap.n_max = n_max;
  snap.eigenvalues = detail::hermitian_eigenvalues(
      frame_operator(mu, frame_samples(mu, u, n_max)), static_cast<int>(mu.size()));
  snap.deviation = deviation_from(snap.eigenvalues);
  return snap;
}

double frame_deviation(const AtomicMeasure& mu, const UCoefficients& u, int n_max) {
  return frame_operator_snapshot(mu, u, n_max).deviation;
}

std::vector<double> frame_deviation_profile(const AtomicMeasure& mu,
                                            const UCoefficients& u, int n_max) {
  std::vector<L2Vector> rows = frame_samples(mu, u, n_max);
  int d = static_cast<int>(mu.size());
  std::vector<double> root_w(mu.size());
  for (std::size_t j = 0; j < mu.size(); ++j) root_w[j] = std::sqrt(mu.weights[j]);
  std::vector<cplx> s(static_cast<std::size_t>(d) * d, cplx{0.0, 0.0});
  std::vector<double> profile;
  profile.reserve(rows.size());
  std::vector<cplx> v(mu.size());
  for (const L2Vector& row : rows) {
    for (std::size_t j = 0; j < mu.size(); ++j) v[j] = root_w[j] * row[j];
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c)
        s[static_cast<std::size_t>(r) * d + c] +=
            v[static_cast<std::size_t>(r)] * std::conj(v[static_cast<std::size_t>(c)]);
    profile.push_back(deviation_from(detail::hermitian_eigenvalues(s, d)));
  }
  return profile;
}

ExpansionTrace expand(const AtomicMeasure& mu, const UCoefficients& u,
                      const L2Vector& f, int n_max) {
  if (f.size() != mu.size())
    throw std::invalid_argument("f must be sampled at every atom");
  std::vector<L2Vector> rows = frame_samples(mu, u, n_max);
  ExpansionTrace trace;
  trace.approximant.assign(mu.size(), cplx{0.0, 0.0});
  trace.coefficients.reserve(rows.size());
  trace.residuals.reserve(rows.size());
  L2Vector diff = f;
  for (int n = 0; n <= n_max; ++n) {
    cplx c = l2_inner(mu, f, rows[static_cast<std::size_t>(n)]);
    trace.coefficients.push_back(c);
    L2Vector e = monomial_vector(mu, n);
    for (std::size_t j = 0; j < mu.size(); ++j) {
      trace.approximant[j] += c * e[j];
      diff[j] -= c * e[j];
    }
    trace.residuals.push_back(l2_norm(mu, diff));
  }
  return trace;
}

cplx kernel_double_series(const GramMatrix& gm, cplx z, cplx w) {
  cplx zbar = std::conj(z);
  detail::KahanCSum outer;
  cplx zn{1.0, 0.0};
  for (int n = 0; n <= gm.n_max; ++n) {
    cplx inner{0.0, 0.0};
    for (int m = gm.n_max; m >= 0; --m) inner = inner * w + gm.at(n, m);
    outer.add(zn * inner);
    zn *= zbar;
  }
  return outer.value();
}

}  // namespace clarkframes
