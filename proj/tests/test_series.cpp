#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "clarkframes/series.hpp"

using namespace clarkframes;

namespace {

AtomicMeasure three_atom() {
  return atomic_measure({{0.0, 0.5}, {1.0 / 3.0, 0.3}, {0.5, 0.2}});
}

}  // namespace

TEST_CASE("series arithmetic identities") {
  TruncatedSeries one_plus{{cplx{1.0, 0.0}, cplx{1.0, 0.0}}};
  TruncatedSeries one_minus{{cplx{1.0, 0.0}, cplx{-1.0, 0.0}}};
  TruncatedSeries prod = series_multiply(one_plus, one_minus, 4);
  REQUIRE(prod.degree() == 4);
  CHECK(std::abs(prod.c[0] - cplx{1.0, 0.0}) == 0.0);
  CHECK(std::abs(prod.c[1]) == 0.0);
  CHECK(std::abs(prod.c[2] + cplx{1.0, 0.0}) == 0.0);
  CHECK(std::abs(prod.c[3]) == 0.0);
  CHECK(std::abs(prod.c[4]) == 0.0);

  TruncatedSeries geo = series_reciprocal(one_minus, 6);
  for (int k = 0; k <= 6; ++k)
    CHECK(std::abs(geo.c[k] - cplx{1.0, 0.0}) < 1e-15);

  // reciprocal composed with multiply returns the identity series
  TruncatedSeries a{{cplx{2.0, 0.5}, cplx{-0.3, 0.1}, cplx{0.0, 0.7}, cplx{0.4, 0.0}}};
  TruncatedSeries back = series_multiply(a, series_reciprocal(a, 8), 8);
  CHECK(std::abs(back.c[0] - cplx{1.0, 0.0}) < 1e-15);
  for (int k = 1; k <= 8; ++k) CHECK(std::abs(back.c[k]) < 1e-15);

  TruncatedSeries zero_lead{{cplx{0.0, 0.0}, cplx{1.0, 0.0}}};
  CHECK_THROWS_AS(series_reciprocal(zero_lead, 4), std::invalid_argument);
}

TEST_CASE("horner evaluation matches the naive sum") {
  TruncatedSeries s{{cplx{1.0, -2.0}, cplx{0.5, 0.5}, cplx{-0.25, 0.0}, cplx{0.0, 1.0}}};
  cplx z{0.3, -0.4};
  cplx naive{0.0, 0.0};
  cplx zp{1.0, 0.0};
  for (const cplx& ck : s.c) {
    naive += ck * zp;
    zp *= z;
  }
  CHECK(std::abs(s.eval(z) - naive) < 1e-15);
}

TEST_CASE("recursion coefficients for a point mass give the shift") {
  Measure dirac = atomic_measure({{0.0, 1.0}});
  UCoefficients u = u_coefficients(dirac, 8);
  REQUIRE(u.n_max() == 8);
  CHECK(std::abs(u.u[1] + cplx{1.0, 0.0}) < 1e-15);
  for (int n = 2; n <= 8; ++n) CHECK(std::abs(u.u[n]) < 1e-15);

  TruncatedSeries phi = phi_series(u);
  CHECK(std::abs(phi.c[0]) == 0.0);
  CHECK(std::abs(phi.c[1] - cplx{1.0, 0.0}) < 1e-15);
  for (int n = 2; n <= 8; ++n) CHECK(std::abs(phi.c[n]) < 1e-15);
}

TEST_CASE("recursion coefficients for two symmetric atoms give the square") {
  Measure two = atomic_measure({{0.0, 0.5}, {0.5, 0.5}});
  UCoefficients u = u_coefficients(two, 12);
  CHECK(std::abs(u.u[2] + cplx{1.0, 0.0}) < 1e-14);
  for (int n = 1; n <= 12; ++n)
    if (n != 2) CHECK(std::abs(u.u[n]) < 1e-14);
}

TEST_CASE("hand-unrolled recursion start for the three-atom measure") {
  Measure mu{three_atom()};
  std::vector<cplx> fc = fourier_coeffs(mu, 3);
  UCoefficients u = u_coefficients(mu, 3);
  cplx u1 = -fc[1];
  cplx u2 = -fc[2] - fc[1] * u1;
  cplx u3 = -fc[3] - fc[2] * u1 - fc[1] * u2;
  CHECK(std::abs(u.u[1] - u1) < 1e-15);
  CHECK(std::abs(u.u[2] - u2) < 1e-15);
  CHECK(std::abs(u.u[3] - u3) < 1e-14);
}

TEST_CASE("recursion from explicit coefficients matches the measure path") {
  Measure cantor{cantor_measure(30)};
  UCoefficients a = u_coefficients(cantor, 64);
  UCoefficients b = u_coefficients_from(fourier_coeffs(cantor, 64));
  REQUIRE(a.n_max() == b.n_max());
  for (int n = 0; n <= 64; ++n) CHECK(std::abs(a.u[n] - b.u[n]) == 0.0);
}

TEST_CASE("defining identity residual stays at rounding level") {
  Measure three{three_atom()};
  CHECK(toeplitz_identity_residual(three, u_coefficients(three, 256)) < 1e-12);
  Measure cantor{cantor_measure(30)};
  CHECK(toeplitz_identity_residual(cantor, u_coefficients(cantor, 128)) < 1e-12);
}

TEST_CASE("frame polynomials") {
  Measure dirac = atomic_measure({{0.0, 1.0}});
  UCoefficients u = u_coefficients(dirac, 8);

  FramePolynomial g0 = frame_polynomial(u, 0);
  REQUIRE(g0.c.size() == 1);
  CHECK(std::abs(g0.c[0] - cplx{1.0, 0.0}) == 0.0);

  FramePolynomial g1 = frame_polynomial(u, 1);
  REQUIRE(g1.c.size() == 2);
  CHECK(std::abs(g1.c[0] + cplx{1.0, 0.0}) < 1e-15);
  CHECK(std::abs(g1.c[1] - cplx{1.0, 0.0}) == 0.0);

  // g_n(zeta) = zeta^n - zeta^{n-1} vanishes at the carrier atom zeta = 1
  for (int n = 1; n <= 8; ++n)
    CHECK(std::abs(frame_polynomial(u, n).eval(cplx{1.0, 0.0})) < 1e-15);

  CHECK_THROWS_AS(frame_polynomial(u, 9), std::out_of_range);
  CHECK_THROWS_AS(frame_polynomial(u, -1), std::out_of_range);
}

TEST_CASE("frame polynomial conjugation against a direct expansion") {
  // with complex recursion coefficients the tail of g_n must use conj(u).
  Measure three{three_atom()};
  UCoefficients u = u_coefficients(three, 6);
  FramePolynomial g4 = frame_polynomial(u, 4);
  REQUIRE(g4.c.size() == 5);
  CHECK(std::abs(g4.c[4] - cplx{1.0, 0.0}) == 0.0);
  for (int k = 0; k < 4; ++k)
    CHECK(std::abs(g4.c[k] - std::conj(u.u[4 - k])) == 0.0);
  CHECK(std::abs(u.u[1].imag()) > 1e-3);  // the case is genuinely complex
}
