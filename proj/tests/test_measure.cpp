#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "clarkframes/measure.hpp"

using namespace clarkframes;

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

AtomicMeasure three_atom() {
  return atomic_measure({{0.0, 0.5}, {1.0 / 3.0, 0.3}, {0.5, 0.2}});
}

// Independent oracle: mu_hat of an atomic measure summed directly from the
// atom list, no shared code with fourier_coeff's internals beyond std::polar.
cplx pushforward_fc(const AtomicMeasure& mu, int n) {
  cplx s{0.0, 0.0};
  for (std::size_t j = 0; j < mu.size(); ++j)
    s += mu.weights[j] * std::polar(1.0, -kTwoPi * n * mu.points[j].t);
  return s;
}

}  // namespace

TEST_CASE("atomic constructor sorts, merges, and validates") {
  AtomicMeasure mu = atomic_measure({{0.5, 0.25}, {0.0, 0.5}, {0.5, 0.25}});
  CHECK(mu.size() == 2);
  CHECK(mu.points[0].t == 0.0);
  CHECK(mu.points[1].t == 0.5);
  CHECK(mu.weights[1] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(mu.is_probability());

  CHECK_THROWS_AS(atomic_measure({{0.0, -0.5}, {0.5, 1.5}}), std::invalid_argument);
  CHECK_THROWS_AS(atomic_measure({{0.0, 0.0}}), std::invalid_argument);
  CHECK_THROWS_AS(atomic_measure({{0.0, 0.5}}), std::invalid_argument);
  CHECK_NOTHROW(atomic_measure({{0.0, 0.5}}, true));
  CHECK_THROWS_AS(atomic_measure({}), std::invalid_argument);
}

TEST_CASE("torus positions are reduced mod 1") {
  CHECK(torus_point(1.25).t == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(torus_point(-0.25).t == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(torus_point(3.0).t == 0.0);
  CHECK(std::abs(torus_point(0.5).value - cplx{-1.0, 0.0}) < 1e-15);
}

TEST_CASE("fourier coefficients of atomic measures") {
  Measure dirac = atomic_measure({{0.0, 1.0}});
  for (int n = -8; n <= 8; ++n)
    CHECK(std::abs(fourier_coeff(dirac, n) - cplx{1.0, 0.0}) < 1e-15);

  Measure two = atomic_measure({{0.0, 0.5}, {0.5, 0.5}});
  for (int n = 0; n <= 16; ++n) {
    cplx expected = (n % 2 == 0) ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
    CHECK(std::abs(fourier_coeff(two, n) - expected) < 1e-14);
  }

  Measure three{three_atom()};
  for (int n = 1; n <= 64; ++n) {
    CHECK(std::abs(fourier_coeff(three, -n) - std::conj(fourier_coeff(three, n))) <
          1e-14);
    CHECK(std::abs(fourier_coeff(three, n) -
                   pushforward_fc(std::get<AtomicMeasure>(three), n)) < 1e-13);
  }
  CHECK(fourier_coeff(three, 0).real() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("self-similar coefficients equal the depth-D atomization exactly") {
  SelfSimilarMeasure c12 = cantor_measure(12);
  AtomicMeasure atoms = atomize(c12, 12);
  CHECK(atoms.size() == 4096);
  CHECK(atoms.mass() == doctest::Approx(1.0).epsilon(1e-13));
  for (int n = 1; n <= 64; n += 7)
    CHECK(std::abs(fourier_coeff(Measure{c12}, n) - pushforward_fc(atoms, n)) < 1e-12);
}

TEST_CASE("cantor coefficient against the frozen depth-30 product") {
  Measure cantor{cantor_measure(30)};
  cplx c1 = fourier_coeff(cantor, 1);
  CHECK(std::abs(c1 - cplx{0.37143735670876543, 0.0}) < 1e-14);

  // the depth-20 pushforward sits within the refinement gap of depth 30
  SelfSimilarMeasure c20 = cantor_measure(20);
  AtomicMeasure atoms = atomize(c20, 20);
  cplx oracle = pushforward_fc(atoms, 1);
  CHECK(std::abs(oracle - c1) < 5e-9);
  CHECK(std::abs(oracle - fourier_coeff(Measure{c20}, 1)) < 1e-12);
}

TEST_CASE("depth refinement shifts coefficients by less than 1e-8 up to n=64") {
  Measure d20{cantor_measure(20)};
  Measure d30{cantor_measure(30)};
  double worst = 0.0;
  for (int n = 1; n <= 64; ++n)
    worst = std::max(worst, std::abs(fourier_coeff(d20, n) - fourier_coeff(d30, n)));
  CHECK(worst < 1e-8);
}

TEST_CASE("hermitian symmetry of the self-similar product") {
  Measure cantor{cantor_measure(30)};
  double worst = 0.0;
  for (int n = 1; n <= 256; ++n)
    worst = std::max(worst, std::abs(std::conj(fourier_coeff(cantor, n)) -
                                     fourier_coeff(cantor, -n)));
  CHECK(worst < 1e-15);
}

TEST_CASE("self-similar validation") {
  CHECK_THROWS_AS(self_similar_measure(1, {0}, {1.0}, 5), std::invalid_argument);
  CHECK_THROWS_AS(self_similar_measure(3, {0, 3}, {0.5, 0.5}, 5),
                  std::invalid_argument);
  CHECK_THROWS_AS(self_similar_measure(3, {0, 0}, {0.5, 0.5}, 5),
                  std::invalid_argument);
  CHECK_THROWS_AS(self_similar_measure(3, {0, 2}, {0.6, 0.6}, 5),
                  std::invalid_argument);
  CHECK_THROWS_AS(self_similar_measure(3, {0, 2}, {0.5, 0.5}, 0),
                  std::invalid_argument);
}

TEST_CASE("atomization materialization cap") {
  SelfSimilarMeasure cantor = cantor_measure(30);
  CHECK_THROWS_AS(atomize(cantor, 24), resource_error);
  CHECK_NOTHROW(atomize(cantor, 8));
}

TEST_CASE("poisson and herglotz agree and normalize") {
  Measure three{three_atom()};
  Measure cantor{cantor_measure(30)};
  for (const Measure& mu : {three, cantor}) {
    CHECK(std::abs(herglotz(mu, cplx{0.0, 0.0}) - cplx{1.0, 0.0}) < 1e-13);
    for (cplx z : disc_grid(0.9, 25)) {
      double p = poisson(mu, z);
      CHECK(p > 0.0);
      CHECK(std::abs(herglotz(mu, z).real() - p) < 1e-10);
    }
  }
  CHECK_THROWS_AS(poisson(three, cplx{1.0, 0.0}), std::domain_error);
}

TEST_CASE("cantor poisson value is stable across truncation depth") {
  CHECK(poisson(Measure{cantor_measure(30)}, cplx{0.5, 0.0}) ==
        doctest::Approx(1.448689190585).epsilon(1e-9));
  // the same value from the depth-20 atomization's exact kernel sum
  AtomicMeasure atoms = atomize(cantor_measure(16), 16);
  CHECK(poisson(Measure{atoms}, cplx{0.5, 0.0}) ==
        doctest::Approx(poisson(Measure{cantor_measure(16)}, cplx{0.5, 0.0}))
            .epsilon(1e-11));
}

TEST_CASE("cauchy transform closed forms") {
  Measure dirac = atomic_measure({{0.0, 1.0}});
  for (cplx z : disc_grid(0.8, 10))
    CHECK(std::abs(cauchy(dirac, z) - 1.0 / (1.0 - z)) < 1e-14);

  DensityMeasure cos_density = density_measure({cplx{0.5, 0.0}});
  for (cplx z : disc_grid(0.8, 10))
    CHECK(std::abs(cauchy(Measure{cos_density}, z) - (1.0 + 0.5 * z)) < 1e-15);

  AtomicMeasure three = three_atom();
  std::vector<cplx> g(3, cplx{1.0, 0.0});
  for (cplx z : disc_grid(0.8, 10))
    CHECK(std::abs(cauchy(three, g, z) - cauchy(Measure{three}, z)) < 1e-15);
}

TEST_CASE("density measures") {
  DensityMeasure cos_density = density_measure({cplx{0.5, 0.0}});
  CHECK(cos_density.density(0.0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(std::abs(cos_density.density(0.5)) < 1e-15);
  Measure mu{cos_density};
  CHECK(std::abs(fourier_coeff(mu, 1) - cplx{0.5, 0.0}) < 1e-15);
  CHECK(std::abs(fourier_coeff(mu, -1) - cplx{0.5, 0.0}) < 1e-15);
  CHECK(std::abs(fourier_coeff(mu, 2)) == 0.0);
  CHECK(std::abs(fourier_coeff(mu, 0) - cplx{1.0, 0.0}) == 0.0);

  // 1 + 2 cos goes negative
  CHECK_THROWS_AS(density_measure({cplx{1.0, 0.0}}), std::invalid_argument);
}

TEST_CASE("midpoint quadrature carrier") {
  DensityMeasure cos_density = density_measure({cplx{0.5, 0.0}});
  AtomicMeasure quad = quadrature_measure(cos_density, 512);
  CHECK(quad.size() == 512);
  CHECK(quad.mass() == doctest::Approx(1.0).epsilon(1e-13));
  for (int n = 0; n <= 10; ++n)
    CHECK(std::abs(pushforward_fc(quad, n) -
                   fourier_coeff(Measure{cos_density}, n)) < 1e-12);
  CHECK_THROWS_AS(quadrature_measure(cos_density, 511), std::invalid_argument);
}

TEST_CASE("disc grid is deterministic and stays inside the radius") {
  std::vector<cplx> grid = disc_grid(0.9, 100);
  CHECK(grid.size() == 100);
  double max_r = 0.0;
  for (cplx z : grid) max_r = std::max(max_r, std::abs(z));
  CHECK(max_r <= 0.9 + 1e-15);
  CHECK(max_r == doctest::Approx(0.9).epsilon(1e-12));
  CHECK(disc_grid(0.9, 100) == grid);
  CHECK_THROWS_AS(disc_grid(1.0, 10), std::invalid_argument);
}
