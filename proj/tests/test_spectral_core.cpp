#include <doctest.h>

#include <cmath>

#include "bozk/error.hpp"
#include "bozk/fft.hpp"
#include "bozk/fields.hpp"

using namespace bozk;

namespace {

double max_rel_diff(const RealField& a, const RealField& b) {
  double d = 0;
  for (std::size_t k = 0; k < a.v.size(); ++k) d = std::max(d, std::abs(a.v[k] - b.v[k]));
  return d / std::max(a.max_abs(), 1e-300);
}

}  // namespace

TEST_CASE("make_grid validates sizes and lengths") {
  CHECK_THROWS_AS(make_grid(127, 128, 1, 1), ConfigError);
  CHECK_THROWS_AS(make_grid(128, 7, 1, 1), ConfigError);
  CHECK_THROWS_AS(make_grid(6, 6, 1, 1), ConfigError);
  CHECK_THROWS_AS(make_grid(8, 8, 0, 1), ConfigError);
  CHECK_THROWS_AS(make_grid(8, 8, 1, -2), ConfigError);
  CHECK_NOTHROW(make_grid(8, 8, 1, 1));
}

TEST_CASE("grid layout: x fastest, centered coordinates, FFT-ordered wavenumbers") {
  Grid2D g = make_grid(16, 8, 4 * M_PI, 2 * M_PI);
  CHECK(g.dx == doctest::Approx(M_PI / 4));
  CHECK(g.xc[0] == 0);
  CHECK(g.xc[g.nx / 2] == doctest::Approx(-g.Lx / 2));
  CHECK(g.xi[1] == doctest::Approx(0.5));
  CHECK(g.xi[g.nx / 2] == doctest::Approx(-M_PI / g.dx));
  CHECK(g.eta[g.ny - 1] == doctest::Approx(-1.0));
  RealField f(g);
  f(3, 2) = 1;
  CHECK(f.v[3 + 16 * 2] == 1);
  CHECK(signed_index(8, 16) == -8);
  CHECK(signed_index(7, 16) == 7);
}

TEST_CASE("forward transform matches the continuum Gaussian transform") {
  // F(xi,eta) = 2 pi sx sy A exp(-(sx^2 xi^2 + sy^2 eta^2)/2)
  Grid2D g = make_grid(128, 128, 16 * M_PI, 16 * M_PI);
  GaussianParams p;
  p.amplitude = 1.5;
  p.sigma_x = 1.2;
  p.sigma_y = 1.1;
  SpectrumField F = forward(gaussian(g, p));
  double err = 0;
  for (int n = 0; n < g.ny; ++n)
    for (int m = 0; m < g.nx; ++m) {
      double xi = g.xi[m], eta = g.eta[n];
      double exact = 2 * M_PI * p.sigma_x * p.sigma_y * p.amplitude *
                     std::exp(-0.5 * (p.sigma_x * p.sigma_x * xi * xi + p.sigma_y * p.sigma_y * eta * eta));
      err = std::max(err, std::abs(F(m, n) - exact));
    }
  CHECK(err < 1e-12);
}

TEST_CASE("translation shows up as the phase exp(-i xi x0)") {
  // 128 points keep the alias images at xi +- 16 below roundoff
  Grid2D g = make_grid(128, 128, 16 * M_PI, 16 * M_PI);
  GaussianParams p;
  p.x0 = 1.7;
  SpectrumField F = forward(gaussian(g, p));
  for (int m : {1, 3, 5}) {
    double xi = g.xi[m];
    cplx exact = 2 * M_PI * std::exp(-0.5 * xi * xi) * std::exp(cplx(0, -xi * p.x0));
    CHECK(std::abs(F(m, 0) - exact) < 1e-12);
  }
}

TEST_CASE("property: inverse(forward(f)) == f and Parseval on seeded random fields") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Rng rng(seed);
    int nx = 2 * rng.integer(4, 24), ny = 2 * rng.integer(4, 24);
    Grid2D g = make_grid(nx, ny, rng.uniform(1, 60), rng.uniform(1, 60));
    RealField f = random_noise(g, rng);
    RealField back = inverse(forward(f));
    CHECK(max_rel_diff(f, back) < 1e-13);
    CHECK(l2_norm(forward(f)) == doctest::Approx(l2_norm(f)).epsilon(1e-13));
  }
}

TEST_CASE("Nyquist: symbols are averaged over +K and -K") {
  Grid2D g = make_grid(8, 8, 2 * M_PI, 2 * M_PI);
  auto odd = tabulate(g, [](double xi, double) { return cplx(0, xi); });
  auto even = tabulate(g, [](double xi, double) { return cplx(xi * xi, 0); });
  const std::size_t nyq = std::size_t(g.nyq_x());
  CHECK(std::abs(odd[nyq]) == 0);
  CHECK(even[nyq].real() == doctest::Approx(16.0));
  CHECK(std::abs(odd[1] - cplx(0, 1)) == 0);
}

TEST_CASE("property: odd multipliers keep the inverse real") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Rng rng(seed);
    Grid2D g = make_grid(2 * rng.integer(4, 20), 2 * rng.integer(4, 20), 10, 12);
    RealField f = random_noise(g, rng);
    SpectrumField D = apply_multiplier(forward(f), [](double xi, double eta) {
      return cplx(0, xi * xi * xi + eta);
    });
    auto z = inverse_complex(D);
    double re = 0, im = 0;
    for (const cplx& a : z) {
      re = std::max(re, std::abs(a.real()));
      im = std::max(im, std::abs(a.imag()));
    }
    CHECK(im <= 1e-13 * re);
  }
}

TEST_CASE("apply_table rejects non-finite symbols") {
  Grid2D g = make_grid(8, 8, 1, 1);
  SpectrumField F(g);
  std::vector<cplx> bad(g.size(), cplx(1, 0));
  bad[5] = cplx(std::nan(""), 0);
  CHECK_THROWS_AS(apply_table(F, bad), ConfigError);
}

TEST_CASE("2/3 dealias mask keeps 3|m| < nx and 3|n| < ny") {
  // with N divisible by 3 the mode N/3 must go: N/3 + N/3 aliases onto -N/3
  Grid2D g = make_grid(12, 18, 1, 1);
  auto mask = dealias_mask(g);
  for (int n = 0; n < g.ny; ++n)
    for (int m = 0; m < g.nx; ++m) {
      bool keep = std::abs(signed_index(m, g.nx)) <= 3 && std::abs(signed_index(n, g.ny)) <= 5;
      CHECK(mask[m + std::size_t(g.nx) * n] == (keep ? 1.0 : 0.0));
    }
}

TEST_CASE("transforms are bitwise deterministic") {
  Grid2D g = make_grid(32, 48, 10, 10);
  Rng rng(3);
  RealField f = random_noise(g, rng);
  SpectrumField a = forward(f), b = forward(f);
  CHECK(a.c == b.c);
}
