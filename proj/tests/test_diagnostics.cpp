#include <doctest.h>

#include <cmath>

#include "bozk/diagnostics.hpp"
#include "bozk/error.hpp"
#include "bozk/fields.hpp"
#include "bozk/suites.hpp"

using namespace bozk;

namespace {

RealField cos_x(const Grid2D& g) {
  RealField f(g);
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) f(i, j) = std::cos(g.xc[i]);
  return f;
}

}  // namespace

TEST_CASE("Sobolev examples on the 2pi torus") {
  Grid2D g = make_grid(16, 16, 2 * M_PI, 2 * M_PI);
  RealField c = cos_x(g);
  // ||cos x||^2 = 2 pi^2, weight <1>^2 = 2
  CHECK(norm(c, NormSpec::hs(1)) == doctest::Approx(2 * M_PI).epsilon(1e-13));
  CHECK(norm(c, NormSpec::hs(0)) == doctest::Approx(M_PI * std::sqrt(2.0)).epsilon(1e-13));
  // 1 + <xi>^{2s1} + <eta>^{2s2} at (1,0) is 1 + 4 + 1
  CHECK(norm(c, NormSpec::aniso(2, 2)) == doctest::Approx(std::sqrt(2 * M_PI * M_PI * 6)).epsilon(1e-13));
}

TEST_CASE("order-zero norms all reduce to L2") {
  Rng rng(2);
  Grid2D g = make_grid(32, 32, 20, 20);
  RealField f = random_bump_mixture(g, rng);
  double l2 = l2_norm(f);
  CHECK(norm(f, NormSpec::hs(0)) == doctest::Approx(l2).epsilon(1e-12));
  CHECK(norm(f, NormSpec::l2r(0)) == doctest::Approx(l2).epsilon(1e-12));
  CHECK(norm(f, NormSpec::l2w(WeightSpec::polynomial(0))) == doctest::Approx(l2).epsilon(1e-12));
}

TEST_CASE("property: Hs non-decreasing in s; Zsr is the root sum of squares") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Rng rng(seed);
    Grid2D g = make_grid(32, 32, rng.uniform(10, 40), rng.uniform(10, 40));
    RealField f = random_bump_mixture(g, rng);
    double prev = 0;
    for (double s : {0.0, 0.5, 1.0, 2.0, 3.5}) {
      double h = norm(f, NormSpec::hs(s));
      CHECK(h >= prev);
      prev = h;
    }
    double hs = norm(f, NormSpec::hs(4)), lr = norm(f, NormSpec::l2r(1.5));
    CHECK(norm(f, NormSpec::zsr(4, 1.5)) == doctest::Approx(std::hypot(hs, lr)).epsilon(1e-13));
  }
}

TEST_CASE("first moment of a shifted Gaussian is x0 times its mass") {
  // the spectral moment differentiates in xi with step 2pi/L; doubling L must shrink its error
  for (double x0 : {-1.3, 0.0, 0.7}) {
    GaussianParams p;
    p.x0 = x0;
    p.amplitude = 2;
    const double exact = x0 * 2 * M_PI * p.amplitude;
    double err[2];
    for (int k = 0; k < 2; ++k) {
      Grid2D g = make_grid(64 << k, 64, (16 << k) * M_PI, 16 * M_PI);
      RealField u = gaussian(g, p);
      err[k] = std::abs(spectral_moment_x(forward(u)) - exact);
      CHECK(box_moment_x(u) == doctest::Approx(exact).epsilon(1e-12).scale(1));
    }
    CHECK(err[0] <= 1e-5 * std::max(1.0, std::abs(exact)));
    if (x0 != 0) CHECK(err[1] < err[0] / 8);
  }
}

TEST_CASE("frame_fraction") {
  Grid2D g = make_grid(64, 64, 16 * M_PI, 16 * M_PI);
  CHECK(frame_fraction(gaussian(g, {})) < 1e-30);
  RealField one(g, std::vector<double>(g.size(), 1.0));
  CHECK(frame_fraction(one) == doctest::Approx(1 - 0.9 * 0.9).epsilon(0.05));
  CHECK(frame_fraction(RealField(g)) == 0);
}

TEST_CASE("conservation_report needs mu = 0; slope fit") {
  TimeSeries ts;
  ts.mu = 0.1;
  ts.records.resize(3);
  CHECK_THROWS_AS(conservation_report(ts), ConfigError);
  CHECK(least_squares_slope({0, 1, 2, 3}, {1, 3.5, 6, 8.5}) == doctest::Approx(2.5).epsilon(1e-14));
  CHECK_THROWS_AS(least_squares_slope({1}, {2}), ConfigError);
}

TEST_CASE("property: inequality ratios are scale-free") {
  Grid2D g = make_grid(64, 64, 16 * M_PI, 16 * M_PI);
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    Rng rng(seed);
    RealField f = random_bump_mixture(g, rng), a = random_bump_mixture(g, rng);
    RealField f2 = f;
    for (double& x : f2.v) x *= 2;
    for (const IneqCase& c : inequality_cases()) {
      double r1 = inequality_ratio(c.kind, c.p, f, c.paired ? &a : nullptr);
      double r2 = inequality_ratio(c.kind, c.p, f2, c.paired ? &a : nullptr);
      CHECK(std::isfinite(r1));
      CHECK(r2 == doctest::Approx(r1).epsilon(1e-12));
    }
  }
}

TEST_CASE("radial Gaussian interpolation ratio is finite and below 1") {
  Grid2D g = make_grid(64, 64, 16 * M_PI, 16 * M_PI);
  double r = inequality_ratio(IneqKind::Interpolation, IneqParams{}, gaussian(g, {}));
  CHECK(r > 0);
  CHECK(r < 1);
}

TEST_CASE("inequality suites stay under their recorded ceilings") {
  Grid2D g = make_grid(64, 64, 16 * M_PI, 16 * M_PI);
  for (const Check& c : inequality_checks(g, 50, 1)) {
    INFO(c.name << " " << c.value << " vs " << c.limit);
    CHECK(c.pass);
  }
  for (const Check& c : a2_checks()) {
    INFO(c.name);
    CHECK(c.pass);
  }
  for (const Check& c : weights_checks({1, 2, 4, 8, 16, 32})) {
    INFO(c.name);
    CHECK(c.pass);
  }
}
