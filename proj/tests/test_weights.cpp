#include <doctest.h>

#include <cmath>

#include "bozk/error.hpp"
#include "bozk/weights.hpp"

using namespace bozk;

TEST_CASE("beta examples") {
  for (int N : {1, 3, 8}) {
    CHECK(beta(N, 0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(beta(N, 4 * N) == doctest::Approx(2.0 * N).epsilon(1e-12));
    CHECK(beta(N, -4 * N) == doctest::Approx(2.0 * N).epsilon(1e-12));
  }
  CHECK(beta(5, 5) == doctest::Approx(std::sqrt(26.0)).epsilon(1e-14));
  CHECK_THROWS_AS(beta(0, 1.0), ConfigError);
}

TEST_CASE("beta: <x> inside, 2N outside, symmetric") {
  for (int N : {1, 2, 7}) {
    for (double x = 0; x <= N; x += 0.05 * N) CHECK(beta(N, x) == doctest::Approx(japanese(x)).epsilon(1e-14));
    for (double x = 3 * N; x <= 6 * N; x += 0.3 * N) CHECK(beta(N, x) == doctest::Approx(2.0 * N).epsilon(1e-12));
    for (double x : {0.3, 1.7, 2.2 * N, 2.9 * N}) CHECK(beta(N, x) == beta(N, -x));
  }
}

TEST_CASE("property: beta non-decreasing, slope <= 1, beta <= <x>") {
  for (int N : {1, 2, 3, 5, 8, 13, 32, 100}) {
    BetaAudit a = audit_beta(N);
    CHECK(a.min_fd_slope >= -1e-9);
    CHECK(a.max_fd_slope <= 1 + 1e-8);
    CHECK(a.min_slope >= 0);
    CHECK(a.max_slope <= 1);
    CHECK(a.max_excess <= 1e-12);
    CHECK(a.join_gap <= 1e-9);
    CHECK(std::isfinite(a.second_ratio));
  }
}

TEST_CASE("beta'' constant grows with N (recorded, not bounded)") {
  // |beta''| ~ 1/N on the band while d^2<x> ~ 1/N^3, so the ratio scales like N^2
  double c4 = audit_beta(4).second_ratio, c16 = audit_beta(16).second_ratio;
  CHECK(c16 / c4 == doctest::Approx(16.0).epsilon(0.25));
}

TEST_CASE("weight families") {
  Grid2D g = make_grid(64, 64, 40, 40);
  RealField t = weight_field(g, WeightSpec::truncated(4));
  RealField p1 = weight_field(g, WeightSpec::polynomial(1));
  CHECK(t(0, 0) == doctest::Approx(1.0));
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) {
      double rho = std::hypot(g.xc[i], g.yc[j]);
      CHECK(t(i, j) <= p1(i, j) * (1 + 1e-15));
      if (rho <= 4) CHECK(t(i, j) == p1(i, j));
      if (rho >= 12) CHECK(t(i, j) == doctest::Approx(8.0).epsilon(1e-12));
    }
  RealField p0 = weight_field(g, WeightSpec::polynomial(0));
  for (double v : p0.v) CHECK(v == 1.0);

  CHECK(weight_value(WeightSpec::damped(1, 0.5), 1, 0) == doctest::Approx(std::sqrt(2) * std::exp(-0.5)).epsilon(1e-15));
  CHECK(weight_value(WeightSpec::damped(1, 0.5), 1, 0) == doctest::Approx(0.8578).epsilon(1e-4));
  CHECK(weight_value(WeightSpec::gamma_power(0.5), 3, 4) == doctest::Approx(std::pow(26.0, 0.25)));
  CHECK(weight_value(WeightSpec::polynomial(2), 1, 2) == doctest::Approx(6.0));
}

TEST_CASE("weight ids and validation") {
  CHECK(WeightSpec::truncated(8).id() == "trunc8");
  CHECK(WeightSpec::polynomial(2.5).id() == "poly2.5");
  CHECK(WeightSpec::gamma_power(0.5).id() == "gamma0.5");
  CHECK(WeightSpec::damped(1, 0.1).id() == "damped1_0.1");
  CHECK_THROWS_AS(validate(WeightSpec::truncated(0)), ConfigError);
  CHECK_THROWS_AS(validate(WeightSpec::polynomial(-1)), ConfigError);
  CHECK_THROWS_AS(validate(WeightSpec::gamma_power(1.5)), ConfigError);
  CHECK_THROWS_AS(validate(WeightSpec::damped(0.5, 1.0)), ConfigError);
  CHECK_THROWS_AS(validate(WeightSpec::damped(0.5, 0.0)), ConfigError);
}

TEST_CASE("damped weights: gradient bounded independently of lambda") {
  Grid2D g = make_grid(256, 256, 200, 200);
  double worst = 0;
  for (double lam : {0.5, 0.1, 0.01, 0.001}) {
    RealField w = weight_field(g, WeightSpec::damped(1, lam));
    double m = 0;
    for (int j = 0; j + 1 < g.ny; ++j)
      for (int i = 0; i + 1 < g.nx; ++i) {
        double gx = (w(i + 1, j) - w(i, j)) / g.dx, gy = (w(i, j + 1) - w(i, j)) / g.dy;
        if (i == g.nx / 2 - 1 || j == g.ny / 2 - 1) continue;  // seam of the centered box
        m = std::max(m, std::hypot(gx, gy));
      }
    worst = std::max(worst, m);
  }
  CHECK(worst <= 1.5);
}

TEST_CASE("a2_statistic") {
  for (double L : {1e-3, 0.5, 1.0, 10.0, 1e4}) CHECK(a2_statistic(0.5, -L, L) == doctest::Approx(4.0 / 3.0).epsilon(1e-13));
  for (double a : {0.2, -0.7}) CHECK(a2_statistic(a, -3, 3) == doctest::Approx(1 / ((1 + a) * (1 - a))).epsilon(1e-13));
  CHECK(std::isinf(a2_statistic(1.5, -1, 1)));
  CHECK(std::isinf(a2_statistic(1.5, 0, 2)));
  CHECK(std::isinf(a2_statistic(-1.5, -2, 0.1)));
  CHECK(std::isfinite(a2_statistic(1.5, 1, 2)));
  CHECK(a2_statistic(0, -5, 17) == doctest::Approx(1.0));
  // [1,4], alpha = 1: (avg x) * (avg 1/x) = 2.5 * ln(4)/3
  CHECK(a2_statistic(1, 1, 4) == doctest::Approx(2.5 * std::log(4.0) / 3).epsilon(1e-14));
  CHECK_THROWS_AS(a2_statistic(0.5, 1, 1), ConfigError);
}
