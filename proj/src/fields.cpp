#include "bozk/fields.hpp"

#include <cmath>

#include "bozk/error.hpp"

namespace bozk {

namespace {

void check(const GaussianParams& p) {
  if (!(p.sigma_x > 0) || !(p.sigma_y > 0)) throw ConfigError("Gaussian widths must be positive");
}

}  // namespace

RealField gaussian(const Grid2D& g, const GaussianParams& p) {
  check(p);
  RealField f(g);
  for (int j = 0; j < g.ny; ++j) {
    double ry = (g.yc[j] - p.y0) / p.sigma_y;
    for (int i = 0; i < g.nx; ++i) {
      double rx = (g.xc[i] - p.x0) / p.sigma_x;
      f(i, j) = p.amplitude * std::exp(-0.5 * (rx * rx + ry * ry));
    }
  }
  return f;
}

RealField dx_gaussian(const Grid2D& g, const GaussianParams& p) {
  RealField f = gaussian(g, p);
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) f(i, j) *= -(g.xc[i] - p.x0) / (p.sigma_x * p.sigma_x);
  return f;
}

RealField two_solitary_bumps(const Grid2D& g, const BumpPairParams& p) {
  if (!(p.width > 0)) throw ConfigError("bump width must be positive");
  RealField f(g);
  const double c1 = -0.5 * p.separation, c2 = 0.5 * p.separation;
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) {
      double y = g.yc[j];
      double r1 = std::hypot(g.xc[i] - c1, y) / p.width;
      double r2 = std::hypot(g.xc[i] - c2, y) / p.width;
      double s1 = 1 / std::cosh(r1), s2 = 1 / std::cosh(r2);
      f(i, j) = p.amplitude1 * s1 * s1 + p.amplitude2 * s2 * s2;
    }
  return f;
}

RealField random_bump_mixture(const Grid2D& g, Rng& rng) {
  RealField f(g);
  const int count = rng.integer(2, 5);
  const double reach = std::min(g.Lx, g.Ly) / 8;
  for (int b = 0; b < count; ++b) {
    GaussianParams p;
    p.amplitude = rng.uniform(-1, 1);
    p.sigma_x = rng.uniform(0.8, 2.0);
    p.sigma_y = rng.uniform(0.8, 2.0);
    p.x0 = rng.uniform(-reach, reach);
    p.y0 = rng.uniform(-reach, reach);
    RealField bump = gaussian(g, p);
    for (std::size_t k = 0; k < f.v.size(); ++k) f.v[k] += bump.v[k];
  }
  return f;
}

RealField random_noise(const Grid2D& g, Rng& rng) {
  RealField f(g);
  for (double& a : f.v) a = rng.uniform(-1, 1);
  return f;
}

}  // namespace bozk
