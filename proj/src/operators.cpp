#include "bozk/operators.hpp"

#include <cmath>

#include "bozk/error.hpp"

namespace bozk {

RealField hilbert_x(const RealField& f) {
  auto F = apply_multiplier(forward(f), [](double xi, double) { return cplx(0, -sgn(xi)); });
  return inverse(F);
}

Symbol fractional_symbol(FracKind kind, double z) {
  switch (kind) {
    case FracKind::J:
      return [z](double a, double b) { return cplx(std::pow(1 + a * a + b * b, z / 2), 0); };
    case FracKind::Jx:
      return [z](double a, double) { return cplx(std::pow(1 + a * a, z / 2), 0); };
    case FracKind::Jy:
      return [z](double, double b) { return cplx(std::pow(1 + b * b, z / 2), 0); };
    case FracKind::D:
      return [z](double a, double b) {
        double r2 = a * a + b * b;
        if (r2 == 0) return cplx(z == 0 ? 1.0 : 0.0, 0);
        return cplx(std::pow(r2, z / 2), 0);
      };
    case FracKind::Dx:
      return [z](double a, double) {
        if (a == 0) return cplx(z == 0 ? 1.0 : 0.0, 0);
        return cplx(std::pow(std::abs(a), z), 0);
      };
  }
  throw ConfigError("unknown fractional operator");
}

SpectrumField fractional_op(const SpectrumField& F, FracKind kind, double z) {
  if (z < 0 && (kind == FracKind::D || kind == FracKind::Dx)) {
    const Grid2D& g = F.grid;
    double scale = 0;
    for (const cplx& a : F.c) scale = std::max(scale, std::abs(a));
    double tol = 1e-12 * scale;
    bool bad = std::abs(F(0, 0)) > tol;
    if (kind == FracKind::Dx)
      for (int n = 0; n < g.ny; ++n) bad = bad || std::abs(F(0, n)) > tol;
    if (bad) throw ConfigError("negative-order homogeneous operator needs a zero-mean field");
  }
  return apply_multiplier(F, fractional_symbol(kind, z));
}

RealField fractional_op(const RealField& f, FracKind kind, double z) {
  return inverse(fractional_op(forward(f), kind, z));
}

std::vector<cplx> propagator_table(const Grid2D& g, double t, double mu) {
  if (mu < 0) throw ConfigError("viscosity must be non-negative");
  if (mu > 0 && t < 0) throw ConfigError("backward time with positive viscosity");
  auto gen = tabulate(g, [t, mu](double xi, double eta) {
    return cplx(-t * mu * (xi * xi + eta * eta), t * omega(xi, eta));
  });
  for (auto& a : gen) a = std::exp(a);
  return gen;
}

SpectrumField propagate(const SpectrumField& F, double t, double mu) {
  return apply_table(F, propagator_table(F.grid, t, mu));
}

double smoothing_ratio(const RealField& phi, double mu, double t, double lambda) {
  if (!(mu > 0) || !(t > 0) || !(lambda > 0))
    throw ConfigError("smoothing_ratio needs mu, t, lambda > 0");
  double n0 = l2_norm(phi);
  if (n0 == 0) throw ConfigError("smoothing_ratio of a zero field");
  auto F = propagate(forward(phi), t, mu);
  F = fractional_op(F, FracKind::J, lambda);
  return l2_norm(F) / ((1 + std::pow(t, -lambda / 2)) * n0);
}

}  // namespace bozk
