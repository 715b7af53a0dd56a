#include "bozk/grid.hpp"

#include <cmath>
#include <string>

#include "bozk/error.hpp"

namespace bozk {

Grid2D make_grid(int nx, int ny, double Lx, double Ly) {
  if (nx < 8 || ny < 8 || nx % 2 || ny % 2)
    throw ConfigError("grid sizes must be even and >= 8 (got " + std::to_string(nx) + "x" +
                      std::to_string(ny) + ")");
  if (!(Lx > 0) || !(Ly > 0) || !std::isfinite(Lx) || !std::isfinite(Ly))
    throw ConfigError("grid lengths must be positive and finite");
  Grid2D g;
  g.nx = nx;
  g.ny = ny;
  g.Lx = Lx;
  g.Ly = Ly;
  g.dx = Lx / nx;
  g.dy = Ly / ny;
  g.xi.resize(nx);
  g.xc.resize(nx);
  for (int i = 0; i < nx; ++i) {
    int m = signed_index(i, nx);
    g.xi[i] = 2 * M_PI * m / Lx;
    g.xc[i] = m * g.dx;
  }
  g.eta.resize(ny);
  g.yc.resize(ny);
  for (int j = 0; j < ny; ++j) {
    int n = signed_index(j, ny);
    g.eta[j] = 2 * M_PI * n / Ly;
    g.yc[j] = n * g.dy;
  }
  return g;
}

RealField::RealField(const Grid2D& g) : grid(g), v(g.size(), 0.0) {}

RealField::RealField(const Grid2D& g, std::vector<double> samples) : grid(g), v(std::move(samples)) {
  if (v.size() != g.size()) throw ConfigError("sample count does not match grid");
}

bool RealField::all_finite() const {
  for (double a : v)
    if (!std::isfinite(a)) return false;
  return true;
}

double RealField::max_abs() const {
  double m = 0;
  for (double a : v) m = std::max(m, std::abs(a));
  return m;
}

SpectrumField::SpectrumField(const Grid2D& g) : grid(g), c(g.size(), cplx(0, 0)) {}

bool SpectrumField::all_finite() const {
  for (const cplx& a : c)
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) return false;
  return true;
}

void require_same_grid(const Grid2D& a, const Grid2D& b) {
  if (!(a == b)) throw ConfigError("grid mismatch");
}

double l2_norm(const RealField& f) {
  double s = 0;
  for (double a : f.v) s += a * a;
  return std::sqrt(s * f.grid.dx * f.grid.dy);
}

double l2_norm(const SpectrumField& F) {
  double s = 0;
  for (const cplx& a : F.c) s += std::norm(a);
  return std::sqrt(s * F.grid.dxi() * F.grid.deta()) / (2 * M_PI);
}

}  // namespace bozk
