#pragma once

#include <complex>
#include <vector>

namespace bozk {

using cplx = std::complex<double>;

// Periodic nx-by-ny grid on [0,Lx) x [0,Ly).  Sample (i,j) lives at
// storage index i + nx*j (x fastest).  Wavenumber arrays are in FFT order,
// so index nx/2 carries the Nyquist value -pi/dx.
struct Grid2D {
  int nx = 0, ny = 0;
  double Lx = 0, Ly = 0;
  double dx = 0, dy = 0;
  std::vector<double> xi, eta;  // size nx, ny
  std::vector<double> xc, yc;   // centered coordinates in [-L/2, L/2)

  std::size_t size() const { return std::size_t(nx) * std::size_t(ny); }
  double dxi() const { return 2 * M_PI / Lx; }
  double deta() const { return 2 * M_PI / Ly; }
  int nyq_x() const { return nx / 2; }
  int nyq_y() const { return ny / 2; }
  bool operator==(const Grid2D& o) const {
    return nx == o.nx && ny == o.ny && Lx == o.Lx && Ly == o.Ly;
  }
};

Grid2D make_grid(int nx, int ny, double Lx, double Ly);

// signed index of FFT-ordered position k in a length-n axis
inline int signed_index(int k, int n) { return k < n / 2 ? k : k - n; }

struct RealField {
  Grid2D grid;
  std::vector<double> v;

  RealField() = default;
  explicit RealField(const Grid2D& g);
  RealField(const Grid2D& g, std::vector<double> samples);

  double& operator()(int i, int j) { return v[i + std::size_t(grid.nx) * j]; }
  double operator()(int i, int j) const { return v[i + std::size_t(grid.nx) * j]; }
  bool all_finite() const;
  double max_abs() const;
};

struct SpectrumField {
  Grid2D grid;
  std::vector<cplx> c;

  SpectrumField() = default;
  explicit SpectrumField(const Grid2D& g);

  cplx& operator()(int m, int n) { return c[m + std::size_t(grid.nx) * n]; }
  cplx operator()(int m, int n) const { return c[m + std::size_t(grid.nx) * n]; }
  bool all_finite() const;
};

void require_same_grid(const Grid2D& a, const Grid2D& b);

// discrete L2 norm, sqrt(sum |f|^2 dx dy)
double l2_norm(const RealField& f);
// same quantity from the spectrum: (2pi)^-2 sum |F|^2 dxi deta
double l2_norm(const SpectrumField& F);

}  // namespace bozk
