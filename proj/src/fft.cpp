#include "bozk/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

#include "bozk/error.hpp"

namespace bozk {

namespace {

std::mutex plan_mutex;
std::map<std::tuple<int, int, int>, fftw_plan> plans;

// Plans are created once per (nx, ny, sign) and executed on caller buffers
// through the new-array interface, which is safe from any thread.
fftw_plan get_plan(int nx, int ny, int sign) {
  std::lock_guard<std::mutex> lock(plan_mutex);
  auto key = std::make_tuple(nx, ny, sign);
  auto it = plans.find(key);
  if (it != plans.end()) return it->second;
  auto* buf = fftw_alloc_complex(std::size_t(nx) * ny);
  fftw_plan p = fftw_plan_dft_2d(ny, nx, buf, buf, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
  fftw_free(buf);
  plans.emplace(key, p);
  return p;
}

void run(std::vector<cplx>& data, int nx, int ny, int sign) {
  auto* p = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(get_plan(nx, ny, sign), p, p);
}

}  // namespace

SpectrumField forward(const RealField& f) {
  const Grid2D& g = f.grid;
  SpectrumField F(g);
  for (std::size_t k = 0; k < g.size(); ++k) F.c[k] = f.v[k];
  run(F.c, g.nx, g.ny, FFTW_FORWARD);
  const double s = g.dx * g.dy;
  for (auto& a : F.c) a *= s;
  return F;
}

std::vector<cplx> inverse_complex(const SpectrumField& F) {
  const Grid2D& g = F.grid;
  std::vector<cplx> d = F.c;
  run(d, g.nx, g.ny, FFTW_BACKWARD);
  const double s = 1.0 / (g.Lx * g.Ly);
  for (auto& a : d) a *= s;
  return d;
}

RealField inverse(const SpectrumField& F) {
  auto d = inverse_complex(F);
  RealField f(F.grid);
  for (std::size_t k = 0; k < d.size(); ++k) f.v[k] = d[k].real();
  return f;
}

std::vector<cplx> tabulate(const Grid2D& g, const Symbol& m) {
  std::vector<cplx> t(g.size());
  const double Kx = M_PI / g.dx, Ky = M_PI / g.dy;
  for (int j = 0; j < g.ny; ++j) {
    double ey[2] = {g.eta[j], Ky};
    int ny_rep = (j == g.nyq_y()) ? 2 : 1;
    if (ny_rep == 2) ey[0] = -Ky;
    for (int i = 0; i < g.nx; ++i) {
      double ex[2] = {g.xi[i], Kx};
      int nx_rep = (i == g.nyq_x()) ? 2 : 1;
      if (nx_rep == 2) ex[0] = -Kx;
      cplx acc = 0;
      for (int a = 0; a < nx_rep; ++a)
        for (int b = 0; b < ny_rep; ++b) acc += m(ex[a], ey[b]);
      t[i + std::size_t(g.nx) * j] = acc / double(nx_rep * ny_rep);
    }
  }
  return t;
}

void project_nyquist_real(SpectrumField& F) {
  const int hx = F.grid.nyq_x(), hy = F.grid.nyq_y();
  F(hx, 0) = F(hx, 0).real();
  F(0, hy) = F(0, hy).real();
  F(hx, hy) = F(hx, hy).real();
}

SpectrumField apply_table(const SpectrumField& F, const std::vector<cplx>& m) {
  if (m.size() != F.c.size()) throw ConfigError("multiplier table size mismatch");
  SpectrumField out(F.grid);
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (!std::isfinite(m[k].real()) || !std::isfinite(m[k].imag()))
      throw ConfigError("multiplier is not finite at a grid wavenumber");
    out.c[k] = F.c[k] * m[k];
  }
  project_nyquist_real(out);
  return out;
}

SpectrumField apply_multiplier(const SpectrumField& F, const Symbol& m) {
  return apply_table(F, tabulate(F.grid, m));
}

std::vector<double> dealias_mask(const Grid2D& g) {
  std::vector<double> mask(g.size());
  for (int j = 0; j < g.ny; ++j) {
    bool ky = 3 * std::abs(signed_index(j, g.ny)) < g.ny;
    for (int i = 0; i < g.nx; ++i) {
      bool kx = 3 * std::abs(signed_index(i, g.nx)) < g.nx;
      mask[i + std::size_t(g.nx) * j] = (kx && ky) ? 1.0 : 0.0;
    }
  }
  return mask;
}

SpectrumField dealias(const SpectrumField& F) {
  auto mask = dealias_mask(F.grid);
  SpectrumField out = F;
  for (std::size_t k = 0; k < mask.size(); ++k)
    if (mask[k] == 0.0) out.c[k] = 0;
  return out;
}

}  // namespace bozk
