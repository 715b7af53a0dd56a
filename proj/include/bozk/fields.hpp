#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "bozk/grid.hpp"

namespace bozk {

struct GaussianParams {
  double amplitude = 1;
  double sigma_x = 1, sigma_y = 1;
  double x0 = 0, y0 = 0;
};

// A exp(-(x-x0)^2/(2 sx^2) - (y-y0)^2/(2 sy^2)) on centered coordinates
RealField gaussian(const Grid2D& g, const GaussianParams& p);
// d/dx of the Gaussian above; its x-mean vanishes for every y
RealField dx_gaussian(const Grid2D& g, const GaussianParams& p);

struct BumpPairParams {
  double amplitude1 = 1, amplitude2 = 0.5;
  double width = 1;
  double separation = 6;  // along x, centered on the origin
};
// two radial sech^2 bumps
RealField two_solitary_bumps(const Grid2D& g, const BumpPairParams& p);

// Deterministic uniform doubles from a 64-bit Mersenne twister; the
// standard distributions are not reproducible across library versions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  double uniform() { return double(eng_() >> 11) * 0x1.0p-53; }
  double uniform(double a, double b) { return a + (b - a) * uniform(); }
  int integer(int lo, int hi) { return lo + int(uniform() * (hi - lo + 1)); }

 private:
  std::mt19937_64 eng_;
};

// Sum of 2-5 Gaussian bumps with random signs, widths and centers.
RealField random_bump_mixture(const Grid2D& g, Rng& rng);
// white noise at every grid point (rough data)
RealField random_noise(const Grid2D& g, Rng& rng);

}  // namespace bozk
