#pragma once

#include <functional>
#include <string>
#include <vector>

#include "bozk/grid.hpp"

namespace bozk {

struct SteinConfig {
  double b = 0.5;
  double R = 100;     // outer truncation radius
  double h = 1e-8;    // inner cutoff
  int panels_per_decade = 4;
};
void validate(const SteinConfig& c);

// Uniform samples, evaluated by 4-point Lagrange interpolation.
struct SampledFunction {
  double x0 = 0, dx = 1;
  std::vector<cplx> v;

  cplx operator()(double x) const;
  double lo() const { return x0; }
  double hi() const { return x0 + dx * double(v.size() - 1); }
  double sup_abs() const;
};

template <class F>
SampledFunction sample(F&& f, double lo, double hi, double dx) {
  SampledFunction s;
  s.x0 = lo;
  s.dx = dx;
  std::size_t n = std::size_t(std::ceil((hi - lo) / dx)) + 1;
  s.v.resize(n);
  for (std::size_t k = 0; k < n; ++k) s.v[k] = f(lo + dx * double(k));
  return s;
}

struct SteinValue {
  double value = 0;     // sqrt(integral + inner)
  double integral = 0;  // quadrature over h <= |s| <= R
  double inner = 0;     // linear-model patch |s| < h
  double tail_bar = 0;  // bound on the |s| > R part (squared units, not added)
};

SteinValue stein_derivative(const SampledFunction& f, const SteinConfig& c, double x);
std::vector<SteinValue> stein_derivative(const SampledFunction& f, const SteinConfig& c,
                                         const std::vector<double>& xs);

// Same quadrature on a closed-form function.  `panel` is the width of the
// uniform outer panels; `sup` bounds |f| for the tail bar.
SteinValue stein_derivative_fn(const std::function<cplx(double)>& f, double panel, double sup,
                               const SteinConfig& c, double x);

// integral of |1 - e^{iy}|^2 / |y|^{1+2b} over the real line
double phase_constant_sq(double b);
// (2/(1-b) + 2/b)^{1/2} (eta^2 t)^b
double phase_bound(double b, double eta, double t);

// calibrated constant for mixed_phase_bound (see tests/test_stein.cpp)
inline constexpr double kMixedPhaseC0 = 5.0;
double mixed_phase_bound(double b, double t, double x);

// D^b of exp(-i t x|x|) at x.  The |s| > R part uses the unimodular model
// 2R^{-2b}/b; `error` bounds the neglected oscillatory remainder.
struct MixedPhaseMeasure {
  double value = 0;
  double error = 0;
};
MixedPhaseMeasure mixed_phase_measure(double b, double t, double x, double R = 40);

// D^b of a unimodular f at x with the same tail model; kmin bounds the local
// frequency of f beyond radius R from below.
MixedPhaseMeasure unimodular_measure(const std::function<cplx(double)>& f, double b, double R,
                                     double panel, double kmin, double x);

struct RefineConfig {
  double center = 0;
  double half_width = 1;  // evaluation window [center - w, center + w]
  int levels = 3;
  int oversample = 8;     // samples per evaluation cell
  double delta_div = 0.10;
  double delta_conv = 0.02;
  SteinConfig stein{0.5, 20, 1e-8, 4};
};

struct RefineResult {
  std::vector<double> cell;   // evaluation spacing per level
  std::vector<double> norms;  // windowed L2 norm of D^b f per level
  std::vector<double> ratios; // norms[k+1] / norms[k]
  std::string verdict;        // divergent | convergent | inconclusive
};

// windowed norm at one level for a generic sampled quantity
double window_norm(const SampledFunction& f, const SteinConfig& c, double center,
                   double half_width, int cells_per_side);

std::string classify_ratios(const std::vector<double>& ratios, double delta_div,
                            double delta_conv, const char* up, const char* flat);

// samples of f at step half_width/(cells*oversample), aligned so that the
// evaluation midpoints are sample nodes, padded by R on both sides
SampledFunction refine_lattice(const std::function<cplx(double)>& f, double center,
                               double half_width, int cells_per_side, int oversample, double R);

std::vector<double> norm_ratios(const std::vector<double>& norms);

RefineResult refine_divergence(const std::function<cplx(double)>& f, const RefineConfig& c);

}  // namespace bozk
