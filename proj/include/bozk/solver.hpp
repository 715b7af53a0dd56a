#pragma once

#include <string>
#include <vector>

#include "bozk/fft.hpp"
#include "bozk/weights.hpp"

namespace bozk {

struct SolverConfig {
  double dt = 1e-3;
  double T = 1.0;
  double mu = 0.0;
  bool dealias = true;
  int stride = 10;
  bool nonlinear = true;  // false: linear flow only
};
void validate(const SolverConfig& c);
long step_count(const SolverConfig& c);  // T/dt, required to be an integer

struct SimulationState {
  double t = 0;
  SpectrumField uh;
  long steps = 0;
};

// spectrum of -1/2 d/dx (u^2); with dealias the input and output are masked
SpectrumField nonlinear_rhs(const SpectrumField& uh, bool dealias);

// Integrating-factor RK4 with precomputed exponentials.
class Stepper {
 public:
  Stepper(const Grid2D& g, const SolverConfig& c);
  void advance(SimulationState& s) const;
  SpectrumField rhs(const SpectrumField& uh) const;
  const SolverConfig& config() const { return cfg_; }

 private:
  Grid2D grid_;
  SolverConfig cfg_;
  std::vector<cplx> E_, E2_, dx_half_;
  std::vector<double> mask_;
};

SimulationState step(const SimulationState& s, const SolverConfig& c);

struct DiagnosticsSpec {
  std::vector<double> hs;               // Sobolev orders to record
  std::vector<WeightSpec> weights;      // weighted L2 norms to record
};

struct SeriesRecord {
  double t = 0;
  double l2 = 0;
  std::vector<double> hs;
  std::vector<cplx> zmode;  // u_hat(0, eta_n) for every n
  double moment_x = 0;      // spectral first moment
  double moment_box = 0;    // sum of x u dx dy on the centered box
  std::vector<double> w;
  double max_abs = 0;
  double frame_fraction = 0;  // share of ||u||^2 with |x| >= 0.45 Lx or |y| >= 0.45 Ly
};

struct TimeSeries {
  double mu = 0;
  double dt = 0;
  std::vector<double> hs_orders;
  std::vector<std::string> weight_ids;
  std::vector<SeriesRecord> records;
  bool aborted = false;
  std::string abort_audit;
  std::string abort_message;
};

struct RunResult {
  TimeSeries series;
  RealField final_field;
};

// Steps from 0 to T.  A failed audit (cfl, blowup) stops the run and is
// reported through series.aborted rather than thrown.
RunResult run(const RealField& phi, const SolverConfig& c, const DiagnosticsSpec& d = {});

struct PicardResult {
  RealField u;                    // iterate at t = T
  std::vector<double> residuals;  // sup over the time grid of the L2 update
  bool converged = false;
  int iterations = 0;
};

inline constexpr int kPicardNodes = 33;
PicardResult picard_solve(const RealField& phi, double T, double mu, int max_iter, double tol,
                          bool dealias = true);

}  // namespace bozk
