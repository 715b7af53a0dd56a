#pragma once

#include <functional>
#include <string>
#include <vector>

#include "bozk/solver.hpp"
#include "bozk/stein.hpp"

namespace bozk {

struct CutoffSpec {
  double epsilon = 0.5;
};
void validate(const CutoffSpec& c);
// C-infinity bump: 1 on |xi| <= eps/2, 0 on |xi| >= eps
double chi_tilde(double xi, const CutoffSpec& c);

struct B1Config {
  int eta_modes = 2;          // eta_n for |n| <= eta_modes
  double half_width = 0.01;   // xi window around 0
  int oversample = 8;
  double R = 2.0;
  double delta_div = 0.10;
  double delta_conv = 0.02;
  double edge_tol = 1e-8;     // admissible spectral mass near the grid edge
};

struct UCReport {
  double t = 0;
  std::vector<double> cell;
  std::vector<double> norms;
  std::vector<double> ratios;
  std::string verdict;  // obstructed | persists | inconclusive
};

// phi_hat(xi, eta_n) at arbitrary xi by direct summation
std::vector<cplx> eta_profile(const RealField& phi, int n);
cplx transform_at(const RealField& phi, const std::vector<cplx>& profile, double xi);

UCReport b1_indicator(const RealField& phi, double t, const CutoffSpec& cut, int levels,
                      const B1Config& cfg = {});

struct PersistenceRow {
  double t = 0;
  std::vector<double> z;    // Z_{s,r} norm per r
  std::vector<double> l2r;  // weighted part alone
};

struct PersistenceResult {
  std::vector<double> r_list;
  double s = 0;
  std::vector<PersistenceRow> rows;
  std::vector<double> growth;    // max_t Z(t) / Z(0) per r
  std::vector<double> tail_bar;  // relative weighted mass in the outer frame, max over t
  std::vector<bool> flagged;
  double max_frame_fraction = 0;
};

PersistenceResult persistence_scan(const RealField& phi, const SolverConfig& cfg,
                                   const std::vector<double>& r_list, double s,
                                   double growth_factor = 2.0, double frame_tol = 1e-10);

struct DomainGrowthConfig {
  double L0 = 16 * M_PI;
  double Ly = 16 * M_PI;
  int nx0 = 128;
  int ny = 128;
  std::vector<int> factors{1, 2, 4};
  SolverConfig solver{1e-3, 0.5, 0.0, true, 500, true};
  double r_tail = 2.5;
  double r_full = 2.0;
  double s_full = 4.0;
  double rho0_fraction = 0.25;  // tail region rho > rho0_fraction * L0
};

struct DomainGrowthResult {
  std::vector<double> L;
  std::vector<double> tail;         // integral over rho > rho0 of <x,y>^{2 r_tail} u^2
  std::vector<double> full;         // Z_{s_full, r_full} norm
  std::vector<double> tail_ratios;  // per doubling
  double full_spread = 0;           // max/min - 1 of the full norm
};

DomainGrowthResult domain_growth(const std::function<RealField(const Grid2D&)>& data,
                                 const DomainGrowthConfig& cfg);

struct MomentDrift {
  double slope = 0;
  double predicted = 0;
  double rel_error = 0;
  int zero_crossings = 0;
};
MomentDrift moment_drift(const TimeSeries& ts);

}  // namespace bozk
