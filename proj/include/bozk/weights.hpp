#pragma once

#include <cmath>
#include <string>

#include "bozk/grid.hpp"

namespace bozk {

inline double japanese(double r) { return std::sqrt(1 + r * r); }

// Truncated weight profile.  On [N,3N] the slope is
//   beta'(x) = (x/<x>) (1 - S(s))^q,  s = (x-N)/(2N),
// with S the quintic smoothstep and q fixed by beta(3N) = 2N.
class BetaProfile {
 public:
  explicit BetaProfile(int N);
  int N() const { return N_; }
  double q() const { return q_; }
  double value(double x) const;
  double slope(double x) const;   // beta'
  double second(double x) const;  // beta''

 private:
  double slope_band(double x) const;
  int N_;
  double q_ = 0;
  std::vector<double> nodes_;  // cumulative values at panel edges on [N,3N]
};

// shared, lazily built profiles (thread safe)
const BetaProfile& beta_profile(int N);
double beta(int N, double x);

struct BetaAudit {
  int N = 0;
  double q = 0;
  double min_slope = 0, max_slope = 0;
  double max_fd_slope = 0;    // finite-difference slope, for the <= 1 check
  double min_fd_slope = 0;
  double max_excess = 0;      // max of beta - <x>, should be <= 0
  double second_ratio = 0;    // measured max |beta''| / d^2<x>
  double join_gap = 0;        // value mismatch at N and 3N
};
BetaAudit audit_beta(int N, int samples = 20000);

struct WeightSpec {
  enum class Kind { Truncated, Polynomial, GammaPower, Damped };
  Kind kind = Kind::Polynomial;
  int N = 1;
  double r = 0;
  double gamma = 0;
  double lambda = 0;

  static WeightSpec truncated(int N);
  static WeightSpec polynomial(double r);
  static WeightSpec gamma_power(double g);
  static WeightSpec damped(double g, double lambda);
  std::string id() const;  // short tag used in CSV column names
};

void validate(const WeightSpec& w);
double weight_value(const WeightSpec& w, double x, double y);
RealField weight_field(const Grid2D& g, const WeightSpec& w);

// (avg |x|^a over [lo,hi]) * (avg |x|^-a over [lo,hi]); +inf when an
// integral diverges.
double a2_statistic(double alpha, double lo, double hi);

}  // namespace bozk
