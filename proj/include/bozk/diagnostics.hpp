#pragma once

#include "bozk/fft.hpp"
#include "bozk/solver.hpp"
#include "bozk/weights.hpp"

namespace bozk {

struct NormSpec {
  enum class Kind { Hs, Aniso, L2r, Zsr, L2w };
  Kind kind = Kind::Hs;
  double s = 0, s1 = 0, s2 = 0, r = 0;
  WeightSpec w;

  static NormSpec hs(double s);
  static NormSpec aniso(double s1, double s2);
  static NormSpec l2r(double r);
  static NormSpec zsr(double s, double r);
  static NormSpec l2w(const WeightSpec& w);
};

double norm(const RealField& u, const NormSpec& spec);

double hs_norm(const SpectrumField& F, double s);
double aniso_norm(const SpectrumField& F, double s1, double s2);
double weighted_l2(const RealField& u, const RealField& w);  // ||w u||
double l2r_norm(const RealField& u, double r);

// i d/dxi u_hat(0,0): one-sided 8th-order stencils on each half of the
// eta = 0 row, averaged.
double spectral_moment_x(const SpectrumField& F);
// sum of x u dx dy with centered x
double box_moment_x(const RealField& u);

// fraction of sum u^2 lying in the outer frame |x| >= 0.45 Lx or |y| >= 0.45 Ly
double frame_fraction(const RealField& u, double edge = 0.45);

struct ConservationReport {
  double l2_drift = 0;          // max relative drift of ||u||
  double zmode_drift = 0;       // max |u_hat(0,eta,t) - u_hat(0,eta,0)|
  double moment_residual = 0;   // max |M(t) - M(0) - t/2 ||phi||^2| / (T/2 ||phi||^2)
};
ConservationReport conservation_report(const TimeSeries& ts);

double least_squares_slope(const std::vector<double>& t, const std::vector<double>& y);

enum class IneqKind { Interpolation, InterpolationTruncated, Commutator, Algebra, Trilinear,
                      DHalfCommutator };

struct IneqParams {
  double a = 2, b = 1, alpha = 0.5;  // interpolation
  int N = 8;                         // truncated-weight variant
  int l = 1, m = 0;                  // commutator derivative orders
  double s1 = 3, s2 = 3;             // algebra / trilinear
};

// LHS / RHS without the constant.  Second field: the coefficient a for the
// commutators, v for the algebra estimate; ignored otherwise.
double inequality_ratio(IneqKind kind, const IneqParams& p, const RealField& f,
                        const RealField* g = nullptr);

}  // namespace bozk
