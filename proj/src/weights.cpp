#include "bozk/weights.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "bozk/error.hpp"
#include "bozk/quadrature.hpp"

namespace bozk {

namespace {

constexpr int kPanels = 512;

double smoothstep(double s) { return s * s * s * (10 + s * (-15 + 6 * s)); }
double smoothstep_d(double s) { return 30 * s * s * (1 - s) * (1 - s); }

}  // namespace

BetaProfile::BetaProfile(int N) : N_(N) {
  if (N < 1) throw ConfigError("beta needs N >= 1");
  const double a = N, b = 3.0 * N;
  const double target = 2.0 * N - japanese(a);
  auto band_integral = [&](double q) {
    q_ = q;
    return integrate([&](double x) { return slope_band(x); }, a, b, kPanels);
  };
  // integral is decreasing in q
  double lo = 1.0 / 3.0, hi = 1.0;
  while (band_integral(hi) > target) hi *= 2;
  if (band_integral(lo) < target) throw NumericalAbort("beta", "beta band cannot reach 2N");
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    double mid = 0.5 * (lo + hi);
    (band_integral(mid) > target ? lo : hi) = mid;
  }
  q_ = 0.5 * (lo + hi);
  nodes_.resize(kPanels + 1);
  nodes_[0] = japanese(a);
  const double h = (b - a) / kPanels;
  for (int p = 0; p < kPanels; ++p)
    nodes_[p + 1] = nodes_[p] + integrate([&](double x) { return slope_band(x); }, a + p * h,
                                          a + (p + 1) * h, 1);
}

double BetaProfile::slope_band(double x) const {
  double s = (x - N_) / (2.0 * N_);
  double one_minus = 1 - smoothstep(s);
  if (one_minus <= 0) return 0;
  return x / japanese(x) * std::pow(one_minus, q_);
}

double BetaProfile::value(double x) const {
  x = std::abs(x);
  if (x <= N_) return japanese(x);
  if (x >= 3.0 * N_) return 2.0 * N_;
  const double h = 2.0 * N_ / kPanels;
  int p = std::min(kPanels - 1, int((x - N_) / h));
  double x0 = N_ + p * h;
  return nodes_[p] + integrate([&](double y) { return slope_band(y); }, x0, x, 1);
}

double BetaProfile::slope(double x) const {
  double ax = std::abs(x), sg = x < 0 ? -1.0 : 1.0;
  if (ax <= N_) return x / japanese(x);
  if (ax >= 3.0 * N_) return 0;
  return sg * slope_band(ax);
}

double BetaProfile::second(double x) const {
  x = std::abs(x);
  double jx = japanese(x);
  if (x <= N_) return 1 / (jx * jx * jx);
  if (x >= 3.0 * N_) return 0;
  double s = (x - N_) / (2.0 * N_);
  double one_minus = 1 - smoothstep(s);
  if (one_minus <= 0) return 0;
  double base = std::pow(one_minus, q_);
  return base / (jx * jx * jx) -
         x / jx * q_ * std::pow(one_minus, q_ - 1) * smoothstep_d(s) / (2.0 * N_);
}

const BetaProfile& beta_profile(int N) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<BetaProfile>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[N];
  if (!slot) slot = std::make_unique<BetaProfile>(N);
  return *slot;
}

double beta(int N, double x) {
  if (N < 1) throw ConfigError("beta needs N >= 1");
  return beta_profile(N).value(x);
}

BetaAudit audit_beta(int N, int samples) {
  const BetaProfile& b = beta_profile(N);
  BetaAudit a;
  a.N = N;
  a.q = b.q();
  a.min_slope = a.min_fd_slope = std::numeric_limits<double>::infinity();
  a.max_slope = a.max_fd_slope = -std::numeric_limits<double>::infinity();
  const double X = 4.0 * N, h = X / samples;
  double prev = b.value(0);
  for (int k = 1; k <= samples; ++k) {
    double x = k * h;
    double v = b.value(x);
    double fd = (v - prev) / h;
    prev = v;
    double sl = b.slope(x);
    a.min_slope = std::min(a.min_slope, sl);
    a.max_slope = std::max(a.max_slope, sl);
    a.min_fd_slope = std::min(a.min_fd_slope, fd);
    a.max_fd_slope = std::max(a.max_fd_slope, fd);
    a.max_excess = std::max(a.max_excess, v - japanese(x));
    double jx = japanese(x);
    a.second_ratio = std::max(a.second_ratio, std::abs(b.second(x)) * jx * jx * jx);
  }
  double eps = 1e-9 * N;
  a.join_gap = std::max(std::abs(b.value(N + eps) - japanese(N + eps)),
                        std::abs(b.value(3.0 * N - eps) - 2.0 * N));
  return a;
}

WeightSpec WeightSpec::truncated(int N) {
  WeightSpec w;
  w.kind = Kind::Truncated;
  w.N = N;
  return w;
}
WeightSpec WeightSpec::polynomial(double r) {
  WeightSpec w;
  w.kind = Kind::Polynomial;
  w.r = r;
  return w;
}
WeightSpec WeightSpec::gamma_power(double g) {
  WeightSpec w;
  w.kind = Kind::GammaPower;
  w.gamma = g;
  return w;
}
WeightSpec WeightSpec::damped(double g, double lambda) {
  WeightSpec w;
  w.kind = Kind::Damped;
  w.gamma = g;
  w.lambda = lambda;
  return w;
}

std::string WeightSpec::id() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Truncated: os << "trunc" << N; break;
    case Kind::Polynomial: os << "poly" << r; break;
    case Kind::GammaPower: os << "gamma" << gamma; break;
    case Kind::Damped: os << "damped" << gamma << "_" << lambda; break;
  }
  return os.str();
}

void validate(const WeightSpec& w) {
  switch (w.kind) {
    case WeightSpec::Kind::Truncated:
      if (w.N < 1) throw ConfigError("truncated weight needs N >= 1");
      break;
    case WeightSpec::Kind::Polynomial:
      if (!(w.r >= 0)) throw ConfigError("polynomial weight needs r >= 0");
      break;
    case WeightSpec::Kind::Damped:
      if (!(w.lambda > 0 && w.lambda < 1)) throw ConfigError("damped weight needs lambda in (0,1)");
      [[fallthrough]];
    case WeightSpec::Kind::GammaPower:
      if (!(w.gamma >= 0 && w.gamma <= 1)) throw ConfigError("gamma must lie in [0,1]");
      break;
  }
}

double weight_value(const WeightSpec& w, double x, double y) {
  double r2 = x * x + y * y;
  switch (w.kind) {
    case WeightSpec::Kind::Truncated: return beta(w.N, std::sqrt(r2));
    case WeightSpec::Kind::Polynomial: return std::pow(1 + r2, w.r / 2);
    case WeightSpec::Kind::GammaPower: return std::pow(1 + r2, w.gamma / 2);
    case WeightSpec::Kind::Damped: return std::pow(1 + r2, w.gamma / 2) * std::exp(-w.lambda * r2);
  }
  return 0;
}

RealField weight_field(const Grid2D& g, const WeightSpec& w) {
  validate(w);
  RealField f(g);
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) f(i, j) = weight_value(w, g.xc[i], g.yc[j]);
  return f;
}

namespace {

// integral of |x|^p over [lo,hi]; +inf if it diverges
double power_integral(double p, double lo, double hi) {
  const double inf = std::numeric_limits<double>::infinity();
  bool touches_zero = lo <= 0 && hi >= 0;
  if (touches_zero && p <= -1) return inf;
  auto F = [p](double x) {
    double s = x < 0 ? -1.0 : 1.0;
    if (p == -1) return s * std::log(std::abs(x));
    return s * std::pow(std::abs(x), p + 1) / (p + 1);
  };
  return F(hi) - F(lo);
}

}  // namespace

double a2_statistic(double alpha, double lo, double hi) {
  if (!(lo < hi)) throw ConfigError("a2_statistic needs lo < hi");
  double len = hi - lo;
  double i1 = power_integral(alpha, lo, hi);
  double i2 = power_integral(-alpha, lo, hi);
  if (std::isinf(i1) || std::isinf(i2)) return std::numeric_limits<double>::infinity();
  return (i1 / len) * (i2 / len);
}

}  // namespace bozk
