#include "bozk/stein.hpp"

#include <cmath>

#include "bozk/error.hpp"
#include "bozk/quadrature.hpp"

namespace bozk {

void validate(const SteinConfig& c) {
  if (!(c.b > 0 && c.b < 1)) throw ConfigError("Stein order b must lie in (0,1)");
  if (!(c.h > 0 && c.h < 1 && c.R > 1)) throw ConfigError("Stein radii need 0 < h < 1 < R");
  if (c.panels_per_decade < 1) throw ConfigError("panels_per_decade must be positive");
}

cplx SampledFunction::operator()(double x) const {
  const long n = long(v.size());
  double u = (x - x0) / dx;
  long k = long(std::floor(u));
  k = std::max(1L, std::min(k, n - 3));
  double t = u - double(k);
  double wm = -t * (t - 1) * (t - 2) / 6;
  double w0 = (t + 1) * (t - 1) * (t - 2) / 2;
  double w1 = -(t + 1) * t * (t - 2) / 2;
  double w2 = (t + 1) * t * (t - 1) / 6;
  return wm * v[k - 1] + w0 * v[k] + w1 * v[k + 1] + w2 * v[k + 2];
}

double SampledFunction::sup_abs() const {
  double m = 0;
  for (const cplx& a : v) m = std::max(m, std::abs(a));
  return m;
}

namespace {

template <class F>
SteinValue stein_core(F&& f, double panel, double sup, const SteinConfig& c, double x) {
  validate(c);
  const cplx fx = f(x);
  const double p = 1 + 2 * c.b;
  auto integrand = [&](double s) {
    return (std::norm(f(x + s) - fx) + std::norm(f(x - s) - fx)) / std::pow(s, p);
  };
  const double d = std::min(panel, c.R);
  SteinValue out;
  double I = 0;
  if (c.h < d) {
    int np = std::max(1, int(std::ceil(std::log10(d / c.h) * c.panels_per_decade)));
    double q = std::pow(d / c.h, 1.0 / np);
    double a = c.h;
    for (int k = 0; k < np; ++k) {
      double b = (k == np - 1) ? d : a * q;
      I += integrate(integrand, a, b, 1, 8);
      a = b;
    }
  }
  for (long k = 0;; ++k) {
    double a = d + double(k) * panel;
    if (a >= c.R) break;
    double b = std::min(a + panel, c.R);
    I += integrate(integrand, a, b, 1, 4);
  }
  const double del = d;
  cplx fp = (-f(x + 2 * del) + 8.0 * f(x + del) - 8.0 * f(x - del) + f(x - 2 * del)) / (12 * del);
  out.integral = I;
  out.inner = 2 * std::norm(fp) * std::pow(c.h, 2 - 2 * c.b) / (2 - 2 * c.b);
  out.value = std::sqrt(I + out.inner);
  double osc = 2 * sup;
  out.tail_bar = osc * osc * std::pow(c.R, -2 * c.b) / c.b;
  return out;
}

}  // namespace

SteinValue stein_derivative(const SampledFunction& f, const SteinConfig& c, double x) {
  const double margin = c.R + 2 * f.dx;
  if (x - margin < f.lo() || x + margin > f.hi())
    throw ConfigError("Stein evaluation point too close to the sample boundary");
  return stein_core(f, f.dx, f.sup_abs(), c, x);
}

std::vector<SteinValue> stein_derivative(const SampledFunction& f, const SteinConfig& c,
                                         const std::vector<double>& xs) {
  std::vector<SteinValue> out;
  out.reserve(xs.size());
  for (double x : xs) out.push_back(stein_derivative(f, c, x));
  return out;
}

SteinValue stein_derivative_fn(const std::function<cplx(double)>& f, double panel, double sup,
                               const SteinConfig& c, double x) {
  if (!(panel > 0)) throw ConfigError("panel width must be positive");
  return stein_core(f, panel, sup, c, x);
}

double phase_constant_sq(double b) {
  if (!(b > 0 && b < 1)) throw ConfigError("b must lie in (0,1)");
  return 2 * M_PI / (std::tgamma(1 + 2 * b) * std::sin(M_PI * b));
}

double phase_bound(double b, double eta, double t) {
  if (!(b > 0 && b < 1)) throw ConfigError("b must lie in (0,1)");
  return std::sqrt(2 / (1 - b) + 2 / b) * std::pow(eta * eta * t, b);
}

double mixed_phase_bound(double b, double t, double x) {
  if (!(b > 0 && b < 1)) throw ConfigError("b must lie in (0,1)");
  if (t < 0) throw ConfigError("mixed_phase_bound needs t >= 0");
  return kMixedPhaseC0 * (std::pow(t, b / 2) + std::pow(t, b) * std::pow(std::abs(x), b));
}

MixedPhaseMeasure unimodular_measure(const std::function<cplx(double)>& f, double b, double R,
                                     double panel, double kmin, double x) {
  if (!(panel > 0) || !(kmin > 0)) throw ConfigError("unimodular_measure needs panel, kmin > 0");
  SteinConfig c{b, R, 1e-8, 4};
  SteinValue v = stein_core(f, panel, 1.0, c, x);
  MixedPhaseMeasure m;
  m.value = std::sqrt(v.integral + v.inner + 2 * std::pow(R, -2 * b) / b);
  m.error = 4 / (kmin * std::pow(R, 1 + 2 * b));
  return m;
}

MixedPhaseMeasure mixed_phase_measure(double b, double t, double x, double R) {
  if (t == 0) return {};
  if (!(R > std::abs(x) + 1)) throw ConfigError("mixed_phase_measure needs R > |x| + 1");
  auto f = [t](double y) { return std::exp(cplx(0, -t * y * std::abs(y))); };
  double panel = std::min(0.05, 0.25 / (2 * t * (std::abs(x) + R)));
  return unimodular_measure(f, b, R, panel, t * (R - std::abs(x)), x);
}

double window_norm(const SampledFunction& f, const SteinConfig& c, double center,
                   double half_width, int cells_per_side) {
  const double H = half_width / cells_per_side;
  double acc = 0;
  for (int j = 0; j < 2 * cells_per_side; ++j) {
    double x = center - half_width + (j + 0.5) * H;
    SteinValue v = stein_derivative(f, c, x);
    acc += v.value * v.value;
  }
  return std::sqrt(acc * H);
}

std::string classify_ratios(const std::vector<double>& r, double delta_div, double delta_conv,
                            const char* up, const char* flat) {
  if (r.size() < 2) throw ConfigError("need at least two refinement ratios");
  double a = r[r.size() - 2], b = r.back();
  if (a > 1 + delta_div && b > 1 + delta_div) return up;
  if (std::abs(a - 1) <= delta_conv && std::abs(b - 1) <= delta_conv) return flat;
  return "inconclusive";
}

std::vector<double> norm_ratios(const std::vector<double>& norms) {
  std::vector<double> r;
  for (std::size_t k = 1; k < norms.size(); ++k)
    r.push_back(norms[k - 1] == 0 && norms[k] == 0 ? 1.0 : norms[k] / norms[k - 1]);
  return r;
}

SampledFunction refine_lattice(const std::function<cplx(double)>& f, double center,
                               double half_width, int cells_per_side, int oversample, double R) {
  const double H = half_width / cells_per_side;
  const double h = H / oversample;
  const double first = center - half_width + 0.5 * H;
  const double last = center + half_width - 0.5 * H;
  const double pad = std::ceil((R + 4 * h) / h) * h;
  return sample(f, first - pad, last + pad, h);
}

RefineResult refine_divergence(const std::function<cplx(double)>& f, const RefineConfig& c) {
  if (c.levels < 3) throw ConfigError("refine_divergence needs at least 3 levels");
  if (!(c.half_width > 0) || c.oversample < 1) throw ConfigError("bad refinement window");
  validate(c.stein);
  RefineResult res;
  for (int k = 0; k < c.levels; ++k) {
    int cells = 1 << k;
    SampledFunction s = refine_lattice(f, c.center, c.half_width, cells, c.oversample, c.stein.R);
    res.cell.push_back(c.half_width / cells);
    res.norms.push_back(window_norm(s, c.stein, c.center, c.half_width, cells));
  }
  res.ratios = norm_ratios(res.norms);
  res.verdict = classify_ratios(res.ratios, c.delta_div, c.delta_conv, "divergent", "convergent");
  return res;
}

}  // namespace bozk
