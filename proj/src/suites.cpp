#include "bozk/suites.hpp"

#include <cmath>
#include <limits>

#include "bozk/fields.hpp"
#include "bozk/stein.hpp"
#include "bozk/weights.hpp"

namespace bozk {

namespace {

Check make_check(const char* suite, std::string name, double value, double limit, bool pass) {
  return Check{suite, std::move(name), value, limit, pass};
}

std::string num(double a) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", a);
  return buf;
}

}  // namespace

std::vector<Check> weights_checks(const std::vector<int>& Ns) {
  std::vector<Check> out;
  for (int N : Ns) {
    BetaAudit a = audit_beta(N);
    std::string tag = "N=" + std::to_string(N);
    out.push_back(make_check("weights", "beta slope >= 0 " + tag, a.min_fd_slope, -1e-9,
                             a.min_fd_slope >= -1e-9));
    out.push_back(make_check("weights", "beta slope <= 1 " + tag, a.max_fd_slope, 1 + 1e-9,
                             a.max_fd_slope <= 1 + 1e-9));
    out.push_back(make_check("weights", "beta <= <x> " + tag, a.max_excess, 1e-12,
                             a.max_excess <= 1e-12));
    out.push_back(make_check("weights", "beta joins " + tag, a.join_gap, 1e-9, a.join_gap <= 1e-9));
  }
  return out;
}

std::vector<Check> stein_checks() {
  std::vector<Check> out;
  const double R = 2000;
  for (double c : {1.0, 2.0, 4.0}) {
    auto f = [c](double x) { return std::exp(cplx(0, c * x)); };
    MixedPhaseMeasure m = unimodular_measure(f, 0.5, R, 0.01, c, 0.3);
    double rel = std::abs(m.value / std::sqrt(2 * M_PI * c) - 1);
    out.push_back(make_check("stein", "D^1/2 exp(icx) c=" + num(c), rel, 1e-3, rel <= 1e-3));
  }
  const double eta = 1.3, t = 0.8, a = eta * eta * t;
  for (double b : {0.25, 0.5, 0.75}) {
    auto f = [a](double x) { return std::exp(cplx(0, a * x)); };
    MixedPhaseMeasure m = unimodular_measure(f, b, R, 0.01, a, 0.0);
    double exact = std::sqrt(phase_constant_sq(b)) * std::pow(a, b);
    double rel = std::abs(m.value / exact - 1);
    out.push_back(make_check("stein", "D^b exp(i a x) closed form b=" + num(b), rel, 1e-3, rel <= 1e-3));
    double bound = phase_bound(b, eta, t);
    out.push_back(make_check("stein", "D^b exp(i a x) <= bound b=" + num(b), m.value, bound,
                             m.value <= bound));
  }
  double worst = 0;
  for (double b : {0.25, 0.5, 0.75})
    for (double tt : {0.25, 1.0, 4.0})
      for (double x : {-3.0, 0.0, 2.0}) {
        MixedPhaseMeasure m = mixed_phase_measure(b, tt, x);
        worst = std::max(worst, (m.value + m.error) / mixed_phase_bound(b, tt, x));
      }
  out.push_back(make_check("stein", "mixed phase / bound", worst, 1.0, worst <= 1.0));

  RefineConfig rc;
  RefineResult h = refine_divergence([](double x) { return cplx(x > 0 ? 1.0 : 0.0, 0); }, rc);
  out.push_back(make_check("stein", "Heaviside divergent", h.ratios.back(), 1 + rc.delta_div,
                           h.verdict == "divergent"));
  RefineResult s = refine_divergence([](double x) { return cplx(std::exp(-0.5 * x * x), 0); }, rc);
  out.push_back(make_check("stein", "smooth bump convergent", s.ratios.back(), 1 + rc.delta_conv,
                           s.verdict == "convergent"));
  return out;
}

const std::vector<IneqCase>& inequality_cases() {
  static const std::vector<IneqCase> cases = [] {
    // ceilings: 1.25x the largest family maximum over seeds 1..6, rounded up
    std::vector<IneqCase> v;
    IneqParams p;
    v.push_back({"interpolation", IneqKind::Interpolation, p, false, 1.25});
    for (int N : {4, 8, 16, 32}) {
      IneqParams q = p;
      q.N = N;
      v.push_back({"interpolation_w" + std::to_string(N), IneqKind::InterpolationTruncated, q, false, 1.25});
    }
    const struct { int l, m; double ceiling; } comm[] = {{1, 0, 0.6}, {0, 1, 0.5}, {1, 1, 0.2}, {2, 1, 0.75}};
    for (const auto& c : comm) {
      IneqParams q = p;
      q.l = c.l;
      q.m = c.m;
      v.push_back({"commutator_l" + std::to_string(c.l) + "_m" + std::to_string(c.m),
                   IneqKind::Commutator, q, true, c.ceiling});
    }
    v.push_back({"dhalf_commutator", IneqKind::DHalfCommutator, p, true, 0.05});
    v.push_back({"algebra", IneqKind::Algebra, p, true, 0.21});
    v.push_back({"trilinear", IneqKind::Trilinear, p, false, 0.04});
    return v;
  }();
  return cases;
}

double family_max(const IneqCase& c, const Grid2D& g, int count, std::uint64_t seed) {
  Rng rng(seed);
  double worst = 0;
  for (int k = 0; k < count; ++k) {
    RealField f = random_bump_mixture(g, rng);
    RealField a = c.paired ? random_bump_mixture(g, rng) : RealField();
    worst = std::max(worst, inequality_ratio(c.kind, c.p, f, c.paired ? &a : nullptr));
  }
  return worst;
}

std::vector<Check> inequality_checks(const Grid2D& g, int count, std::uint64_t seed) {
  std::vector<Check> out;
  Rng rng(seed);
  RealField f = random_bump_mixture(g, rng);
  RealField a = random_bump_mixture(g, rng);
  auto scaled = [](const RealField& u, double s) {
    RealField v = u;
    for (double& x : v.v) x *= s;
    return v;
  };
  for (const auto& c : inequality_cases()) {
    const RealField* pa = c.paired ? &a : nullptr;
    double base = inequality_ratio(c.kind, c.p, f, pa);
    double dev = std::abs(inequality_ratio(c.kind, c.p, scaled(f, 2), pa) / base - 1);
    if (c.paired) {
      RealField a3 = scaled(a, 3);
      dev = std::max(dev, std::abs(inequality_ratio(c.kind, c.p, f, &a3) / base - 1));
    }
    out.push_back(make_check("inequality", c.name + " homogeneity", dev, 1e-12, dev <= 1e-12));
  }
  const std::uint64_t seeds[2] = {seed, seed + 1};
  double trunc_max = 0, trunc_ceiling = 0;
  for (const auto& c : inequality_cases()) {
    double m0 = family_max(c, g, count, seeds[0]);
    double m1 = family_max(c, g, count, seeds[1]);
    double m = std::max(m0, m1);
    out.push_back(make_check("inequality", c.name + " ceiling (two seeds)", m, c.ceiling,
                             m <= c.ceiling));
    if (c.kind == IneqKind::InterpolationTruncated) {
      trunc_max = std::max(trunc_max, m);
      if (c.p.N == 8) trunc_ceiling = c.ceiling;
    }
  }
  out.push_back(make_check("inequality", "interpolation w_N uniform in N", trunc_max,
                           1.1 * trunc_ceiling, trunc_max <= 1.1 * trunc_ceiling));
  return out;
}

std::vector<Check> a2_checks() {
  std::vector<Check> out;
  for (double L : {0.5, 1.0, 10.0, 1000.0}) {
    double v = a2_statistic(0.5, -L, L);
    double dev = std::abs(v - 4.0 / 3.0);
    out.push_back(make_check("a2", "alpha=1/2 on [-L,L] L=" + num(L), v, 4.0 / 3.0, dev <= 1e-12));
  }
  for (auto [lo, hi] : {std::pair{-1.0, 1.0}, std::pair{0.0, 2.0}, std::pair{-3.0, 0.5}}) {
    double v = a2_statistic(1.5, lo, hi);
    out.push_back(make_check("a2", "alpha=3/2 on [" + num(lo) + "," + num(hi) + "]", v,
                             std::numeric_limits<double>::infinity(), std::isinf(v)));
  }
  return out;
}

}  // namespace bozk
