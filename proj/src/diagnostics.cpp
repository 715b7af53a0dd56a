#include "bozk/diagnostics.hpp"

#include <cmath>

#include "bozk/error.hpp"
#include "bozk/operators.hpp"

namespace bozk {

NormSpec NormSpec::hs(double s) {
  NormSpec n;
  n.kind = Kind::Hs;
  n.s = s;
  return n;
}
NormSpec NormSpec::aniso(double s1, double s2) {
  NormSpec n;
  n.kind = Kind::Aniso;
  n.s1 = s1;
  n.s2 = s2;
  return n;
}
NormSpec NormSpec::l2r(double r) {
  NormSpec n;
  n.kind = Kind::L2r;
  n.r = r;
  return n;
}
NormSpec NormSpec::zsr(double s, double r) {
  NormSpec n;
  n.kind = Kind::Zsr;
  n.s = s;
  n.r = r;
  return n;
}
NormSpec NormSpec::l2w(const WeightSpec& w) {
  NormSpec n;
  n.kind = Kind::L2w;
  n.w = w;
  return n;
}

namespace {

double spectral_sum(const SpectrumField& F, double (*mult)(double, double, double, double),
                    double p, double q) {
  const Grid2D& g = F.grid;
  double acc = 0;
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) acc += mult(g.xi[i], g.eta[j], p, q) * std::norm(F(i, j));
  return acc * g.dxi() * g.deta() / (4 * M_PI * M_PI);
}

double bessel_weight(double a, double b, double s, double) { return std::pow(1 + a * a + b * b, s); }
double aniso_weight(double a, double b, double s1, double s2) {
  return 1 + std::pow(1 + a * a, s1) + std::pow(1 + b * b, s2);
}

RealField pointwise(const RealField& a, const RealField& b) {
  RealField out(a.grid);
  for (std::size_t k = 0; k < a.v.size(); ++k) out.v[k] = a.v[k] * b.v[k];
  return out;
}

RealField powered(const RealField& a, double p) {
  RealField out(a.grid);
  for (std::size_t k = 0; k < a.v.size(); ++k) out.v[k] = std::pow(a.v[k], p);
  return out;
}

SpectrumField dx_pow(const SpectrumField& F, int l) {
  if (l == 0) return F;
  return apply_multiplier(F, [l](double xi, double) { return std::pow(cplx(0, xi), l); });
}

RealField commutator_hilbert(const RealField& a, const RealField& g) {
  RealField lhs = hilbert_x(pointwise(a, g));
  RealField rhs = pointwise(a, hilbert_x(g));
  for (std::size_t k = 0; k < lhs.v.size(); ++k) lhs.v[k] -= rhs.v[k];
  return lhs;
}

double nonzero(double d, const char* what) {
  if (!(d > 0) || !std::isfinite(d)) throw ConfigError(std::string("zero denominator in ") + what);
  return d;
}

}  // namespace

double hs_norm(const SpectrumField& F, double s) {
  return std::sqrt(spectral_sum(F, bessel_weight, s, 0));
}

double aniso_norm(const SpectrumField& F, double s1, double s2) {
  return std::sqrt(spectral_sum(F, aniso_weight, s1, s2));
}

double weighted_l2(const RealField& u, const RealField& w) {
  require_same_grid(u.grid, w.grid);
  double acc = 0;
  for (std::size_t k = 0; k < u.v.size(); ++k) acc += w.v[k] * w.v[k] * u.v[k] * u.v[k];
  return std::sqrt(acc * u.grid.dx * u.grid.dy);
}

double l2r_norm(const RealField& u, double r) {
  const Grid2D& g = u.grid;
  double acc = 0;
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) {
      double w = std::pow(1 + g.xc[i] * g.xc[i] + g.yc[j] * g.yc[j], r);
      acc += w * u(i, j) * u(i, j);
    }
  return std::sqrt(acc * g.dx * g.dy);
}

double norm(const RealField& u, const NormSpec& spec) {
  switch (spec.kind) {
    case NormSpec::Kind::Hs: return hs_norm(forward(u), spec.s);
    case NormSpec::Kind::Aniso: return aniso_norm(forward(u), spec.s1, spec.s2);
    case NormSpec::Kind::L2r:
      if (!(spec.r >= 0)) throw ConfigError("L2_r needs r >= 0");
      return l2r_norm(u, spec.r);
    case NormSpec::Kind::Zsr: {
      if (!(spec.r >= 0)) throw ConfigError("Z_{s,r} needs r >= 0");
      double a = hs_norm(forward(u), spec.s), b = l2r_norm(u, spec.r);
      return std::sqrt(a * a + b * b);
    }
    case NormSpec::Kind::L2w: return weighted_l2(u, weight_field(u.grid, spec.w));
  }
  return 0;
}

double spectral_moment_x(const SpectrumField& F) {
  const Grid2D& g = F.grid;
  const int p = std::min(8, g.nx / 2 - 1);
  // forward-difference weights for f'(0) from f(0..p): w0 = -H_p, wj = (-1)^{j+1} C(p,j)/j
  std::vector<double> w(p + 1, 0.0);
  double binom = 1;
  for (int j = 1; j <= p; ++j) {
    binom = binom * (p - j + 1) / j;
    w[j] = ((j % 2) ? 1.0 : -1.0) * binom / j;
    w[0] -= w[j];
  }
  cplx right = 0, left = 0;
  for (int j = 0; j <= p; ++j) {
    right += w[j] * F(j, 0);
    left -= w[j] * F((g.nx - j) % g.nx, 0);
  }
  const double dxi = g.dxi();
  cplx deriv = 0.5 * (right + left) / dxi;
  return (cplx(0, 1) * deriv).real();
}

double box_moment_x(const RealField& u) {
  const Grid2D& g = u.grid;
  double acc = 0;
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) acc += g.xc[i] * u(i, j);
  return acc * g.dx * g.dy;
}

double frame_fraction(const RealField& u, double edge) {
  const Grid2D& g = u.grid;
  double all = 0, outer = 0;
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) {
      double a = u(i, j) * u(i, j);
      all += a;
      if (std::abs(g.xc[i]) >= edge * g.Lx || std::abs(g.yc[j]) >= edge * g.Ly) outer += a;
    }
  return all > 0 ? outer / all : 0.0;
}

double least_squares_slope(const std::vector<double>& t, const std::vector<double>& y) {
  const std::size_t n = t.size();
  if (n < 2 || y.size() != n) throw ConfigError("least squares needs matching samples");
  double tm = 0, ym = 0;
  for (std::size_t k = 0; k < n; ++k) {
    tm += t[k];
    ym += y[k];
  }
  tm /= double(n);
  ym /= double(n);
  double num = 0, den = 0;
  for (std::size_t k = 0; k < n; ++k) {
    num += (t[k] - tm) * (y[k] - ym);
    den += (t[k] - tm) * (t[k] - tm);
  }
  return num / den;
}

ConservationReport conservation_report(const TimeSeries& ts) {
  if (ts.mu != 0) throw ConfigError("conservation report applies to mu = 0 runs only");
  if (ts.records.empty()) throw ConfigError("empty time series");
  const SeriesRecord& r0 = ts.records.front();
  ConservationReport rep;
  const double n2 = r0.l2 * r0.l2;
  const double T = ts.records.back().t;
  for (const auto& r : ts.records) {
    if (r0.l2 > 0) rep.l2_drift = std::max(rep.l2_drift, std::abs(r.l2 - r0.l2) / r0.l2);
    for (std::size_t n = 0; n < r.zmode.size(); ++n)
      rep.zmode_drift = std::max(rep.zmode_drift, std::abs(r.zmode[n] - r0.zmode[n]));
    if (n2 > 0 && T > 0)
      rep.moment_residual =
          std::max(rep.moment_residual,
                   std::abs(r.moment_x - r0.moment_x - 0.5 * r.t * n2) / (0.5 * T * n2));
  }
  return rep;
}

double inequality_ratio(IneqKind kind, const IneqParams& p, const RealField& f,
                        const RealField* g) {
  switch (kind) {
    case IneqKind::Interpolation:
    case IneqKind::InterpolationTruncated: {
      if (!(p.alpha > 0 && p.alpha < 1)) throw ConfigError("interpolation needs alpha in (0,1)");
      WeightSpec ws = kind == IneqKind::Interpolation ? WeightSpec::polynomial(1)
                                                      : WeightSpec::truncated(p.N);
      RealField w = weight_field(f.grid, ws);
      RealField inner = pointwise(powered(w, (1 - p.alpha) * p.b), f);
      double lhs = hs_norm(forward(inner), p.alpha * p.a);
      double rw = weighted_l2(f, powered(w, p.b));
      double rj = hs_norm(forward(f), p.a);
      return lhs / nonzero(std::pow(rw, 1 - p.alpha) * std::pow(rj, p.alpha), "interpolation");
    }
    case IneqKind::Commutator: {
      if (!g) throw ConfigError("commutator needs a coefficient field");
      if (p.l < 0 || p.m < 0 || p.l + p.m < 1 || p.l + p.m > 3)
        throw ConfigError("commutator needs 1 <= l+m <= 3");
      RealField gm = inverse(dx_pow(forward(f), p.m));
      RealField c = inverse(dx_pow(forward(commutator_hilbert(*g, gm)), p.l));
      double amax = inverse(dx_pow(forward(*g), p.l + p.m)).max_abs();
      return l2_norm(c) / nonzero(amax * l2_norm(f), "commutator");
    }
    case IneqKind::DHalfCommutator: {
      if (!g) throw ConfigError("commutator needs a coefficient field");
      RealField lhs = fractional_op(pointwise(*g, f), FracKind::Dx, 0.5);
      RealField rhs = pointwise(*g, fractional_op(f, FracKind::Dx, 0.5));
      for (std::size_t k = 0; k < lhs.v.size(); ++k) lhs.v[k] -= rhs.v[k];
      return l2_norm(lhs) / nonzero(hs_norm(forward(*g), 2) * l2_norm(f), "commutator");
    }
    case IneqKind::Algebra: {
      const RealField& v = g ? *g : f;
      double num = aniso_norm(forward(pointwise(f, v)), p.s1, p.s2);
      return num / nonzero(aniso_norm(forward(f), p.s1, p.s2) * aniso_norm(forward(v), p.s1, p.s2),
                           "algebra");
    }
    case IneqKind::Trilinear: {
      if (!(p.s2 > 2) || p.s1 < p.s2) throw ConfigError("trilinear needs s2 > 2 and s1 >= s2");
      SpectrumField U = forward(f);
      SpectrumField W = nonlinear_rhs(U, true);  // -u u_x
      const Grid2D& gr = f.grid;
      double acc = 0;
      for (int j = 0; j < gr.ny; ++j)
        for (int i = 0; i < gr.nx; ++i)
          acc -= aniso_weight(gr.xi[i], gr.eta[j], p.s1, p.s2) * (std::conj(U(i, j)) * W(i, j)).real();
      acc *= gr.dxi() * gr.deta() / (4 * M_PI * M_PI);
      double n = aniso_norm(U, p.s1, p.s2);
      return std::abs(acc) / nonzero(n * n * n, "trilinear");
    }
  }
  return 0;
}

}  // namespace bozk
