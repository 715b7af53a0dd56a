#include "bozk/uc_lab.hpp"

#include <cmath>
#include <sstream>

#include "bozk/diagnostics.hpp"
#include "bozk/error.hpp"
#include "bozk/operators.hpp"

namespace bozk {

void validate(const CutoffSpec& c) {
  if (!(c.epsilon > 0)) throw ConfigError("cutoff epsilon must be positive");
}

namespace {

double glue(double s) { return s > 0 ? std::exp(-1 / s) : 0.0; }

// fraction of spectral energy in the outer 10% band of either index range
double edge_mass(const SpectrumField& F) {
  const Grid2D& g = F.grid;
  double all = 0, edge = 0;
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) {
      double a = std::norm(F(i, j));
      all += a;
      if (std::abs(signed_index(i, g.nx)) >= 0.4 * g.nx ||
          std::abs(signed_index(j, g.ny)) >= 0.4 * g.ny)
        edge += a;
    }
  return all > 0 ? edge / all : 0.0;
}

}  // namespace

double chi_tilde(double xi, const CutoffSpec& c) {
  double a = std::abs(xi);
  if (a <= 0.5 * c.epsilon) return 1;
  if (a >= c.epsilon) return 0;
  double u = (c.epsilon - a) / (0.5 * c.epsilon);
  double p = glue(u), q = glue(1 - u);
  return p / (p + q);
}

std::vector<cplx> eta_profile(const RealField& phi, int n) {
  const Grid2D& g = phi.grid;
  const double eta = 2 * M_PI * n / g.Ly;
  std::vector<cplx> prof(g.nx, cplx(0, 0));
  for (int j = 0; j < g.ny; ++j) {
    cplx ph = std::exp(cplx(0, -eta * g.yc[j])) * g.dy;
    for (int i = 0; i < g.nx; ++i) prof[i] += ph * phi(i, j);
  }
  return prof;
}

cplx transform_at(const RealField& phi, const std::vector<cplx>& prof, double xi) {
  const Grid2D& g = phi.grid;
  cplx acc = 0;
  for (int i = 0; i < g.nx; ++i) acc += std::exp(cplx(0, -xi * g.xc[i])) * prof[i];
  return acc * g.dx;
}

UCReport b1_indicator(const RealField& phi, double t, const CutoffSpec& cut, int levels,
                      const B1Config& cfg) {
  if (!(t > 0)) throw ConfigError("b1_indicator needs t > 0");
  if (levels < 3) throw ConfigError("b1_indicator needs at least 3 levels");
  validate(cut);
  if (cfg.half_width >= 0.5 * cut.epsilon) throw ConfigError("window must sit inside the plateau");
  if (edge_mass(forward(phi)) > cfg.edge_tol)
    throw NumericalAbort("resolution", "spectrum not resolved: edge mass above tolerance");

  const Grid2D& g = phi.grid;
  SteinConfig sc{0.5, cfg.R, 1e-8, 4};
  UCReport rep;
  rep.t = t;
  std::vector<double> acc(levels, 0.0);
  for (int n = -cfg.eta_modes; n <= cfg.eta_modes; ++n) {
    const double eta = 2 * M_PI * n / g.Ly;
    auto prof = eta_profile(phi, n);
    auto gfun = [&](double xi) -> cplx {
      double chi = chi_tilde(xi, cut);
      if (chi == 0) return 0;
      cplx phase = std::exp(cplx(0, t * omega(xi, eta)));
      return chi * std::exp(-eta * eta) * cplx(0, -2 * t) * sgn(xi) * phase *
             transform_at(phi, prof, xi);
    };
    for (int k = 0; k < levels; ++k) {
      int cells = 1 << k;
      SampledFunction s = refine_lattice(gfun, 0.0, cfg.half_width, cells, cfg.oversample, cfg.R);
      double w = window_norm(s, sc, 0.0, cfg.half_width, cells);
      acc[k] += w * w;
    }
  }
  for (int k = 0; k < levels; ++k) {
    rep.cell.push_back(cfg.half_width / (1 << k));
    rep.norms.push_back(std::sqrt(acc[k]));
  }
  rep.ratios = norm_ratios(rep.norms);
  rep.verdict = classify_ratios(rep.ratios, cfg.delta_div, cfg.delta_conv, "obstructed", "persists");
  return rep;
}

PersistenceResult persistence_scan(const RealField& phi, const SolverConfig& cfg,
                                   const std::vector<double>& r_list, double s,
                                   double growth_factor, double frame_tol) {
  validate(cfg);
  if (r_list.empty()) throw ConfigError("persistence_scan needs at least one r");
  double rmax = 0;
  for (double r : r_list) {
    if (!(r >= 0 && r < 3.5)) throw ConfigError("r must lie in [0, 7/2)");
    rmax = std::max(rmax, r);
  }
  if (s < 2 * rmax) throw ConfigError("persistence_scan needs s >= 2 max(r)");

  const Grid2D& g = phi.grid;
  const long nsteps = step_count(cfg);
  Stepper st(g, cfg);
  std::vector<RealField> wf;
  for (double r : r_list) wf.push_back(weight_field(g, WeightSpec::polynomial(r)));

  PersistenceResult res;
  res.r_list = r_list;
  res.s = s;
  res.tail_bar.assign(r_list.size(), 0.0);

  auto record = [&](const SimulationState& state) {
    RealField u = inverse(state.uh);
    double ff = frame_fraction(u);
    res.max_frame_fraction = std::max(res.max_frame_fraction, ff);
    if (ff > frame_tol) {
      std::ostringstream os;
      os << "solution reaches the box frame (fraction " << ff << ") at t = " << state.t;
      throw NumericalAbort("domain", os.str());
    }
    if (!u.all_finite() || u.max_abs() > 1e8) throw NumericalAbort("blowup", "|u| exceeded 1e8");
    if (cfg.dt * u.max_abs() * M_PI / g.dx > 0.5)
      throw NumericalAbort("cfl", "dt*max|u|*max|xi| > 0.5");
    PersistenceRow row;
    row.t = state.t;
    double hs = hs_norm(state.uh, s);
    for (std::size_t k = 0; k < r_list.size(); ++k) {
      double w = weighted_l2(u, wf[k]);
      row.l2r.push_back(w);
      row.z.push_back(std::sqrt(hs * hs + w * w));
      RealField framed = u;
      for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i)
          if (std::abs(g.xc[i]) < 0.45 * g.Lx && std::abs(g.yc[j]) < 0.45 * g.Ly) framed(i, j) = 0;
      double bar = w > 0 ? weighted_l2(framed, wf[k]) / w : 0.0;
      res.tail_bar[k] = std::max(res.tail_bar[k], bar);
    }
    res.rows.push_back(std::move(row));
  };

  SimulationState state;
  state.uh = forward(phi);
  record(state);
  while (state.steps < nsteps) {
    st.advance(state);
    if (state.steps % cfg.stride == 0 || state.steps == nsteps) record(state);
  }
  for (std::size_t k = 0; k < r_list.size(); ++k) {
    double z0 = res.rows.front().z[k], zmax = 0;
    for (const auto& row : res.rows) zmax = std::max(zmax, row.z[k]);
    double gr = z0 > 0 ? zmax / z0 : 1.0;
    res.growth.push_back(gr);
    res.flagged.push_back(gr > growth_factor * (1 + res.tail_bar[k]));
  }
  return res;
}

DomainGrowthResult domain_growth(const std::function<RealField(const Grid2D&)>& data,
                                 const DomainGrowthConfig& cfg) {
  if (cfg.factors.size() < 2) throw ConfigError("domain growth needs at least two domains");
  DomainGrowthResult res;
  const double rho0 = cfg.rho0_fraction * cfg.L0;
  for (int f : cfg.factors) {
    Grid2D g = make_grid(cfg.nx0 * f, cfg.ny, cfg.L0 * f, cfg.Ly);
    RunResult run_out = run(data(g), cfg.solver);
    if (run_out.series.aborted)
      throw NumericalAbort(run_out.series.abort_audit, run_out.series.abort_message);
    const RealField& u = run_out.final_field;
    double tail = 0;
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i) {
        double r2 = g.xc[i] * g.xc[i] + g.yc[j] * g.yc[j];
        if (r2 > rho0 * rho0) tail += std::pow(1 + r2, cfg.r_tail) * u(i, j) * u(i, j);
      }
    res.L.push_back(g.Lx);
    res.tail.push_back(tail * g.dx * g.dy);
    res.full.push_back(norm(u, NormSpec::zsr(cfg.s_full, cfg.r_full)));
  }
  double lo = res.full[0], hi = res.full[0];
  for (std::size_t k = 1; k < res.L.size(); ++k) {
    res.tail_ratios.push_back(res.tail[k] / res.tail[k - 1]);
    lo = std::min(lo, res.full[k]);
    hi = std::max(hi, res.full[k]);
  }
  res.full_spread = hi / lo - 1;
  return res;
}

MomentDrift moment_drift(const TimeSeries& ts) {
  if (ts.records.size() < 4) throw ConfigError("moment_drift needs at least 4 records");
  if (ts.mu != 0) throw ConfigError("moment_drift applies to mu = 0 runs only");
  std::vector<double> t, m;
  for (const auto& r : ts.records) {
    t.push_back(r.t);
    m.push_back(r.moment_x);
  }
  MomentDrift d;
  d.slope = least_squares_slope(t, m);
  double n0 = ts.records.front().l2;
  d.predicted = 0.5 * n0 * n0;
  d.rel_error = d.predicted > 0 ? std::abs(d.slope - d.predicted) / d.predicted
                                : std::abs(d.slope);
  int last = 0;
  for (double v : m) {
    int sg = v > 0 ? 1 : (v < 0 ? -1 : 0);
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++d.zero_crossings;
    last = sg;
  }
  return d;
}

}  // namespace bozk
