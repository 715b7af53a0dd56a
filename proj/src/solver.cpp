#include "bozk/solver.hpp"

#include <cmath>
#include <sstream>

#include "bozk/diagnostics.hpp"
#include "bozk/error.hpp"
#include "bozk/operators.hpp"

namespace bozk {

namespace {

constexpr double kBlowup = 1e8;
constexpr double kCfl = 0.5;

std::vector<cplx> dx_half_table(const Grid2D& g) {
  return tabulate(g, [](double xi, double) { return cplx(0, -0.5 * xi); });
}

SpectrumField rhs_impl(const SpectrumField& uh, const std::vector<cplx>& dxh,
                       const std::vector<double>* mask) {
  SpectrumField in = uh;
  if (mask)
    for (std::size_t k = 0; k < in.c.size(); ++k) in.c[k] *= (*mask)[k];
  RealField v = inverse(in);
  for (double& a : v.v) a *= a;
  SpectrumField out = forward(v);
  for (std::size_t k = 0; k < out.c.size(); ++k) {
    out.c[k] *= dxh[k];
    if (mask) out.c[k] *= (*mask)[k];
  }
  project_nyquist_real(out);
  return out;
}

}  // namespace

void validate(const SolverConfig& c) {
  if (!(c.dt > 0) || !(c.T > 0)) throw ConfigError("dt and T must be positive");
  if (c.dt > c.T) throw ConfigError("dt must not exceed T");
  if (!(c.mu >= 0)) throw ConfigError("mu must be non-negative");
  if (c.stride < 1) throw ConfigError("diagnostic stride must be >= 1");
  step_count(c);
}

long step_count(const SolverConfig& c) {
  double n = c.T / c.dt;
  long k = std::lround(n);
  if (k < 1 || std::abs(n - double(k)) > 1e-9 * n)
    throw ConfigError("T must be an integer multiple of dt");
  return k;
}

SpectrumField nonlinear_rhs(const SpectrumField& uh, bool dealias) {
  auto dxh = dx_half_table(uh.grid);
  if (!dealias) return rhs_impl(uh, dxh, nullptr);
  auto mask = dealias_mask(uh.grid);
  return rhs_impl(uh, dxh, &mask);
}

Stepper::Stepper(const Grid2D& g, const SolverConfig& c) : grid_(g), cfg_(c) {
  if (!(c.dt > 0) || !(c.mu >= 0)) throw ConfigError("bad stepper configuration");
  E_ = propagator_table(g, c.dt, c.mu);
  E2_ = propagator_table(g, c.dt / 2, c.mu);
  dx_half_ = dx_half_table(g);
  mask_ = dealias_mask(g);
}

SpectrumField Stepper::rhs(const SpectrumField& uh) const {
  return rhs_impl(uh, dx_half_, cfg_.dealias ? &mask_ : nullptr);
}

void Stepper::advance(SimulationState& s) const {
  const double dt = cfg_.dt;
  const std::size_t n = s.uh.c.size();
  auto& u = s.uh.c;
  if (!cfg_.nonlinear) {
    for (std::size_t k = 0; k < n; ++k) u[k] *= E_[k];
  } else {
    // Lawson form: stages carried in the frame of the current time level
    SpectrumField k1 = rhs(s.uh);
    SpectrumField a(grid_);
    for (std::size_t k = 0; k < n; ++k) a.c[k] = E2_[k] * (u[k] + 0.5 * dt * k1.c[k]);
    SpectrumField k2 = rhs(a);
    for (std::size_t k = 0; k < n; ++k) a.c[k] = E2_[k] * u[k] + 0.5 * dt * k2.c[k];
    SpectrumField k3 = rhs(a);
    for (std::size_t k = 0; k < n; ++k) a.c[k] = E_[k] * u[k] + dt * E2_[k] * k3.c[k];
    SpectrumField k4 = rhs(a);
    for (std::size_t k = 0; k < n; ++k)
      u[k] = E_[k] * u[k] +
             dt / 6 * (E_[k] * k1.c[k] + 2.0 * E2_[k] * (k2.c[k] + k3.c[k]) + k4.c[k]);
  }
  project_nyquist_real(s.uh);
  s.steps += 1;
  s.t = double(s.steps) * dt;
}

SimulationState step(const SimulationState& s, const SolverConfig& c) {
  Stepper st(s.uh.grid, c);
  SimulationState out = s;
  st.advance(out);
  if (!out.uh.all_finite()) throw NumericalAbort("blowup", "non-finite spectrum after step");
  if (inverse(out.uh).max_abs() > kBlowup) throw NumericalAbort("blowup", "|u| exceeded 1e8");
  return out;
}

namespace {

SeriesRecord make_record(double t, const SpectrumField& uh, const DiagnosticsSpec& d,
                         const std::vector<RealField>& wfields, RealField& u_out) {
  SeriesRecord r;
  r.t = t;
  u_out = inverse(uh);
  r.l2 = l2_norm(u_out);
  r.max_abs = u_out.max_abs();
  for (double s : d.hs) r.hs.push_back(hs_norm(uh, s));
  r.zmode.resize(uh.grid.ny);
  for (int n = 0; n < uh.grid.ny; ++n) r.zmode[n] = uh(0, n);
  r.moment_x = spectral_moment_x(uh);
  r.moment_box = box_moment_x(u_out);
  for (const auto& w : wfields) r.w.push_back(weighted_l2(u_out, w));
  r.frame_fraction = frame_fraction(u_out);
  return r;
}

std::string fmt(double a) {
  std::ostringstream os;
  os.precision(6);
  os << a;
  return os.str();
}

}  // namespace

RunResult run(const RealField& phi, const SolverConfig& c, const DiagnosticsSpec& d) {
  validate(c);
  if (!phi.all_finite()) throw ConfigError("initial field has non-finite samples");
  const long nsteps = step_count(c);
  const Grid2D& g = phi.grid;
  Stepper st(g, c);
  std::vector<RealField> wfields;
  for (const auto& w : d.weights) wfields.push_back(weight_field(g, w));

  RunResult out;
  TimeSeries& ts = out.series;
  ts.mu = c.mu;
  ts.dt = c.dt;
  ts.hs_orders = d.hs;
  for (const auto& w : d.weights) ts.weight_ids.push_back(w.id());

  SimulationState s;
  s.uh = forward(phi);
  RealField u;
  const double kmax = M_PI / g.dx;

  auto audit = [&](const SeriesRecord& r) {
    if (!std::isfinite(r.max_abs) || r.max_abs > kBlowup) {
      ts.aborted = true;
      ts.abort_audit = "blowup";
      ts.abort_message = "max|u| = " + fmt(r.max_abs) + " at t = " + fmt(r.t);
      return false;
    }
    double cfl = c.dt * r.max_abs * kmax;
    if (c.nonlinear && cfl > kCfl) {
      ts.aborted = true;
      ts.abort_audit = "cfl";
      ts.abort_message = "dt*max|u|*max|xi| = " + fmt(cfl) + " > 0.5 at t = " + fmt(r.t);
      return false;
    }
    return true;
  };

  ts.records.push_back(make_record(0, s.uh, d, wfields, u));
  if (!audit(ts.records.back())) {
    out.final_field = u;
    return out;
  }
  while (s.steps < nsteps) {
    st.advance(s);
    if (!s.uh.all_finite()) {
      ts.aborted = true;
      ts.abort_audit = "blowup";
      ts.abort_message = "non-finite spectrum at t = " + fmt(s.t);
      out.final_field = RealField(g);
      return out;
    }
    if (s.steps % c.stride == 0 || s.steps == nsteps) {
      ts.records.push_back(make_record(s.t, s.uh, d, wfields, u));
      if (!audit(ts.records.back())) break;
    }
  }
  out.final_field = inverse(s.uh);
  return out;
}

PicardResult picard_solve(const RealField& phi, double T, double mu, int max_iter, double tol,
                          bool dealias) {
  if (!(mu > 0)) throw ConfigError("picard_solve needs mu > 0");
  if (!(T > 0)) throw ConfigError("picard_solve needs T > 0");
  if (max_iter < 1 || !(tol > 0)) throw ConfigError("bad Picard iteration limits");
  const Grid2D& g = phi.grid;
  const int K = kPicardNodes - 1;
  const double h = T / K;
  const std::size_t n = g.size();

  std::vector<std::vector<cplx>> E(kPicardNodes);
  for (int m = 0; m < kPicardNodes; ++m) E[m] = propagator_table(g, m * h, mu);
  std::vector<cplx> Eback(n);  // E(-h), used only by the first-interval rule
  for (std::size_t k = 0; k < n; ++k) Eback[k] = 1.0 / E[1][k];

  // weights[k][j]: quadrature weight of node j in the integral over [0, t_k]
  std::vector<std::vector<double>> wts(kPicardNodes, std::vector<double>(kPicardNodes, 0.0));
  auto simpson = [&](std::vector<double>& w, int upto) {
    for (int j = 0; j <= upto; ++j)
      w[j] += h / 3 * ((j == 0 || j == upto) ? 1 : (j % 2 ? 4 : 2));
  };
  for (int k = 1; k <= K; ++k) {
    auto& w = wts[k];
    if (k == 1) {
      w[0] = 5 * h / 12;
      w[1] = 8 * h / 12;
      w[2] = -h / 12;
    } else if (k % 2 == 0) {
      simpson(w, k);
    } else {
      if (k - 3 > 0) simpson(w, k - 3);
      const double e[4] = {1, 3, 3, 1};
      for (int i = 0; i < 4; ++i) w[k - 3 + i] += 3 * h / 8 * e[i];
    }
  }

  SpectrumField phat = forward(phi);
  std::vector<SpectrumField> U(kPicardNodes, SpectrumField(g));
  std::vector<SpectrumField> free(kPicardNodes, SpectrumField(g));
  for (int k = 0; k < kPicardNodes; ++k) {
    free[k] = apply_table(phat, E[k]);
    U[k] = free[k];
  }

  PicardResult res;
  for (int it = 1; it <= max_iter; ++it) {
    std::vector<SpectrumField> N(kPicardNodes);
    for (int j = 0; j < kPicardNodes; ++j) N[j] = nonlinear_rhs(U[j], dealias);
    double resid = 0;
    for (int k = 0; k < kPicardNodes; ++k) {
      SpectrumField next = free[k];
      for (int j = 0; j < kPicardNodes; ++j) {
        double w = wts[k][j];
        if (w == 0) continue;
        const auto& prop = j <= k ? E[k - j] : Eback;
        for (std::size_t q = 0; q < n; ++q) next.c[q] += w * prop[q] * N[j].c[q];
      }
      project_nyquist_real(next);
      SpectrumField diff = next;
      for (std::size_t q = 0; q < n; ++q) diff.c[q] -= U[k].c[q];
      resid = std::max(resid, l2_norm(diff));
      U[k] = std::move(next);
    }
    res.residuals.push_back(resid);
    res.iterations = it;
    if (!std::isfinite(resid)) break;
    if (resid < tol) {
      res.converged = true;
      break;
    }
  }
  res.u = inverse(U[K]);
  return res;
}

}  // namespace bozk
