#include "commands.hpp"

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>

#include <json.hpp>

#include "bozk/diagnostics.hpp"
#include "bozk/error.hpp"
#include "bozk/output.hpp"
#include "bozk/pool.hpp"
#include "bozk/suites.hpp"
#include "bozk/uc_lab.hpp"

namespace bozk::cli {

using json = nlohmann::ordered_json;

namespace {

std::string path_in(const Context& ctx, const char* name) {
  return (std::filesystem::path(ctx.out) / name).string();
}

std::string tag(double a) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", a);
  return buf;
}

void say(const Context& ctx, const std::string& line) {
  if (!ctx.quiet) std::cout << line << '\n';
}

void write_json(const std::string& path, const json& j) { write_atomic(path, j.dump(2) + "\n"); }

json grid_json(const Grid2D& g) {
  return {{"nx", g.nx}, {"ny", g.ny}, {"Lx", g.Lx}, {"Ly", g.Ly}};
}

json solver_json(const SolverConfig& c) {
  return {{"dt", c.dt}, {"T", c.T}, {"mu", c.mu}, {"dealias", c.dealias}, {"stride", c.stride},
          {"nonlinear", c.nonlinear}};
}

CsvTable series_table(const TimeSeries& ts) {
  CsvTable t;
  t.columns = {"t[time]", "l2[norm]"};
  for (double s : ts.hs_orders) t.columns.push_back("hs_" + tag(s) + "[norm]");
  t.columns.push_back("zmode_linf_drift[coef]");
  t.columns.push_back("moment_x[moment]");
  for (const auto& id : ts.weight_ids) t.columns.push_back("w_" + id + "[norm]");
  if (ts.records.empty()) return t;
  const auto& z0 = ts.records.front().zmode;
  for (const auto& r : ts.records) {
    std::vector<std::string> row{fmt17(r.t), fmt17(r.l2)};
    for (double h : r.hs) row.push_back(fmt17(h));
    double dz = 0;
    for (std::size_t n = 0; n < z0.size(); ++n) dz = std::max(dz, std::abs(r.zmode[n] - z0[n]));
    row.push_back(fmt17(dz));
    row.push_back(fmt17(r.moment_x));
    for (double w : r.w) row.push_back(fmt17(w));
    t.add(std::move(row));
  }
  return t;
}

json abort_json(const std::string& audit, const std::string& message) {
  return {{"audit", audit}, {"message", message}};
}

// shared by simulate and linear
int evolve(const Context& ctx, const char* command, bool nonlinear) {
  RealField phi = initial_data(ctx.m);
  SolverConfig c = ctx.m.solver;
  c.nonlinear = nonlinear;
  RunResult r = run(phi, c, ctx.m.diag);
  const TimeSeries& ts = r.series;
  write_csv(path_in(ctx, "series.csv"), series_table(ts));

  json j;
  j["command"] = command;
  j["grid"] = grid_json(phi.grid);
  j["solver"] = solver_json(c);
  j["records"] = ts.records.size();
  if (ts.aborted) {
    j["status"] = "aborted";
    j["abort"] = abort_json(ts.abort_audit, ts.abort_message);
    write_json(path_in(ctx, "summary.json"), j);
    std::cerr << "numerical abort (" << ts.abort_audit << "): " << ts.abort_message << '\n';
    return kNumericalAbort;
  }
  write_snapshot(path_in(ctx, "final.bozk"), r.final_field);
  j["status"] = "ok";
  j["l2_initial"] = ts.records.front().l2;
  j["l2_final"] = ts.records.back().l2;
  if (c.mu == 0) {
    ConservationReport cr = conservation_report(ts);
    j["conservation"] = {{"l2_drift", cr.l2_drift},
                         {"zmode_drift", cr.zmode_drift},
                         {"moment_residual", cr.moment_residual}};
    if (nonlinear && ts.records.size() >= 4) {
      MomentDrift md = moment_drift(ts);
      j["moment_drift"] = {{"slope", md.slope},
                           {"predicted", md.predicted},
                           {"rel_error", md.rel_error},
                           {"zero_crossings", md.zero_crossings}};
    }
    say(ctx, std::string(command) + ": L2 drift " + tag(cr.l2_drift) + ", zero-mode drift " +
                 tag(cr.zmode_drift));
  } else {
    bool mono = true;
    for (std::size_t k = 1; k < ts.records.size(); ++k)
      mono = mono && ts.records[k].l2 <= ts.records[k - 1].l2;
    j["l2_nonincreasing"] = mono;
    say(ctx, std::string(command) + ": L2 " + tag(ts.records.front().l2) + " -> " +
                 tag(ts.records.back().l2));
  }
  write_json(path_in(ctx, "summary.json"), j);
  return kOk;
}

}  // namespace

int cmd_simulate(const Context& ctx) { return evolve(ctx, "simulate", true); }

int cmd_linear(const Context& ctx) { return evolve(ctx, "linear", false); }

int cmd_picard(const Context& ctx) {
  RealField phi = initial_data(ctx.m);
  const SolverConfig& c = ctx.m.solver;
  PicardResult p = picard_solve(phi, c.T, c.mu, ctx.m.picard_max_iter, ctx.m.picard_tol, c.dealias);

  CsvTable t;
  t.columns = {"iteration[count]", "residual[norm]"};
  for (std::size_t k = 0; k < p.residuals.size(); ++k)
    t.add({std::to_string(k + 1), fmt17(p.residuals[k])});
  write_csv(path_in(ctx, "residuals.csv"), t);

  json j;
  j["command"] = "picard";
  j["grid"] = grid_json(phi.grid);
  j["T"] = c.T;
  j["mu"] = c.mu;
  j["nodes"] = kPicardNodes;
  j["iterations"] = p.iterations;
  j["converged"] = p.converged;
  if (!p.converged) {
    j["status"] = "aborted";
    j["abort"] = abort_json("contraction", "no convergence within picard.max_iter iterations");
    write_json(path_in(ctx, "summary.json"), j);
    std::cerr << "numerical abort (contraction): Picard iteration did not converge\n";
    return kNumericalAbort;
  }
  write_snapshot(path_in(ctx, "final.bozk"), p.u);
  RunResult r = run(phi, c);
  if (!r.series.aborted) {
    RealField d = r.final_field;
    for (std::size_t k = 0; k < d.v.size(); ++k) d.v[k] -= p.u.v[k];
    j["stepper_gap"] = l2_norm(d);
  }
  j["status"] = "ok";
  write_json(path_in(ctx, "summary.json"), j);
  say(ctx, "picard: converged in " + std::to_string(p.iterations) + " iterations");
  return kOk;
}

int cmd_uc(const Context& ctx) {
  const RunManifest& m = ctx.m;
  RealField phi = initial_data(m);

  std::optional<UCReport> rep;
  std::optional<PersistenceResult> per;
  std::optional<MomentDrift> md;
  std::string errs[3], audits[3];
  parallel_for(3, [&](std::size_t job) {
    try {
      if (job == 0) rep = b1_indicator(phi, m.uc.t, m.uc.cut, m.uc.levels, m.uc.b1);
      if (job == 1)
        per = persistence_scan(phi, m.solver, m.uc.r_list, m.uc.s, m.uc.growth_factor, m.uc.frame_tol);
      if (job == 2 && m.solver.mu == 0) {
        RunResult r = run(phi, m.solver);
        if (r.series.aborted) throw NumericalAbort(r.series.abort_audit, r.series.abort_message);
        if (r.series.records.size() >= 4) md = moment_drift(r.series);
      }
    } catch (const NumericalAbort& e) {
      audits[job] = e.audit_name;
      errs[job] = e.what();
    }
  });

  json j;
  j["command"] = "uc";
  j["grid"] = grid_json(phi.grid);
  if (rep) {
    CsvTable t;
    t.columns = {"level[count]", "window_norm[norm]", "ratio[1]", "verdict[label]"};
    for (std::size_t k = 0; k < rep->norms.size(); ++k)
      t.add({std::to_string(k), fmt17(rep->norms[k]), k ? fmt17(rep->ratios[k - 1]) : "",
             k + 1 == rep->norms.size() ? rep->verdict : ""});
    write_csv(path_in(ctx, "uc_report.csv"), t);
    j["b1"] = {{"t", rep->t}, {"ratios", rep->ratios}, {"verdict", rep->verdict}};
    say(ctx, "uc: b1 verdict " + rep->verdict);
  }
  if (per) {
    CsvTable t;
    t.columns = {"t[time]"};
    for (double r : per->r_list) t.columns.push_back("z_r" + tag(r) + "[norm]");
    for (double r : per->r_list) t.columns.push_back("l2r_r" + tag(r) + "[norm]");
    for (const auto& row : per->rows) {
      std::vector<std::string> cells{fmt17(row.t)};
      for (double z : row.z) cells.push_back(fmt17(z));
      for (double w : row.l2r) cells.push_back(fmt17(w));
      t.add(std::move(cells));
    }
    write_csv(path_in(ctx, "persistence.csv"), t);
    json rows = json::array();
    for (std::size_t k = 0; k < per->r_list.size(); ++k)
      rows.push_back({{"r", per->r_list[k]},
                      {"growth", per->growth[k]},
                      {"tail_bar", per->tail_bar[k]},
                      {"flagged", bool(per->flagged[k])}});
    j["persistence"] = {{"s", per->s}, {"max_frame_fraction", per->max_frame_fraction}, {"r", rows}};
  }
  if (md)
    j["moment_drift"] = {{"slope", md->slope},
                         {"predicted", md->predicted},
                         {"rel_error", md->rel_error},
                         {"zero_crossings", md->zero_crossings}};
  for (int k = 0; k < 3; ++k)
    if (!audits[k].empty()) {
      j["status"] = "aborted";
      j["abort"] = abort_json(audits[k], errs[k]);
      write_json(path_in(ctx, "summary.json"), j);
      std::cerr << "numerical abort (" << audits[k] << "): " << errs[k] << '\n';
      return kNumericalAbort;
    }
  j["status"] = "ok";
  write_json(path_in(ctx, "summary.json"), j);
  return kOk;
}

int cmd_verify(const Context& ctx) {
  const RunManifest& m = ctx.m;
  Grid2D g = make_grid(m.verify.grid_n, m.verify.grid_n, m.verify.grid_L, m.verify.grid_L);
  std::vector<Check> parts[4];
  parallel_for(4, [&](std::size_t k) {
    if (k == 0) parts[0] = weights_checks(m.verify.beta_N);
    if (k == 1) parts[1] = stein_checks();
    if (k == 2) parts[2] = inequality_checks(g, m.verify.fields, m.seed);
    if (k == 3) parts[3] = a2_checks();
  });

  CsvTable t;
  t.columns = {"suite[label]", "check[label]", "value[1]", "limit[1]", "pass[bool]"};
  int failed = 0, total = 0;
  json fails = json::array();
  for (const auto& part : parts)
    for (const auto& c : part) {
      ++total;
      if (!c.pass) {
        ++failed;
        fails.push_back(c.suite + ": " + c.name);
      }
      t.add({c.suite, c.name, fmt17(c.value), fmt17(c.limit), c.pass ? "1" : "0"});
    }
  write_csv(path_in(ctx, "verify.csv"), t);
  json j;
  j["command"] = "verify";
  j["seed"] = m.seed;
  j["checks"] = total;
  j["failed"] = failed;
  j["failures"] = fails;
  j["status"] = failed ? "failed" : "ok";
  write_json(path_in(ctx, "summary.json"), j);
  say(ctx, "verify: " + std::to_string(total - failed) + "/" + std::to_string(total) + " checks passed");
  return failed ? kVerifyFailed : kOk;
}

int cmd_diagnose(const Context& ctx) {
  RealField u = initial_data(ctx.m);
  if (!u.all_finite()) throw ConfigError("field has non-finite samples");
  SpectrumField F = forward(u);
  CsvTable t;
  t.columns = {"norm[label]", "value[norm]"};
  t.add({"l2", fmt17(l2_norm(u))});
  for (double s : ctx.m.diag.hs) t.add({"hs_" + tag(s), fmt17(hs_norm(F, s))});
  for (const auto& w : ctx.m.diag.weights) t.add({"w_" + w.id(), fmt17(norm(u, NormSpec::l2w(w)))});
  t.add({"moment_x", fmt17(spectral_moment_x(F))});
  t.add({"max_abs", fmt17(u.max_abs())});
  t.add({"frame_fraction", fmt17(frame_fraction(u))});
  write_csv(path_in(ctx, "norms.csv"), t);
  json j;
  j["command"] = "diagnose";
  j["grid"] = grid_json(u.grid);
  j["status"] = "ok";
  write_json(path_in(ctx, "summary.json"), j);
  say(ctx, "diagnose: " + std::to_string(t.rows.size()) + " norms written");
  return kOk;
}

}  // namespace bozk::cli
