#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bozk/fields.hpp"
#include "bozk/solver.hpp"
#include "bozk/uc_lab.hpp"
#include "bozk/weights.hpp"

namespace bozk {

// Flat "key = value" text; '#' starts a comment.  Keys are dotted
// (grid.nx, solver.dt, data.kind).
using KeyValues = std::map<std::string, std::string>;
KeyValues parse_key_values(const std::string& text);
KeyValues read_key_values(const std::string& path);

// Numbers accept a trailing "pi" factor: "16pi", "0.5pi", "pi".
double parse_real(const std::string& key, const std::string& v);
long parse_integer(const std::string& key, const std::string& v);
bool parse_bool(const std::string& key, const std::string& v);
std::vector<double> parse_real_list(const std::string& key, const std::string& v);

// "poly2", "trunc8", "gamma0.5", "damped1_0.1"
WeightSpec parse_weight_id(const std::string& id);

struct DataSpec {
  std::string kind = "gaussian";  // gaussian | dx_gaussian | two_solitary_bumps | random_mixture | file
  GaussianParams gauss;
  BumpPairParams bumps;
  std::string path;
};

struct GridSpec {
  int nx = 128, ny = 128;
  double Lx = 16 * M_PI, Ly = 16 * M_PI;
};

struct UcSpec {
  double t = 0.1;
  int levels = 3;
  CutoffSpec cut;
  B1Config b1;
  std::vector<double> r_list{0, 1, 2, 3};
  double s = 6;
  double growth_factor = 2;
  double frame_tol = 1e-10;
};

struct VerifySpec {
  int fields = 50;             // seeded family size for the inequality suites
  int grid_n = 64;             // square grid for the inequality suites
  double grid_L = 16 * M_PI;
  std::vector<int> beta_N{1, 2, 4, 8, 16, 32};
};

struct RunManifest {
  GridSpec grid;
  DataSpec data;
  SolverConfig solver;
  DiagnosticsSpec diag;
  UcSpec uc;
  VerifySpec verify;
  int picard_max_iter = 20;
  double picard_tol = 1e-12;
  std::string out = "out";
  std::uint64_t seed = 1;
};

// Unknown keys and malformed values raise ConfigError.
RunManifest manifest_from(const KeyValues& kv);
void validate(const RunManifest& m);

Grid2D make_grid(const GridSpec& g);
// The file family carries its own grid; every other family is sampled on m.grid.
RealField initial_data(const RunManifest& m);

}  // namespace bozk
