#include "bozk/config.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "bozk/error.hpp"
#include "bozk/output.hpp"

namespace bozk {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) {
    cur = trim(cur);
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

double strict_double(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  double x;
  try {
    x = std::stod(v, &used);
  } catch (const std::exception&) {
    throw ConfigError(key + ": not a number: '" + v + "'");
  }
  if (used != v.size()) throw ConfigError(key + ": trailing characters in '" + v + "'");
  return x;
}

}  // namespace

KeyValues parse_key_values(const std::string& text) {
  KeyValues kv;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError("line " + std::to_string(lineno) + ": empty key");
    if (kv.count(key)) throw ConfigError("duplicate key " + key);
    kv[key] = val;
  }
  return kv;
}

KeyValues read_key_values(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open config " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return parse_key_values(os.str());
}

double parse_real(const std::string& key, const std::string& v) {
  std::string s = trim(v);
  double factor = 1;
  if (s.size() >= 2 && s.compare(s.size() - 2, 2, "pi") == 0) {
    factor = M_PI;
    s = trim(s.substr(0, s.size() - 2));
    if (s.empty()) return M_PI;
    if (s.back() == '*') s = trim(s.substr(0, s.size() - 1));
  }
  double x = strict_double(key, s) * factor;
  if (!std::isfinite(x)) throw ConfigError(key + ": value must be finite");
  return x;
}

long parse_integer(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  long x;
  try {
    x = std::stol(v, &used);
  } catch (const std::exception&) {
    throw ConfigError(key + ": not an integer: '" + v + "'");
  }
  if (used != v.size()) throw ConfigError(key + ": not an integer: '" + v + "'");
  return x;
}

bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw ConfigError(key + ": expected a boolean, got '" + v + "'");
}

std::vector<double> parse_real_list(const std::string& key, const std::string& v) {
  std::vector<double> out;
  for (const auto& item : split(v, ',')) out.push_back(parse_real(key, item));
  return out;
}

WeightSpec parse_weight_id(const std::string& id) {
  auto num = [&](const std::string& s) { return strict_double("weight " + id, s); };
  if (id.rfind("trunc", 0) == 0) {
    long n = parse_integer("weight " + id, id.substr(5));
    if (n < 1) throw ConfigError("weight " + id + ": N must be >= 1");
    return WeightSpec::truncated(int(n));
  }
  if (id.rfind("poly", 0) == 0) return WeightSpec::polynomial(num(id.substr(4)));
  if (id.rfind("gamma", 0) == 0) return WeightSpec::gamma_power(num(id.substr(5)));
  if (id.rfind("damped", 0) == 0) {
    auto us = id.find('_');
    if (us == std::string::npos) throw ConfigError("weight " + id + ": expected dampedG_L");
    return WeightSpec::damped(num(id.substr(6, us - 6)), num(id.substr(us + 1)));
  }
  throw ConfigError("unknown weight id '" + id + "'");
}

RunManifest manifest_from(const KeyValues& kv) {
  RunManifest m;
  std::set<std::string> used;
  auto get = [&](const std::string& key) -> const std::string* {
    auto it = kv.find(key);
    if (it == kv.end()) return nullptr;
    used.insert(key);
    return &it->second;
  };
  auto real = [&](const char* key, double& dst) {
    if (auto* v = get(key)) dst = parse_real(key, *v);
  };
  auto integer = [&](const char* key, int& dst) {
    if (auto* v = get(key)) {
      long x = parse_integer(key, *v);
      if (x < -1000000000L || x > 1000000000L) throw ConfigError(std::string(key) + ": out of range");
      dst = int(x);
    }
  };
  auto boolean = [&](const char* key, bool& dst) {
    if (auto* v = get(key)) dst = parse_bool(key, *v);
  };
  auto reals = [&](const char* key, std::vector<double>& dst) {
    if (auto* v = get(key)) dst = parse_real_list(key, *v);
  };

  integer("grid.nx", m.grid.nx);
  integer("grid.ny", m.grid.ny);
  real("grid.Lx", m.grid.Lx);
  real("grid.Ly", m.grid.Ly);

  if (auto* v = get("data.kind")) m.data.kind = *v;
  real("data.amplitude", m.data.gauss.amplitude);
  real("data.sigma_x", m.data.gauss.sigma_x);
  real("data.sigma_y", m.data.gauss.sigma_y);
  real("data.x0", m.data.gauss.x0);
  real("data.y0", m.data.gauss.y0);
  real("data.amplitude1", m.data.bumps.amplitude1);
  real("data.amplitude2", m.data.bumps.amplitude2);
  real("data.width", m.data.bumps.width);
  real("data.separation", m.data.bumps.separation);
  if (auto* v = get("data.path")) m.data.path = *v;

  real("solver.dt", m.solver.dt);
  real("solver.T", m.solver.T);
  real("solver.mu", m.solver.mu);
  boolean("solver.dealias", m.solver.dealias);
  integer("solver.stride", m.solver.stride);

  reals("diag.hs", m.diag.hs);
  if (auto* v = get("diag.weights")) {
    m.diag.weights.clear();
    for (const auto& id : split(*v, ',')) m.diag.weights.push_back(parse_weight_id(id));
  }

  integer("picard.max_iter", m.picard_max_iter);
  real("picard.tol", m.picard_tol);

  real("uc.t", m.uc.t);
  integer("uc.levels", m.uc.levels);
  real("uc.epsilon", m.uc.cut.epsilon);
  integer("uc.eta_modes", m.uc.b1.eta_modes);
  real("uc.half_width", m.uc.b1.half_width);
  integer("uc.oversample", m.uc.b1.oversample);
  real("uc.R", m.uc.b1.R);
  real("uc.delta_div", m.uc.b1.delta_div);
  real("uc.delta_conv", m.uc.b1.delta_conv);
  real("uc.edge_tol", m.uc.b1.edge_tol);
  reals("uc.r_list", m.uc.r_list);
  real("uc.s", m.uc.s);
  real("uc.growth_factor", m.uc.growth_factor);
  real("uc.frame_tol", m.uc.frame_tol);

  integer("verify.fields", m.verify.fields);
  integer("verify.grid_n", m.verify.grid_n);
  real("verify.grid_L", m.verify.grid_L);
  if (auto* v = get("verify.beta_N")) {
    m.verify.beta_N.clear();
    for (const auto& s : split(*v, ',')) m.verify.beta_N.push_back(int(parse_integer("verify.beta_N", s)));
  }

  if (auto* v = get("out")) m.out = *v;
  if (auto* v = get("seed")) {
    try {
      std::size_t n = 0;
      m.seed = std::stoull(*v, &n);
      if (n != v->size()) throw std::invalid_argument("seed");
    } catch (const std::exception&) {
      throw ConfigError("seed: expected an unsigned 64-bit integer");
    }
  }

  for (const auto& [k, v] : kv)
    if (!used.count(k)) throw ConfigError("unknown config key '" + k + "'");
  return m;
}

void validate(const RunManifest& m) {
  if (m.data.kind != "file") make_grid(m.grid);
  static const std::set<std::string> kinds{"gaussian", "dx_gaussian", "two_solitary_bumps",
                                           "random_mixture", "file"};
  if (!kinds.count(m.data.kind)) throw ConfigError("unknown data.kind '" + m.data.kind + "'");
  if (m.data.kind == "file" && m.data.path.empty()) throw ConfigError("data.kind = file needs data.path");
  const auto& gp = m.data.gauss;
  if (!(gp.sigma_x > 0 && gp.sigma_y > 0)) throw ConfigError("Gaussian widths must be positive");
  if (!(m.data.bumps.width > 0)) throw ConfigError("bump width must be positive");
  validate(m.solver);
  for (const auto& w : m.diag.weights) validate(w);
  if (m.picard_max_iter < 1) throw ConfigError("picard.max_iter must be >= 1");
  if (!(m.picard_tol > 0)) throw ConfigError("picard.tol must be positive");
  if (!(m.uc.t > 0)) throw ConfigError("uc.t must be positive");
  if (m.uc.levels < 3) throw ConfigError("uc.levels must be >= 3");
  validate(m.uc.cut);
  if (m.uc.b1.eta_modes < 0 || m.uc.b1.oversample < 1) throw ConfigError("bad uc sampling");
  if (m.uc.r_list.empty()) throw ConfigError("uc.r_list must not be empty");
  if (m.verify.fields < 2) throw ConfigError("verify.fields must be >= 2");
  if (m.verify.grid_n < 8 || m.verify.grid_n % 2) throw ConfigError("verify.grid_n must be even, >= 8");
  if (!(m.verify.grid_L > 0)) throw ConfigError("verify.grid_L must be positive");
  for (int n : m.verify.beta_N)
    if (n < 1) throw ConfigError("verify.beta_N entries must be >= 1");
  if (m.out.empty()) throw ConfigError("output directory must not be empty");
}

Grid2D make_grid(const GridSpec& g) { return make_grid(g.nx, g.ny, g.Lx, g.Ly); }

RealField initial_data(const RunManifest& m) {
  const DataSpec& d = m.data;
  if (d.kind == "file") return read_snapshot(d.path);
  Grid2D g = make_grid(m.grid);
  if (d.kind == "gaussian") return gaussian(g, d.gauss);
  if (d.kind == "dx_gaussian") return dx_gaussian(g, d.gauss);
  if (d.kind == "two_solitary_bumps") return two_solitary_bumps(g, d.bumps);
  if (d.kind == "random_mixture") {
    Rng rng(m.seed);
    return random_bump_mixture(g, rng);
  }
  throw ConfigError("unknown data.kind '" + d.kind + "'");
}

}  // namespace bozk
