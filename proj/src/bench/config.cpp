// Copyright 2026 The Annealed MPC Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ampc/bench/config.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "ampc/baselines/mppi_fixed.hpp"
#include "ampc/core/errors.hpp"

namespace ampc {
namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool valid_key_chars(const std::string& key) {
  if (key.empty()) return false;
  for (char c : key) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
                    c == '_' || c == '.';
    if (!ok) return false;
  }
  return true;
}

[[noreturn]] void bad_value(const std::string& key, const std::string& value,
                            const char* want) {
  throw ConfigError("config key '" + key + "': cannot parse '" + value +
                    "' as " + want);
}

int64_t parse_int(const std::string& key, const std::string& value) {
  errno = 0;
  char* end = nullptr;
  const long long v = std::strtoll(value.c_str(), &end, 10);
  if (errno != 0 || end != value.c_str() + value.size() || value.empty()) {
    bad_value(key, value, "an integer");
  }
  return v;
}

double parse_double(const std::string& key, const std::string& value) {
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(value.c_str(), &end);
  if (end != value.c_str() + value.size() || value.empty()) {
    bad_value(key, value, "a number");
  }
  return v;
}

uint64_t parse_u64(const std::string& key, const std::string& value) {
  errno = 0;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(value.c_str(), &end, 10);
  if (errno != 0 || end != value.c_str() + value.size() || value.empty() ||
      value[0] == '-') {
    bad_value(key, value, "an unsigned integer");
  }
  return v;
}

std::vector<std::string> split_commas(const std::string& value) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(value);
  while (std::getline(in, cur, ',')) parts.push_back(trim(cur));
  return parts;
}

constexpr int kMaxSeeds = 100000;

std::string fmt_g(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

}  // namespace

ConfigMap ConfigMap::parse_text(const std::string& text,
                                const std::string& origin) {
  ConfigMap cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string where = origin + ":" + std::to_string(lineno);
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    const size_t eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(where + ": expected 'key = value', got '" + stripped +
                        "'");
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (!valid_key_chars(key)) {
      throw ConfigError(where + ": malformed key '" + key + "'");
    }
    if (value.empty()) {
      throw ConfigError(where + ": key '" + key + "' has an empty value");
    }
    if (cfg.find(key) != nullptr) {
      throw ConfigError(where + ": duplicate key '" + key + "'");
    }
    cfg.entries_.push_back({key, value});
  }
  return cfg;
}

ConfigMap ConfigMap::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_text(buf.str(), path);
}

void ConfigMap::set(const std::string& key, const std::string& value) {
  if (ConfigEntry* e = find(key)) {
    e->value = value;
    return;
  }
  entries_.push_back({key, value});
}

void ConfigMap::merge_over(const ConfigMap& overlay) {
  for (const ConfigEntry& e : overlay.entries_) set(e.key, e.value);
}

bool ConfigMap::has(const std::string& key) const {
  return find(key) != nullptr;
}

std::string ConfigMap::get_string(const std::string& key) const {
  const ConfigEntry* e = find(key);
  if (e == nullptr) throw ConfigError("missing required config key '" + key + "'");
  return e->value;
}

std::string ConfigMap::get_string(const std::string& key,
                                  const std::string& fallback) const {
  const ConfigEntry* e = find(key);
  return e == nullptr ? fallback : e->value;
}

int64_t ConfigMap::get_int(const std::string& key) const {
  return parse_int(key, get_string(key));
}

int64_t ConfigMap::get_int(const std::string& key, int64_t fallback) const {
  const ConfigEntry* e = find(key);
  return e == nullptr ? fallback : parse_int(key, e->value);
}

double ConfigMap::get_double(const std::string& key) const {
  return parse_double(key, get_string(key));
}

double ConfigMap::get_double(const std::string& key, double fallback) const {
  const ConfigEntry* e = find(key);
  return e == nullptr ? fallback : parse_double(key, e->value);
}

std::vector<uint64_t> ConfigMap::get_seeds(const std::string& key) const {
  const std::string value = get_string(key);
  std::vector<uint64_t> seeds;
  const size_t dots = value.find("..");
  if (dots != std::string::npos) {
    const uint64_t lo = parse_u64(key, trim(value.substr(0, dots)));
    const uint64_t hi = parse_u64(key, trim(value.substr(dots + 2)));
    if (hi < lo || hi - lo + 1 > kMaxSeeds) {
      throw ConfigError("config key '" + key + "': bad seed range '" + value +
                        "'");
    }
    for (uint64_t s = lo; s <= hi; ++s) seeds.push_back(s);
    return seeds;
  }
  for (const std::string& part : split_commas(value)) {
    seeds.push_back(parse_u64(key, part));
  }
  if (seeds.empty()) {
    throw ConfigError("config key '" + key + "': empty seed list");
  }
  return seeds;
}

std::vector<double> ConfigMap::get_double_list(const std::string& key) const {
  std::vector<double> out;
  for (const std::string& part : split_commas(get_string(key))) {
    out.push_back(parse_double(key, part));
  }
  if (out.empty()) {
    throw ConfigError("config key '" + key + "': empty list");
  }
  return out;
}

std::vector<std::string> ConfigMap::get_name_list(
    const std::string& key) const {
  std::vector<std::string> out = split_commas(get_string(key));
  for (const std::string& name : out) {
    if (name.empty()) {
      throw ConfigError("config key '" + key + "': empty name in list");
    }
  }
  if (out.empty()) {
    throw ConfigError("config key '" + key + "': empty list");
  }
  return out;
}

ConfigEntry* ConfigMap::find(const std::string& key) {
  for (ConfigEntry& e : entries_) {
    if (e.key == key) return &e;
  }
  return nullptr;
}

const ConfigEntry* ConfigMap::find(const std::string& key) const {
  for (const ConfigEntry& e : entries_) {
    if (e.key == key) return &e;
  }
  return nullptr;
}

// ---- Key registry ----------------------------------------------------

namespace {

const KeySpec kRegistry[] = {
    {"steps", KeyType::kInt, KeyScope::kGlobal, "",
     "control steps per episode"},
    {"seeds", KeyType::kSeedList, KeyScope::kGlobal, "",
     "episode seeds: inclusive range 'lo..hi' or comma list"},
    {"compare.solvers", KeyType::kNameList, KeyScope::kGlobal, "",
     "solver presets joined in the comparison table"},
    {"sweep.beta1", KeyType::kNumberList, KeyScope::kGlobal, "",
     "trajectory-axis rates to sweep"},
    {"sweep.beta2", KeyType::kNumberList, KeyScope::kGlobal, "",
     "action-axis rates to sweep"},
    {"sweep.n_stages", KeyType::kNumberList, KeyScope::kGlobal, "",
     "stage counts to sweep"},
    {"sweep.sigma_base", KeyType::kNumberList, KeyScope::kGlobal, "",
     "base kernel widths to sweep"},

    {"env.id", KeyType::kString, KeyScope::kEnv, "",
     "double_integrator | pendulum | wall_jump | hopper"},
    {"env.dt", KeyType::kDouble, KeyScope::kEnv, "",
     "control period in seconds (default per environment)"},
    {"env.u_max", KeyType::kDouble, KeyScope::kEnv, "double_integrator",
     "acceleration bound"},
    {"env.q_pos", KeyType::kDouble, KeyScope::kEnv, "double_integrator",
     "running position weight"},
    {"env.q_vel", KeyType::kDouble, KeyScope::kEnv, "double_integrator",
     "running velocity weight"},
    {"env.r_u", KeyType::kDouble, KeyScope::kEnv, "double_integrator",
     "running effort weight"},
    {"env.qf_pos", KeyType::kDouble, KeyScope::kEnv, "double_integrator",
     "terminal position weight"},
    {"env.qf_vel", KeyType::kDouble, KeyScope::kEnv, "double_integrator",
     "terminal velocity weight"},
    {"env.mass", KeyType::kDouble, KeyScope::kEnv, "pendulum",
     "bob mass in kg"},
    {"env.length", KeyType::kDouble, KeyScope::kEnv, "pendulum",
     "rod length in m"},
    {"env.friction", KeyType::kDouble, KeyScope::kEnv, "pendulum",
     "viscous joint friction"},
    {"env.tau_max", KeyType::kDouble, KeyScope::kEnv, "pendulum",
     "torque bound"},
    {"env.wall_x", KeyType::kDouble, KeyScope::kEnv, "wall_jump",
     "wall position"},
    {"env.wall_height", KeyType::kDouble, KeyScope::kEnv, "wall_jump",
     "clearance height"},
    {"env.band_half", KeyType::kDouble, KeyScope::kEnv, "wall_jump",
     "penalty band half width around the wall"},
    {"env.goal_x", KeyType::kDouble, KeyScope::kEnv, "wall_jump",
     "landing target"},
    {"env.penalty_weight", KeyType::kDouble, KeyScope::kEnv, "wall_jump",
     "penetration price"},
    {"env.effort_weight", KeyType::kDouble, KeyScope::kEnv, "wall_jump",
     "actuation price"},
    {"env.jump_impulse", KeyType::kDouble, KeyScope::kEnv, "wall_jump",
     "vertical launch speed per unit command"},
    {"env.thrust_force", KeyType::kDouble, KeyScope::kEnv, "wall_jump",
     "horizontal force per unit command"},
    {"env.success_tol", KeyType::kDouble, KeyScope::kEnv, "wall_jump",
     "goal distance counted as success"},
    {"env.body_mass", KeyType::kDouble, KeyScope::kEnv, "hopper",
     "body mass in kg"},
    {"env.leg_spring", KeyType::kDouble, KeyScope::kEnv, "hopper",
     "passive leg spring stiffness"},
    {"env.z_ref", KeyType::kDouble, KeyScope::kEnv, "hopper",
     "height tracking reference"},
    {"env.contact_weight", KeyType::kDouble, KeyScope::kEnv, "hopper",
     "staged contact reward weight in the running cost"},
    {"env.w_track", KeyType::kDouble, KeyScope::kEnv, "hopper",
     "pad tracking weight"},
    {"env.n_pads", KeyType::kInt, KeyScope::kEnv, "hopper",
     "number of stage pads"},
    {"env.pad_radius", KeyType::kDouble, KeyScope::kEnv, "hopper",
     "pad half width"},
    {"env.pad_seed", KeyType::kInt, KeyScope::kEnv, "hopper",
     "seed for the pad layout draw"},
    {"env.pad_window", KeyType::kDouble, KeyScope::kEnv, "hopper",
     "seconds per pad stage"},

    {"solver.id", KeyType::kString, KeyScope::kSolver, "",
     "dial | mppi | cmaes"},
    {"solver.horizon", KeyType::kInt, KeyScope::kSolver, "",
     "plan length in steps"},
    {"solver.n_samples", KeyType::kInt, KeyScope::kSolver, "",
     "rollouts per update (population for cmaes)"},
    {"solver.n_stages", KeyType::kInt, KeyScope::kSolver, "",
     "updates per control step (generations for cmaes); budget per step is "
     "n_stages * n_samples for every solver"},
    {"solver.lambda", KeyType::kDouble, KeyScope::kSolver, "dial,mppi",
     "softmax temperature"},
    {"solver.node_count", KeyType::kInt, KeyScope::kSolver, "dial,mppi",
     "plan on this many interpolation nodes (0 = every step)"},
    {"solver.interp", KeyType::kString, KeyScope::kSolver, "dial,mppi",
     "linear | catmull_rom"},
    {"solver.beta1", KeyType::kDouble, KeyScope::kSolver, "dial",
     "trajectory-axis annealing rate (inf freezes the axis)"},
    {"solver.beta2", KeyType::kDouble, KeyScope::kSolver, "dial",
     "action-axis annealing rate (inf freezes the axis)"},
    {"solver.sigma_base", KeyType::kDouble, KeyScope::kSolver, "dial",
     "largest kernel std"},
    {"solver.sigma", KeyType::kDouble, KeyScope::kSolver, "mppi",
     "fixed kernel std"},
    {"solver.initial_step", KeyType::kDouble, KeyScope::kSolver, "cmaes",
     "initial step size"},
    {"solver.selection_fraction", KeyType::kDouble, KeyScope::kSolver,
     "cmaes", "elite fraction"},
};

bool id_in_filter(const std::string& id, const char* filter) {
  const std::string list(filter);
  if (list.empty()) return true;
  size_t at = 0;
  while (at != std::string::npos) {
    const size_t comma = list.find(',', at);
    const std::string item = comma == std::string::npos
                                 ? list.substr(at)
                                 : list.substr(at, comma - at);
    if (item == id) return true;
    at = comma == std::string::npos ? std::string::npos : comma + 1;
  }
  return false;
}

const KeySpec* find_spec(const std::string& key) {
  for (const KeySpec& spec : kRegistry) {
    if (key == spec.key) return &spec;
  }
  return nullptr;
}

}  // namespace

std::span<const KeySpec> config_key_registry() { return kRegistry; }

void validate_keys(const ConfigMap& cfg) {
  const std::string env_id = cfg.get_string("env.id", "");
  const std::string solver_id = cfg.get_string("solver.id", "");
  for (const ConfigEntry& e : cfg.entries()) {
    // Mismatch overrides mirror the env's numeric parameters.
    if (e.key.rfind("mismatch.", 0) == 0) {
      const std::string base = "env." + e.key.substr(9);
      const KeySpec* spec = find_spec(base);
      if (spec == nullptr || spec->scope != KeyScope::kEnv ||
          spec->type != KeyType::kDouble) {
        throw ConfigError("unknown config key '" + e.key +
                          "': no matching numeric env parameter '" + base +
                          "'");
      }
      if (!env_id.empty() && !id_in_filter(env_id, spec->ids)) {
        throw ConfigError("config key '" + e.key + "' does not apply to env '" +
                          env_id + "'");
      }
      continue;
    }
    const KeySpec* spec = find_spec(e.key);
    if (spec == nullptr) {
      throw ConfigError("unknown config key '" + e.key + "'");
    }
    if (spec->scope == KeyScope::kEnv && !env_id.empty() &&
        !id_in_filter(env_id, spec->ids)) {
      throw ConfigError("config key '" + e.key + "' does not apply to env '" +
                        env_id + "'");
    }
    if (spec->scope == KeyScope::kSolver && !solver_id.empty() &&
        !id_in_filter(solver_id, spec->ids)) {
      throw ConfigError("config key '" + e.key +
                        "' does not apply to solver '" + solver_id + "'");
    }
  }
}

ConfigMap restrict_to_solver(const ConfigMap& cfg,
                             const std::string& solver_id) {
  ConfigMap out;
  for (const ConfigEntry& e : cfg.entries()) {
    if (e.key.rfind("solver.", 0) == 0 && e.key != "solver.id") {
      const KeySpec* spec = find_spec(e.key);
      if (spec != nullptr && spec->scope == KeyScope::kSolver &&
          !id_in_filter(solver_id, spec->ids)) {
        continue;
      }
    }
    out.set(e.key, e.value);
  }
  return out;
}

// ---- Presets ----------------------------------------------------------

ConfigMap preset(const std::string& name) {
  ConfigMap p;
  if (name == "desk") {
    p.set("env.id", "wall_jump");
    p.set("steps", "50");
    p.set("seeds", "0..9");
    p.set("solver.id", "dial");
    p.set("solver.horizon", "20");
    p.set("solver.n_samples", "128");
    p.set("solver.n_stages", "4");
    p.set("solver.lambda", "0.2");
    p.set("solver.sigma_base", "0.6");
    p.set("solver.beta1", "1.0");
    p.set("solver.beta2", "1.0");
    return p;
  }
  if (name == "paper-budget") {
    p.set("solver.n_samples", "2048");
    p.set("solver.horizon", "20");
    p.set("env.dt", "0.02");
    return p;
  }
  if (name == "dial") {
    p.set("solver.id", "dial");
    return p;
  }
  if (name == "mppi-explore") {
    p.set("solver.id", "mppi");
    p.set("solver.sigma", fmt_g(kMppiExploreSigma));
    return p;
  }
  if (name == "mppi-exploit") {
    p.set("solver.id", "mppi");
    p.set("solver.sigma", fmt_g(kMppiExploitSigma));
    return p;
  }
  if (name == "cmaes") {
    p.set("solver.id", "cmaes");
    p.set("solver.initial_step", "0.3");
    p.set("solver.selection_fraction", "0.5");
    return p;
  }
  if (name == "paper-trials-10") {
    p.set("seeds", "0..9");
    return p;
  }
  if (name == "paper-trials-5") {
    p.set("seeds", "0..4");
    return p;
  }
  throw ConfigError("unknown preset '" + name + "'");
}

std::vector<std::string> preset_names() {
  return {"desk",         "paper-budget",   "dial",
          "mppi-explore", "mppi-exploit",   "cmaes",
          "paper-trials-10", "paper-trials-5"};
}

}  // namespace ampc
