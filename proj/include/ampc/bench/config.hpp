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

#ifndef AMPC_BENCH_CONFIG_HPP_
#define AMPC_BENCH_CONFIG_HPP_

// Experiment configuration: flat `key = value` text with dotted key paths.
//
// The format is deliberately dumb. Lines are either blank, comments
// starting with '#', or a single assignment. Every key must appear in the
// registry below and be in scope for the configured env/solver ids;
// anything else is a hard ConfigError naming the key, because a silently
// ignored typo in a benchmark config produces a wrong table, not a crash.
//
// Precedence, low to high: preset, config file, command-line overrides.
// Later assignments overwrite earlier ones; within one file a duplicate
// key is an error (it is almost always an editing accident).

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ampc {

struct ConfigEntry {
  std::string key;
  std::string value;
};

class ConfigMap {
 public:
  // Parses assignment text. `origin` names the source in error messages.
  static ConfigMap parse_text(const std::string& text,
                              const std::string& origin = "<config>");
  static ConfigMap parse_file(const std::string& path);

  // Sets or overwrites one key (the precedence mechanism).
  void set(const std::string& key, const std::string& value);
  // Applies every entry of `overlay` on top of this map.
  void merge_over(const ConfigMap& overlay);

  bool has(const std::string& key) const;
  // Typed getters throw ConfigError naming the key on absence or on a
  // value that does not fully parse as the requested type.
  std::string get_string(const std::string& key) const;
  std::string get_string(const std::string& key,
                         const std::string& fallback) const;
  int64_t get_int(const std::string& key) const;
  int64_t get_int(const std::string& key, int64_t fallback) const;
  double get_double(const std::string& key) const;
  double get_double(const std::string& key, double fallback) const;
  // Seed lists: either an inclusive range "lo..hi" or a comma list "0,4,7".
  std::vector<uint64_t> get_seeds(const std::string& key) const;
  // Comma list of doubles, e.g. sweep axes.
  std::vector<double> get_double_list(const std::string& key) const;
  // Comma list of names, e.g. compare.solvers.
  std::vector<std::string> get_name_list(const std::string& key) const;

  const std::vector<ConfigEntry>& entries() const { return entries_; }

 private:
  ConfigEntry* find(const std::string& key);
  const ConfigEntry* find(const std::string& key) const;

  std::vector<ConfigEntry> entries_;  // insertion-ordered, keys unique
};

// ---- Key registry ----------------------------------------------------

enum class KeyType { kInt, kDouble, kString, kSeedList, kNameList, kNumberList };

// Where a key applies. Env- and solver-scoped keys list the ids they are
// valid for (empty list = every id of that kind). `mismatch.<param>` is
// derived: it is legal exactly where the matching `env.<param>` double is.
enum class KeyScope { kGlobal, kEnv, kSolver };

struct KeySpec {
  const char* key;
  KeyType type;
  KeyScope scope;
  const char* ids;  // comma-separated id filter, "" = all
  const char* doc;
};

std::span<const KeySpec> config_key_registry();

// Checks every entry against the registry under the configured env.id and
// solver.id. Throws ConfigError with the offending key path.
void validate_keys(const ConfigMap& cfg);

// A comparison config is a union over several solvers, so a shared base
// may legally carry keys scoped to solvers other than the one an arm runs.
// Returns a copy with solver-scoped entries that do not apply to solver_id
// removed; everything else (including keys validate_keys would reject) is
// kept untouched.
ConfigMap restrict_to_solver(const ConfigMap& cfg,
                             const std::string& solver_id);

// ---- Presets ----------------------------------------------------------

// Named starting points layered under config files and CLI flags:
//   desk           wall-jump, annealed solver, tuned desk-scale budget
//   paper-budget   N_W = 2048 samples, horizon 20, 50 Hz control
//   mppi-explore   fixed-kernel baseline, wide sigma
//   mppi-exploit   fixed-kernel baseline, narrow sigma
//   cmaes          evolutionary baseline at the shared budget split
//   paper-trials-10 / paper-trials-5   10- and 5-seed trial counts
//                  instead of the 100-seed default
ConfigMap preset(const std::string& name);
std::vector<std::string> preset_names();

}  // namespace ampc

#endif  // AMPC_BENCH_CONFIG_HPP_
