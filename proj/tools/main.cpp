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
//
// annealed-mpc: benchmark and landscape-analysis CLI.
//
// Subcommands: run (one solver, multi-seed), compare (several solvers at a
// shared rollout budget), landscape (density/score/drift artifacts from
// the bundled wall-jump landscape), sweep (grid over annealing knobs).
//
// Config precedence, lowest to highest: --preset, --config file, then
// individual flags (--env, --solver, --set, --seed). Every emitted byte on
// stdout and in files is a pure function of the resolved config; timing
// and progress go to stderr. ANNEALED_MPC_THREADS caps solver-internal
// parallelism without changing any output.

#include <cstdio>

#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ampc/bench/config.hpp"
#include "ampc/bench/experiment.hpp"
#include "ampc/core/errors.hpp"
#include "ampc/landscape/bundled.hpp"
#include "ampc/landscape/grid_density.hpp"
#include "ampc/landscape/plot.hpp"

namespace {

namespace fs = std::filesystem;
using namespace ampc;

struct CommonFlags {
  std::string preset_name;
  std::string config_path;
  std::string env_id;
  std::vector<std::string> solvers;
  std::vector<std::string> sets;
  std::string out_dir = ".";
  uint64_t seed = 0;
  bool seed_given = false;
};

void add_common_flags(CLI::App* cmd, CommonFlags* f, bool multi_solver) {
  cmd->add_option("--preset", f->preset_name,
                  "named starting point (desk, paper-budget, ...)");
  cmd->add_option("--config", f->config_path, "flat 'key = value' file");
  cmd->add_option("--env", f->env_id, "environment id override");
  if (multi_solver) {
    cmd->add_option("--solver", f->solvers,
                    "solver id or solver preset; repeat to set the "
                    "comparison list");
  } else {
    cmd->add_option("--solver", f->solvers,
                    "solver id or solver preset override")
        ->expected(1);
  }
  cmd->add_option("--set", f->sets, "extra key=value override, repeatable");
  cmd->add_option("--seed", f->seed, "run this single seed")
      ->each([f](const std::string&) { f->seed_given = true; });
  cmd->add_option("--out", f->out_dir, "output directory (default .)");
}

// Merges a solver preset when the name is one (it must set solver.id);
// otherwise treats the name as a bare solver id.
void apply_solver_name(ConfigMap& cfg, const std::string& name) {
  try {
    ConfigMap p = preset(name);
    if (!p.has("solver.id")) {
      throw ConfigError("preset '" + name + "' does not select a solver");
    }
    cfg.merge_over(p);
  } catch (const ConfigError& err) {
    if (std::string(err.what()).rfind("unknown preset", 0) == 0) {
      cfg.set("solver.id", name);
    } else {
      throw;
    }
  }
}

ConfigMap assemble(const CommonFlags& f, bool solver_flag_is_list) {
  ConfigMap cfg;
  if (!f.preset_name.empty()) cfg.merge_over(preset(f.preset_name));
  if (!f.config_path.empty()) {
    cfg.merge_over(ConfigMap::parse_file(f.config_path));
  }
  if (!f.env_id.empty()) cfg.set("env.id", f.env_id);
  if (!f.solvers.empty()) {
    if (solver_flag_is_list) {
      std::string joined;
      for (const std::string& s : f.solvers) {
        if (!joined.empty()) joined += ',';
        joined += s;
      }
      cfg.set("compare.solvers", joined);
    } else {
      apply_solver_name(cfg, f.solvers.front());
    }
  }
  for (const std::string& kv : f.sets) {
    const size_t eq = kv.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("--set expects key=value, got '" + kv + "'");
    }
    cfg.set(kv.substr(0, eq), kv.substr(eq + 1));
  }
  if (f.seed_given) cfg.set("seeds", std::to_string(f.seed));
  return cfg;
}

std::ofstream open_out(const fs::path& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write " + path.string());
  return os;
}

int cmd_run(const CommonFlags& f, bool trace) {
  const ConfigMap cfg = assemble(f, false);
  const ExperimentConfig ec = ExperimentConfig::resolve(cfg);
  const std::vector<RunRecord> records = run_experiment(ec);
  const SolverSummary summary = summarize(ec.label, records);

  fs::create_directories(f.out_dir);
  const fs::path out(f.out_dir);
  auto runs = open_out(out / "runs.csv");
  write_runs_csv(runs, ec.label, records);
  auto sum = open_out(out / "summary.csv");
  write_summary_csv(sum, std::span<const SolverSummary>(&summary, 1));
  if (trace) {
    for (const RunRecord& rec : records) {
      auto ts = open_out(out / ("trace_" + std::to_string(rec.seed) + ".csv"));
      write_trace_csv(ts, rec);
    }
  }
  std::cout << format_table(std::span<const SolverSummary>(&summary, 1));
  return 0;
}

int cmd_compare(const CommonFlags& f) {
  const ConfigMap base = assemble(f, true);
  std::vector<std::string> names;
  if (base.has("compare.solvers")) {
    names = base.get_name_list("compare.solvers");
  } else {
    names = {"dial", "mppi-explore", "mppi-exploit"};
  }
  if (names.size() < 2) {
    throw ConfigError("compare needs at least two solvers");
  }

  std::vector<std::vector<RunRecord>> all_records;
  std::vector<SolverSummary> summaries;
  for (const std::string& name : names) {
    ConfigMap c = base;
    apply_solver_name(c, name);
    c = restrict_to_solver(c, c.get_string("solver.id"));
    const ExperimentConfig ec = ExperimentConfig::resolve(c, name);
    all_records.push_back(run_experiment(ec));
    summaries.push_back(summarize(name, all_records.back()));
  }
  // Budget parity is the point of the comparison; fail before any file
  // exists rather than emit a table with unequal budgets.
  check_budget_parity(summaries);

  fs::create_directories(f.out_dir);
  const fs::path out(f.out_dir);
  auto runs = open_out(out / "runs.csv");
  write_runs_header(runs);
  for (size_t i = 0; i < names.size(); ++i) {
    write_runs_rows(runs, names[i], all_records[i]);
  }
  auto sum = open_out(out / "summary.csv");
  write_summary_csv(sum, summaries);
  std::cout << format_table(summaries);
  return 0;
}

int cmd_landscape(const std::string& out_dir, int n_per_axis) {
  const BundledLandscape b = bundled_wall_jump_landscape(n_per_axis);
  fs::create_directories(out_dir);
  const fs::path out(out_dir);

  const ScoreField score = score_on_grid(b.density);
  if (score.n_masked > 0) {
    std::fprintf(stderr,
                 "landscape: %lld interior cells masked in the score field\n",
                 static_cast<long long>(score.n_masked));
  }
  {
    auto os = open_out(out / "density.csv");
    write_density_csv(os, b.density, &score);
  }

  // Smoothed densities, one per ladder rung, plus slices through the raw
  // argmax along the jump axis to show the mode walking between basins.
  int tie_count = 0;
  const int64_t argmax = b.density.argmax_cell(&tie_count);
  const int ny = b.density.axis(1).n;
  const int nx = b.density.axis(0).n;
  const int64_t j0 = argmax % ny;
  std::vector<double> xcoords(static_cast<size_t>(nx));
  for (int i = 0; i < nx; ++i) xcoords[static_cast<size_t>(i)] = b.density.axis(0).coord(i);

  std::vector<std::vector<double>> slices;
  std::vector<std::string> labels;
  char label[64];
  std::ostringstream report;
  for (size_t k = 0; k < b.sigma_ladder.size(); ++k) {
    const double sigma = b.sigma_ladder[k];
    const GridDensity pk = convolve_density(b.density, sigma);
    if (k > 0) {
      auto os = open_out(out / ("smoothed_" + std::to_string(k) + ".csv"));
      write_density_csv(os, pk);
    }
    std::snprintf(label, sizeof(label), "sigma=%g", sigma);
    {
      auto os = open_out(out / ("heatmap_" + std::to_string(k) + ".svg"));
      write_heatmap_svg(os, pk, std::string("wall-jump density, ") + label);
    }
    std::vector<double> slice(static_cast<size_t>(nx));
    for (int i = 0; i < nx; ++i) {
      slice[static_cast<size_t>(i)] =
          pk.values()[static_cast<size_t>(i) * ny + j0];
    }
    slices.push_back(std::move(slice));
    labels.emplace_back(label);
    const int maxima = local_maxima_count(pk);
    int ties = 0;
    const std::vector<double> mode = pk.cell_coords(pk.argmax_cell(&ties));
    char line[160];
    std::snprintf(line, sizeof(line),
                  "sigma=%-7g argmax=(%.4f, %.4f)  local_maxima=%d\n", sigma,
                  mode[0], mode[1], maxima);
    report << line;
  }
  {
    auto os = open_out(out / "slices.svg");
    write_line_svg(os, xcoords, slices, labels,
                   "density along the jump axis through the raw argmax");
  }

  const std::vector<DriftPoint> drift =
      optimum_drift(b.density, b.sigma_ladder);
  {
    auto os = open_out(out / "drift.csv");
    write_drift_csv(os, drift);
  }
  {
    std::vector<double> xs;
    std::vector<double> ys;
    for (const DriftPoint& d : drift) {
      xs.push_back(d.sigma);
      ys.push_back(d.drift);
    }
    auto os = open_out(out / "drift.svg");
    write_line_svg(os, xs, {ys}, {"optimum drift"},
                   "argmax displacement vs smoothing kernel width");
  }
  std::cout << report.str();
  return 0;
}

int cmd_sweep(const CommonFlags& f) {
  const ConfigMap base = assemble(f, false);
  if (base.get_string("solver.id", "dial") != "dial") {
    throw ConfigError("sweep varies annealing parameters; solver.id must be "
                      "dial");
  }
  // Absent axes hold at the base value: a one-point "list".
  const auto axis = [&base](const char* key) -> std::vector<std::string> {
    if (!base.has(key)) return {""};
    std::vector<std::string> out;
    char buf[32];
    for (double v : base.get_double_list(key)) {
      std::snprintf(buf, sizeof(buf), "%g", v);
      out.emplace_back(buf);
    }
    return out;
  };
  const std::vector<std::string> beta1 = axis("sweep.beta1");
  const std::vector<std::string> beta2 = axis("sweep.beta2");
  const std::vector<std::string> stages = axis("sweep.n_stages");
  const std::vector<std::string> sigma = axis("sweep.sigma_base");

  std::vector<std::vector<RunRecord>> all_records;
  std::vector<SolverSummary> summaries;
  std::vector<std::string> names;
  for (const std::string& b1 : beta1) {
    for (const std::string& b2 : beta2) {
      for (const std::string& ns : stages) {
        for (const std::string& sb : sigma) {
          ConfigMap c = base;
          std::string name = "dial";
          if (!b1.empty()) { c.set("solver.beta1", b1); name += " b1=" + b1; }
          if (!b2.empty()) { c.set("solver.beta2", b2); name += " b2=" + b2; }
          if (!ns.empty()) { c.set("solver.n_stages", ns); name += " N=" + ns; }
          if (!sb.empty()) { c.set("solver.sigma_base", sb); name += " s=" + sb; }
          const ExperimentConfig ec = ExperimentConfig::resolve(c, name);
          all_records.push_back(run_experiment(ec));
          summaries.push_back(summarize(name, all_records.back()));
          names.push_back(name);
        }
      }
    }
  }

  fs::create_directories(f.out_dir);
  const fs::path out(f.out_dir);
  auto runs = open_out(out / "runs.csv");
  write_runs_header(runs);
  for (size_t i = 0; i < names.size(); ++i) {
    write_runs_rows(runs, names[i], all_records[i]);
  }
  auto sum = open_out(out / "summary.csv");
  write_summary_csv(sum, summaries);
  std::cout << format_table(summaries);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sampling-based MPC benchmark harness"};
  app.require_subcommand(1);

  CommonFlags run_flags;
  bool trace = false;
  CLI::App* run = app.add_subcommand("run", "one solver over a seed list");
  add_common_flags(run, &run_flags, false);
  run->add_flag("--trace", trace, "also write per-seed trace CSVs");

  CommonFlags cmp_flags;
  CLI::App* compare =
      app.add_subcommand("compare", "several solvers at one rollout budget");
  add_common_flags(compare, &cmp_flags, true);

  std::string landscape_out = ".";
  int landscape_n = 257;
  CLI::App* landscape =
      app.add_subcommand("landscape", "bundled wall-jump landscape artifacts");
  landscape->add_option("--out", landscape_out, "output directory (default .)");
  landscape->add_option("--n", landscape_n, "grid cells per axis (default 257)");

  CommonFlags sweep_flags;
  CLI::App* sweep =
      app.add_subcommand("sweep", "grid over annealing parameters");
  add_common_flags(sweep, &sweep_flags, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return cmd_run(run_flags, trace);
    if (compare->parsed()) return cmd_compare(cmp_flags);
    if (landscape->parsed()) return cmd_landscape(landscape_out, landscape_n);
    return cmd_sweep(sweep_flags);
  } catch (const std::exception& err) {
    std::fprintf(stderr, "error: %s\n", err.what());
    return 1;
  }
}
