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

#include "doctest.h"

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "ampc/bench/config.hpp"
#include "ampc/bench/experiment.hpp"
#include "ampc/core/errors.hpp"

using namespace ampc;

namespace {

// Desk-sized wall-jump experiment used by several cases below.
ConfigMap small_wall_jump() {
  return ConfigMap::parse_text(
      "env.id = wall_jump\n"
      "solver.id = dial\n"
      "solver.horizon = 8\n"
      "solver.n_samples = 16\n"
      "solver.n_stages = 2\n"
      "solver.lambda = 0.3\n"
      "solver.sigma_base = 0.3\n"
      "seeds = 0,1\n"
      "steps = 6\n");
}

std::string runs_csv_text(const std::string& label,
                          const std::vector<RunRecord>& records) {
  std::ostringstream os;
  write_runs_csv(os, label, records);
  return os.str();
}

}  // namespace

TEST_CASE("config parser handles comments, blanks, and whitespace") {
  const ConfigMap cfg = ConfigMap::parse_text(
      "# temperature for the softmax\n"
      "\n"
      "  solver.lambda =   0.5  \n"
      "env.id= pendulum\n");
  CHECK(cfg.get_double("solver.lambda") == 0.5);
  CHECK(cfg.get_string("env.id") == "pendulum");
  CHECK(cfg.entries().size() == 2);
}

TEST_CASE("config parser rejects malformed lines with origin and line") {
  CHECK_THROWS_WITH_AS(ConfigMap::parse_text("solver.lambda\n", "bench.cfg"),
                       doctest::Contains("bench.cfg:1"), ConfigError);
  CHECK_THROWS_WITH_AS(
      ConfigMap::parse_text("a = 1\nSolver.Lambda = 2\n", "bench.cfg"),
      doctest::Contains("bench.cfg:2"), ConfigError);
  CHECK_THROWS_WITH_AS(ConfigMap::parse_text("solver.lambda =\n"),
                       doctest::Contains("empty value"), ConfigError);
}

TEST_CASE("duplicate key within one file is an error, not a silent override") {
  CHECK_THROWS_WITH_AS(
      ConfigMap::parse_text("steps = 5\nsteps = 9\n", "dup.cfg"),
      doctest::Contains("duplicate key 'steps'"), ConfigError);
}

TEST_CASE("typed getters parse fully or throw with the key path") {
  const ConfigMap cfg = ConfigMap::parse_text(
      "a = 12\nb = 3.5\nc = inf\nd = 1,2.5,4\ne = hello\n");
  CHECK(cfg.get_int("a") == 12);
  CHECK(cfg.get_double("b") == 3.5);
  CHECK(std::isinf(cfg.get_double("c")));
  CHECK(cfg.get_double_list("d") == std::vector<double>{1.0, 2.5, 4.0});
  CHECK_THROWS_WITH_AS(cfg.get_int("b"), doctest::Contains("'b'"),
                       ConfigError);
  CHECK_THROWS_WITH_AS(cfg.get_double("e"), doctest::Contains("'e'"),
                       ConfigError);
  CHECK_THROWS_WITH_AS(cfg.get_string("missing"),
                       doctest::Contains("missing required config key"),
                       ConfigError);
  // Fallback overloads only apply when the key is absent, never on a
  // parse failure.
  CHECK(cfg.get_int("missing", 7) == 7);
  CHECK_THROWS_AS(cfg.get_int("e", 7), ConfigError);
}

TEST_CASE("seed lists accept inclusive ranges and comma lists") {
  const ConfigMap cfg =
      ConfigMap::parse_text("r = 3..6\nl = 9,2,9\nbad = 6..3\nneg = -1\n");
  CHECK(cfg.get_seeds("r") == std::vector<uint64_t>{3, 4, 5, 6});
  CHECK(cfg.get_seeds("l") == std::vector<uint64_t>{9, 2, 9});
  CHECK_THROWS_WITH_AS(cfg.get_seeds("bad"), doctest::Contains("seed range"),
                       ConfigError);
  CHECK_THROWS_AS(cfg.get_seeds("neg"), ConfigError);
}

TEST_CASE("merge_over implements preset < file < flags precedence") {
  ConfigMap cfg = preset("desk");
  cfg.merge_over(ConfigMap::parse_text("solver.lambda = 0.9\nsteps = 11\n"));
  cfg.set("steps", "7");
  CHECK(cfg.get_double("solver.lambda") == 0.9);
  CHECK(cfg.get_int("steps") == 7);
  CHECK(cfg.get_string("env.id") == "wall_jump");  // untouched preset value
}

TEST_CASE("validate_keys rejects unknown and out-of-scope keys by path") {
  ConfigMap cfg = small_wall_jump();
  validate_keys(cfg);  // baseline passes

  ConfigMap unknown = cfg;
  unknown.set("solver.lamda", "0.3");
  CHECK_THROWS_WITH_AS(validate_keys(unknown),
                       doctest::Contains("'solver.lamda'"), ConfigError);

  ConfigMap wrong_env = cfg;
  wrong_env.set("env.tau_max", "2.0");  // pendulum knob on wall_jump
  CHECK_THROWS_WITH_AS(validate_keys(wrong_env),
                       doctest::Contains("does not apply to env"),
                       ConfigError);

  ConfigMap wrong_solver = cfg;
  wrong_solver.set("solver.sigma", "0.2");  // fixed-kernel knob on dial
  CHECK_THROWS_WITH_AS(validate_keys(wrong_solver),
                       doctest::Contains("does not apply to solver"),
                       ConfigError);
}

TEST_CASE("mismatch keys mirror numeric env parameters exactly") {
  ConfigMap cfg = small_wall_jump();
  cfg.set("mismatch.thrust_force", "3.0");
  validate_keys(cfg);

  ConfigMap bad_int = small_wall_jump();
  bad_int.set("env.id", "hopper");
  bad_int.set("mismatch.n_pads", "4");  // int parameter, not mirrorable
  CHECK_THROWS_WITH_AS(validate_keys(bad_int),
                       doctest::Contains("'mismatch.n_pads'"), ConfigError);

  ConfigMap wrong_env = small_wall_jump();
  wrong_env.set("mismatch.body_mass", "3.0");  // hopper knob on wall_jump
  CHECK_THROWS_WITH_AS(validate_keys(wrong_env),
                       doctest::Contains("does not apply to env"),
                       ConfigError);
}

TEST_CASE("restrict_to_solver drops only other solvers' scoped keys") {
  ConfigMap cfg = small_wall_jump();
  cfg.set("solver.beta1", "2.0");
  const ConfigMap mppi_arm = restrict_to_solver(cfg, "mppi");
  CHECK_FALSE(mppi_arm.has("solver.beta1"));
  CHECK_FALSE(mppi_arm.has("solver.sigma_base"));
  CHECK(mppi_arm.has("solver.lambda"));     // shared by dial and mppi
  CHECK(mppi_arm.has("solver.n_samples"));  // shared by all
  CHECK(mppi_arm.has("solver.horizon"));
  const ConfigMap dial_arm = restrict_to_solver(cfg, "dial");
  CHECK(dial_arm.has("solver.beta1"));
  const ConfigMap evo_arm = restrict_to_solver(cfg, "cmaes");
  CHECK_FALSE(evo_arm.has("solver.lambda"));
}

TEST_CASE("presets pin the published budget and kernel widths") {
  const ConfigMap paper = preset("paper-budget");
  CHECK(paper.get_int("solver.n_samples") == 2048);
  CHECK(paper.get_int("solver.horizon") == 20);
  CHECK(paper.get_double("env.dt") == 0.02);

  CHECK(preset("mppi-explore").get_double("solver.sigma") == 0.2);
  CHECK(preset("mppi-exploit").get_double("solver.sigma") == 0.05);
  CHECK(preset("mppi-explore").get_string("solver.id") == "mppi");
  CHECK(preset("paper-trials-10").get_seeds("seeds").size() == 10);
  CHECK(preset("paper-trials-5").get_seeds("seeds").size() == 5);
  CHECK_THROWS_WITH_AS(preset("dessk"), doctest::Contains("unknown preset"),
                       ConfigError);
  for (const std::string& name : preset_names()) {
    CHECK_NOTHROW(preset(name));
  }
}

TEST_CASE("resolve applies defaults and validates") {
  const ExperimentConfig ec = ExperimentConfig::resolve(small_wall_jump());
  CHECK(ec.label == "dial");
  CHECK(ec.env_id == "wall_jump");
  CHECK(ec.seeds == std::vector<uint64_t>{0, 1});
  CHECK(ec.steps == 6);

  ConfigMap defaults = ConfigMap::parse_text(
      "env.id = pendulum\nsolver.id = cmaes\nsolver.horizon = 5\n");
  const ExperimentConfig dec = ExperimentConfig::resolve(defaults, "evo");
  CHECK(dec.label == "evo");
  CHECK(dec.seeds.size() == 100);  // 0..99 default
  CHECK(dec.steps == 50);

  ConfigMap bad = small_wall_jump();
  bad.set("steps", "0");
  CHECK_THROWS_AS(ExperimentConfig::resolve(bad), ConfigError);
}

TEST_CASE("empty mismatch spec means the solver plans on the true model") {
  const ExperimentConfig ec = ExperimentConfig::resolve(small_wall_jump());
  const EnvBundle env = make_env(ec);
  CHECK(env.dt == 0.05);  // wall-jump native period
  // Same parameters must mean bitwise-identical stepping.
  const std::vector<double> x0 = {0.3, 0.2, 1.1, 0.4};
  const std::vector<double> u = {0.7, -0.4};
  std::vector<double> a(4);
  std::vector<double> b(4);
  env.true_env->step(x0, u, env.dt, a);
  env.solver_env->step(x0, u, env.dt, b);
  CHECK(a == b);
  CHECK(env.true_env->running_cost(x0, u) == env.solver_env->running_cost(x0, u));
}

TEST_CASE("mismatch overrides reach the solver model and only it") {
  ConfigMap cfg = small_wall_jump();
  cfg.set("mismatch.thrust_force", "2.0");
  const ExperimentConfig ec = ExperimentConfig::resolve(cfg);
  const EnvBundle env = make_env(ec);
  const uint64_t fp = env.fingerprint(*env.true_env);

  const std::vector<double> x0 = {0.0, 0.5, 1.0, 0.0};  // airborne
  const std::vector<double> u = {0.0, 1.0};             // full thrust
  std::vector<double> a(4);
  std::vector<double> b(4);
  env.true_env->step(x0, u, env.dt, a);
  env.solver_env->step(x0, u, env.dt, b);
  CHECK(a[2] > b[2]);  // weaker believed thrust, less velocity gained
  CHECK(env.fingerprint(*env.true_env) == fp);

  // The runner's own leak check must stay quiet over a full experiment.
  ConfigMap tiny = cfg;
  tiny.set("seeds", "0");
  tiny.set("steps", "3");
  CHECK_NOTHROW(run_experiment(ExperimentConfig::resolve(tiny)));
}

TEST_CASE("identical configs produce byte-identical artifacts") {
  const ExperimentConfig ec = ExperimentConfig::resolve(small_wall_jump());
  const std::vector<RunRecord> first = run_experiment(ec);
  const std::vector<RunRecord> second = run_experiment(ec);
  REQUIRE(first.size() == 2);
  CHECK(runs_csv_text("dial", first) == runs_csv_text("dial", second));
  std::ostringstream t1;
  std::ostringstream t2;
  write_trace_csv(t1, first[0]);
  write_trace_csv(t2, second[0]);
  CHECK(t1.str() == t2.str());
}

TEST_CASE("solvers at shared budget keys report equal rollouts per step") {
  ConfigMap base = small_wall_jump();
  std::vector<SolverSummary> summaries;
  for (const std::string id : {"dial", "mppi", "cmaes"}) {
    ConfigMap c = restrict_to_solver(base, id);
    c.set("solver.id", id);
    if (id == "mppi") c.set("solver.sigma", "0.2");
    c.set("seeds", "0");
    c.set("steps", "2");
    const ExperimentConfig ec = ExperimentConfig::resolve(c, id);
    summaries.push_back(summarize(id, run_experiment(ec)));
    CHECK(summaries.back().rollouts_per_step == 32);  // 2 stages x 16
  }
  CHECK_NOTHROW(check_budget_parity(summaries));
  summaries[1].rollouts_per_step = 64;
  CHECK_THROWS_WITH_AS(check_budget_parity(summaries),
                       doctest::Contains("budget parity"), ValidationError);
}

TEST_CASE("summarize matches hand-computed statistics") {
  std::vector<RunRecord> records(3);
  records[0].seed = 0;
  records[0].realized_cost = 2.0;
  records[0].success = true;
  records[0].rollouts_per_step = 10;
  records[1].seed = 1;
  records[1].realized_cost = 4.0;
  records[1].success = false;
  records[1].rollouts_per_step = 10;
  records[2].seed = 2;
  records[2].realized_cost = std::numeric_limits<double>::infinity();
  records[2].diverged = true;
  records[2].rollouts_per_step = 10;

  const SolverSummary s = summarize("x", records);
  CHECK(s.n_seeds == 3);
  CHECK(s.n_success == 1);
  CHECK(s.n_diverged == 1);
  // Success rate counts diverged seeds in the denominator.
  CHECK(s.success_rate == doctest::Approx(1.0 / 3.0));
  // Cost statistics cover only the finite runs.
  CHECK(s.mean_cost == doctest::Approx(3.0));
  CHECK(s.std_cost == doctest::Approx(std::sqrt(2.0)));
  CHECK_FALSE(s.has_contact);

  const SolverSummary single =
      summarize("y", std::span<const RunRecord>(records.data(), 1));
  CHECK(single.std_cost == 0.0);
  CHECK(single.success_rate == 1.0);
}

TEST_CASE("success column agrees with a hand-applied definition") {
  // Double integrator from (1, 0): success means parked near the origin.
  ConfigMap cfg = ConfigMap::parse_text(
      "env.id = double_integrator\n"
      "solver.id = dial\n"
      "solver.horizon = 10\n"
      "solver.n_samples = 32\n"
      "solver.n_stages = 2\n"
      "solver.lambda = 0.1\n"
      "solver.sigma_base = 0.4\n"
      "seeds = 0,1,2\n"
      "steps = 25\n");
  const ExperimentConfig ec = ExperimentConfig::resolve(cfg);
  const std::vector<RunRecord> records = run_experiment(ec);
  int by_hand = 0;
  for (const RunRecord& r : records) {
    const std::vector<double>& xf = r.states.back().values;
    if (!r.diverged && std::abs(xf[0]) < 0.05 && std::abs(xf[1]) < 0.05) {
      ++by_hand;
    }
    CHECK(r.steps_completed == 25);
    CHECK(r.actions.size() == 25);
    CHECK(r.states.size() == 26);
  }
  CHECK(summarize("dial", records).n_success == by_hand);
  CHECK(by_hand > 0);  // an easy linear task; the solver must park
}

TEST_CASE("hopper runs carry the contact score through to the summary") {
  ConfigMap cfg = ConfigMap::parse_text(
      "env.id = hopper\n"
      "env.n_pads = 1\n"
      "solver.id = dial\n"
      "solver.horizon = 10\n"
      "solver.n_samples = 8\n"
      "solver.n_stages = 2\n"
      "solver.lambda = 0.5\n"
      "solver.sigma_base = 0.3\n"
      "seeds = 0\n"
      "steps = 55\n");  // one 1 s pad window at 50 Hz, then a little more
  const ExperimentConfig ec = ExperimentConfig::resolve(cfg);
  const std::vector<RunRecord> records = run_experiment(ec);
  REQUIRE(records.size() == 1);
  if (!records[0].diverged) {
    CHECK(records[0].contact_scored);
    const SolverSummary s = summarize("dial", records);
    CHECK(s.has_contact);
    CHECK(s.mean_contact == doctest::Approx(records[0].contact_score));
  }
}

TEST_CASE("runs csv is versioned and carries one row per seed") {
  const ExperimentConfig ec = ExperimentConfig::resolve(small_wall_jump());
  const std::vector<RunRecord> records = run_experiment(ec);
  const std::string text = runs_csv_text("dial", records);
  CHECK(text.rfind("# annealed-mpc runs v1\n", 0) == 0);
  CHECK(text.find("solver,seed,steps,realized_cost,success,diverged,"
                  "contact_score,rollouts_per_step\n") != std::string::npos);
  // Header comment + column line + one row per seed.
  CHECK(std::count(text.begin(), text.end(), '\n') == 2 + 2);
  // Non-hopper runs leave the contact column empty, not zero.
  CHECK(text.find(",,32\n") != std::string::npos);
}

TEST_CASE("summary csv prints %.17g values that round-trip") {
  SolverSummary s;
  s.label = "dial";
  s.n_seeds = 2;
  s.n_success = 1;
  s.success_rate = 0.5;
  s.mean_cost = 1.0 / 3.0;
  s.std_cost = 0.1;
  s.rollouts_per_step = 64;
  std::ostringstream os;
  write_summary_csv(os, std::span<const SolverSummary>(&s, 1));
  const std::string text = os.str();
  CHECK(text.rfind("# annealed-mpc summary v1\n", 0) == 0);
  CHECK(text.find("0.33333333333333331") != std::string::npos);
}

TEST_CASE("text table aligns and reports success as a ratio") {
  SolverSummary a;
  a.label = "dial";
  a.n_seeds = 10;
  a.n_success = 9;
  a.mean_cost = 1.25;
  a.std_cost = 0.5;
  a.rollouts_per_step = 256;
  SolverSummary b = a;
  b.label = "mppi-explore";
  b.n_success = 4;
  const std::vector<SolverSummary> rows = {a, b};
  const std::string table = format_table(rows);
  CHECK(table.find("solver") != std::string::npos);
  CHECK(table.find("9/10") != std::string::npos);
  CHECK(table.find("4/10") != std::string::npos);
  // Two header-aligned rows plus the header itself.
  CHECK(std::count(table.begin(), table.end(), '\n') == 3);
}
