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

#include "ampc/bench/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "ampc/baselines/evolution.hpp"
#include "ampc/baselines/mppi_fixed.hpp"
#include "ampc/core/errors.hpp"
#include "ampc/core/parallel.hpp"
#include "ampc/dial/controller.hpp"
#include "ampc/envs/double_integrator.hpp"
#include "ampc/envs/hopper.hpp"
#include "ampc/envs/pendulum.hpp"
#include "ampc/envs/wall_jump.hpp"

namespace ampc {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string csv_num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// Reads env.<name>, or the default; the mismatched (solver-side) build
// additionally honors mismatch.<name>.
double env_param(const ConfigMap& cfg, const char* name, double dflt,
                 bool mismatched) {
  double v = cfg.get_double(std::string("env.") + name, dflt);
  if (mismatched) v = cfg.get_double(std::string("mismatch.") + name, v);
  return v;
}

uint64_t mix(uint64_t h, double v) {
  uint64_t bits = 0;
  std::memcpy(&bits, &v, sizeof(bits));
  h ^= bits + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

DoubleIntegratorParams make_di_params(const ConfigMap& cfg, bool mismatched) {
  DoubleIntegratorParams p;
  p.q_pos = env_param(cfg, "q_pos", p.q_pos, mismatched);
  p.q_vel = env_param(cfg, "q_vel", p.q_vel, mismatched);
  p.r_u = env_param(cfg, "r_u", p.r_u, mismatched);
  p.qf_pos = env_param(cfg, "qf_pos", p.qf_pos, mismatched);
  p.qf_vel = env_param(cfg, "qf_vel", p.qf_vel, mismatched);
  p.u_max = env_param(cfg, "u_max", p.u_max, mismatched);
  return p;
}

uint64_t di_fingerprint(const DynamicsModel& m) {
  const auto& p = dynamic_cast<const DoubleIntegratorEnv&>(m).params();
  uint64_t h = 1;
  for (double v : {p.q_pos, p.q_vel, p.r_u, p.qf_pos, p.qf_vel, p.u_max}) {
    h = mix(h, v);
  }
  return h;
}

PendulumParams make_pendulum_params(const ConfigMap& cfg, bool mismatched) {
  PendulumParams p;
  p.mass = env_param(cfg, "mass", p.mass, mismatched);
  p.length = env_param(cfg, "length", p.length, mismatched);
  p.friction = env_param(cfg, "friction", p.friction, mismatched);
  p.tau_max = env_param(cfg, "tau_max", p.tau_max, mismatched);
  return p;
}

uint64_t pendulum_fingerprint(const DynamicsModel& m) {
  const auto& p = dynamic_cast<const PendulumEnv&>(m).params();
  uint64_t h = 2;
  for (double v : {p.mass, p.length, p.gravity, p.friction, p.tau_max,
                   p.w_angle, p.w_omega, p.w_effort, p.terminal_scale}) {
    h = mix(h, v);
  }
  return h;
}

WallJumpTask make_wall_jump_task(const ConfigMap& cfg, bool mismatched) {
  WallJumpTask t;
  t.wall_x = env_param(cfg, "wall_x", t.wall_x, mismatched);
  t.wall_height = env_param(cfg, "wall_height", t.wall_height, mismatched);
  t.band_half = env_param(cfg, "band_half", t.band_half, mismatched);
  t.goal_x = env_param(cfg, "goal_x", t.goal_x, mismatched);
  t.penalty_weight =
      env_param(cfg, "penalty_weight", t.penalty_weight, mismatched);
  t.effort_weight =
      env_param(cfg, "effort_weight", t.effort_weight, mismatched);
  t.jump_impulse = env_param(cfg, "jump_impulse", t.jump_impulse, mismatched);
  t.thrust_force = env_param(cfg, "thrust_force", t.thrust_force, mismatched);
  t.success_tol = env_param(cfg, "success_tol", t.success_tol, mismatched);
  t.dt = env_param(cfg, "dt", t.dt, mismatched);
  return t;
}

uint64_t wall_jump_fingerprint(const DynamicsModel& m) {
  const auto& t = dynamic_cast<const WallJumpEnv&>(m).task();
  uint64_t h = 3;
  for (double v : {t.mass, t.gravity, t.wall_x, t.wall_height, t.band_half,
                   t.goal_x, t.penalty_weight, t.effort_weight, t.jump_impulse,
                   t.thrust_force, t.start_x, t.success_tol, t.dt}) {
    h = mix(h, v);
  }
  return h;
}

HopperTask make_hopper_task(const ConfigMap& cfg, bool mismatched) {
  HopperTask t;
  t.body_mass = env_param(cfg, "body_mass", t.body_mass, mismatched);
  t.leg_spring = env_param(cfg, "leg_spring", t.leg_spring, mismatched);
  t.z_ref = env_param(cfg, "z_ref", t.z_ref, mismatched);
  t.contact_weight =
      env_param(cfg, "contact_weight", t.contact_weight, mismatched);
  t.w_track = env_param(cfg, "w_track", t.w_track, mismatched);
  t.dt = env_param(cfg, "dt", t.dt, mismatched);
  const int n_pads = static_cast<int>(cfg.get_int("env.n_pads", 3));
  const double radius =
      env_param(cfg, "pad_radius", 0.1, mismatched);
  const double window =
      env_param(cfg, "pad_window", kStageWindowSeconds, mismatched);
  const uint64_t pad_seed =
      static_cast<uint64_t>(cfg.get_int("env.pad_seed", 0));
  if (n_pads > 0) {
    t.pads = random_pads(pad_seed, n_pads, /*first_center=*/0.0, radius,
                         /*max_shift=*/0.65, window);
  }
  return t;
}

uint64_t hopper_fingerprint(const DynamicsModel& m) {
  const auto& t = dynamic_cast<const HopperEnv&>(m).task();
  uint64_t h = 4;
  for (double v :
       {t.body_mass, t.inertia, t.leg_mass, t.gravity, t.r_min, t.r_max,
        t.leg_spring, t.r_rest, t.tau_scale, t.force_scale, t.damping_gain,
        t.ground_stiffness, t.ground_damping, t.friction_mu,
        t.friction_vel_gain, t.w_correct, t.w_wrong, t.contact_weight,
        t.w_track, t.w_height, t.w_upright, t.w_effort, t.z_ref, t.dt}) {
    h = mix(h, v);
  }
  for (const Pad& pad : t.pads) {
    for (double v : {pad.center_x, pad.radius, pad.t_min, pad.t_max}) {
      h = mix(h, v);
    }
  }
  return h;
}

InterpMode parse_interp(const std::string& name) {
  if (name == "linear") return InterpMode::kLinear;
  if (name == "catmull_rom") return InterpMode::kCatmullRom;
  throw ConfigError("config key 'solver.interp': expected linear or "
                    "catmull_rom, got '" + name + "'");
}

class DialSolver final : public Solver {
 public:
  DialSolver(std::shared_ptr<const DynamicsModel> model, DialConfig cfg)
      : c_(std::move(model), std::move(cfg)) {}
  std::vector<double> control_step(const State& x) override {
    return c_.control_step(x);
  }
  double last_plan_cost() const override { return c_.last_step().accepted_cost; }
  int64_t rollouts_per_step() const override { return c_.rollouts_per_step(); }

 private:
  DialController c_;
};

class MppiSolver final : public Solver {
 public:
  MppiSolver(std::shared_ptr<const DynamicsModel> model,
             const FixedMppiConfig& cfg)
      : c_(std::move(model), cfg) {}
  std::vector<double> control_step(const State& x) override {
    return c_.control_step(x);
  }
  double last_plan_cost() const override { return c_.last_step().accepted_cost; }
  int64_t rollouts_per_step() const override { return c_.rollouts_per_step(); }

 private:
  FixedMppiController c_;
};

class EvoSolver final : public Solver {
 public:
  EvoSolver(std::shared_ptr<const DynamicsModel> model, EvoStrategyConfig cfg)
      : c_(std::move(model), cfg) {}
  std::vector<double> control_step(const State& x) override {
    return c_.control_step(x);
  }
  double last_plan_cost() const override { return c_.last_best_cost(); }
  int64_t rollouts_per_step() const override { return c_.rollouts_per_step(); }

 private:
  EvoController c_;
};

bool episode_success(const ExperimentConfig& ec, const EnvBundle& env,
                     const RunRecord& rec) {
  if (rec.diverged || rec.states.empty()) return false;
  const std::vector<double>& xf = rec.states.back().values;
  if (ec.env_id == "double_integrator") {
    return std::abs(xf[0]) < 0.05 && std::abs(xf[1]) < 0.05;
  }
  if (ec.env_id == "pendulum") {
    const double off_upright = std::remainder(xf[0] - M_PI, 2.0 * M_PI);
    return std::abs(off_upright) < 0.2 && std::abs(xf[1]) < 1.0;
  }
  if (ec.env_id == "wall_jump") {
    const auto& task =
        dynamic_cast<const WallJumpEnv&>(*env.true_env).task();
    return wall_jump_success(task, rec.states);
  }
  const auto& hopper = dynamic_cast<const HopperEnv&>(*env.true_env);
  if (hopper.task().pads.empty()) return false;
  const FootContact foot = hopper.foot(xf);
  return std::abs(xf[2]) < 0.5 && on_pad(hopper.task().pads.back(), foot.x);
}

}  // namespace

ExperimentConfig ExperimentConfig::resolve(const ConfigMap& cfg,
                                           const std::string& label) {
  validate_keys(cfg);
  ExperimentConfig ec;
  ec.cfg = cfg;
  ec.env_id = cfg.get_string("env.id");
  ec.solver_id = cfg.get_string("solver.id");
  ec.label = label.empty() ? ec.solver_id : label;
  ec.seeds = cfg.has("seeds") ? cfg.get_seeds("seeds")
                              : ConfigMap::parse_text("seeds = 0..99")
                                    .get_seeds("seeds");
  ec.steps = static_cast<int>(cfg.get_int("steps", 50));
  if (ec.steps <= 0) throw ConfigError("config key 'steps': must be positive");
  ec.threads = env_thread_cap(1);
  return ec;
}

EnvBundle make_env(const ExperimentConfig& ec) {
  EnvBundle b;
  const ConfigMap& cfg = ec.cfg;
  if (ec.env_id == "double_integrator") {
    b.true_env =
        std::make_shared<DoubleIntegratorEnv>(make_di_params(cfg, false));
    b.solver_env =
        std::make_shared<DoubleIntegratorEnv>(make_di_params(cfg, true));
    b.start = State{{1.0, 0.0}};
    b.dt = cfg.get_double("env.dt", 0.1);
    b.fingerprint = &di_fingerprint;
    return b;
  }
  if (ec.env_id == "pendulum") {
    b.true_env =
        std::make_shared<PendulumEnv>(make_pendulum_params(cfg, false));
    b.solver_env =
        std::make_shared<PendulumEnv>(make_pendulum_params(cfg, true));
    b.start = State{{0.0, 0.0}};  // hanging at rest
    b.dt = cfg.get_double("env.dt", 0.05);
    b.fingerprint = &pendulum_fingerprint;
    return b;
  }
  if (ec.env_id == "wall_jump") {
    const WallJumpTask task = make_wall_jump_task(cfg, false);
    auto env = std::make_shared<WallJumpEnv>(task);
    b.true_env = env;
    b.solver_env = std::make_shared<WallJumpEnv>(make_wall_jump_task(cfg, true));
    b.start = env->start_state();
    b.dt = task.dt;
    b.fingerprint = &wall_jump_fingerprint;
    return b;
  }
  if (ec.env_id == "hopper") {
    const HopperTask task = make_hopper_task(cfg, false);
    auto env = std::make_shared<HopperEnv>(task);
    b.true_env = env;
    b.solver_env = std::make_shared<HopperEnv>(make_hopper_task(cfg, true));
    b.start = env->start_state();
    b.dt = task.dt;
    b.fingerprint = &hopper_fingerprint;
    return b;
  }
  throw ConfigError("config key 'env.id': unknown environment '" + ec.env_id +
                    "'");
}

std::unique_ptr<Solver> make_solver(const ExperimentConfig& ec,
                                    std::shared_ptr<const DynamicsModel> model,
                                    double dt, uint64_t seed) {
  const ConfigMap& cfg = ec.cfg;
  // A solver planning at the wrong control period is a legal model error.
  dt = cfg.get_double("mismatch.dt", dt);
  const int horizon = static_cast<int>(cfg.get_int("solver.horizon"));
  const int n_samples = static_cast<int>(cfg.get_int("solver.n_samples", 64));
  const int n_stages = static_cast<int>(cfg.get_int("solver.n_stages", 4));
  if (ec.solver_id == "dial") {
    DialConfig d;
    d.schedule.n_stages = n_stages;
    d.schedule.horizon = horizon;
    d.schedule.action_dim = model->action_dim();
    d.schedule.beta1 = cfg.get_double("solver.beta1", 1.0);
    d.schedule.beta2 = cfg.get_double("solver.beta2", 1.0);
    d.schedule.sigma_base = cfg.get_double("solver.sigma_base");
    d.lambda = cfg.get_double("solver.lambda");
    d.n_samples = n_samples;
    d.dt = dt;
    d.seed = seed;
    d.node_count = static_cast<int>(cfg.get_int("solver.node_count", 0));
    d.interp = parse_interp(cfg.get_string("solver.interp", "linear"));
    d.threads = ec.threads;
    return std::make_unique<DialSolver>(std::move(model), std::move(d));
  }
  if (ec.solver_id == "mppi") {
    FixedMppiConfig m;
    m.sigma_fixed = cfg.get_double("solver.sigma");
    m.lambda = cfg.get_double("solver.lambda");
    m.n_samples = n_samples;
    m.iterations = n_stages;
    m.horizon = horizon;
    m.dt = dt;
    m.seed = seed;
    m.node_count = static_cast<int>(cfg.get_int("solver.node_count", 0));
    m.interp = parse_interp(cfg.get_string("solver.interp", "linear"));
    m.threads = ec.threads;
    return std::make_unique<MppiSolver>(std::move(model), m);
  }
  if (ec.solver_id == "cmaes") {
    EvoStrategyConfig e;
    e.population = n_samples;
    e.generations = n_stages;
    e.initial_step = cfg.get_double("solver.initial_step", 0.3);
    e.selection_fraction = cfg.get_double("solver.selection_fraction", 0.5);
    e.horizon = horizon;
    e.dt = dt;
    e.seed = seed;
    e.threads = ec.threads;
    return std::make_unique<EvoSolver>(std::move(model), e);
  }
  throw ConfigError("config key 'solver.id': unknown solver '" + ec.solver_id +
                    "'");
}

std::vector<RunRecord> run_experiment(const ExperimentConfig& ec) {
  const EnvBundle env = make_env(ec);
  const uint64_t fp_before = env.fingerprint(*env.true_env);
  const DynamicsModel& true_env = *env.true_env;
  const int du = true_env.action_dim();
  std::vector<double> lo(static_cast<size_t>(du));
  std::vector<double> hi(static_cast<size_t>(du));
  true_env.action_bounds(lo, hi);

  std::vector<RunRecord> records;
  records.reserve(ec.seeds.size());
  for (uint64_t seed : ec.seeds) {
    std::unique_ptr<Solver> solver = make_solver(ec, env.solver_env, env.dt, seed);
    RunRecord rec;
    rec.seed = seed;
    rec.rollouts_per_step = solver->rollouts_per_step();
    rec.states.push_back(env.start);
    double running = 0.0;
    double solver_ms = 0.0;
    State x = env.start;
    State x_next;
    x_next.values.resize(x.values.size());
    for (int t = 0; t < ec.steps; ++t) {
      std::vector<double> u;
      const auto t0 = std::chrono::steady_clock::now();
      try {
        u = solver->control_step(x);
      } catch (const DivergenceError&) {
        rec.diverged = true;
        break;
      } catch (const NoValidSampleError&) {
        rec.diverged = true;
        break;
      }
      const auto t1 = std::chrono::steady_clock::now();
      solver_ms += std::chrono::duration<double, std::milli>(t1 - t0).count();
      for (int j = 0; j < du; ++j) {
        u[static_cast<size_t>(j)] = std::clamp(
            u[static_cast<size_t>(j)], lo[static_cast<size_t>(j)],
            hi[static_cast<size_t>(j)]);
      }
      const double c = true_env.running_cost(x.values, u);
      true_env.step(x.values, u, env.dt, x_next.values);
      bool finite = std::isfinite(c);
      for (double v : x_next.values) finite = finite && std::isfinite(v);
      if (!finite) {
        rec.diverged = true;
        break;
      }
      rec.actions.push_back(u);
      rec.step_costs.push_back(c);
      rec.plan_costs.push_back(solver->last_plan_cost());
      running += c;
      x.values = x_next.values;
      rec.states.push_back(x);
      ++rec.steps_completed;
    }
    rec.realized_cost =
        rec.diverged ? kInf
                     : running + true_env.terminal_cost(rec.states.back().values);
    rec.success = episode_success(ec, env, rec);
    if (ec.env_id == "hopper" && !rec.diverged) {
      const auto& task = dynamic_cast<const HopperEnv&>(true_env).task();
      try {
        rec.contact_score = hopper_contact_score(task, rec.states);
        rec.contact_scored = true;
      } catch (const std::exception&) {
        // Episode too short to observe every stage window; leave unscored.
      }
    }
    if (env.fingerprint(*env.true_env) != fp_before) {
      throw std::logic_error(
          "model-mismatch overrides leaked into the true environment");
    }
    const double per_step =
        rec.steps_completed > 0 ? solver_ms / rec.steps_completed : 0.0;
    std::fprintf(stderr, "[%s seed %llu] %.2f ms/step over %d steps\n",
                 ec.label.c_str(), static_cast<unsigned long long>(seed),
                 per_step, rec.steps_completed);
    records.push_back(std::move(rec));
  }
  return records;
}

SolverSummary summarize(const std::string& label,
                        std::span<const RunRecord> records) {
  SolverSummary s;
  s.label = label;
  s.n_seeds = static_cast<int>(records.size());
  double sum = 0.0;
  int n_finite = 0;
  double contact_sum = 0.0;
  int n_contact = 0;
  for (const RunRecord& r : records) {
    if (r.success) ++s.n_success;
    if (r.diverged) ++s.n_diverged;
    if (std::isfinite(r.realized_cost)) {
      sum += r.realized_cost;
      ++n_finite;
    }
    if (r.contact_scored) {
      contact_sum += r.contact_score;
      ++n_contact;
    }
    if (s.rollouts_per_step == 0) {
      s.rollouts_per_step = r.rollouts_per_step;
    } else if (s.rollouts_per_step != r.rollouts_per_step) {
      throw std::logic_error("records disagree on rollouts per step");
    }
  }
  s.success_rate =
      s.n_seeds > 0 ? static_cast<double>(s.n_success) / s.n_seeds : 0.0;
  if (n_finite == 0) {
    s.mean_cost = std::numeric_limits<double>::quiet_NaN();
    s.std_cost = std::numeric_limits<double>::quiet_NaN();
  } else {
    s.mean_cost = sum / n_finite;
    double sq = 0.0;
    for (const RunRecord& r : records) {
      if (!std::isfinite(r.realized_cost)) continue;
      const double d = r.realized_cost - s.mean_cost;
      sq += d * d;
    }
    s.std_cost = n_finite > 1 ? std::sqrt(sq / (n_finite - 1)) : 0.0;
  }
  if (n_contact > 0) {
    s.mean_contact = contact_sum / n_contact;
    s.has_contact = true;
  }
  return s;
}

void check_budget_parity(std::span<const SolverSummary> summaries) {
  for (size_t i = 1; i < summaries.size(); ++i) {
    if (summaries[i].rollouts_per_step != summaries[0].rollouts_per_step) {
      throw ValidationError(
          "budget parity violated: solver '" + summaries[0].label + "' uses " +
          std::to_string(summaries[0].rollouts_per_step) +
          " rollouts per step but '" + summaries[i].label + "' uses " +
          std::to_string(summaries[i].rollouts_per_step));
    }
  }
}

void write_runs_header(std::ostream& os) {
  os << "# annealed-mpc runs v1\n";
  os << "solver,seed,steps,realized_cost,success,diverged,contact_score,"
        "rollouts_per_step\n";
}

void write_runs_rows(std::ostream& os, const std::string& label,
                     std::span<const RunRecord> records) {
  for (const RunRecord& r : records) {
    os << label << ',' << r.seed << ',' << r.steps_completed << ','
       << csv_num(r.realized_cost) << ',' << (r.success ? 1 : 0) << ','
       << (r.diverged ? 1 : 0) << ','
       << (r.contact_scored ? csv_num(r.contact_score) : std::string()) << ','
       << r.rollouts_per_step << '\n';
  }
}

void write_runs_csv(std::ostream& os, const std::string& label,
                    std::span<const RunRecord> records) {
  write_runs_header(os);
  write_runs_rows(os, label, records);
}

void write_trace_csv(std::ostream& os, const RunRecord& record) {
  os << "# annealed-mpc trace v1\n";
  os << "step,plan_cost,step_cost";
  const size_t du = record.actions.empty() ? 0 : record.actions[0].size();
  const size_t dx = record.states.empty() ? 0 : record.states[0].values.size();
  for (size_t j = 0; j < du; ++j) os << ",u" << j;
  for (size_t j = 0; j < dx; ++j) os << ",x" << j;
  os << '\n';
  for (int t = 0; t < record.steps_completed; ++t) {
    os << t << ',' << csv_num(record.plan_costs[static_cast<size_t>(t)]) << ','
       << csv_num(record.step_costs[static_cast<size_t>(t)]);
    for (double u : record.actions[static_cast<size_t>(t)]) {
      os << ',' << csv_num(u);
    }
    // The state row t is the state reached after applying action t.
    for (double v : record.states[static_cast<size_t>(t) + 1].values) {
      os << ',' << csv_num(v);
    }
    os << '\n';
  }
}

void write_summary_csv(std::ostream& os,
                       std::span<const SolverSummary> summaries) {
  os << "# annealed-mpc summary v1\n";
  os << "solver,n_seeds,n_success,n_diverged,success_rate,mean_cost,std_cost,"
        "mean_contact,rollouts_per_step\n";
  for (const SolverSummary& s : summaries) {
    os << s.label << ',' << s.n_seeds << ',' << s.n_success << ','
       << s.n_diverged << ',' << csv_num(s.success_rate) << ','
       << csv_num(s.mean_cost) << ',' << csv_num(s.std_cost) << ','
       << (s.has_contact ? csv_num(s.mean_contact) : std::string()) << ','
       << s.rollouts_per_step << '\n';
  }
}

std::string format_table(std::span<const SolverSummary> summaries) {
  bool any_contact = false;
  for (const SolverSummary& s : summaries) any_contact |= s.has_contact;

  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> head = {"solver",   "success",  "mean_cost",
                                   "std_cost", "diverged", "rollouts/step"};
  if (any_contact) head.insert(head.begin() + 4, "contact");
  rows.push_back(head);
  char buf[64];
  for (const SolverSummary& s : summaries) {
    std::vector<std::string> row;
    row.push_back(s.label);
    std::snprintf(buf, sizeof(buf), "%d/%d", s.n_success, s.n_seeds);
    row.push_back(buf);
    std::snprintf(buf, sizeof(buf), "%.4g", s.mean_cost);
    row.push_back(buf);
    std::snprintf(buf, sizeof(buf), "%.4g", s.std_cost);
    row.push_back(buf);
    if (any_contact) {
      if (s.has_contact) {
        std::snprintf(buf, sizeof(buf), "%.4g", s.mean_contact);
        row.push_back(buf);
      } else {
        row.push_back("-");
      }
    }
    row.push_back(std::to_string(s.n_diverged));
    row.push_back(std::to_string(s.rollouts_per_step));
    rows.push_back(std::move(row));
  }

  std::vector<size_t> width(rows[0].size(), 0);
  for (const auto& row : rows) {
    for (size_t c = 0; c < row.size(); ++c) {
      width[c] = std::max(width[c], row[c].size());
    }
  }
  std::ostringstream out;
  for (const auto& row : rows) {
    for (size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out << "  ";
      // Left-align the solver name, right-align numbers.
      if (c == 0) {
        out << row[c] << std::string(width[c] - row[c].size(), ' ');
      } else {
        out << std::string(width[c] - row[c].size(), ' ') << row[c];
      }
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace ampc
