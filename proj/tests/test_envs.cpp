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

#include <cmath>
#include <span>
#include <vector>

#include "ampc/core/errors.hpp"
#include "ampc/core/rollout.hpp"
#include "ampc/envs/contact.hpp"
#include "ampc/envs/double_integrator.hpp"
#include "ampc/envs/hopper.hpp"
#include "ampc/envs/pendulum.hpp"
#include "ampc/envs/wall_jump.hpp"
#include "ampc/sampler/rng.hpp"
#include "doctest.h"
#include "support/grid_oracle.hpp"

namespace ampc {
namespace {

std::span<const FootContact> one_foot(const FootContact& f) {
  return std::span<const FootContact>(&f, 1);
}

TEST_CASE("staged contact reward follows the stage formula") {
  // Two consecutive pads; stage 2 is active.
  const std::vector<Pad> pads = {
      {0.0, 0.1, 0.0, 1.0},
      {1.0, 0.1, 1.0, 2.0},
  };

  SUBCASE("all feet on the current pad earn n * w_correct") {
    std::vector<FootContact> feet = {
        {1.05, true}, {0.95, true}, {1.0, true}, {0.92, true}};
    CHECK(staged_contact_reward(feet, 2, pads) == doctest::Approx(0.4));
  }

  SUBCASE("a wrong contact still on the previous pad is not penalized") {
    // Exact cancellation: every wrong foot was a valid stage-1 contact.
    std::vector<FootContact> feet = {{0.0, true}, {0.08, true}};
    CHECK(staged_contact_reward(feet, 2, pads) == 0.0);
  }

  SUBCASE("two correct, two wrong, one of the wrong grandfathered") {
    std::vector<FootContact> feet = {
        {1.0, true},    // correct
        {0.93, true},   // correct
        {0.0, true},    // wrong but previously valid
        {0.5, true},    // wrong outright
    };
    CHECK(staged_contact_reward(feet, 2, pads) == doctest::Approx(0.1));
  }

  SUBCASE("airborne feet are invisible to the score") {
    std::vector<FootContact> feet = {{1.0, false}, {0.5, false}};
    CHECK(staged_contact_reward(feet, 2, pads) == 0.0);
  }

  SUBCASE("stage one has no previous pad to grandfather") {
    std::vector<FootContact> feet = {{0.5, true}};
    CHECK(staged_contact_reward(feet, 1, pads) == doctest::Approx(-0.1));
  }

  SUBCASE("stage index outside the pad list is rejected") {
    std::vector<FootContact> feet = {{0.0, true}};
    CHECK_THROWS_AS((void)staged_contact_reward(feet, 0, pads),
                    ValidationError);
    CHECK_THROWS_AS((void)staged_contact_reward(feet, 3, pads),
                    ValidationError);
  }
}

TEST_CASE("staged contact reward stays inside its weight envelope") {
  // For any contact pattern, r is bounded by [-w_wrong * n, w_correct * n]:
  // the grandfather credit can cancel penalties but never exceed them.
  const std::vector<Pad> pads = {
      {0.0, 0.2, 0.0, 1.0}, {0.7, 0.2, 1.0, 2.0}, {1.5, 0.2, 2.0, 3.0}};
  RngStream rng(99);
  for (int trial = 0; trial < 500; ++trial) {
    RngStream t = rng.derive(trial);
    const int n_feet = 1 + static_cast<int>(t.next_uniform() * 4.0);
    std::vector<FootContact> feet;
    for (int f = 0; f < n_feet; ++f) {
      feet.push_back({t.next_uniform() * 2.5 - 0.5, t.next_uniform() < 0.7});
    }
    const int stage = 1 + static_cast<int>(t.next_uniform() * 3.0);
    const double r = staged_contact_reward(feet, stage, pads, 0.1, 0.1);
    CHECK(r >= -0.1 * n_feet - 1e-15);
    CHECK(r <= 0.1 * n_feet + 1e-15);
  }
}

TEST_CASE("total contact score sums per-stage worst cases") {
  SUBCASE("a single constant stage scores that constant") {
    std::vector<ContactStageRecord> recs;
    recs.push_back(make_stage_record(1, {0.3, 0.3, 0.3}));
    CHECK(total_contact_score(recs, 1) == doctest::Approx(0.3));
  }

  SUBCASE("a transient spike inside the window buys nothing") {
    std::vector<ContactStageRecord> recs;
    recs.push_back(make_stage_record(1, {0.1, 5.0, 0.1}));
    std::vector<ContactStageRecord> no_spike;
    no_spike.push_back(make_stage_record(1, {0.1, 0.1, 0.1}));
    CHECK(total_contact_score(recs, 1) == total_contact_score(no_spike, 1));
  }

  SUBCASE("one bad instant costs the whole stage") {
    std::vector<ContactStageRecord> recs;
    recs.push_back(make_stage_record(1, {0.4, -0.2, 0.4}));
    CHECK(total_contact_score(recs, 1) == doctest::Approx(-0.2));
  }

  SUBCASE("ten stages at the four-feet regime") {
    // Each stage bottoms out at 0.4 = 4 feet x 0.1, a full-score stage for a
    // quadruped-sized contact set; ten stages total 4.0.
    std::vector<ContactStageRecord> recs;
    for (int j = 1; j <= 10; ++j) {
      recs.push_back(make_stage_record(j, {0.4, 0.42, 0.4 * j}));
    }
    recs[0].r_values = {0.4};  // windows need not be equal lengths
    CHECK(total_contact_score(recs, 10) == doctest::Approx(10 * 0.4));
  }

  SUBCASE("missing and duplicate stages are errors, not zeros") {
    std::vector<ContactStageRecord> recs;
    recs.push_back(make_stage_record(1, {0.1}));
    CHECK_THROWS_AS((void)total_contact_score(recs, 2), ValidationError);
    recs.push_back(make_stage_record(1, {0.2}));
    CHECK_THROWS_AS((void)total_contact_score(recs, 2), ValidationError);
  }

  SUBCASE("an empty stage window cannot be summarized") {
    CHECK_THROWS_AS((void)make_stage_record(3, {}), ValidationError);
  }
}

TEST_CASE("damped torque opposes joint velocity") {
  CHECK(damped_torque(3.7, 0.0, 0.65) == 3.7);
  CHECK(damped_torque(10.0, 2.0, 0.65) == doctest::Approx(8.7).epsilon(1e-14));
  RngStream rng(5);
  for (int i = 0; i < 100; ++i) {
    RngStream t = rng.derive(i);
    const double tau = t.next_normal() * 10.0;
    const double omega = t.next_normal() * 5.0;
    const double hat = damped_torque(tau, omega);
    if (omega > 0.0) CHECK(hat < tau);
    if (omega < 0.0) CHECK(hat > tau);
  }
}

TEST_CASE("random pads tile consecutive windows with bounded shifts") {
  const std::vector<Pad> pads = random_pads(42, 10, 0.0, 0.15);
  REQUIRE(pads.size() == 10);
  for (size_t j = 0; j < pads.size(); ++j) {
    CHECK(pads[j].t_min == doctest::Approx(1.0 * j));
    CHECK(pads[j].t_max == doctest::Approx(1.0 * (j + 1)));
    if (j > 0) {
      CHECK(std::abs(pads[j].center_x - pads[j - 1].center_x) <= 0.65);
    }
  }
  // Same seed, same course; different seed, different course.
  const std::vector<Pad> again = random_pads(42, 10, 0.0, 0.15);
  const std::vector<Pad> other = random_pads(43, 10, 0.0, 0.15);
  bool same = true;
  bool differs = false;
  for (size_t j = 0; j < pads.size(); ++j) {
    same = same && pads[j].center_x == again[j].center_x;
    differs = differs || pads[j].center_x != other[j].center_x;
  }
  CHECK(same);
  CHECK(differs);
}

TEST_CASE("double integrator matches its closed-form step") {
  DoubleIntegratorEnv env;
  std::vector<double> x = {2.0, -1.0};
  std::vector<double> u = {0.5};
  std::vector<double> next(2);
  env.step(x, u, 0.1, next);
  // v' = -1 + 0.1 * 0.5 = -0.95; p' = 2 + 0.1 * (-0.95) = 1.905
  CHECK(next[1] == doctest::Approx(-0.95).epsilon(1e-15));
  CHECK(next[0] == doctest::Approx(1.905).epsilon(1e-15));
  CHECK(env.running_cost(x, u) ==
        doctest::Approx(1.0 * 4.0 + 0.1 * 1.0 + 0.1 * 0.25));
  CHECK(env.terminal_cost(x) == doctest::Approx(10.0 * 4.0 + 1.0 * 1.0));
  CHECK_THROWS_AS(DoubleIntegratorEnv({.u_max = 0.0}), ValidationError);
}

TEST_CASE("pendulum energy is conserved by the production integrator") {
  PendulumParams p;
  p.friction = 0.0;
  PendulumEnv env(p);
  const double dt = 0.01;
  const int steps = 1000;  // 10 s
  const double e0 = env.energy(std::vector<double>{2.0, 0.0});
  REQUIRE(e0 != 0.0);

  // A symplectic integrator is allowed a phase-dependent energy wobble
  // within each swing; what it must not do is accumulate. So drift is
  // measured at dynamically equivalent phases: compare the energy at the
  // first and last turning points (omega sign changes) of the run.
  const auto turning_point_drift = [&](bool forward_euler) {
    std::vector<double> s = {2.0, 0.0};
    std::vector<double> u = {0.0};
    std::vector<double> next(2);
    double first = 0.0;
    double last = 0.0;
    bool have_first = false;
    double prev_omega = 0.0;
    for (int k = 0; k < steps; ++k) {
      if (forward_euler) {
        env.step_forward_euler(s, u, dt, next);
      } else {
        env.step(s, u, dt, next);
      }
      if (k > 0 && prev_omega != 0.0 &&
          (prev_omega > 0.0) != (next[1] > 0.0)) {
        const double e = env.energy(next);
        if (!have_first) {
          first = e;
          have_first = true;
        }
        last = e;
      }
      prev_omega = next[1];
      s = next;
    }
    REQUIRE(have_first);
    return std::abs(last - first) / std::abs(e0);
  };

  CHECK(turning_point_drift(false) < 1e-3);
  // Forward Euler pumps energy every swing on the same trajectory; the
  // contrast shows the bound above is not vacuous.
  CHECK(turning_point_drift(true) > 1e-2);
}

TEST_CASE("pendulum cost prefers upright and wraps angles") {
  PendulumEnv env;
  std::vector<double> down = {0.0, 0.0};
  std::vector<double> up = {M_PI, 0.0};
  std::vector<double> up_wrapped = {3.0 * M_PI, 0.0};
  std::vector<double> u = {0.0};
  CHECK(env.running_cost(up, u) == 0.0);
  CHECK(env.running_cost(up_wrapped, u) ==
        doctest::Approx(0.0).epsilon(1e-12));
  CHECK(env.running_cost(down, u) == doctest::Approx(M_PI * M_PI));
  CHECK(env.terminal_cost(down) > 10.0 * env.running_cost(up, u));
}

TEST_CASE("wall jump degenerate instance costs exactly zero") {
  WallJumpTask task;
  task.start_x = task.goal_x;  // already there
  task.wall_x = 50.0;          // no wall in the path
  WallJumpEnv env(task);
  ControlSequence zeros(20, 2);
  const RolloutResult res = rollout(env, env.start_state(), zeros, task.dt);
  CHECK(res.total_cost == 0.0);
}

TEST_CASE("wall jump penalty is monotone in wall height") {
  // The wall is priced, not simulated, so raising it cannot change the
  // trajectory, only the bill.
  WallJumpTask low;
  WallJumpTask high = low;
  high.wall_height = low.wall_height + 0.4;
  RngStream rng(17);
  for (int i = 0; i < 50; ++i) {
    RngStream t = rng.derive(i);
    const double jump = t.next_uniform();
    const double thrust = 2.0 * t.next_uniform() - 1.0;
    CHECK(wall_jump_cost(high, jump, thrust, 20) >=
          wall_jump_cost(low, jump, thrust, 20));
  }
}

TEST_CASE("wall jump grounding gates the launch") {
  WallJumpTask task;
  WallJumpEnv env(task);
  std::vector<double> grounded = {0.0, 0.0, 0.0, 0.0};
  std::vector<double> airborne = {0.0, 0.5, 0.0, 1.0};
  std::vector<double> u = {1.0, 0.0};
  std::vector<double> next(4);
  env.step(grounded, u, task.dt, next);
  CHECK(next[3] == doctest::Approx(task.jump_impulse / task.mass));
  env.step(airborne, u, task.dt, next);
  // In flight the jump action is inert; gravity rules.
  CHECK(next[3] == doctest::Approx(1.0 - task.gravity * task.dt));
}

TEST_CASE("wall jump landscape is certifiably bimodal") {
  // Certificate for the landscape the annealed solver is designed for: a
  // local minimum on each side of the wall, and every grid path between
  // them forced over a saddle at least 10x the global minimum cost.
  WallJumpTask task;
  const int n = 161;
  const auto scan = testing::scan_wall_jump(task, 20, n, n);
  const std::vector<int> minima = testing::grid_local_minima(scan.costs, n, n);
  REQUIRE(minima.size() >= 2);

  // Consistency guard: the scan must price plans exactly like the
  // two-variable reduction it claims to sample.
  for (int cell : {minima[0], minima[1]}) {
    const double direct = wall_jump_cost(task, scan.jump_at(cell / n),
                                         scan.thrust_at(cell % n), 20);
    CHECK(scan.costs[static_cast<size_t>(cell)] == direct);
  }

  // Classify minima by where their trajectory ends. minima is sorted by
  // cost, so the first hit on each side is that basin's best.
  int best_past = -1;
  int best_before = -1;
  for (int cell : minima) {
    if (scan.final_x[static_cast<size_t>(cell)] > task.wall_x) {
      if (best_past < 0) best_past = cell;
    } else if (best_before < 0) {
      best_before = cell;
    }
  }
  REQUIRE(best_past >= 0);
  REQUIRE(best_before >= 0);

  // The crossing basin wins globally, and it takes the bigger launch.
  const double global_min = scan.costs[static_cast<size_t>(best_past)];
  CHECK(global_min == scan.best_cost);
  CHECK(scan.costs[static_cast<size_t>(best_before)] > global_min);
  CHECK(scan.jump_at(best_past / n) > scan.jump_at(best_before / n));

  const double barrier =
      testing::grid_merge_barrier(scan.costs, n, n, best_past, best_before);
  CHECK(barrier >= 10.0 * global_min);
}

TEST_CASE("wall jump success requires clearing, not scraping") {
  WallJumpTask task;
  WallJumpEnv env(task);

  const auto run_episode = [&](double jump, double thrust) {
    ControlSequence plan(30, 2);
    plan.at(0, 0) = jump;
    for (int h = 0; h < 30; ++h) plan.at(h, 1) = thrust;
    const auto flat = rollout(env, env.start_state(), plan, task.dt, true)
                          .state_trace;
    std::vector<State> states;
    for (size_t k = 0; k + 4 <= flat.size(); k += 4) {
      states.emplace_back(
          std::vector<double>(flat.begin() + k, flat.begin() + k + 4));
    }
    return states;
  };

  // Idle at the start: never crossed.
  CHECK_FALSE(wall_jump_success(task, run_episode(0.0, 0.0)));
  // Drive through the wall on the ground: reaches the far side but scrapes.
  const auto scrape = run_episode(0.0, 1.0);
  CHECK(scrape.back().values[0] > task.wall_x);
  CHECK_FALSE(wall_jump_success(task, scrape));
}

TEST_CASE("hopper validates pads and masses") {
  HopperTask task;
  task.pads = {{0.0, 0.1, 0.0, 1.0}, {0.4, 0.1, 0.5, 1.5}};  // overlap
  CHECK_THROWS_WITH_AS(HopperEnv{task}, doctest::Contains("overlap"),
                       ValidationError);
  task.pads = {{0.0, 0.0, 0.0, 1.0}};  // zero radius
  CHECK_THROWS_WITH_AS(HopperEnv{task}, doctest::Contains("radius"),
                       ValidationError);
  task.pads.clear();
  task.r_min = 0.9;  // rails inverted
  CHECK_THROWS_AS(HopperEnv{task}, ValidationError);
}

TEST_CASE("hopper stands at rest without drifting or exploding") {
  HopperTask task;
  task.pads = {{0.0, 0.2, 0.0, 4.0}};
  HopperEnv env(task);
  State s = env.start_state();
  std::vector<double> u = {0.0, 0.0};
  std::vector<double> next(9);
  for (int k = 0; k < 200; ++k) {  // 4 s
    env.step(s.values, u, task.dt, next);
    s.values = next;
    for (double v : s.values) REQUIRE(std::isfinite(v));
  }
  // Settles into spring equilibrium: body weight compresses the leg spring
  // by mg/k_leg and the ground by mg/k_ground, so z rests a bit below
  // r_rest. No walking, no tilt.
  CHECK(s.values[0] == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(s.values[1] > 0.4);
  CHECK(s.values[1] < 0.5);
  CHECK(std::abs(s.values[2]) < 1e-9);
  CHECK(s.values[8] == doctest::Approx(200 * task.dt));
  CHECK(env.foot(s.values).in_contact);
}

TEST_CASE("hopper stage lookup clamps to the schedule") {
  HopperTask task;
  task.pads = {{0.0, 0.1, 0.0, 1.0}, {0.5, 0.1, 1.0, 2.0}};
  HopperEnv env(task);
  CHECK(env.stage_of(0.0) == 1);
  CHECK(env.stage_of(0.999) == 1);
  CHECK(env.stage_of(1.0) == 2);
  CHECK(env.stage_of(7.0) == 2);   // past the schedule: last stage holds
  CHECK(HopperEnv(HopperTask{}).stage_of(0.5) == 0);  // no pads
}

TEST_CASE("hopper trace scoring buckets by stage window") {
  HopperTask task;
  task.pads = {{0.0, 0.3, 0.0, 0.1}, {2.0, 0.3, 0.1, 0.2}};
  HopperEnv env(task);

  // Hand-built trace: stand on pad 1 for the first window, stay there for
  // the second. Stage 1 scores +w_correct; stage 2 sees a wrong-but-
  // grandfathered contact, scoring exactly 0.
  std::vector<State> trace;
  for (int k = 0; k < 10; ++k) {
    State s = env.start_state();
    s.values[8] = 0.02 * k;
    trace.push_back(s);
  }
  const auto records = contact_records_from_trace(task, trace);
  REQUIRE(records.size() == 2);
  CHECK(records[0].stage_min == doctest::Approx(task.w_correct));
  CHECK(records[1].stage_min == doctest::Approx(0.0));
  CHECK(hopper_contact_score(task, trace) == doctest::Approx(task.w_correct));

  // A trace that never enters stage 2's window cannot be scored.
  trace.resize(5);
  CHECK_THROWS_WITH_AS((void)contact_records_from_trace(task, trace),
                       doctest::Contains("stage 2"), ValidationError);
}

TEST_CASE("hopper rewards standing on the active pad") {
  HopperTask on_target;
  on_target.pads = {{0.0, 0.2, 0.0, 1.0}};
  HopperTask off_target = on_target;
  off_target.pads = {{1.5, 0.2, 0.0, 1.0}};
  HopperEnv env_on(on_target);
  HopperEnv env_off(off_target);
  const State s = env_on.start_state();
  std::vector<double> u = {0.0, 0.0};
  // Standing on the pad is strictly cheaper than the same pose with the pad
  // elsewhere: tracking error and the wrong-contact penalty both bite.
  CHECK(env_on.running_cost(s.values, u) < env_off.running_cost(s.values, u));
}

}  // namespace
}  // namespace ampc
