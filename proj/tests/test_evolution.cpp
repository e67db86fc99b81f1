#include <cmath>
#include <cstring>

#include <memory>
#include <vector>

#include "ampc/baselines/evolution.hpp"
#include "ampc/core/errors.hpp"
#include "doctest.h"
#include "support/test_models.hpp"

using namespace ampc;
using ampc_tests::TinyIntegrator;

namespace {

// State-free quadratic bowl in action space; the optimum is (0.3, -0.4) at
// every step. Lets the strategy be checked against a known minimizer.
class ActionBowl : public DynamicsModel {
 public:
  int state_dim() const override { return 1; }
  int action_dim() const override { return 2; }
  std::string name() const override { return "action_bowl"; }
  void step(std::span<const double> x, std::span<const double>, double,
            std::span<double> x_next) const override {
    x_next[0] = x[0];
  }
  double running_cost(std::span<const double>, std::span<const double> u) const override {
    const double a = u[0] - 0.3, b = u[1] + 0.4;
    return a * a + b * b;
  }
  double terminal_cost(std::span<const double>) const override { return 0.0; }
  void action_bounds(std::span<double> lo, std::span<double> hi) const override {
    lo[0] = lo[1] = -1.0;
    hi[0] = hi[1] = 1.0;
  }
};

EvoStrategyConfig bowl_config() {
  EvoStrategyConfig cfg;
  cfg.population = 16;
  cfg.generations = 60;
  cfg.initial_step = 0.5;
  cfg.selection_fraction = 0.5;
  cfg.horizon = 1;
  cfg.dt = 0.05;
  cfg.seed = 7;
  return cfg;
}

}  // namespace

TEST_CASE("the strategy finds a quadratic optimum to 1e-2") {
  ActionBowl model;
  State x0(std::vector<double>{0.0});
  const EvoStrategyConfig cfg = bowl_config();

  const EvoStepResult r =
      evo_step(model, x0, ControlSequence(1, 2), cfg, RngStream(7).derive(0));
  CHECK(std::abs(r.plan.at(0, 0) - 0.3) < 1e-2);
  CHECK(std::abs(r.plan.at(0, 1) + 0.4) < 1e-2);
  CHECK(r.best_cost < 1e-4);
  CHECK(r.rollouts == 16 * 60);
  CHECK_FALSE(r.reset_triggered);
}

TEST_CASE("evolution search is deterministic and thread-invariant") {
  ActionBowl model;
  State x0(std::vector<double>{0.0});
  EvoStrategyConfig cfg = bowl_config();
  cfg.generations = 10;

  const EvoStepResult a =
      evo_step(model, x0, ControlSequence(1, 2), cfg, RngStream(7).derive(0));
  const EvoStepResult b =
      evo_step(model, x0, ControlSequence(1, 2), cfg, RngStream(7).derive(0));
  EvoStrategyConfig cfg_mt = cfg;
  cfg_mt.threads = 4;
  const EvoStepResult c =
      evo_step(model, x0, ControlSequence(1, 2), cfg_mt, RngStream(7).derive(0));

  CHECK(std::memcmp(a.plan.flat().data(), b.plan.flat().data(),
                    a.plan.size() * sizeof(double)) == 0);
  CHECK(std::memcmp(a.plan.flat().data(), c.plan.flat().data(),
                    a.plan.size() * sizeof(double)) == 0);

  const EvoStepResult d =
      evo_step(model, x0, ControlSequence(1, 2), cfg, RngStream(8).derive(0));
  CHECK(std::memcmp(a.plan.flat().data(), d.plan.flat().data(),
                    a.plan.size() * sizeof(double)) != 0);
}

TEST_CASE("the controller plans, emits row zero, and shifts") {
  auto model = std::make_shared<TinyIntegrator>();
  EvoStrategyConfig cfg;
  cfg.population = 12;
  cfg.generations = 8;
  cfg.initial_step = 0.4;
  cfg.horizon = 6;
  cfg.dt = 0.3;
  cfg.seed = 3;

  EvoController ctl(model, cfg);
  State x(std::vector<double>{1.0, 0.0});
  const double j_zero = rollout(*model, x, ControlSequence(6, 1), cfg.dt).total_cost;

  const auto u0 = ctl.control_step(x);
  CHECK(u0.size() == 1);
  CHECK(ctl.step_index() == 1);
  CHECK(ctl.last_best_cost() < j_zero);
  CHECK(ctl.total_rollouts() == 12 * 8);
  CHECK(ctl.rollouts_per_step() == 12 * 8);

  // A braking action for a mass drifting right of the target.
  CHECK(u0[0] < 0.0);
}

TEST_CASE("validation rejects degenerate strategy configs") {
  TinyIntegrator model;
  EvoStrategyConfig cfg;
  cfg.horizon = 4;

  EvoStrategyConfig bad = cfg;
  bad.population = 1;
  CHECK_THROWS_AS(bad.validate(model), ValidationError);
  bad = cfg;
  bad.selection_fraction = 0.0;
  CHECK_THROWS_AS(bad.validate(model), ValidationError);
  bad = cfg;
  bad.selection_fraction = 1.5;
  CHECK_THROWS_AS(bad.validate(model), ValidationError);
  bad = cfg;
  bad.initial_step = -0.1;
  CHECK_THROWS_AS(bad.validate(model), ValidationError);
  bad = cfg;
  bad.generations = 0;
  CHECK_THROWS_AS(bad.validate(model), ValidationError);
}
