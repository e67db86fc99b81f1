#include <cmath>
#include <cstring>

#include <limits>
#include <numbers>
#include <vector>

#include "ampc/core/errors.hpp"
#include "ampc/sampler/sampler.hpp"
#include "doctest.h"

using namespace ampc;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

SamplerParams make_params(int horizon, int action_dim, double sigma,
                          double lambda = 1.0) {
  SamplerParams p;
  p.lambda = lambda;
  p.sigma = ControlSequence::constant(horizon, action_dim, sigma);
  return p;
}

double rel_err(double a, double b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

TEST_CASE("perturbations are keyed by (stream, sample), not batch size") {
  const SamplerParams p = make_params(6, 2, 0.3);
  const RngStream rng = RngStream(99).derive(4).derive(2);

  const PerturbationBatch one = sample_perturbations(p, 1, rng);
  const PerturbationBatch many = sample_perturbations(p, 64, rng);
  const auto row1 = one.noise_row(0);
  const auto row64 = many.noise_row(0);
  CHECK(std::memcmp(row1.data(), row64.data(), row1.size() * sizeof(double)) == 0);

  // Same stream, same batch: identical tensors.
  const PerturbationBatch again = sample_perturbations(p, 64, rng);
  CHECK(std::memcmp(many.noise.data(), again.noise.data(),
                    many.noise.size() * sizeof(double)) == 0);
}

TEST_CASE("sigma scales noise entrywise and sigma zero silences it") {
  SamplerParams p = make_params(4, 2, 1.0);
  const RngStream rng = RngStream(5).derive(0).derive(0);
  const PerturbationBatch unit = sample_perturbations(p, 8, rng);

  p.sigma = ControlSequence::constant(4, 2, 2.5);
  const PerturbationBatch scaled = sample_perturbations(p, 8, rng);
  for (size_t i = 0; i < unit.noise.size(); ++i) {
    CHECK(scaled.noise[i] == 2.5 * unit.noise[i]);
  }

  p.sigma = ControlSequence::constant(4, 2, 0.0);
  const PerturbationBatch silent = sample_perturbations(p, 8, rng);
  for (double w : silent.noise) CHECK(w == 0.0);
}

TEST_CASE("softmax weights: ordering, normalization, stabilization") {
  const std::vector<double> costs = {3.0, 1.0, 4.0, 1.5};
  const auto w = softmax_weights(costs, 0.7);
  REQUIRE(w.size() == 4);
  CHECK(w[1] > w[3]);
  CHECK(w[3] > w[0]);
  CHECK(w[0] > w[2]);
  double total = 0.0;
  for (double x : w) total += x;
  CHECK(std::abs(total - 1.0) <= 1e-12);

  // Equal costs share weight exactly: exp(0) each, normalized by 4.
  const auto uniform = softmax_weights({2.0, 2.0, 2.0, 2.0}, 1.0);
  for (double x : uniform) CHECK(x == 0.25);

  // Huge costs must not overflow: min-subtraction keeps exponents <= 0.
  const auto huge = softmax_weights({1e308, 1e308}, 1.0);
  CHECK(huge[0] == 0.5);
}

TEST_CASE("softmax weights are bit-exact under integer cost shifts") {
  const std::vector<double> a = {5.0, 6.0, 9.0, 7.0};
  std::vector<double> b = a;
  for (double& c : b) c += 100.0;
  const auto wa = softmax_weights(a, 1.3);
  const auto wb = softmax_weights(b, 1.3);
  CHECK(std::memcmp(wa.data(), wb.data(), wa.size() * sizeof(double)) == 0);
}

TEST_CASE("infinite costs get weight zero; all-infinite throws") {
  const auto w = softmax_weights({1.0, kInf, 2.0, kInf}, 1.0);
  CHECK(w[1] == 0.0);
  CHECK(w[3] == 0.0);
  CHECK(w[0] > w[2]);
  CHECK(w[0] + w[2] == doctest::Approx(1.0).epsilon(1e-14));

  CHECK_THROWS_AS(softmax_weights({kInf, kInf, kInf}, 1.0), NoValidSampleError);
  CHECK_THROWS_AS(softmax_weights({1.0, std::nan("")}, 1.0), ValidationError);
  CHECK_THROWS_AS(softmax_weights({1.0, -kInf}, 1.0), ValidationError);
  CHECK_THROWS_AS(softmax_weights({1.0, 2.0}, 0.0), ValidationError);
}

TEST_CASE("mppi_update blends noise by softmax weight") {
  ControlSequence u(2, 1);
  u.at(0, 0) = 0.5;
  u.at(1, 0) = -0.5;

  PerturbationBatch batch;
  batch.n_samples = 2;
  batch.horizon = 2;
  batch.action_dim = 1;
  batch.noise = {1.0, 2.0, -1.0, 0.5};
  batch.costs = {3.0, 5.0};

  const double lambda = 0.8;
  const ControlSequence out = mppi_update(u, batch, lambda);
  const double w0 = 1.0 / (1.0 + std::exp(-2.0 / lambda));
  const double w1 = 1.0 - w0;
  CHECK(out.at(0, 0) == doctest::Approx(0.5 + w0 * 1.0 + w1 * -1.0).epsilon(1e-14));
  CHECK(out.at(1, 0) == doctest::Approx(-0.5 + w0 * 2.0 + w1 * 0.5).epsilon(1e-14));
}

TEST_CASE("a single sample moves the plan by exactly its noise") {
  ControlSequence u(3, 2);
  PerturbationBatch batch;
  batch.n_samples = 1;
  batch.horizon = 3;
  batch.action_dim = 2;
  batch.noise = {0.1, -0.2, 0.3, 0.0, -0.4, 0.25};
  batch.costs = {17.0};

  const ControlSequence out = mppi_update(u, batch, 2.0);
  for (int j = 0; j < 6; ++j) CHECK(out.flat()[j] == batch.noise[j]);
}

TEST_CASE("at tiny temperature the best sample wins outright") {
  ControlSequence u(1, 1);
  PerturbationBatch batch;
  batch.n_samples = 3;
  batch.horizon = 1;
  batch.action_dim = 1;
  batch.noise = {5.0, -3.0, 0.7};
  batch.costs = {10.0, 2.0, 9.0};

  const ControlSequence out = mppi_update(u, batch, 1e-3);
  CHECK(out.at(0, 0) == -3.0);  // exp(-7000) underflows to zero exactly
}

TEST_CASE("direct blend and score-ascent routes agree to 1e-13") {
  RngStream master(777);
  for (int trial = 0; trial < 200; ++trial) {
    RngStream trial_rng = master.derive(trial);
    const int horizon = 1 + static_cast<int>(trial_rng.next_u64() % 12);
    const int d_u = 1 + static_cast<int>(trial_rng.next_u64() % 3);
    const int n = 2 + static_cast<int>(trial_rng.next_u64() % 40);
    const double lambda = 0.05 + 2.0 * trial_rng.next_uniform();

    SamplerParams p = make_params(horizon, d_u, 0.0, lambda);
    for (double& s : p.sigma.flat()) s = 0.05 + trial_rng.next_uniform();

    const PerturbationBatch batch_proto = sample_perturbations(p, n, trial_rng.derive(1000));
    PerturbationBatch batch = batch_proto;
    for (int k = 0; k < n; ++k) {
      batch.costs[k] = 10.0 * trial_rng.next_uniform() - 5.0;
    }
    if (n > 3 && trial % 3 == 0) batch.costs[2] = kInf;

    ControlSequence u(horizon, d_u);
    for (double& x : u.flat()) x = 2.0 * trial_rng.next_uniform() - 1.0;

    const ControlSequence direct = mppi_update(u, batch, lambda);
    const ControlSequence score = estimate_score(batch, lambda, p.sigma);
    const ControlSequence ascent = score_ascent_step(u, score, p.sigma);

    for (int j = 0; j < u.size(); ++j) {
      CHECK(rel_err(direct.flat()[j], ascent.flat()[j]) <= 1e-13);
    }
  }
}

TEST_CASE("score-ascent step is linear in the squared kernel") {
  ControlSequence u(2, 1);
  ControlSequence score(2, 1);
  score.at(0, 0) = 0.4;
  score.at(1, 0) = -1.2;

  const ControlSequence sig1 = ControlSequence::constant(2, 1, 0.3);
  const ControlSequence sig2 = ControlSequence::constant(2, 1, 0.3 * std::numbers::sqrt2);

  const ControlSequence step1 = score_ascent_step(u, score, sig1);
  const ControlSequence step2 = score_ascent_step(u, score, sig2);
  for (int j = 0; j < 2; ++j) {
    CHECK(step2.flat()[j] == doctest::Approx(2.0 * step1.flat()[j]).epsilon(1e-14));
  }
}

TEST_CASE("estimate_score rejects non-positive sigma") {
  PerturbationBatch batch;
  batch.n_samples = 1;
  batch.horizon = 1;
  batch.action_dim = 1;
  batch.noise = {0.0};
  batch.costs = {1.0};
  CHECK_THROWS_AS(estimate_score(batch, 1.0, ControlSequence::constant(1, 1, 0.0)),
                  ValidationError);
}
