// Copyright 2026 The Socgan Authors
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
#include <cstring>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "socgan/model/gan.hpp"
#include "socgan/nn/grad_check.hpp"
#include "socgan/nn/ops.hpp"
#include "socgan/nn/tape.hpp"

using namespace socgan;

namespace {

RunConfig tiny_config() {
  RunConfig cfg;
  cfg.t_obs = 3;
  cfg.t_pred = 4;
  cfg.hidden_dim = 4;
  cfg.embed_dim = 3;
  cfg.context_dim = 5;
  cfg.noise_dim = 2;
  cfg.seed = 123;
  return cfg;
}

Tensor rand_tensor(Rng& rng, int64_t r, int64_t c, bool requires_grad = false) {
  std::vector<double> v(r * c);
  for (double& x : v) x = rng.uniform(-1.0, 1.0);
  return Tensor::from_values(r, c, std::move(v), requires_grad);
}

bool bitwise_equal(const Tensor& a, const Tensor& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() &&
         std::memcmp(a.data(), b.data(),
                     sizeof(double) * static_cast<size_t>(a.numel())) == 0;
}

}  // namespace

TEST_CASE("zero-parameter generator is exactly the stationary predictor") {
  const RunConfig cfg = tiny_config();
  const GeneratorParams params = GeneratorParams::zeros(cfg);
  Rng rng(7);
  const Tensor ctx = rand_tensor(rng, 2, cfg.context_dim);
  const Tensor z = rand_tensor(rng, 2, cfg.noise_dim);
  const Tensor last = Tensor::from_values(2, 2, {0.3, -0.1, 0.0, 0.2});
  const Tensor origin = Tensor::from_values(2, 2, {1.0, 2.0, -3.0, 4.0});

  const Rollout roll = generate(ctx, z, last, origin, cfg.t_pred, params);
  REQUIRE(roll.displacements.size() == static_cast<size_t>(cfg.t_pred));
  REQUIRE(roll.positions.size() == static_cast<size_t>(cfg.t_pred));
  for (int t = 0; t < cfg.t_pred; ++t) {
    const Tensor& d = roll.displacements[t];
    const Tensor& p = roll.positions[t];
    REQUIRE(d.rows() == 2);
    REQUIRE(d.cols() == 2);
    for (int64_t i = 0; i < d.numel(); ++i) CHECK(d.data()[i] == 0.0);
    for (int64_t i = 0; i < p.numel(); ++i) CHECK(p.data()[i] == origin.data()[i]);
  }

  const std::vector<Vec2> pos = generate_positions(
      Tensor::row_vector({0.1, 0.2, 0.3, 0.4, 0.5}),
      Tensor::row_vector({1.0, -1.0}), {0.5, 0.5}, {2.0, 3.0}, 3, params);
  REQUIRE(pos.size() == 3);
  for (const Vec2& p : pos) {
    CHECK(p.x == 2.0);
    CHECK(p.y == 3.0);
  }
}

TEST_CASE("generator positions are cumulative sums of its displacements") {
  const RunConfig cfg = tiny_config();
  Rng rng(11);
  const GeneratorParams params = GeneratorParams::init(cfg, rng);
  const Tensor ctx = rand_tensor(rng, 1, cfg.context_dim);
  const Tensor z = rand_tensor(rng, 1, cfg.noise_dim);
  const Tensor last = Tensor::row_vector({0.2, 0.1});
  const Tensor origin = Tensor::row_vector({5.0, -2.0});

  const Rollout roll = generate(ctx, z, last, origin, cfg.t_pred, params);
  double x = 5.0, y = -2.0;
  for (int t = 0; t < cfg.t_pred; ++t) {
    x += roll.displacements[t].data()[0];
    y += roll.displacements[t].data()[1];
    CHECK(roll.positions[t].data()[0] == doctest::Approx(x).epsilon(1e-12));
    CHECK(roll.positions[t].data()[1] == doctest::Approx(y).epsilon(1e-12));
  }
}

TEST_CASE("generator is deterministic in its inputs and sensitive to noise") {
  const RunConfig cfg = tiny_config();
  Rng rng(13);
  const GeneratorParams params = GeneratorParams::init(cfg, rng);
  const Tensor ctx = rand_tensor(rng, 1, cfg.context_dim);
  const Tensor z1 = rand_tensor(rng, 1, cfg.noise_dim);
  const Tensor z2 = rand_tensor(rng, 1, cfg.noise_dim);
  const Tensor last = Tensor::row_vector({0.3, 0.0});
  const Tensor origin = Tensor::row_vector({0.0, 0.0});

  const Rollout a = generate(ctx, z1, last, origin, cfg.t_pred, params);
  const Rollout b = generate(ctx, z1, last, origin, cfg.t_pred, params);
  const Rollout c = generate(ctx, z2, last, origin, cfg.t_pred, params);
  bool all_same = true;
  for (int t = 0; t < cfg.t_pred; ++t) {
    CHECK(bitwise_equal(a.positions[t], b.positions[t]));
    all_same = all_same && bitwise_equal(a.positions[t], c.positions[t]);
  }
  CHECK_FALSE(all_same);  // a different z draw moves the trajectory
}

TEST_CASE("zero-parameter discriminator scores exactly one half") {
  const RunConfig cfg = tiny_config();
  const DiscriminatorParams params = DiscriminatorParams::zeros(cfg);
  Rng rng(17);
  const Tensor ctx = rand_tensor(rng, 2, cfg.context_dim);
  std::vector<Tensor> traj;
  for (int t = 0; t < cfg.t_obs + cfg.t_pred; ++t) {
    traj.push_back(rand_tensor(rng, 2, 2));
  }
  for (bool use_ctx : {true, false}) {
    const Tensor s = discriminate(traj, ctx, params, use_ctx);
    REQUIRE(s.rows() == 2);
    REQUIRE(s.cols() == 1);
    CHECK(s.data()[0] == 0.5);
    CHECK(s.data()[1] == 0.5);
  }
}

TEST_CASE("discriminator needs two positions and reacts to its flags") {
  const RunConfig cfg = tiny_config();
  Rng rng(19);
  const DiscriminatorParams params = DiscriminatorParams::init(cfg, rng);
  const Tensor ctx = rand_tensor(rng, 1, cfg.context_dim);
  const Tensor ctx2 = rand_tensor(rng, 1, cfg.context_dim);
  std::vector<Tensor> traj;
  for (int t = 0; t < 5; ++t) traj.push_back(rand_tensor(rng, 1, 2));

  CHECK_THROWS_AS(discriminate({traj[0]}, ctx, params), std::invalid_argument);

  const Tensor with_ctx = discriminate(traj, ctx, params, true);
  const Tensor with_ctx2 = discriminate(traj, ctx2, params, true);
  const Tensor without = discriminate(traj, ctx, params, false);
  CHECK(with_ctx.data()[0] > 0.0);
  CHECK(with_ctx.data()[0] < 1.0);
  CHECK(with_ctx.data()[0] != with_ctx2.data()[0]);   // context matters
  CHECK(bitwise_equal(discriminate(traj, ctx2, params, false), without));
}

TEST_CASE("variety loss exact two-rollout case") {
  // One agent, one step. Rollout errors 2.0^2 = 4 and 0.5^2 = 0.25; the min
  // branch keeps 0.25.
  Rollout far, near;
  far.positions.push_back(Tensor::row_vector({2.0, 0.0}));
  far.displacements.push_back(Tensor::row_vector({2.0, 0.0}));
  near.positions.push_back(Tensor::row_vector({0.0, 0.5}));
  near.displacements.push_back(Tensor::row_vector({0.0, 0.5}));
  const std::vector<Tensor> truth = {Tensor::row_vector({0.0, 0.0})};
  const Tensor loss = variety_loss({far, near}, truth);
  REQUIRE(loss.numel() == 1);
  CHECK(loss.data()[0] == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("variety loss with one rollout equals plain position mse") {
  const RunConfig cfg = tiny_config();
  Rng rng(23);
  const GeneratorParams params = GeneratorParams::init(cfg, rng);
  const Tensor ctx = rand_tensor(rng, 3, cfg.context_dim);
  const Tensor z = rand_tensor(rng, 3, cfg.noise_dim);
  const Tensor last = rand_tensor(rng, 3, 2);
  const Tensor origin = rand_tensor(rng, 3, 2);
  const Rollout roll = generate(ctx, z, last, origin, cfg.t_pred, params);
  std::vector<Tensor> truth;
  for (int t = 0; t < cfg.t_pred; ++t) truth.push_back(rand_tensor(rng, 3, 2));

  const Tensor loss = variety_loss({roll}, truth);
  // Plain mse over all positions: mean over rows and steps of the squared
  // per-coordinate error sums matches (1/T) sum_t ||p - truth||^2 per row.
  double acc = 0.0;
  for (int t = 0; t < cfg.t_pred; ++t) {
    for (int64_t i = 0; i < 6; ++i) {
      const double d = roll.positions[t].data()[i] - truth[t].data()[i];
      acc += d * d;
    }
  }
  acc /= 3.0 * cfg.t_pred;
  CHECK(loss.data()[0] == doctest::Approx(acc).epsilon(1e-12));
}

TEST_CASE("variety loss picks the per-row minimum independently") {
  // Two agents; rollout A is better for agent 0, rollout B for agent 1.
  Rollout a, b;
  a.positions.push_back(Tensor::from_values(2, 2, {0.0, 0.0, 9.0, 9.0}));
  b.positions.push_back(Tensor::from_values(2, 2, {5.0, 5.0, 1.0, 0.0}));
  a.displacements.push_back(a.positions[0]);
  b.displacements.push_back(b.positions[0]);
  const std::vector<Tensor> truth = {Tensor::from_values(2, 2, {0.0, 0.0, 0.0, 0.0})};
  const Tensor loss = variety_loss({a, b}, truth);
  // Agent 0 takes rollout A (error 0), agent 1 takes rollout B (error 1).
  CHECK(loss.data()[0] == doctest::Approx(0.5).epsilon(1e-12));

  // Adding a rollout can only lower the loss (min over more candidates).
  Rollout c;
  c.positions.push_back(Tensor::from_values(2, 2, {0.0, 0.0, 0.5, 0.0}));
  c.displacements.push_back(c.positions[0]);
  const Tensor better = variety_loss({a, b, c}, truth);
  CHECK(better.data()[0] <= loss.data()[0]);
  CHECK(better.data()[0] == doctest::Approx(0.125).epsilon(1e-12));
}

TEST_CASE("variety loss validates its inputs") {
  const std::vector<Tensor> truth = {Tensor::row_vector({0.0, 0.0})};
  CHECK_THROWS_AS(variety_loss({}, truth), std::invalid_argument);
  Rollout r;
  r.positions.push_back(Tensor::row_vector({0.0, 0.0}));
  r.positions.push_back(Tensor::row_vector({0.0, 0.0}));
  r.displacements = r.positions;
  CHECK_THROWS_AS(variety_loss({r}, truth), std::invalid_argument);
}

TEST_CASE("variety loss gradient flows only through the winning rollout") {
  const Tensor p_win = Tensor::row_vector({0.1, 0.0}, /*requires_grad=*/true);
  const Tensor p_lose = Tensor::row_vector({3.0, 0.0}, /*requires_grad=*/true);
  const std::vector<Tensor> truth = {Tensor::row_vector({0.0, 0.0})};

  Tape tape;
  Rollout win, lose;
  win.positions.push_back(ops::scale(p_win, 1.0));
  lose.positions.push_back(ops::scale(p_lose, 1.0));
  win.displacements = win.positions;
  lose.displacements = lose.positions;
  const Tensor loss = variety_loss({lose, win}, truth);
  tape.backward(loss);
  CHECK(p_win.grad_or_zero()[0] != 0.0);
  CHECK(p_lose.grad_or_zero()[0] == 0.0);
  CHECK(p_lose.grad_or_zero()[1] == 0.0);
}

TEST_CASE("discriminator accuracy counts both sides of the threshold") {
  const Tensor real = Tensor::from_values(4, 1, {0.9, 0.6, 0.4, 0.51});
  const Tensor fake = Tensor::from_values(2, 1, {0.3, 0.7});
  // Correct: 3 of 4 real above 0.5, 1 of 2 fake at or below -> 4/6.
  CHECK(disc_accuracy(real, fake) == doctest::Approx(4.0 / 6.0).epsilon(1e-12));

  const Tensor half = Tensor::from_values(2, 1, {0.5, 0.5});
  // At exactly 0.5: real counts wrong, fake counts right -> 0.5 overall.
  CHECK(disc_accuracy(half, half) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("generator gradients reach parameters, context, and noise") {
  const RunConfig cfg = tiny_config();
  Rng rng(31);
  GeneratorParams params = GeneratorParams::init(cfg, rng);
  for (int64_t i = 0; i < params.lstm.b.numel(); ++i) {
    params.lstm.b.data()[i] = 0.04 * static_cast<double>((i % 5) - 2);
  }
  const Tensor ctx = rand_tensor(rng, 1, cfg.context_dim, true);
  const Tensor z = rand_tensor(rng, 1, cfg.noise_dim, true);
  const Tensor last = Tensor::row_vector({0.25, -0.1});
  const Tensor origin = Tensor::row_vector({1.0, 1.0});
  std::vector<Tensor> truth;
  for (int t = 0; t < cfg.t_pred; ++t) {
    truth.push_back(rand_tensor(rng, 1, 2));
  }

  const std::vector<Tensor> inputs = {
      params.in_embed.w, params.in_embed.b, params.init_h.w, params.init_h.b,
      params.init_c.w,   params.init_c.b,   params.lstm.w,   params.lstm.u,
      params.lstm.b,     params.out.w,      params.out.b,    ctx,
      z};
  const GradCheckResult r = grad_check(
      [&] {
        const Rollout roll = generate(ctx, z, last, origin, cfg.t_pred, params);
        return variety_loss({roll}, truth);
      },
      inputs, 1e-5, 1e-3);
  CHECK(r.pass);
  INFO("max_rel_err ", r.max_rel_err, " at ", r.worst);
  CHECK(r.max_rel_err < 1e-3);
}

TEST_CASE("discriminator gradients reach parameters and the trajectory") {
  const RunConfig cfg = tiny_config();
  Rng rng(37);
  DiscriminatorParams params = DiscriminatorParams::init(cfg, rng);
  for (int64_t i = 0; i < params.lstm.b.numel(); ++i) {
    params.lstm.b.data()[i] = 0.03 * static_cast<double>((i % 7) - 3);
  }
  const Tensor ctx = rand_tensor(rng, 1, cfg.context_dim, true);
  std::vector<Tensor> traj;
  for (int t = 0; t < 4; ++t) {
    traj.push_back(rand_tensor(rng, 1, 2, true));
  }
  const Tensor one = Tensor::from_values(1, 1, {1.0});

  std::vector<Tensor> inputs = {params.in_embed.w, params.in_embed.b,
                                params.init_h.w,   params.init_h.b,
                                params.init_c.w,   params.init_c.b,
                                params.lstm.w,     params.lstm.u,
                                params.lstm.b,     params.score.w,
                                params.score.b,    ctx};
  for (const Tensor& t : traj) inputs.push_back(t);
  const GradCheckResult r = grad_check(
      [&] { return ops::bce_loss(discriminate(traj, ctx, params, true), one); },
      inputs, 1e-5, 1e-3);
  CHECK(r.pass);
  INFO("max_rel_err ", r.max_rel_err, " at ", r.worst);
  CHECK(r.max_rel_err < 1e-3);
}
