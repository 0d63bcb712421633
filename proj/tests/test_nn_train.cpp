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
#include <limits>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "socgan/core/error.hpp"
#include "socgan/features/features.hpp"
#include "socgan/model/metrics.hpp"
#include "socgan/model/train.hpp"
#include "socgan/nn/ops.hpp"

using namespace socgan;

namespace {

RunConfig tiny_config() {
  RunConfig cfg;
  cfg.t_obs = 3;
  cfg.t_pred = 2;
  cfg.hidden_dim = 6;
  cfg.embed_dim = 4;
  cfg.context_dim = 6;
  cfg.pool_grid_n = 2;
  cfg.pool_grid_len = 4.0;
  cfg.crop_g = 2;
  cfg.crop_len = 4.0;
  cfg.event_slots = 1;
  cfg.noise_dim = 2;
  cfg.k_variety = 1;
  cfg.lambda_adv = 0.0;
  cfg.batch = 8;
  cfg.epochs = 4;
  cfg.seed = 123;
  return cfg;
}

/// Straight-line sample: position p0 + t * v * dt, window t_obs + t_pred.
Sample cv_sample(const RunConfig& cfg, int scenario_id, int agent_id, Vec2 p0,
                 Vec2 v) {
  Sample s;
  s.scenario_id = scenario_id;
  s.agent_id = agent_id;
  s.dt = cfg.dt;
  for (int t = 0; t < cfg.t_obs + cfg.t_pred; ++t) {
    const Vec2 p{p0.x + v.x * cfg.dt * t, p0.y + v.y * cfg.dt * t};
    (t < cfg.t_obs ? s.observed : s.future).push_back(p);
  }
  s.crop.assign(static_cast<size_t>(cfg.crop_g) * cfg.crop_g, 0.0);
  s.acoustic.assign(
      static_cast<size_t>(cfg.t_obs),
      std::vector<double>(
          static_cast<size_t>(cfg.event_slots) * kAcousticSlotDim, 0.0));
  return s;
}

std::vector<Sample> cv_dataset(const RunConfig& cfg, int n, uint64_t seed) {
  Rng rng(seed);
  std::vector<Sample> out;
  for (int i = 0; i < n; ++i) {
    const double angle = rng.uniform(0.0, 6.28318);
    const double speed = rng.uniform(0.4, 1.4);
    out.push_back(cv_sample(cfg, i, 1,
                            {rng.uniform(-4.0, 4.0), rng.uniform(-4.0, 4.0)},
                            {speed * std::cos(angle), speed * std::sin(angle)}));
  }
  return out;
}

bool same_bits(const Tensor& a, const Tensor& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() &&
         std::memcmp(a.data(), b.data(),
                     sizeof(double) * static_cast<size_t>(a.numel())) == 0;
}

bool same_params(const ModelParams& a, const ModelParams& b) {
  const auto na = a.named();
  const auto nb = b.named();
  if (na.size() != nb.size()) return false;
  for (size_t i = 0; i < na.size(); ++i) {
    if (na[i].first != nb[i].first) return false;
    if (!same_bits(na[i].second, nb[i].second)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("parameter groups partition the named tensors") {
  const RunConfig cfg = tiny_config();
  Rng rng(1);
  const ModelParams params = ModelParams::init(cfg, rng);
  const auto named = params.named();
  CHECK(params.g_group().size() + params.d_group().size() == named.size());

  std::set<std::string> names;
  for (const auto& [name, t] : named) names.insert(name);
  CHECK(names.size() == named.size());  // no duplicates

  // named() aliases live storage: writing through it moves the model.
  auto handles = params.named();
  handles[0].second.data()[0] = 42.0;
  CHECK(params.encoder.dyn_embed.w.data()[0] == 42.0);

  // clone() detaches storage.
  const ModelParams copy = params.clone();
  CHECK(same_params(copy, params));
  handles[0].second.data()[0] = -7.0;
  CHECK(copy.encoder.dyn_embed.w.data()[0] == 42.0);
}

TEST_CASE("train_step is bitwise reproducible") {
  const RunConfig cfg = [] {
    RunConfig c = tiny_config();
    c.lambda_adv = 1.0;
    c.k_variety = 2;
    return c;
  }();
  const std::vector<Sample> data = cv_dataset(cfg, 4, 50);
  std::vector<const Sample*> batch;
  for (const Sample& s : data) batch.push_back(&s);

  auto run_once = [&](ModelParams& params) {
    Adam g_opt(params.g_group(), AdamConfig{cfg.lr_g, 0.9, 0.999, 1e-8});
    Adam d_opt(params.d_group(), AdamConfig{cfg.lr_d, 0.9, 0.999, 1e-8});
    Rng noise(99);
    return train_step(batch, params, g_opt, d_opt, cfg, noise);
  };

  Rng init1 = make_rng(cfg.seed, RngStream::kWeightInit);
  ModelParams p1 = ModelParams::init(cfg, init1);
  Rng init2 = make_rng(cfg.seed, RngStream::kWeightInit);
  ModelParams p2 = ModelParams::init(cfg, init2);
  CHECK(same_params(p1, p2));

  const StepStats s1 = run_once(p1);
  const StepStats s2 = run_once(p2);
  CHECK(s1.g_loss == s2.g_loss);
  CHECK(s1.d_loss == s2.d_loss);
  CHECK(s1.d_acc == s2.d_acc);
  CHECK(same_params(p1, p2));
}

TEST_CASE("lambda_adv = 0 freezes the discriminator and skips its update") {
  const RunConfig cfg = tiny_config();  // lambda_adv = 0, k = 1
  const std::vector<Sample> data = cv_dataset(cfg, 6, 51);
  std::vector<const Sample*> batch;
  for (const Sample& s : data) batch.push_back(&s);

  Rng init = make_rng(cfg.seed, RngStream::kWeightInit);
  ModelParams params = ModelParams::init(cfg, init);
  const ModelParams before = params.clone();

  Adam g_opt(params.g_group(), AdamConfig{cfg.lr_g, 0.9, 0.999, 1e-8});
  Adam d_opt(params.d_group(), AdamConfig{cfg.lr_d, 0.9, 0.999, 1e-8});
  Rng noise(99);
  for (int i = 0; i < 3; ++i) {
    const StepStats s = train_step(batch, params, g_opt, d_opt, cfg, noise);
    CHECK(s.d_loss == 0.0);
    CHECK(s.d_acc == 0.5);
    CHECK(s.g_loss > 0.0);
  }
  CHECK(d_opt.t() == 0);
  CHECK(g_opt.t() == 3);
  // Discriminator tensors are bitwise what they were; generator side moved.
  for (size_t i = 0; i < params.d_group().size(); ++i) {
    CHECK(same_bits(params.d_group()[i], before.d_group()[i]));
  }
  CHECK_FALSE(same_params(params, before));
}

TEST_CASE("supervised step loss equals a hand-built mse over positions") {
  const RunConfig cfg = tiny_config();  // lambda_adv = 0, k = 1
  const std::vector<Sample> data = cv_dataset(cfg, 5, 52);
  std::vector<const Sample*> batch;
  for (const Sample& s : data) batch.push_back(&s);

  Rng init = make_rng(cfg.seed, RngStream::kWeightInit);
  ModelParams params = ModelParams::init(cfg, init);
  const ModelParams snapshot = params.clone();

  Adam g_opt(params.g_group(), AdamConfig{cfg.lr_g, 0.9, 0.999, 1e-8});
  Adam d_opt(params.d_group(), AdamConfig{cfg.lr_d, 0.9, 0.999, 1e-8});
  Rng noise(99);
  const StepStats stats = train_step(batch, params, g_opt, d_opt, cfg, noise);

  // Replay the same forward pass on the pre-step parameters with the same
  // noise draw; with one rollout the loss is plain position mse.
  Rng replay(99);
  std::vector<double> zv(batch.size() * cfg.noise_dim);
  for (double& v : zv) v = replay.normal();
  const Tensor z = Tensor::from_values(static_cast<int64_t>(batch.size()),
                                       cfg.noise_dim, std::move(zv));
  std::vector<Tensor> ctx_rows;
  std::vector<double> last, org;
  for (const Sample* s : batch) {
    ctx_rows.push_back(build_context(*s, snapshot.encoder, cfg));
    last.push_back(s->last_step().x);
    last.push_back(s->last_step().y);
    org.push_back(s->origin().x);
    org.push_back(s->origin().y);
  }
  const int64_t b = static_cast<int64_t>(batch.size());
  const Rollout roll = generate(
      ops::stack_rows(ctx_rows), z, Tensor::from_values(b, 2, std::move(last)),
      Tensor::from_values(b, 2, std::move(org)), cfg.t_pred,
      snapshot.generator);
  double acc = 0.0;
  for (int t = 0; t < cfg.t_pred; ++t) {
    for (int64_t i = 0; i < b; ++i) {
      const Vec2 truth = batch[i]->future[t];
      const double dx = roll.positions[t].at(i, 0) - truth.x;
      const double dy = roll.positions[t].at(i, 1) - truth.y;
      acc += dx * dx + dy * dy;
    }
  }
  acc /= static_cast<double>(b) * cfg.t_pred;
  CHECK(stats.g_loss == doctest::Approx(acc).epsilon(1e-12));
}

TEST_CASE("train_step rejects empty and misshapen batches") {
  const RunConfig cfg = tiny_config();
  Rng init(3);
  ModelParams params = ModelParams::init(cfg, init);
  Adam g_opt(params.g_group(), AdamConfig{});
  Adam d_opt(params.d_group(), AdamConfig{});
  Rng noise(1);
  CHECK_THROWS_AS(train_step({}, params, g_opt, d_opt, cfg, noise),
                  std::invalid_argument);

  Sample bad = cv_sample(cfg, 0, 1, {0.0, 0.0}, {1.0, 0.0});
  bad.future.pop_back();
  const std::vector<const Sample*> batch = {&bad};
  CHECK_THROWS_AS(train_step(batch, params, g_opt, d_opt, cfg, noise),
                  std::invalid_argument);
}

TEST_CASE("zero epochs returns the seeded initialization and no log") {
  const RunConfig cfg = [] {
    RunConfig c = tiny_config();
    c.epochs = 0;
    return c;
  }();
  const std::vector<Sample> data = cv_dataset(cfg, 3, 53);
  const TrainResult res = train(data, {}, cfg);
  CHECK(res.log.empty());
  CHECK(res.best_epoch == -1);

  Rng init = make_rng(cfg.seed, RngStream::kWeightInit);
  const ModelParams expect = ModelParams::init(cfg, init);
  CHECK(same_params(res.best, expect));
  CHECK(same_params(res.final_params, expect));
}

TEST_CASE("training on constant-velocity motion cuts the loss sharply") {
  RunConfig cfg = tiny_config();
  cfg.epochs = 120;
  cfg.batch = 10;
  cfg.lr_g = 3e-3;
  const std::vector<Sample> data = cv_dataset(cfg, 40, 54);
  const TrainResult res = train(data, {}, cfg);  // validates on train
  REQUIRE(res.log.size() == 120);
  const double first = res.log.front().val_ade;
  const double last = res.log.back().val_ade;
  CHECK(last < first * 0.5);
  CHECK(res.best_val_ade <= last);
  CHECK(res.best_epoch >= 1);

  // The log's minimum is exactly what best tracked.
  double min_ade = std::numeric_limits<double>::infinity();
  int min_epoch = -1;
  for (const TrainLogRow& row : res.log) {
    if (row.val_ade < min_ade) {
      min_ade = row.val_ade;
      min_epoch = row.epoch;
    }
  }
  CHECK(res.best_val_ade == min_ade);
  CHECK(res.best_epoch == min_epoch);
}

TEST_CASE("the full run is bitwise reproducible") {
  RunConfig cfg = tiny_config();
  cfg.lambda_adv = 1.0;
  cfg.k_variety = 2;
  cfg.epochs = 3;
  const std::vector<Sample> data = cv_dataset(cfg, 12, 55);
  const std::vector<Sample> val = cv_dataset(cfg, 4, 56);
  const TrainResult a = train(data, val, cfg);
  const TrainResult b = train(data, val, cfg);
  CHECK(same_params(a.best, b.best));
  CHECK(same_params(a.final_params, b.final_params));
  REQUIRE(a.log.size() == b.log.size());
  for (size_t i = 0; i < a.log.size(); ++i) {
    CHECK(a.log[i].g_loss == b.log[i].g_loss);
    CHECK(a.log[i].d_loss == b.log[i].d_loss);
    CHECK(a.log[i].val_ade == b.log[i].val_ade);
  }
}

TEST_CASE("non-finite losses abort with the epoch and step") {
  RunConfig cfg = tiny_config();
  cfg.epochs = 2;
  std::vector<Sample> data = cv_dataset(cfg, 4, 57);
  data[0].future[0].x = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_WITH_AS(train(data, {}, cfg),
                       "non-finite loss at epoch 1 step 1", NumericError);
}

TEST_CASE("empty training set is rejected") {
  const RunConfig cfg = tiny_config();
  CHECK_THROWS_AS(train({}, {}, cfg), std::invalid_argument);
}

TEST_CASE("csv log format") {
  std::vector<TrainLogRow> log;
  CHECK(log_to_csv(log) == "epoch,g_loss,d_loss,d_acc,val_ade\n");
  log.push_back({1, 0.5, 1.25, 0.625, 2.0});
  log.push_back({2, 0.25, 1.0, 0.5, 1.5});
  CHECK(log_to_csv(log) ==
        "epoch,g_loss,d_loss,d_acc,val_ade\n"
        "1,0.5,1.25,0.625,2\n"
        "2,0.25,1,0.5,1.5\n");
}

TEST_CASE("split_dataset holds out whole scenarios deterministically") {
  const RunConfig cfg = tiny_config();
  std::vector<Sample> all;
  for (int sc = 0; sc < 20; ++sc) {
    for (int a = 0; a < 3; ++a) {
      all.push_back(cv_sample(cfg, sc, a + 1, {1.0 * sc, 1.0 * a}, {1.0, 0.0}));
    }
  }
  std::vector<Sample> train_set, val_set;
  split_dataset(all, 7, train_set, val_set);
  CHECK(train_set.size() + val_set.size() == all.size());
  CHECK(val_set.size() == 6);  // ceil(20 * 10%) = 2 scenarios x 3 samples

  std::set<int> train_ids, val_ids;
  for (const Sample& s : train_set) train_ids.insert(s.scenario_id);
  for (const Sample& s : val_set) val_ids.insert(s.scenario_id);
  CHECK(val_ids.size() == 2);
  for (int id : val_ids) CHECK(train_ids.count(id) == 0);

  // Same seed, same split; the val choice follows the seed.
  std::vector<Sample> train2, val2;
  split_dataset(all, 7, train2, val2);
  REQUIRE(val2.size() == val_set.size());
  for (size_t i = 0; i < val2.size(); ++i) {
    CHECK(val2[i].scenario_id == val_set[i].scenario_id);
    CHECK(val2[i].agent_id == val_set[i].agent_id);
  }

  // A lone scenario never loses data to validation.
  std::vector<Sample> solo(all.begin(), all.begin() + 3), t3, v3;
  split_dataset(solo, 7, t3, v3);
  CHECK(t3.size() == 3);
  CHECK(v3.empty());

  // Two scenarios: exactly one goes to validation.
  std::vector<Sample> duo(all.begin(), all.begin() + 6), t4, v4;
  split_dataset(duo, 7, t4, v4);
  CHECK(t4.size() == 3);
  CHECK(v4.size() == 3);
}

TEST_CASE("gradient battery passes at its stated tolerances") {
  const auto results = gradcheck_battery();
  REQUIRE(results.size() >= 12);
  for (const auto& [name, r] : results) {
    INFO(name, " max_rel_err ", r.max_rel_err, " at ", r.worst);
    CHECK(r.pass);
  }
}

TEST_CASE("ade and fde hand cases") {
  const std::vector<Vec2> truth = {{0.0, 0.0}, {1.0, 0.0}, {2.0, 0.0}};
  const std::vector<Vec2> exact = truth;
  CHECK(ade(exact, truth) == 0.0);
  CHECK(fde(exact, truth) == 0.0);

  // Offsets of 3-4-5 triangles: each step error 5, so ADE = FDE = 5.
  const std::vector<Vec2> off = {{3.0, 4.0}, {4.0, -4.0}, {-1.0, 4.0}};
  CHECK(ade(off, truth) == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(fde(off, truth) == doctest::Approx(5.0).epsilon(1e-12));

  // Error only at the final step separates the two metrics.
  const std::vector<Vec2> tail = {{0.0, 0.0}, {1.0, 0.0}, {2.0, 6.0}};
  CHECK(ade(tail, truth) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(fde(tail, truth) == doctest::Approx(6.0).epsilon(1e-12));

  CHECK_THROWS_AS(ade({}, {}), std::invalid_argument);
  CHECK_THROWS_AS(ade(exact, {{0.0, 0.0}}), std::invalid_argument);
  CHECK_THROWS_AS(fde({}, truth), std::invalid_argument);
}

TEST_CASE("constant-velocity baseline extrapolates the last displacement") {
  const RunConfig cfg = tiny_config();
  const Sample s = cv_sample(cfg, 0, 1, {1.0, 2.0}, {0.5, -0.25});
  const std::vector<Vec2> pred = constant_velocity_pred(s, cfg.t_pred);
  REQUIRE(pred.size() == static_cast<size_t>(cfg.t_pred));
  // Perfect prediction on truly constant-velocity motion.
  CHECK(ade(pred, s.future) < 1e-12);
  CHECK(fde(pred, s.future) < 1e-12);

  Sample still = cv_sample(cfg, 0, 1, {3.0, 3.0}, {0.0, 0.0});
  const std::vector<Vec2> hold = constant_velocity_pred(still, 3);
  for (const Vec2& p : hold) {
    CHECK(p.x == 3.0);
    CHECK(p.y == 3.0);
  }
}

TEST_CASE("collision rate pairs agents only within their window group") {
  std::vector<PredictedAgent> agents;
  // Group (0, 0): two agents, 2 steps; they overlap at step 0 only
  // (distance 0.5 < 0.6) -> 1 of 2 pair-timesteps.
  agents.push_back({0, 0, 1, 0.3, {{0.0, 0.0}, {0.0, 0.0}}});
  agents.push_back({0, 0, 2, 0.3, {{0.5, 0.0}, {5.0, 0.0}}});
  // Group (0, 4): same scenario, later window; one agent alone -> no pairs.
  agents.push_back({0, 4, 3, 0.3, {{0.0, 0.0}, {0.0, 0.0}}});
  // Group (1, 0): would collide with group (0,0) coordinates, but distinct
  // scenario -> never paired across groups.
  agents.push_back({1, 0, 4, 0.3, {{0.0, 0.0}, {0.0, 0.0}}});
  CHECK(collision_rate(agents) == doctest::Approx(0.5).epsilon(1e-12));

  CHECK(collision_rate({}) == 0.0);
  // Touching exactly at r_i + r_j is not a collision (strict <).
  std::vector<PredictedAgent> touching;
  touching.push_back({0, 0, 1, 0.3, {{0.0, 0.0}}});
  touching.push_back({0, 0, 2, 0.3, {{0.6, 0.0}}});
  CHECK(collision_rate(touching) == 0.0);
}

TEST_CASE("evaluate: identity debug, k monotonicity, and cv consistency") {
  RunConfig cfg = tiny_config();
  std::vector<Sample> data = cv_dataset(cfg, 12, 60);
  Rng init = make_rng(cfg.seed, RngStream::kWeightInit);
  const ModelParams params = ModelParams::init(cfg, init);

  const EvalReport id_report =
      evaluate(data, params, cfg, 3, false, /*debug_identity=*/true);
  CHECK(id_report.ade == 0.0);
  CHECK(id_report.fde == 0.0);
  CHECK(id_report.ade_k1 == 0.0);
  CHECK(id_report.samples == 12);

  // Straight-line ground truth: the cv baseline is exact.
  const EvalReport r1 = evaluate(data, params, cfg, 1);
  CHECK(r1.cv_ade < 1e-9);
  CHECK(r1.cv_fde < 1e-9);
  CHECK(r1.k_eval == 1);

  // Best-of-k never gets worse as k grows, and shares the first draw.
  const EvalReport r3 = evaluate(data, params, cfg, 3);
  const EvalReport r5 = evaluate(data, params, cfg, 5);
  CHECK(r3.ade_k1 == r1.ade_k1);
  CHECK(r5.ade_k1 == r1.ade_k1);
  CHECK(r3.ade <= r1.ade + 1e-15);
  CHECK(r5.ade <= r3.ade + 1e-15);
  CHECK(r3.fde <= r1.fde + 1e-15);
  CHECK(r5.fde <= r3.fde + 1e-15);

  // Per-scenario rows cover every sample exactly once.
  int covered = 0;
  for (const ScenarioBreakdown& row : r5.per_scenario) covered += row.samples;
  CHECK(covered == r5.samples);

  // Determinism: the same call twice gives the same numbers.
  const EvalReport again = evaluate(data, params, cfg, 5);
  CHECK(again.ade == r5.ade);
  CHECK(again.fde == r5.fde);
  CHECK(again.collision_rate == r5.collision_rate);
  CHECK(again.d_accuracy == r5.d_accuracy);
}

TEST_CASE("zero-noise validation metric is pure and zero for a perfect model") {
  RunConfig cfg = tiny_config();
  const std::vector<Sample> data = cv_dataset(cfg, 6, 61);
  Rng init(77);
  const ModelParams params = ModelParams::init(cfg, init);
  const double a = zero_noise_ade(data, params, cfg);
  const double b = zero_noise_ade(data, params, cfg);
  CHECK(a == b);
  CHECK(a > 0.0);
  CHECK(std::isfinite(a));
}

TEST_CASE("report formatting carries the headline numbers") {
  EvalReport r;
  r.ade = 1.25;
  r.fde = 2.5;
  r.ade_k1 = 1.5;
  r.fde_k1 = 3.0;
  r.collision_rate = 0.031;
  r.cv_ade = 0.9;
  r.cv_fde = 2.0;
  r.d_accuracy = 0.55;
  r.k_eval = 5;
  r.samples = 42;
  r.per_scenario.push_back({3, 1.0, 2.0, 7});
  const std::string text = format_report(r);
  CHECK(text.find("1.25") != std::string::npos);
  CHECK(text.find("best of 5") != std::string::npos);
  CHECK(text.find("42") != std::string::npos);
  CHECK(text.find("scenario 3") != std::string::npos);
}
