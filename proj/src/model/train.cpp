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

#include "socgan/model/train.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "socgan/core/error.hpp"
#include "socgan/model/metrics.hpp"
#include "socgan/nn/ops.hpp"
#include "socgan/nn/tape.hpp"

namespace socgan {
namespace {

Tensor batch_noise(Rng& rng, int64_t rows, int cols) {
  std::vector<double> z(rows * cols);
  for (double& v : z) v = rng.normal();
  return Tensor::from_values(rows, cols, std::move(z));
}

// [B, 2] constant tensor from one Vec2 per sample.
Tensor rows_from(const std::vector<const Sample*>& batch,
                 const std::function<Vec2(const Sample&)>& pick) {
  std::vector<double> v(batch.size() * 2);
  for (size_t i = 0; i < batch.size(); ++i) {
    const Vec2 p = pick(*batch[i]);
    v[i * 2] = p.x;
    v[i * 2 + 1] = p.y;
  }
  return Tensor::from_values(static_cast<int64_t>(batch.size()), 2,
                             std::move(v));
}

std::vector<Tensor> step_tensors(const std::vector<const Sample*>& batch,
                                 bool future, int steps) {
  std::vector<Tensor> out;
  out.reserve(steps);
  for (int t = 0; t < steps; ++t) {
    out.push_back(rows_from(batch, [future, t](const Sample& s) {
      return future ? s.future[t] : s.observed[t];
    }));
  }
  return out;
}

void check_batch(const std::vector<const Sample*>& batch,
                 const RunConfig& cfg) {
  if (batch.empty()) throw std::invalid_argument("train_step: empty batch");
  for (const Sample* s : batch) {
    if (static_cast<int>(s->observed.size()) != cfg.t_obs ||
        static_cast<int>(s->future.size()) != cfg.t_pred) {
      throw std::invalid_argument(
          "train_step: sample window " + std::to_string(s->observed.size()) +
          "+" + std::to_string(s->future.size()) + " does not match config " +
          std::to_string(cfg.t_obs) + "+" + std::to_string(cfg.t_pred));
    }
  }
}

Tensor batch_contexts(const std::vector<const Sample*>& batch,
                      const EncoderParams& encoder, const RunConfig& cfg) {
  std::vector<Tensor> rows;
  rows.reserve(batch.size());
  for (const Sample* s : batch) {
    rows.push_back(build_context(*s, encoder, cfg));
  }
  return ops::stack_rows(rows);
}

void shuffle_indices(std::vector<size_t>& order, Rng& rng) {
  for (size_t i = order.size(); i > 1; --i) {
    const size_t j = rng.next_u64() % i;
    std::swap(order[i - 1], order[j]);
  }
}

}  // namespace

StepStats train_step(const std::vector<const Sample*>& batch,
                     ModelParams& params, Adam& g_opt, Adam& d_opt,
                     const RunConfig& cfg, Rng& noise_rng) {
  check_batch(batch, cfg);
  const int64_t b = static_cast<int64_t>(batch.size());
  const bool adversarial = cfg.lambda_adv != 0.0;
  const bool use_ctx = cfg.disc_use_context != 0;

  const Tensor last_step =
      rows_from(batch, [](const Sample& s) { return s.last_step(); });
  const Tensor origin =
      rows_from(batch, [](const Sample& s) { return s.origin(); });
  const std::vector<Tensor> observed =
      step_tensors(batch, /*future=*/false, cfg.t_obs);
  const std::vector<Tensor> truth =
      step_tensors(batch, /*future=*/true, cfg.t_pred);
  const Tensor ones = Tensor::from_values(b, 1, std::vector<double>(b, 1.0));
  const Tensor zeros_label = Tensor::zeros(b, 1);

  StepStats stats;

  if (adversarial) {
    // Discriminator update(s). The fake is produced outside any tape and the
    // context is detached, so no gradient can reach the generator side.
    const Tensor ctx_detached =
        batch_contexts(batch, params.encoder, cfg).detach();
    for (int s = 0; s < cfg.d_steps_per_g_step; ++s) {
      const Tensor z = batch_noise(noise_rng, b, cfg.noise_dim);
      const Rollout fake = generate(ctx_detached, z, last_step, origin,
                                    cfg.t_pred, params.generator);
      std::vector<Tensor> real_traj = observed;
      std::vector<Tensor> fake_traj = observed;
      for (const Tensor& p : truth) real_traj.push_back(p);
      for (const Tensor& p : fake.positions) fake_traj.push_back(p.detach());

      Tape tape;
      const Tensor score_real = discriminate(real_traj, ctx_detached,
                                             params.discriminator, use_ctx);
      const Tensor score_fake = discriminate(fake_traj, ctx_detached,
                                             params.discriminator, use_ctx);
      const Tensor d_loss = ops::add(ops::bce_loss(score_real, ones),
                                     ops::bce_loss(score_fake, zeros_label));
      tape.backward(d_loss);
      d_opt.step();
      d_opt.zero_grad();
      g_opt.zero_grad();
      stats.d_loss = d_loss.value();
      stats.d_acc = disc_accuracy(score_real, score_fake);
    }
  }

  {
    // Generator update; context rebuilt on this tape so encoder gradients
    // flow. The adversarial term uses the first rollout, not detached.
    Tape tape;
    const Tensor ctx = batch_contexts(batch, params.encoder, cfg);
    std::vector<Rollout> rollouts;
    rollouts.reserve(cfg.k_variety);
    for (int k = 0; k < cfg.k_variety; ++k) {
      const Tensor z = batch_noise(noise_rng, b, cfg.noise_dim);
      rollouts.push_back(
          generate(ctx, z, last_step, origin, cfg.t_pred, params.generator));
    }
    Tensor g_loss = variety_loss(rollouts, truth);
    if (adversarial) {
      std::vector<Tensor> fake_traj = observed;
      for (const Tensor& p : rollouts.front().positions) {
        fake_traj.push_back(p);
      }
      const Tensor adv =
          discriminate(fake_traj, ctx, params.discriminator, use_ctx);
      g_loss = ops::add(g_loss,
                        ops::scale(ops::bce_loss(adv, ones), cfg.lambda_adv));
    }
    tape.backward(g_loss);
    g_opt.step();
    g_opt.zero_grad();
    d_opt.zero_grad();
    stats.g_loss = g_loss.value();
  }
  return stats;
}

TrainResult train(const std::vector<Sample>& train_set,
                  const std::vector<Sample>& val_set, const RunConfig& cfg) {
  if (train_set.empty()) {
    throw std::invalid_argument("train: empty training set");
  }
  Rng init_rng = make_rng(cfg.seed, RngStream::kWeightInit);
  ModelParams params = ModelParams::init(cfg, init_rng);

  TrainResult result{params.clone(), params, {}, -1,
                     std::numeric_limits<double>::infinity()};
  if (cfg.epochs <= 0) {
    result.best_val_ade = 0.0;
    return result;
  }

  Adam g_opt(params.g_group(), AdamConfig{cfg.lr_g, 0.9, 0.999, 1e-8});
  Adam d_opt(params.d_group(), AdamConfig{cfg.lr_d, 0.9, 0.999, 1e-8});
  Rng shuffle_rng = make_rng(cfg.seed, RngStream::kShuffle);
  Rng noise_rng = make_rng(cfg.seed, RngStream::kTrainNoise);
  const std::vector<Sample>& val = val_set.empty() ? train_set : val_set;

  std::vector<size_t> order(train_set.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;

  for (int epoch = 1; epoch <= cfg.epochs; ++epoch) {
    shuffle_indices(order, shuffle_rng);
    double g_sum = 0.0, d_sum = 0.0, acc_sum = 0.0;
    size_t seen = 0;
    int step = 0;
    for (size_t start = 0; start < order.size();
         start += static_cast<size_t>(cfg.batch)) {
      const size_t end =
          std::min(order.size(), start + static_cast<size_t>(cfg.batch));
      std::vector<const Sample*> batch;
      batch.reserve(end - start);
      for (size_t i = start; i < end; ++i) {
        batch.push_back(&train_set[order[i]]);
      }
      const StepStats s =
          train_step(batch, params, g_opt, d_opt, cfg, noise_rng);
      ++step;
      if (!std::isfinite(s.g_loss) || !std::isfinite(s.d_loss)) {
        throw NumericError("non-finite loss at epoch " +
                           std::to_string(epoch) + " step " +
                           std::to_string(step));
      }
      const double weight = static_cast<double>(batch.size());
      g_sum += s.g_loss * weight;
      d_sum += s.d_loss * weight;
      acc_sum += s.d_acc * weight;
      seen += batch.size();
    }
    const double val_ade = zero_noise_ade(val, params, cfg);
    result.log.push_back({epoch, g_sum / seen, d_sum / seen, acc_sum / seen,
                          val_ade});
    if (val_ade < result.best_val_ade) {
      result.best_val_ade = val_ade;
      result.best_epoch = epoch;
      result.best = params.clone();
    }
  }
  result.final_params = params;
  return result;
}

std::string log_to_csv(const std::vector<TrainLogRow>& log) {
  std::ostringstream out;
  out << "epoch,g_loss,d_loss,d_acc,val_ade\n";
  char line[192];
  for (const TrainLogRow& row : log) {
    std::snprintf(line, sizeof(line), "%d,%.9g,%.9g,%.9g,%.9g\n", row.epoch,
                  row.g_loss, row.d_loss, row.d_acc, row.val_ade);
    out << line;
  }
  return out.str();
}

void split_dataset(const std::vector<Sample>& all, uint64_t seed,
                   std::vector<Sample>& train_out,
                   std::vector<Sample>& val_out) {
  train_out.clear();
  val_out.clear();
  std::vector<int> ids;
  for (const Sample& s : all) {
    if (std::find(ids.begin(), ids.end(), s.scenario_id) == ids.end()) {
      ids.push_back(s.scenario_id);
    }
  }
  Rng rng = make_rng(seed, RngStream::kDataset);
  std::vector<size_t> order(ids.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  shuffle_indices(order, rng);
  const size_t n_val = ids.size() >= 2 ? (ids.size() + 9) / 10 : 0;
  std::vector<int> val_ids;
  for (size_t i = 0; i < n_val; ++i) val_ids.push_back(ids[order[i]]);
  for (const Sample& s : all) {
    const bool in_val = std::find(val_ids.begin(), val_ids.end(),
                                  s.scenario_id) != val_ids.end();
    (in_val ? val_out : train_out).push_back(s);
  }
}

// ---------------------------------------------------------------------------
// Gradient-check battery.

namespace {

RunConfig tiny_cfg() {
  RunConfig cfg;
  cfg.t_obs = 3;
  cfg.t_pred = 2;
  cfg.hidden_dim = 4;
  cfg.embed_dim = 3;
  cfg.context_dim = 5;
  cfg.pool_grid_n = 2;
  cfg.pool_grid_len = 4.0;
  cfg.crop_g = 2;
  cfg.crop_len = 2.0;
  cfg.event_slots = 1;
  cfg.noise_dim = 2;
  cfg.k_variety = 1;
  cfg.lambda_adv = 1.0;
  cfg.lstm_layers = 1;
  cfg.seed = 123;
  return cfg;
}

Sample tiny_sample() {
  Sample s;
  s.scenario_id = 0;
  s.agent_id = 1;
  s.start_frame = 0;
  s.dt = 0.4;
  s.observed = {{0.0, 0.0}, {0.3, 0.1}, {0.6, 0.2}};
  s.future = {{0.9, 0.3}, {1.2, 0.4}};
  s.crop = {0.0, 1.0, 0.0, 1.0};
  s.acoustic = {{0.2, 0.1, 0.9, 1, 0, 0},
                {0.3, 0.2, 0.8, 1, 0, 0},
                {0.4, 0.3, 0.7, 0, 1, 0}};
  NeighborTrack near;
  near.agent_id = 2;
  near.observed = {{1.0, 0.5}, {1.2, 0.5}, {1.4, 0.6}};
  near.crop = {1.0, 0.0, 0.0, 1.0};
  near.acoustic = {0.1, 0.4, 0.5, 0, 0, 1};
  NeighborTrack far;
  far.agent_id = 3;
  far.observed = {{9.0, 9.0}, {9.1, 9.0}, {9.2, 9.1}};
  far.crop = {0.0, 0.0, 1.0, 0.0};
  far.acoustic = {0.0, 0.0, 0.0, 0, 0, 0};
  s.neighbors = {near, far};
  return s;
}

std::vector<Tensor> prefixed(const ModelParams& params, const char* prefix) {
  std::vector<Tensor> out;
  for (const auto& [name, tensor] : params.named()) {
    if (name.rfind(prefix, 0) == 0) out.push_back(tensor);
  }
  return out;
}

}  // namespace

std::vector<std::pair<std::string, GradCheckResult>> gradcheck_battery() {
  std::vector<std::pair<std::string, GradCheckResult>> results;
  Rng rng(20260819);
  auto rand_tensor = [&rng](int64_t r, int64_t c) {
    std::vector<double> v(r * c);
    for (double& x : v) x = rng.uniform(-1.0, 1.0);
    return Tensor::from_values(r, c, std::move(v), /*requires_grad=*/true);
  };

  // Primitive ops.
  {
    const Tensor a = rand_tensor(2, 3), b = rand_tensor(3, 2);
    results.emplace_back("matmul", grad_check([&] {
      return ops::sum_all(ops::matmul(a, b));
    }, {a, b}));
  }
  {
    const Tensor a = rand_tensor(3, 4), b = rand_tensor(1, 4);
    results.emplace_back("add_broadcast", grad_check([&] {
      return ops::sum_all(ops::mul(ops::add(a, b), ops::add(a, b)));
    }, {a, b}));
  }
  {
    const Tensor a = rand_tensor(2, 4), b = rand_tensor(2, 4);
    results.emplace_back("sub_mul_scale", grad_check([&] {
      return ops::sum_all(ops::scale(ops::mul(ops::sub(a, b), a), 0.7));
    }, {a, b}));
  }
  {
    const Tensor a = rand_tensor(2, 5);
    results.emplace_back("tanh", grad_check([&] {
      return ops::sum_all(ops::tanh(a));
    }, {a}));
    results.emplace_back("sigmoid", grad_check([&] {
      return ops::sum_all(ops::mul(ops::sigmoid(a), ops::sigmoid(a)));
    }, {a}));
  }
  {
    const Tensor a = rand_tensor(2, 3), b = rand_tensor(2, 2);
    results.emplace_back("concat_slice_row", grad_check([&] {
      const Tensor cat = ops::concat_cols({a, b});
      const Tensor sliced = ops::slice_cols(cat, 1, 3);
      return ops::sum_all(ops::mul(ops::row(sliced, 1), ops::row(sliced, 0)));
    }, {a, b}));
  }
  {
    const Tensor a = rand_tensor(2, 3), b = rand_tensor(1, 3);
    results.emplace_back("stack_sum_axis", grad_check([&] {
      const Tensor stacked = ops::stack_rows({a, b});
      return ops::sum_all(ops::mul(ops::sum_axis(stacked, 0),
                                   ops::sum_axis(stacked, 0)));
    }, {a, b}));
  }
  {
    const Tensor pred = rand_tensor(3, 2), target = rand_tensor(3, 2);
    results.emplace_back("mse_loss", grad_check([&] {
      return ops::mse_loss(pred, target.detach());
    }, {pred}));
  }
  {
    const Tensor logits = rand_tensor(4, 1);
    const Tensor labels =
        Tensor::from_values(4, 1, {1.0, 0.0, 1.0, 0.0});
    results.emplace_back("bce_loss", grad_check([&] {
      return ops::bce_loss(ops::sigmoid(logits), labels);
    }, {logits}));
  }
  {
    const Tensor x = rand_tensor(2, 3), w = rand_tensor(3, 4),
                 b = rand_tensor(1, 4);
    results.emplace_back("linear", grad_check([&] {
      return ops::sum_all(ops::tanh(ops::linear(x, w, b)));
    }, {x, w, b}));
  }

  // LSTM cell.
  {
    Rng init(7);
    LstmParams p = LstmParams::init(2, 3, init);
    // Bias included: give it nonzero values so its gradient is exercised.
    for (int64_t i = 0; i < p.b.numel(); ++i) {
      p.b.data()[i] = 0.1 * static_cast<double>(i % 5) - 0.2;
    }
    const Tensor x = rand_tensor(2, 2);
    const Tensor c0 = rand_tensor(2, 3);
    const Tensor h0 = rand_tensor(2, 3);
    const Tensor target = rand_tensor(2, 3);
    results.emplace_back("lstm_cell", grad_check([&] {
      const LstmState next = lstm_cell(x, {h0, c0}, p);
      return ops::mse_loss(next.h, target.detach());
    }, {p.w, p.u, p.b, x, h0, c0}));
  }

  const RunConfig cfg = tiny_cfg();
  const Sample sample = tiny_sample();

  // Pooling + fusion end to end (features -> context).
  {
    Rng init(make_rng(cfg.seed, RngStream::kWeightInit));
    const ModelParams params = ModelParams::init(cfg, init);
    const Tensor probe = rand_tensor(1, cfg.context_dim);
    results.emplace_back("pooling_fusion", grad_check([&] {
      const Tensor ctx = build_context(sample, params.encoder, cfg);
      return ops::sum_all(ops::mul(ctx, probe.detach()));
    }, prefixed(params, "enc.")));
  }

  // Full generator loss: variety + adversarial, gradients through encoder,
  // generator, and the discriminator's forward pass.
  {
    Rng init(make_rng(cfg.seed + 1, RngStream::kWeightInit));
    const ModelParams params = ModelParams::init(cfg, init);
    Rng noise(11);
    const Tensor z = batch_noise(noise, 1, cfg.noise_dim);
    std::vector<Tensor> truth;
    for (const Vec2& p : sample.future) {
      truth.push_back(Tensor::row_vector({p.x, p.y}));
    }
    std::vector<Tensor> obs_rows;
    for (const Vec2& p : sample.observed) {
      obs_rows.push_back(Tensor::row_vector({p.x, p.y}));
    }
    const Tensor one = Tensor::from_values(1, 1, {1.0});
    results.emplace_back(
        "generator_loss",
        grad_check(
            [&] {
              const Tensor ctx = build_context(sample, params.encoder, cfg);
              const Tensor last = Tensor::row_vector(
                  {sample.last_step().x, sample.last_step().y});
              const Tensor org =
                  Tensor::row_vector({sample.origin().x, sample.origin().y});
              std::vector<Rollout> rolls;
              rolls.push_back(generate(ctx, z, last, org, cfg.t_pred,
                                       params.generator));
              Tensor loss = variety_loss(rolls, truth);
              std::vector<Tensor> fake_traj = obs_rows;
              for (const Tensor& p : rolls.front().positions) {
                fake_traj.push_back(p);
              }
              const Tensor adv = discriminate(fake_traj, ctx,
                                              params.discriminator, true);
              return ops::add(loss, ops::bce_loss(adv, one));
            },
            prefixed(params, "enc."), 1e-5, 1e-3));
    // Generator tensors checked separately to keep per-run cost visible.
    results.emplace_back(
        "generator_loss_gen_params",
        grad_check(
            [&] {
              const Tensor ctx = build_context(sample, params.encoder, cfg);
              const Tensor last = Tensor::row_vector(
                  {sample.last_step().x, sample.last_step().y});
              const Tensor org =
                  Tensor::row_vector({sample.origin().x, sample.origin().y});
              std::vector<Rollout> rolls;
              rolls.push_back(generate(ctx, z, last, org, cfg.t_pred,
                                       params.generator));
              Tensor loss = variety_loss(rolls, truth);
              std::vector<Tensor> fake_traj = obs_rows;
              for (const Tensor& p : rolls.front().positions) {
                fake_traj.push_back(p);
              }
              const Tensor adv = discriminate(fake_traj, ctx,
                                              params.discriminator, true);
              return ops::add(loss, ops::bce_loss(adv, one));
            },
            prefixed(params, "gen."), 1e-5, 1e-3));
  }

  // Discriminator loss on a real and a perturbed trajectory.
  {
    Rng init(make_rng(cfg.seed + 2, RngStream::kWeightInit));
    const ModelParams params = ModelParams::init(cfg, init);
    const Tensor ctx = rand_tensor(1, cfg.context_dim);
    std::vector<Tensor> real_traj;
    for (const Vec2& p : sample.observed) {
      real_traj.push_back(Tensor::row_vector({p.x, p.y}));
    }
    for (const Vec2& p : sample.future) {
      real_traj.push_back(Tensor::row_vector({p.x, p.y}));
    }
    std::vector<Tensor> fake_traj = real_traj;
    fake_traj.back() = Tensor::row_vector({2.0, -1.0});
    const Tensor one = Tensor::from_values(1, 1, {1.0});
    const Tensor zero = Tensor::zeros(1, 1);
    results.emplace_back(
        "discriminator_loss",
        grad_check(
            [&] {
              const Tensor s_real =
                  discriminate(real_traj, ctx, params.discriminator, true);
              const Tensor s_fake =
                  discriminate(fake_traj, ctx, params.discriminator, true);
              return ops::add(ops::bce_loss(s_real, one),
                              ops::bce_loss(s_fake, zero));
            },
            prefixed(params, "disc."), 1e-5, 1e-3));
  }

  return results;
}

}  // namespace socgan
