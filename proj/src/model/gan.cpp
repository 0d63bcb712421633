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

#include "socgan/model/gan.hpp"

#include <limits>
#include <stdexcept>

#include "socgan/nn/ops.hpp"

namespace socgan {

GeneratorParams GeneratorParams::zeros(const RunConfig& cfg) {
  GeneratorParams p;
  p.in_embed = EmbedParams::zeros(2, cfg.embed_dim);
  p.init_h = EmbedParams::zeros(cfg.context_dim + cfg.noise_dim, cfg.hidden_dim);
  p.init_c = EmbedParams::zeros(cfg.context_dim + cfg.noise_dim, cfg.hidden_dim);
  p.lstm = LstmParams::zeros(cfg.embed_dim, cfg.hidden_dim);
  p.out = EmbedParams::zeros(cfg.hidden_dim, 2);
  return p;
}

GeneratorParams GeneratorParams::init(const RunConfig& cfg, Rng& rng) {
  GeneratorParams p;
  p.in_embed = EmbedParams::init(2, cfg.embed_dim, rng);
  p.init_h = EmbedParams::init(cfg.context_dim + cfg.noise_dim, cfg.hidden_dim, rng);
  p.init_c = EmbedParams::init(cfg.context_dim + cfg.noise_dim, cfg.hidden_dim, rng);
  p.lstm = LstmParams::init(cfg.embed_dim, cfg.hidden_dim, rng);
  p.out = EmbedParams::init(cfg.hidden_dim, 2, rng);
  return p;
}

DiscriminatorParams DiscriminatorParams::zeros(const RunConfig& cfg) {
  DiscriminatorParams p;
  p.in_embed = EmbedParams::zeros(2, cfg.embed_dim);
  p.init_h = EmbedParams::zeros(cfg.context_dim, cfg.hidden_dim);
  p.init_c = EmbedParams::zeros(cfg.context_dim, cfg.hidden_dim);
  p.lstm = LstmParams::zeros(cfg.embed_dim, cfg.hidden_dim);
  p.score = EmbedParams::zeros(cfg.hidden_dim, 1);
  return p;
}

DiscriminatorParams DiscriminatorParams::init(const RunConfig& cfg, Rng& rng) {
  DiscriminatorParams p;
  p.in_embed = EmbedParams::init(2, cfg.embed_dim, rng);
  p.init_h = EmbedParams::init(cfg.context_dim, cfg.hidden_dim, rng);
  p.init_c = EmbedParams::init(cfg.context_dim, cfg.hidden_dim, rng);
  p.lstm = LstmParams::init(cfg.embed_dim, cfg.hidden_dim, rng);
  p.score = EmbedParams::init(cfg.hidden_dim, 1, rng);
  return p;
}

Rollout generate(const Tensor& context, const Tensor& z,
                 const Tensor& last_step, const Tensor& origin, int t_pred,
                 const GeneratorParams& params) {
  if (t_pred < 1) throw std::invalid_argument("generate: t_pred must be >= 1");
  const Tensor seed = ops::concat_cols({context, z});
  LstmState state{ops::linear(seed, params.init_h.w, params.init_h.b),
                  ops::linear(seed, params.init_c.w, params.init_c.b)};

  Rollout out;
  Tensor prev_disp = last_step;
  Tensor pos = origin;
  for (int t = 0; t < t_pred; ++t) {
    state = lstm_cell(embed(prev_disp, params.in_embed), state, params.lstm);
    const Tensor disp = ops::linear(state.h, params.out.w, params.out.b);
    pos = ops::add(pos, disp);
    out.displacements.push_back(disp);
    out.positions.push_back(pos);
    prev_disp = disp;
  }
  return out;
}

std::vector<Vec2> generate_positions(const Tensor& context, const Tensor& z,
                                     Vec2 last_step, Vec2 origin, int t_pred,
                                     const GeneratorParams& params) {
  const Tensor last = Tensor::row_vector({last_step.x, last_step.y});
  const Tensor org = Tensor::row_vector({origin.x, origin.y});
  const Rollout roll = generate(context, z, last, org, t_pred, params);
  std::vector<Vec2> positions;
  positions.reserve(roll.positions.size());
  for (const Tensor& p : roll.positions) {
    positions.push_back({p.at(0, 0), p.at(0, 1)});
  }
  return positions;
}

Tensor discriminate(const std::vector<Tensor>& positions,
                    const Tensor& context, const DiscriminatorParams& params,
                    bool use_context) {
  if (positions.size() < 2) {
    throw std::invalid_argument("discriminate: need at least 2 positions");
  }
  const int64_t batch = positions.front().rows();
  LstmState state =
      use_context
          ? LstmState{ops::linear(context, params.init_h.w, params.init_h.b),
                      ops::linear(context, params.init_c.w, params.init_c.b)}
          : lstm_zero_state(batch, params.lstm.hidden_dim());
  for (size_t i = 0; i + 1 < positions.size(); ++i) {
    const Tensor disp = ops::sub(positions[i + 1], positions[i]);
    state = lstm_cell(embed(disp, params.in_embed), state, params.lstm);
  }
  return ops::sigmoid(ops::linear(state.h, params.score.w, params.score.b));
}

Tensor variety_loss(const std::vector<Rollout>& rollouts,
                    const std::vector<Tensor>& truth) {
  if (rollouts.empty()) {
    throw std::invalid_argument("variety_loss: need at least one rollout");
  }
  const int t_pred = static_cast<int>(truth.size());
  const int64_t batch = truth.front().rows();

  // Per-rollout, per-row mean squared Euclidean error: [B, 1].
  std::vector<Tensor> errs;
  for (const Rollout& roll : rollouts) {
    if (static_cast<int>(roll.positions.size()) != t_pred) {
      throw std::invalid_argument("variety_loss: rollout/truth length mismatch");
    }
    Tensor acc;
    for (int t = 0; t < t_pred; ++t) {
      const Tensor diff = ops::sub(roll.positions[t], truth[t]);
      const Tensor sq = ops::sum_axis(ops::mul(diff, diff), 1);
      acc = t == 0 ? sq : ops::add(acc, sq);
    }
    errs.push_back(ops::scale(acc, 1.0 / t_pred));
  }

  // Row-wise min across rollouts via 0/1 selection masks; ties keep the
  // earliest rollout so the chosen branch is deterministic.
  std::vector<int> best(batch, 0);
  for (int64_t r = 0; r < batch; ++r) {
    double best_val = std::numeric_limits<double>::infinity();
    for (size_t k = 0; k < errs.size(); ++k) {
      const double v = errs[k].at(r, 0);
      if (v < best_val) {
        best_val = v;
        best[r] = static_cast<int>(k);
      }
    }
  }
  Tensor total;
  for (size_t k = 0; k < errs.size(); ++k) {
    std::vector<double> mask(batch, 0.0);
    bool any = false;
    for (int64_t r = 0; r < batch; ++r) {
      if (best[r] == static_cast<int>(k)) {
        mask[r] = 1.0;
        any = true;
      }
    }
    if (!any) continue;
    const Tensor picked =
        ops::mul(errs[k], Tensor::from_values(batch, 1, std::move(mask)));
    total = total.defined() ? ops::add(total, picked) : picked;
  }
  return ops::scale(ops::sum_all(total), 1.0 / static_cast<double>(batch));
}

double disc_accuracy(const Tensor& real_scores, const Tensor& fake_scores) {
  int correct = 0;
  int n = 0;
  for (int64_t r = 0; r < real_scores.rows(); ++r, ++n) {
    if (real_scores.at(r, 0) > 0.5) ++correct;
  }
  for (int64_t r = 0; r < fake_scores.rows(); ++r, ++n) {
    if (fake_scores.at(r, 0) <= 0.5) ++correct;
  }
  return n == 0 ? 0.0 : static_cast<double>(correct) / n;
}

}  // namespace socgan
