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

#ifndef SOCGAN_MODEL_GAN_HPP
#define SOCGAN_MODEL_GAN_HPP

#include <cstdint>
#include <vector>

#include "socgan/core/types.hpp"
#include "socgan/io/config.hpp"
#include "socgan/model/encoder.hpp"
#include "socgan/model/lstm.hpp"
#include "socgan/nn/tensor.hpp"

namespace socgan {

/// Decoder that rolls predicted displacements from a social context and a
/// noise draw. The context+noise vector enters once, projected into the
/// initial (h, c); each step emits a displacement from h and feeds its
/// embedding back as the next input.
struct GeneratorParams {
  EmbedParams in_embed;  // 2 -> embed_dim, tanh embedding of a displacement
  EmbedParams init_h;    // context_dim + noise_dim -> hidden_dim, linear
  EmbedParams init_c;    // context_dim + noise_dim -> hidden_dim, linear
  LstmParams lstm;       // embed_dim -> hidden_dim
  EmbedParams out;       // hidden_dim -> 2, linear

  static GeneratorParams zeros(const RunConfig& cfg);
  static GeneratorParams init(const RunConfig& cfg, Rng& rng);
};

/// Classifier over a full trajectory's per-step displacements, optionally
/// conditioned on the social context through its initial state.
struct DiscriminatorParams {
  EmbedParams in_embed;  // 2 -> embed_dim, tanh embedding
  EmbedParams init_h;    // context_dim -> hidden_dim, linear
  EmbedParams init_c;    // context_dim -> hidden_dim, linear
  LstmParams lstm;       // embed_dim -> hidden_dim
  EmbedParams score;     // hidden_dim -> 1, linear then sigmoid

  static DiscriminatorParams zeros(const RunConfig& cfg);
  static DiscriminatorParams init(const RunConfig& cfg, Rng& rng);
};

/// One generated batch of futures: t_pred tensors of shape [B, 2] each, as
/// displacements and as positions accumulated from the per-row origins.
struct Rollout {
  std::vector<Tensor> displacements;
  std::vector<Tensor> positions;
};

/// context [B, C], z [B, Z], last_step/origin [B, 2] constants. The first
/// decoder input is the last observed displacement; all-zero parameters
/// produce zero displacements, i.e. the stationary predictor.
Rollout generate(const Tensor& context, const Tensor& z,
                 const Tensor& last_step, const Tensor& origin, int t_pred,
                 const GeneratorParams& params);

/// Single-agent convenience wrapper; returns detached positions.
std::vector<Vec2> generate_positions(const Tensor& context, const Tensor& z,
                                     Vec2 last_step, Vec2 origin, int t_pred,
                                     const GeneratorParams& params);

/// positions: T_obs + T_pred tensors [B, 2] covering the full trajectory.
/// Embeds consecutive displacements, rolls the classifier LSTM (initial
/// state = context projections when use_context), and returns [B, 1]
/// sigmoid scores in (0, 1). Zero parameters score exactly 0.5.
Tensor discriminate(const std::vector<Tensor>& positions,
                    const Tensor& context, const DiscriminatorParams& params,
                    bool use_context = true);

/// Mean over batch rows of the min over rollouts of the per-row mean squared
/// Euclidean position error over the prediction steps. With one rollout this
/// is plain mse over positions.
Tensor variety_loss(const std::vector<Rollout>& rollouts,
                    const std::vector<Tensor>& truth);

/// Fraction of correct 0.5-threshold calls: real scores must exceed 0.5,
/// fake scores must not. Untrained zero parameters score 0.5 everywhere,
/// landing exactly at accuracy 0.5.
double disc_accuracy(const Tensor& real_scores, const Tensor& fake_scores);

}  // namespace socgan

#endif  // SOCGAN_MODEL_GAN_HPP
