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

#ifndef SOCGAN_MODEL_ENCODER_HPP
#define SOCGAN_MODEL_ENCODER_HPP

#include <cstdint>
#include <vector>

#include "socgan/core/types.hpp"
#include "socgan/io/config.hpp"
#include "socgan/model/lstm.hpp"
#include "socgan/nn/tensor.hpp"

namespace socgan {

/// tanh(x * w + b) feed-forward embedding (also used as a bare linear map
/// via ops::linear where noted).
struct EmbedParams {
  Tensor w;  // [in, out]
  Tensor b;  // [1, out]

  static EmbedParams zeros(int64_t in, int64_t out);
  static EmbedParams init(int64_t in, int64_t out, Rng& rng);
};

Tensor embed(const Tensor& x, const EmbedParams& p);

// Channel dimensions implied by a RunConfig.
int64_t dyn_input_dim();                        // (dx, dy, speed)
int64_t spa_input_dim(const RunConfig& cfg);    // crop_g^2
int64_t aco_input_dim(const RunConfig& cfg);    // event_slots * slot dim
int64_t self_dim(const RunConfig& cfg);         // hidden + 2*embed
int64_t fuse_input_dim(const RunConfig& cfg);   // self + pooled channels
int64_t context_dim(const RunConfig& cfg);

/// Parameters of the three channel encoders plus the fusion projection.
struct EncoderParams {
  EmbedParams dyn_embed;  // 3 -> embed_dim, per observed step
  LstmStack dyn_lstm;     // embed_dim -> hidden_dim
  EmbedParams spa_embed;  // crop_g^2 -> embed_dim
  EmbedParams aco_embed;  // aco_input -> embed_dim
  EmbedParams fuse;       // fuse_input -> context_dim

  static EncoderParams zeros(const RunConfig& cfg);
  static EncoderParams init(const RunConfig& cfg, Rng& rng);
};

/// Per-agent channel representations, one row per agent. Row 0 is the
/// sample's center agent; rows 1.. follow the stored neighbor order.
struct AgentEncoding {
  Tensor h_dyn;  // [M, hidden_dim] final dynamic-LSTM hidden states
  Tensor e_spa;  // [M, embed_dim]
  Tensor e_aco;  // [M, embed_dim]
  std::vector<int> ids;        // agent id per row
  std::vector<Vec2> last_pos;  // last observed position per row
};

/// Rolls the dynamic LSTM over embedded per-step motion features and embeds
/// the spatial crop and last-step acoustic vector for the center agent and
/// every neighbor. `zero_acoustic` feeds zeros to the acoustic channel.
AgentEncoding encode_agents(const Sample& sample, const EncoderParams& params,
                            const RunConfig& cfg, bool zero_acoustic = false);

/// Sums `vectors` rows (excluding `center_row`) into an n0 x n0 grid of
/// cells covering the lp x lp square centered on the center agent's
/// position: column floor((dx + lp/2) / (lp/n0)), row likewise in dy;
/// positions outside the square contribute nothing. Contributions within a
/// cell are summed in ascending agent-id order so any permutation of the
/// rows produces a bitwise-identical result. Output is [1, n0*n0*dim] in
/// row-major cell order.
Tensor social_pool(int center_row, const std::vector<Vec2>& positions,
                   const std::vector<int>& ids, const Tensor& vectors,
                   int n0, double lp);

/// tanh(linear(concat(h_self, pooled_dyn, pooled_spa, pooled_aco))).
Tensor fuse(const Tensor& h_self, const Tensor& pooled_dyn,
            const Tensor& pooled_spa, const Tensor& pooled_aco,
            const EmbedParams& projection);

/// Full per-sample pipeline: encode agents, pool each channel around the
/// center, and fuse into the [1, context_dim] social context vector.
Tensor build_context(const Sample& sample, const EncoderParams& params,
                     const RunConfig& cfg, bool zero_acoustic = false);

}  // namespace socgan

#endif  // SOCGAN_MODEL_ENCODER_HPP
