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

#include "socgan/model/encoder.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "socgan/features/features.hpp"
#include "socgan/nn/ops.hpp"

namespace socgan {

EmbedParams EmbedParams::zeros(int64_t in, int64_t out) {
  EmbedParams p;
  p.w = Tensor::zeros(in, out, /*requires_grad=*/true);
  p.b = Tensor::zeros(1, out, /*requires_grad=*/true);
  return p;
}

EmbedParams EmbedParams::init(int64_t in, int64_t out, Rng& rng) {
  EmbedParams p;
  p.w = Tensor::uniform_init(in, out, rng);
  p.b = Tensor::zeros(1, out, /*requires_grad=*/true);
  return p;
}

Tensor embed(const Tensor& x, const EmbedParams& p) {
  return ops::tanh(ops::linear(x, p.w, p.b));
}

int64_t dyn_input_dim() { return 3; }

int64_t spa_input_dim(const RunConfig& cfg) {
  return static_cast<int64_t>(cfg.crop_g) * cfg.crop_g;
}

int64_t aco_input_dim(const RunConfig& cfg) {
  return static_cast<int64_t>(cfg.event_slots) * kAcousticSlotDim;
}

int64_t self_dim(const RunConfig& cfg) {
  return cfg.hidden_dim + 2 * static_cast<int64_t>(cfg.embed_dim);
}

int64_t fuse_input_dim(const RunConfig& cfg) {
  const int64_t cells = static_cast<int64_t>(cfg.pool_grid_n) * cfg.pool_grid_n;
  return self_dim(cfg) + cells * (cfg.hidden_dim + 2 * static_cast<int64_t>(cfg.embed_dim));
}

int64_t context_dim(const RunConfig& cfg) { return cfg.context_dim; }

EncoderParams EncoderParams::zeros(const RunConfig& cfg) {
  EncoderParams p;
  p.dyn_embed = EmbedParams::zeros(dyn_input_dim(), cfg.embed_dim);
  p.dyn_lstm = LstmStack::zeros(cfg.embed_dim, cfg.hidden_dim, cfg.lstm_layers);
  p.spa_embed = EmbedParams::zeros(spa_input_dim(cfg), cfg.embed_dim);
  p.aco_embed = EmbedParams::zeros(aco_input_dim(cfg), cfg.embed_dim);
  p.fuse = EmbedParams::zeros(fuse_input_dim(cfg), cfg.context_dim);
  return p;
}

EncoderParams EncoderParams::init(const RunConfig& cfg, Rng& rng) {
  EncoderParams p;
  p.dyn_embed = EmbedParams::init(dyn_input_dim(), cfg.embed_dim, rng);
  p.dyn_lstm = LstmStack::init(cfg.embed_dim, cfg.hidden_dim, cfg.lstm_layers, rng);
  p.spa_embed = EmbedParams::init(spa_input_dim(cfg), cfg.embed_dim, rng);
  p.aco_embed = EmbedParams::init(aco_input_dim(cfg), cfg.embed_dim, rng);
  p.fuse = EmbedParams::init(fuse_input_dim(cfg), cfg.context_dim, rng);
  return p;
}

namespace {

void check_width(const char* what, size_t got, int64_t want) {
  if (static_cast<int64_t>(got) != want) {
    throw std::invalid_argument(std::string("encode_agents: ") + what +
                                " has " + std::to_string(got) +
                                " values, config implies " +
                                std::to_string(want));
  }
}

}  // namespace

AgentEncoding encode_agents(const Sample& sample, const EncoderParams& params,
                            const RunConfig& cfg, bool zero_acoustic) {
  const int64_t m = 1 + static_cast<int64_t>(sample.neighbors.size());
  const int t_obs = static_cast<int>(sample.observed.size());
  const int64_t spa_in = spa_input_dim(cfg);
  const int64_t aco_in = aco_input_dim(cfg);

  check_width("center crop", sample.crop.size(), spa_in);
  if (sample.acoustic.empty()) {
    throw std::invalid_argument("encode_agents: sample has no acoustic steps");
  }
  check_width("center acoustic", sample.acoustic.back().size(), aco_in);

  // Per-step motion features for every agent: [m, 3] per observed step.
  std::vector<std::vector<std::array<double, 3>>> dyn(m);
  dyn[0] = extract_dynamic(sample.observed, sample.dt);
  for (int64_t j = 1; j < m; ++j) {
    const NeighborTrack& nb = sample.neighbors[j - 1];
    if (static_cast<int>(nb.observed.size()) != t_obs) {
      throw std::invalid_argument(
          "encode_agents: neighbor window length mismatch");
    }
    check_width("neighbor crop", nb.crop.size(), spa_in);
    check_width("neighbor acoustic", nb.acoustic.size(), aco_in);
    dyn[j] = extract_dynamic(nb.observed, sample.dt);
  }

  std::vector<LstmState> states =
      lstm_stack_zero_state(m, cfg.hidden_dim, cfg.lstm_layers);
  for (int t = 0; t < t_obs; ++t) {
    std::vector<double> step(m * 3);
    for (int64_t j = 0; j < m; ++j) {
      step[j * 3 + 0] = dyn[j][t][0];
      step[j * 3 + 1] = dyn[j][t][1];
      step[j * 3 + 2] = dyn[j][t][2];
    }
    const Tensor x = Tensor::from_values(m, 3, std::move(step));
    states = lstm_stack_cell(embed(x, params.dyn_embed), states,
                             params.dyn_lstm);
  }

  std::vector<double> crops(m * spa_in);
  std::vector<double> acoustics(m * aco_in, 0.0);
  std::copy(sample.crop.begin(), sample.crop.end(), crops.begin());
  if (!zero_acoustic) {
    std::copy(sample.acoustic.back().begin(), sample.acoustic.back().end(),
              acoustics.begin());
  }
  for (int64_t j = 1; j < m; ++j) {
    const NeighborTrack& nb = sample.neighbors[j - 1];
    std::copy(nb.crop.begin(), nb.crop.end(), crops.begin() + j * spa_in);
    if (!zero_acoustic) {
      std::copy(nb.acoustic.begin(), nb.acoustic.end(),
                acoustics.begin() + j * aco_in);
    }
  }

  AgentEncoding out;
  out.h_dyn = states.back().h;
  out.e_spa = embed(Tensor::from_values(m, spa_in, std::move(crops)),
                    params.spa_embed);
  out.e_aco = embed(Tensor::from_values(m, aco_in, std::move(acoustics)),
                    params.aco_embed);
  out.ids.push_back(sample.agent_id);
  out.last_pos.push_back(sample.observed.back());
  for (const NeighborTrack& nb : sample.neighbors) {
    out.ids.push_back(nb.agent_id);
    out.last_pos.push_back(nb.observed.back());
  }
  return out;
}

Tensor social_pool(int center_row, const std::vector<Vec2>& positions,
                   const std::vector<int>& ids, const Tensor& vectors,
                   int n0, double lp) {
  const int64_t m = vectors.rows();
  if (positions.size() != static_cast<size_t>(m) ||
      ids.size() != static_cast<size_t>(m)) {
    throw std::invalid_argument("social_pool: rows/positions/ids mismatch");
  }
  const int64_t dim = vectors.cols();
  const double cell = lp / n0;
  const Vec2 center = positions[center_row];

  // Cell -> contributing rows, later summed in ascending agent-id order so
  // the result is bitwise independent of the incoming row order.
  std::vector<std::vector<int>> bins(static_cast<size_t>(n0) * n0);
  for (int64_t j = 0; j < m; ++j) {
    if (j == center_row) continue;
    const double dx = positions[j].x - center.x;
    const double dy = positions[j].y - center.y;
    const int col = static_cast<int>(std::floor((dx + lp / 2.0) / cell));
    const int row = static_cast<int>(std::floor((dy + lp / 2.0) / cell));
    if (col < 0 || col >= n0 || row < 0 || row >= n0) continue;
    bins[static_cast<size_t>(row) * n0 + col].push_back(static_cast<int>(j));
  }

  std::vector<Tensor> cells;
  cells.reserve(bins.size());
  for (std::vector<int>& rows_in_cell : bins) {
    if (rows_in_cell.empty()) {
      cells.push_back(Tensor::zeros(1, dim));
      continue;
    }
    std::sort(rows_in_cell.begin(), rows_in_cell.end(),
              [&ids](int a, int b) { return ids[a] < ids[b]; });
    Tensor acc = ops::row(vectors, rows_in_cell[0]);
    for (size_t i = 1; i < rows_in_cell.size(); ++i) {
      acc = ops::add(acc, ops::row(vectors, rows_in_cell[i]));
    }
    cells.push_back(acc);
  }
  return ops::concat_cols(cells);
}

Tensor fuse(const Tensor& h_self, const Tensor& pooled_dyn,
            const Tensor& pooled_spa, const Tensor& pooled_aco,
            const EmbedParams& projection) {
  return embed(ops::concat_cols({h_self, pooled_dyn, pooled_spa, pooled_aco}),
               projection);
}

Tensor build_context(const Sample& sample, const EncoderParams& params,
                     const RunConfig& cfg, bool zero_acoustic) {
  const AgentEncoding enc = encode_agents(sample, params, cfg, zero_acoustic);
  const Tensor h_self = ops::concat_cols({ops::row(enc.h_dyn, 0),
                                          ops::row(enc.e_spa, 0),
                                          ops::row(enc.e_aco, 0)});
  const Tensor pooled_dyn = social_pool(0, enc.last_pos, enc.ids, enc.h_dyn,
                                        cfg.pool_grid_n, cfg.pool_grid_len);
  const Tensor pooled_spa = social_pool(0, enc.last_pos, enc.ids, enc.e_spa,
                                        cfg.pool_grid_n, cfg.pool_grid_len);
  const Tensor pooled_aco = social_pool(0, enc.last_pos, enc.ids, enc.e_aco,
                                        cfg.pool_grid_n, cfg.pool_grid_len);
  return fuse(h_self, pooled_dyn, pooled_spa, pooled_aco, params.fuse);
}

}  // namespace socgan
