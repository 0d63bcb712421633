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

#ifndef SOCGAN_MODEL_LSTM_HPP
#define SOCGAN_MODEL_LSTM_HPP

#include <cstdint>
#include <vector>

#include "socgan/core/rng.hpp"
#include "socgan/nn/tensor.hpp"

namespace socgan {

/// One LSTM cell's parameters. Gate order along the 4H axis is fixed as
/// (input i, forget f, candidate g, output o).
struct LstmParams {
  Tensor w;  // [input_dim, 4H]
  Tensor u;  // [H, 4H]
  Tensor b;  // [1, 4H]

  int64_t input_dim() const { return w.rows(); }
  int64_t hidden_dim() const { return u.rows(); }

  static LstmParams zeros(int64_t input_dim, int64_t hidden_dim);
  static LstmParams init(int64_t input_dim, int64_t hidden_dim, Rng& rng);
};

/// Recurrent state; both tensors are [batch, H].
struct LstmState {
  Tensor h;
  Tensor c;
};

LstmState lstm_zero_state(int64_t batch, int64_t hidden_dim);

/// One step: a = x*W + h*U + b split into (a_i, a_f, a_g, a_o);
/// i = sigmoid(a_i), f = sigmoid(a_f), g = tanh(a_g), o = sigmoid(a_o);
/// c' = f*c + i*g; h' = o*tanh(c'). Shape mismatches throw.
LstmState lstm_cell(const Tensor& x, const LstmState& state,
                    const LstmParams& p);

/// Stacked cells; layer 0 consumes the input, later layers consume the
/// previous layer's h. Desk-scale defaults use a single layer.
struct LstmStack {
  std::vector<LstmParams> layers;

  int64_t hidden_dim() const { return layers.front().hidden_dim(); }

  static LstmStack zeros(int64_t input_dim, int64_t hidden_dim, int n_layers);
  static LstmStack init(int64_t input_dim, int64_t hidden_dim, int n_layers,
                        Rng& rng);
};

std::vector<LstmState> lstm_stack_zero_state(int64_t batch, int64_t hidden_dim,
                                             int n_layers);

/// Advances every layer one step; returns the new per-layer states. The
/// output of the step is the last layer's h.
std::vector<LstmState> lstm_stack_cell(const Tensor& x,
                                       const std::vector<LstmState>& states,
                                       const LstmStack& stack);

}  // namespace socgan

#endif  // SOCGAN_MODEL_LSTM_HPP
