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

#include "socgan/model/lstm.hpp"

#include <stdexcept>

#include "socgan/nn/ops.hpp"

namespace socgan {

LstmParams LstmParams::zeros(int64_t input_dim, int64_t hidden_dim) {
  LstmParams p;
  p.w = Tensor::zeros(input_dim, 4 * hidden_dim, /*requires_grad=*/true);
  p.u = Tensor::zeros(hidden_dim, 4 * hidden_dim, /*requires_grad=*/true);
  p.b = Tensor::zeros(1, 4 * hidden_dim, /*requires_grad=*/true);
  return p;
}

LstmParams LstmParams::init(int64_t input_dim, int64_t hidden_dim, Rng& rng) {
  LstmParams p;
  p.w = Tensor::uniform_init(input_dim, 4 * hidden_dim, rng);
  p.u = Tensor::uniform_init(hidden_dim, 4 * hidden_dim, rng);
  p.b = Tensor::zeros(1, 4 * hidden_dim, /*requires_grad=*/true);
  return p;
}

LstmState lstm_zero_state(int64_t batch, int64_t hidden_dim) {
  return {Tensor::zeros(batch, hidden_dim), Tensor::zeros(batch, hidden_dim)};
}

LstmState lstm_cell(const Tensor& x, const LstmState& state,
                    const LstmParams& p) {
  const int64_t h_dim = p.hidden_dim();
  if (state.h.cols() != h_dim || state.c.cols() != h_dim) {
    throw std::invalid_argument("lstm_cell: state width " +
                                state.h.shape_str() + " does not match H=" +
                                std::to_string(h_dim));
  }
  const Tensor pre = ops::add(
      ops::add(ops::matmul(x, p.w), ops::matmul(state.h, p.u)), p.b);
  const Tensor i = ops::sigmoid(ops::slice_cols(pre, 0, h_dim));
  const Tensor f = ops::sigmoid(ops::slice_cols(pre, h_dim, h_dim));
  const Tensor g = ops::tanh(ops::slice_cols(pre, 2 * h_dim, h_dim));
  const Tensor o = ops::sigmoid(ops::slice_cols(pre, 3 * h_dim, h_dim));
  const Tensor c_next = ops::add(ops::mul(f, state.c), ops::mul(i, g));
  const Tensor h_next = ops::mul(o, ops::tanh(c_next));
  return {h_next, c_next};
}

LstmStack LstmStack::zeros(int64_t input_dim, int64_t hidden_dim,
                           int n_layers) {
  LstmStack s;
  for (int l = 0; l < n_layers; ++l) {
    s.layers.push_back(
        LstmParams::zeros(l == 0 ? input_dim : hidden_dim, hidden_dim));
  }
  return s;
}

LstmStack LstmStack::init(int64_t input_dim, int64_t hidden_dim, int n_layers,
                          Rng& rng) {
  LstmStack s;
  for (int l = 0; l < n_layers; ++l) {
    s.layers.push_back(
        LstmParams::init(l == 0 ? input_dim : hidden_dim, hidden_dim, rng));
  }
  return s;
}

std::vector<LstmState> lstm_stack_zero_state(int64_t batch, int64_t hidden_dim,
                                             int n_layers) {
  std::vector<LstmState> states;
  for (int l = 0; l < n_layers; ++l) {
    states.push_back(lstm_zero_state(batch, hidden_dim));
  }
  return states;
}

std::vector<LstmState> lstm_stack_cell(const Tensor& x,
                                       const std::vector<LstmState>& states,
                                       const LstmStack& stack) {
  if (states.size() != stack.layers.size()) {
    throw std::invalid_argument("lstm_stack_cell: " +
                                std::to_string(states.size()) +
                                " states for " +
                                std::to_string(stack.layers.size()) +
                                " layers");
  }
  std::vector<LstmState> next;
  Tensor input = x;
  for (size_t l = 0; l < stack.layers.size(); ++l) {
    next.push_back(lstm_cell(input, states[l], stack.layers[l]));
    input = next.back().h;
  }
  return next;
}

}  // namespace socgan
