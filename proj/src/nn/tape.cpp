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

#include "socgan/nn/tape.hpp"

#include <atomic>
#include <stdexcept>

namespace socgan {

namespace {

thread_local Tape* g_active = nullptr;

uint64_t next_generation() {
  static std::atomic<uint64_t> counter{1};
  return counter.fetch_add(1);
}

}  // namespace

Tape::Tape() : gen_(next_generation()) {
  prev_ = g_active;
  g_active = this;
}

Tape::~Tape() {
  g_active = prev_;
}

Tape* Tape::active() {
  return g_active;
}

int Tape::ensure_node(const std::shared_ptr<TensorData>& data) {
  if (data->tape_gen == gen_) return data->node_id;
  data->tape_gen = gen_;
  data->node_id = static_cast<int>(registered_.size());
  registered_.push_back(data);
  return data->node_id;
}

void Tape::record(const std::vector<std::shared_ptr<TensorData>>& inputs,
                  const std::shared_ptr<TensorData>& output, std::function<void()> fn) {
  if (consumed_) {
    throw std::logic_error("recording on a consumed tape");
  }
  Node node;
  node.inputs.reserve(inputs.size());
  for (const auto& in : inputs) node.inputs.push_back(ensure_node(in));
  node.output = ensure_node(output);
  node.fn = std::move(fn);
  nodes_.push_back(std::move(node));
}

void Tape::backward(const Tensor& loss) {
  if (consumed_) {
    throw std::logic_error("backward called twice on one tape");
  }
  const auto& d = loss.ptr();
  if (!d || d->tape_gen != gen_ || d->node_id < 0) {
    throw std::logic_error("loss tensor is not recorded on this tape");
  }
  if (d->numel() != 1) {
    throw std::logic_error("backward needs a scalar loss, got [" +
                           std::to_string(d->rows) + "," + std::to_string(d->cols) + "]");
  }
  consumed_ = true;
  d->ensure_grad();
  d->grad[0] = 1.0;
  for (auto it = nodes_.rbegin(); it != nodes_.rend(); ++it) {
    it->fn();
  }
  nodes_.clear();  // releases captured storage; the tape stays consumed
}

}  // namespace socgan
