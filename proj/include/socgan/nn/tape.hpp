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

#ifndef SOCGAN_NN_TAPE_HPP
#define SOCGAN_NN_TAPE_HPP

#include <functional>
#include <memory>
#include <vector>

#include "socgan/nn/tensor.hpp"

namespace socgan {

/// Dynamic reverse-mode tape. Constructing a Tape makes it the active tape
/// for the current thread (stack discipline, popped on destruction);
/// operations record themselves onto the active tape whenever any input
/// requires a gradient. Node ids are assigned in creation order, so the node
/// list is already topologically sorted and backward() is a single reverse
/// sweep. A tape can be consumed by backward() exactly once.
///
/// Tapes are single-threaded; distinct threads get distinct active tapes.
class Tape {
 public:
  Tape();
  ~Tape();
  Tape(const Tape&) = delete;
  Tape& operator=(const Tape&) = delete;

  /// Active tape of the current thread, or nullptr outside any Tape scope.
  static Tape* active();

  /// Registers storage on this tape (no-op when already registered) and
  /// returns its node id.
  int ensure_node(const std::shared_ptr<TensorData>& data);

  /// Appends one recorded operation. `fn` reads output->grad and adds each
  /// input's contribution into its grad buffer; it must handle an empty
  /// output grad (no gradient flowed) by returning early.
  void record(const std::vector<std::shared_ptr<TensorData>>& inputs,
              const std::shared_ptr<TensorData>& output, std::function<void()> fn);

  /// Seeds d(loss)/d(loss) = 1 and runs every recorded rule in reverse
  /// order. Gradients accumulate additively across fan-out. Errors
  /// (std::logic_error): loss not recorded on this tape, loss not scalar,
  /// tape already consumed.
  void backward(const Tensor& loss);

  bool consumed() const { return consumed_; }
  size_t node_count() const { return registered_.size(); }
  uint64_t generation() const { return gen_; }

 private:
  struct Node {
    std::vector<int> inputs;
    int output;
    std::function<void()> fn;
  };

  std::vector<Node> nodes_;
  std::vector<std::shared_ptr<TensorData>> registered_;
  uint64_t gen_;
  bool consumed_ = false;
  Tape* prev_ = nullptr;
};

}  // namespace socgan

#endif  // SOCGAN_NN_TAPE_HPP
