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

#ifndef SOCGAN_NN_TENSOR_HPP
#define SOCGAN_NN_TENSOR_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "socgan/core/rng.hpp"

namespace socgan {

/// Shared storage behind Tensor handles. Row-major doubles; the gradient
/// buffer stays empty until something accumulates into it.
struct TensorData {
  int64_t rows = 0;
  int64_t cols = 0;
  std::vector<double> values;
  std::vector<double> grad;
  bool requires_grad = false;

  // Registration on the most recent tape that saw this tensor. Generations
  // are globally unique, so a stale registration from a dead tape can never
  // be mistaken for one on a live tape reusing the same address.
  uint64_t tape_gen = 0;
  int node_id = -1;

  int64_t numel() const { return rows * cols; }
  void ensure_grad() {
    if (grad.empty()) grad.assign(values.size(), 0.0);
  }
};

/// 2-D float64 tensor with shared, copy-on-nothing storage: copies of a
/// Tensor alias the same buffer, so gradients written during backward are
/// visible through every handle.
class Tensor {
 public:
  Tensor() = default;

  static Tensor zeros(int64_t rows, int64_t cols, bool requires_grad = false);
  static Tensor from_values(int64_t rows, int64_t cols, std::vector<double> values,
                            bool requires_grad = false);
  static Tensor row_vector(std::vector<double> values, bool requires_grad = false);
  static Tensor scalar(double value);

  /// Uniform init on (-1/sqrt(fan_in), 1/sqrt(fan_in)); fan_in = rows.
  static Tensor uniform_init(int64_t rows, int64_t cols, Rng& rng,
                             bool requires_grad = true);

  bool defined() const { return d_ != nullptr; }
  int64_t rows() const { return d_->rows; }
  int64_t cols() const { return d_->cols; }
  int64_t numel() const { return d_->numel(); }
  std::string shape_str() const;

  double* data() { return d_->values.data(); }
  const double* data() const { return d_->values.data(); }
  const std::vector<double>& values() const { return d_->values; }
  double at(int64_t r, int64_t c) const { return d_->values[r * d_->cols + c]; }

  /// Scalar read; throws std::logic_error unless numel() == 1.
  double value() const;

  bool requires_grad() const { return d_->requires_grad; }
  void set_requires_grad(bool v) { d_->requires_grad = v; }

  /// Gradient buffer read; zeros when nothing has accumulated.
  std::vector<double> grad_or_zero() const;
  void zero_grad() { d_->grad.assign(d_->values.size(), 0.0); }

  /// Value copy detached from any tape, requires_grad off.
  Tensor detach() const;

  /// Deep copy of values (fresh grad buffer, same requires_grad).
  Tensor clone() const;

  const std::shared_ptr<TensorData>& ptr() const { return d_; }

 private:
  explicit Tensor(std::shared_ptr<TensorData> d) : d_(std::move(d)) {}

  std::shared_ptr<TensorData> d_;
};

}  // namespace socgan

#endif  // SOCGAN_NN_TENSOR_HPP
