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

#include "socgan/nn/tensor.hpp"

#include <cmath>
#include <stdexcept>

namespace socgan {

namespace {

std::shared_ptr<TensorData> make_data(int64_t rows, int64_t cols, bool requires_grad) {
  if (rows < 1 || cols < 1) {
    throw std::invalid_argument("tensor extents must be >= 1, got [" +
                                std::to_string(rows) + "," + std::to_string(cols) + "]");
  }
  auto d = std::make_shared<TensorData>();
  d->rows = rows;
  d->cols = cols;
  d->requires_grad = requires_grad;
  return d;
}

}  // namespace

Tensor Tensor::zeros(int64_t rows, int64_t cols, bool requires_grad) {
  auto d = make_data(rows, cols, requires_grad);
  d->values.assign(static_cast<size_t>(rows * cols), 0.0);
  return Tensor(std::move(d));
}

Tensor Tensor::from_values(int64_t rows, int64_t cols, std::vector<double> values,
                           bool requires_grad) {
  auto d = make_data(rows, cols, requires_grad);
  if (values.size() != static_cast<size_t>(rows * cols)) {
    throw std::invalid_argument("value count " + std::to_string(values.size()) +
                                " does not fill [" + std::to_string(rows) + "," +
                                std::to_string(cols) + "]");
  }
  d->values = std::move(values);
  return Tensor(std::move(d));
}

Tensor Tensor::row_vector(std::vector<double> values, bool requires_grad) {
  const int64_t n = static_cast<int64_t>(values.size());
  return from_values(1, n, std::move(values), requires_grad);
}

Tensor Tensor::scalar(double value) {
  return from_values(1, 1, {value});
}

Tensor Tensor::uniform_init(int64_t rows, int64_t cols, Rng& rng, bool requires_grad) {
  auto d = make_data(rows, cols, requires_grad);
  const double bound = 1.0 / std::sqrt(static_cast<double>(rows));
  d->values.resize(static_cast<size_t>(rows * cols));
  for (double& v : d->values) v = rng.uniform(-bound, bound);
  return Tensor(std::move(d));
}

std::string Tensor::shape_str() const {
  if (!defined()) return "[undefined]";
  return "[" + std::to_string(d_->rows) + "," + std::to_string(d_->cols) + "]";
}

double Tensor::value() const {
  if (numel() != 1) {
    throw std::logic_error("value() needs a scalar tensor, got " + shape_str());
  }
  return d_->values[0];
}

std::vector<double> Tensor::grad_or_zero() const {
  if (d_->grad.empty()) return std::vector<double>(d_->values.size(), 0.0);
  return d_->grad;
}

Tensor Tensor::detach() const {
  auto d = make_data(d_->rows, d_->cols, false);
  d->values = d_->values;
  return Tensor(std::move(d));
}

Tensor Tensor::clone() const {
  auto d = make_data(d_->rows, d_->cols, d_->requires_grad);
  d->values = d_->values;
  return Tensor(std::move(d));
}

}  // namespace socgan
