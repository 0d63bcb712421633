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

#ifndef SOCGAN_NN_OPS_HPP
#define SOCGAN_NN_OPS_HPP

#include <vector>

#include "socgan/nn/tape.hpp"
#include "socgan/nn/tensor.hpp"

namespace socgan::ops {

// Differentiable primitives. Shape violations throw std::invalid_argument
// naming the operation and both shapes. Elementwise binary ops accept equal
// shapes, or a [1, n] second operand broadcast over the leading axis.

Tensor matmul(const Tensor& a, const Tensor& b);
Tensor add(const Tensor& a, const Tensor& b);
Tensor sub(const Tensor& a, const Tensor& b);
Tensor mul(const Tensor& a, const Tensor& b);
Tensor scale(const Tensor& a, double s);
Tensor tanh(const Tensor& a);
Tensor sigmoid(const Tensor& a);

/// Concatenation along the last axis; inputs share a row count.
Tensor concat_cols(const std::vector<Tensor>& parts);

/// Concatenation along the leading axis; inputs share a column count.
Tensor stack_rows(const std::vector<Tensor>& parts);

Tensor slice_cols(const Tensor& a, int64_t start, int64_t len);
Tensor row(const Tensor& a, int64_t r);

/// axis 0 collapses rows to [1, cols]; axis 1 collapses columns to [rows, 1].
Tensor sum_axis(const Tensor& a, int axis);
Tensor sum_all(const Tensor& a);

/// Mean of squared differences over all elements.
Tensor mse_loss(const Tensor& pred, const Tensor& target);

/// Mean binary cross-entropy; scores clamped to [1e-7, 1 - 1e-7] so the
/// loss stays finite for scores exactly 0 or 1. Labels are 0/1 values.
Tensor bce_loss(const Tensor& score, const Tensor& label);

/// x * w + b with b broadcast over rows.
Tensor linear(const Tensor& x, const Tensor& w, const Tensor& b);

}  // namespace socgan::ops

#endif  // SOCGAN_NN_OPS_HPP
