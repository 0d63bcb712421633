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

#ifndef SOCGAN_NN_ADAM_HPP
#define SOCGAN_NN_ADAM_HPP

#include <cstdint>
#include <vector>

#include "socgan/nn/tensor.hpp"

namespace socgan {

struct AdamConfig {
  double lr = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
};

/// One bias-corrected Adam update on a raw buffer; t is the step number
/// AFTER incrementing (first call passes t=1). m and v must match value's
/// size and start at zero.
void adam_update(std::vector<double>& value, const std::vector<double>& grad,
                 std::vector<double>& m, std::vector<double>& v, int64_t t,
                 const AdamConfig& cfg);

/// Adam over a fixed parameter group. step() consumes each parameter's
/// accumulated gradient buffer; callers zero gradients between steps.
class Adam {
 public:
  Adam(std::vector<Tensor> params, const AdamConfig& cfg);

  void step();
  void zero_grad();
  int64_t t() const { return t_; }

 private:
  std::vector<Tensor> params_;
  std::vector<std::vector<double>> m_;
  std::vector<std::vector<double>> v_;
  AdamConfig cfg_;
  int64_t t_ = 0;
};

}  // namespace socgan

#endif  // SOCGAN_NN_ADAM_HPP
