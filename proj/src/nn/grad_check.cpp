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

#include "socgan/nn/grad_check.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <stdexcept>

#include "socgan/core/error.hpp"
#include "socgan/nn/tape.hpp"

namespace socgan {

GradCheckResult grad_check(const std::function<Tensor()>& f,
                           const std::vector<Tensor>& inputs, double h,
                           double tol) {
  if (Tape::active() != nullptr) {
    throw std::logic_error("grad_check: cannot run inside an active tape");
  }

  const double first = f().value();
  const double second = f().value();
  if (std::memcmp(&first, &second, sizeof(double)) != 0) {
    throw NumericError("grad_check: loss function is not deterministic");
  }

  std::vector<std::vector<double>> analytic;
  {
    for (const Tensor& input : inputs) {
      const_cast<Tensor&>(input).zero_grad();
    }
    Tape tape;
    Tensor loss = f();
    tape.backward(loss);
    analytic.reserve(inputs.size());
    for (const Tensor& input : inputs) analytic.push_back(input.grad_or_zero());
  }

  GradCheckResult result;
  result.pass = true;
  for (size_t i = 0; i < inputs.size(); ++i) {
    std::vector<double>& values = inputs[i].ptr()->values;
    for (size_t j = 0; j < values.size(); ++j) {
      const double saved = values[j];
      values[j] = saved + h;
      const double up = f().value();
      values[j] = saved - h;
      const double down = f().value();
      values[j] = saved;

      const double numeric = (up - down) / (2.0 * h);
      const double a = analytic[i][j];
      const double rel =
          std::abs(a - numeric) / std::max(1e-8, std::abs(a) + std::abs(numeric));
      if (rel > result.max_rel_err) {
        result.max_rel_err = rel;
        result.worst = "input " + std::to_string(i) + " element " + std::to_string(j);
      }
    }
  }
  result.pass = result.max_rel_err <= tol;
  return result;
}

}  // namespace socgan
