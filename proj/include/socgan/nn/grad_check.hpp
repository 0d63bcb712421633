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

#ifndef SOCGAN_NN_GRAD_CHECK_HPP
#define SOCGAN_NN_GRAD_CHECK_HPP

#include <functional>
#include <string>
#include <vector>

#include "socgan/nn/tensor.hpp"

namespace socgan {

struct GradCheckResult {
  bool pass = false;
  double max_rel_err = 0.0;
  std::string worst;  // "input 2 element 5" style location of the max error
};

/// Compares the taped backward pass of the scalar loss built by `f` against
/// central finite differences (step h) on every element of `inputs`.
/// Relative error is |analytic - numeric| / max(1e-8, |analytic| + |numeric|).
///
/// `f` must read the current values of `inputs` on every call and must be
/// deterministic: the check runs it twice without a tape first and throws
/// NumericError if the two values differ bitwise. Throws std::logic_error
/// when called with a tape already active.
GradCheckResult grad_check(const std::function<Tensor()>& f,
                           const std::vector<Tensor>& inputs, double h = 1e-5,
                           double tol = 1e-4);

}  // namespace socgan

#endif  // SOCGAN_NN_GRAD_CHECK_HPP
