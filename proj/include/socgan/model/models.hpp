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

#ifndef SOCGAN_MODEL_MODELS_HPP
#define SOCGAN_MODEL_MODELS_HPP

#include <string>
#include <utility>
#include <vector>

#include "socgan/io/config.hpp"
#include "socgan/model/encoder.hpp"
#include "socgan/model/gan.hpp"

namespace socgan {

/// Every trainable tensor of the pipeline. The generator "side" of the
/// min-max game owns the encoder (context gradients flow through it);
/// the discriminator side owns only its own tensors, including its context
/// projections.
struct ModelParams {
  EncoderParams encoder;
  GeneratorParams generator;
  DiscriminatorParams discriminator;

  static ModelParams zeros(const RunConfig& cfg);

  /// Draws every weight from `rng` in the fixed named() order; biases zero.
  static ModelParams init(const RunConfig& cfg, Rng& rng);

  /// (name, tensor-handle) pairs in a fixed order; handles alias the live
  /// parameters, so writes through them mutate the model.
  std::vector<std::pair<std::string, Tensor>> named() const;

  /// Generator-update group: encoder + generator tensors, named() order.
  std::vector<Tensor> g_group() const;

  /// Discriminator-update group.
  std::vector<Tensor> d_group() const;

  /// Deep copy with fresh storage.
  ModelParams clone() const;
};

}  // namespace socgan

#endif  // SOCGAN_MODEL_MODELS_HPP
