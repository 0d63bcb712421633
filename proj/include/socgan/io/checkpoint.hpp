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

#ifndef SOCGAN_IO_CHECKPOINT_HPP
#define SOCGAN_IO_CHECKPOINT_HPP

#include <string>
#include <utility>
#include <vector>

#include "socgan/io/config.hpp"
#include "socgan/model/models.hpp"
#include "socgan/nn/tensor.hpp"

namespace socgan {

/// Text checkpoint: magic line "SOCGAN-CKPT v1", the embedded run config, a
/// named-tensor manifest (name rows cols), then whitespace-separated payload
/// values printed with 17 significant digits so doubles round-trip exactly.
struct Checkpoint {
  RunConfig config;
  std::vector<std::pair<std::string, Tensor>> tensors;
};

/// Writes config and tensors; I/O failures throw DataError.
void save_checkpoint(const std::string& path, const RunConfig& config,
                     const std::vector<std::pair<std::string, Tensor>>& tensors);

/// Parses a checkpoint file. Throws DataError: "not a SOCGAN-CKPT" on a bad
/// magic line, duplicate manifest names, or payload size mismatches
/// (truncation included).
Checkpoint load_checkpoint(const std::string& path);

/// Rebuilds model parameters from a loaded checkpoint, verifying the
/// manifest matches the config-implied layout name by name and shape by
/// shape; mismatches throw DataError.
ModelParams load_model(const Checkpoint& ckpt);

}  // namespace socgan

#endif  // SOCGAN_IO_CHECKPOINT_HPP
