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

#ifndef SOCGAN_IO_CONFIG_HPP
#define SOCGAN_IO_CONFIG_HPP

#include <cstdint>
#include <string>

#include "socgan/core/error.hpp"

namespace socgan {

/// Flat run configuration. Text form is one "key = value" per line with "#"
/// comments; unknown keys are fatal so typos never fall back to defaults.
struct RunConfig {
  // Windowing / data.
  double dt = 0.4;
  int t_obs = 8;
  int t_pred = 12;
  int stride = 1;

  // Model dimensions.
  int hidden_dim = 32;
  int embed_dim = 16;
  int context_dim = 64;
  int pool_grid_n = 4;
  double pool_grid_len = 4.0;
  int crop_g = 8;
  double crop_len = 4.0;
  int event_slots = 2;
  int noise_dim = 8;
  int lstm_layers = 1;

  // Training.
  int k_variety = 5;
  double lambda_adv = 1.0;
  double lr_g = 1e-3;
  double lr_d = 1e-3;
  int batch = 32;
  int epochs = 10;
  int d_steps_per_g_step = 1;
  int disc_use_context = 1;
  uint64_t seed = 7;

  // Crowd simulation.
  double w = 2.0;
  double neighbor_radius = 5.0;
  double acoustic_gain = 1.0;
  double acoustic_threshold = 0.1;
  int candidate_rings = 4;
  int candidates_per_ring = 16;
  int horizon = 40;

  // Dataset mix for cmd_simulate.
  int mix_crossing = 8;
  int mix_circle_swap = 6;
  int mix_corridor = 6;
  int mix_siren = 6;
  int mix_cv = 4;
  int agents_min = 2;
  int agents_max = 8;
};

/// Parses "key = value" text. Throws ConfigError on malformed lines, bad
/// values, or any unrecognized key ("unknown key: <key>").
RunConfig parse_config(const std::string& text);

/// Reads the file and parses it; file errors become ConfigError.
RunConfig load_config(const std::string& path);

/// Canonical text form: every key in a fixed order, doubles with 17
/// significant digits so parse(serialize(c)) reproduces c exactly.
std::string serialize_config(const RunConfig& config);

}  // namespace socgan

#endif  // SOCGAN_IO_CONFIG_HPP
