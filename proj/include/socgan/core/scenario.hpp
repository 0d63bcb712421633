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

#ifndef SOCGAN_CORE_SCENARIO_HPP
#define SOCGAN_CORE_SCENARIO_HPP

#include <string>
#include <vector>

#include "socgan/core/types.hpp"

namespace socgan {

struct Violation {
  int frame_t = -1;   // -1 when not tied to a frame
  int agent_id = -1;  // -1 when not tied to an agent
  std::string message;
};

/// Structural and physical checks; empty result means the scenario is sound.
/// Flags: non-positive dt, frame indices not advancing by 1, duplicate agent
/// ids in a frame, agents whose class changes between frames, speeds above
/// the class limit (+1e-9 slack), malformed occupancy grids, and events with
/// negative intensity or reversed frame bounds.
std::vector<Violation> validate_scenario(const Scenario& scenario);

struct WindowParams {
  int t_obs = 8;
  int t_pred = 12;
  int stride = 1;
  int crop_g = 8;          // occupancy crop is crop_g x crop_g cells
  double crop_len = 4.0;   // crop side length, m
  int event_slots = 2;     // acoustic feature slots
};

/// Slides windows of t_obs + t_pred frames over every agent's maximal runs
/// of consecutive presence, advancing start frames by stride within each run.
/// An agent present in F consecutive frames yields
/// max(0, floor((F - t_obs - t_pred) / stride) + 1) samples. Neighbors are
/// the other agents present throughout the observed part of the window.
std::vector<Sample> window_samples(const Scenario& scenario, int scenario_id,
                                   const WindowParams& params);

/// Consecutive displacements positions[i+1] - positions[i].
/// Throws std::invalid_argument on fewer than 2 positions.
std::vector<Vec2> to_relative(const std::vector<Vec2>& positions);

/// Cumulative sums: [origin, origin + d0, origin + d0 + d1, ...].
std::vector<Vec2> from_relative(Vec2 origin, const std::vector<Vec2>& displacements);

}  // namespace socgan

#endif  // SOCGAN_CORE_SCENARIO_HPP
