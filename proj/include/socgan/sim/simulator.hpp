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

#ifndef SOCGAN_SIM_SIMULATOR_HPP
#define SOCGAN_SIM_SIMULATOR_HPP

#include <cstdint>
#include <vector>

#include "socgan/sim/rvo.hpp"

namespace socgan {

/// Initial condition of one simulated agent.
struct SimAgent {
  int id = 0;
  AgentClass cls = AgentClass::kPedestrian;
  Vec2 start;
  Vec2 goal;
};

/// Rolls the crowd forward for params.horizon frames (frame 0 is the initial
/// placement) with synchronous updates: every agent chooses its velocity
/// from the frame-t state, then all positions commit at once. Occupied map
/// cells within neighbor_radius join as static discs of radius
/// cell_size/sqrt(2). An agent that comes within arrive_radius of its goal
/// latches there for the rest of the run. The returned scenario's velocities
/// are re-derived from positions so in-memory and reloaded copies agree.
Scenario simulate(const std::vector<SimAgent>& agents, const ObstacleMap& map,
                  const std::vector<AcousticEvent>& events,
                  const SimParams& params);

struct OverlapStats {
  int64_t pair_timesteps = 0;  // agent pairs examined, summed over frames
  int64_t overlaps = 0;        // pairs with distance < r_i + r_j
  double min_ratio = 1e300;    // smallest distance / (r_i + r_j) seen
};

/// Pairwise disc-overlap census over every frame of a scenario.
OverlapStats overlap_stats(const Scenario& scenario);

}  // namespace socgan

#endif  // SOCGAN_SIM_SIMULATOR_HPP
