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

#ifndef SOCGAN_FEATURES_FEATURES_HPP
#define SOCGAN_FEATURES_FEATURES_HPP

#include <array>
#include <vector>

#include "socgan/core/types.hpp"

namespace socgan {

/// Per-step motion features: (dx, dy, speed). Row 0 is zero padding; row i
/// holds positions[i] - positions[i-1] and its length divided by dt.
std::vector<std::array<double, 3>> extract_dynamic(const std::vector<Vec2>& positions,
                                                   double dt);

/// g x g occupancy crop of side length `side`, centered on `position`,
/// flattened row-major to 0/1 doubles. A crop cell is occupied when its
/// center falls in an occupied map cell or outside the map.
std::vector<double> extract_spatial(const ObstacleMap& map, Vec2 position,
                                    int g, double side);

/// Values per acoustic slot: attenuated intensity, sin/cos of the source
/// bearing relative to the agent heading, one-hot category.
inline constexpr int kAcousticSlotDim = 3 + kNumEventCategories;

/// Fills `slots` feature slots from the events active at frame `t`, strongest
/// attenuated intensity (I0 / (1 + d^2)) first; ties keep event order.
/// Bearing is measured from the agent's velocity direction (world +x when
/// speed < 1e-3); unused slots stay zero.
std::vector<double> extract_acoustic(const std::vector<AcousticEvent>& events,
                                     int t, const AgentState& agent, int slots);

}  // namespace socgan

#endif  // SOCGAN_FEATURES_FEATURES_HPP
