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

#include "socgan/features/features.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace socgan {

std::vector<std::array<double, 3>> extract_dynamic(const std::vector<Vec2>& positions,
                                                   double dt) {
  std::vector<std::array<double, 3>> out(positions.size(), {0.0, 0.0, 0.0});
  for (size_t i = 1; i < positions.size(); ++i) {
    const Vec2 d = positions[i] - positions[i - 1];
    out[i] = {d.x, d.y, norm(d) / dt};
  }
  return out;
}

std::vector<double> extract_spatial(const ObstacleMap& map, Vec2 position,
                                    int g, double side) {
  std::vector<double> out(static_cast<size_t>(g) * g, 0.0);
  const double cell = side / g;
  const Vec2 corner = position - Vec2{side / 2.0, side / 2.0};
  for (int r = 0; r < g; ++r) {
    for (int c = 0; c < g; ++c) {
      const Vec2 center = corner + Vec2{(c + 0.5) * cell, (r + 0.5) * cell};
      out[static_cast<size_t>(r) * g + c] = map.occupied_at(center) ? 1.0 : 0.0;
    }
  }
  return out;
}

std::vector<double> extract_acoustic(const std::vector<AcousticEvent>& events,
                                     int t, const AgentState& agent, int slots) {
  std::vector<double> out(static_cast<size_t>(slots) * kAcousticSlotDim, 0.0);

  struct Active {
    double attenuated;
    size_t index;
  };
  std::vector<Active> active;
  for (size_t i = 0; i < events.size(); ++i) {
    if (!events[i].active_at(t)) continue;
    const double d2 = norm_sq(events[i].origin - agent.position);
    active.push_back({events[i].intensity / (1.0 + d2), i});
  }
  std::sort(active.begin(), active.end(), [](const Active& a, const Active& b) {
    if (a.attenuated != b.attenuated) return a.attenuated > b.attenuated;
    return a.index < b.index;
  });

  const Vec2 heading =
      norm(agent.velocity) < 1e-3 ? Vec2{1.0, 0.0} : unit(agent.velocity);

  const int filled = std::min<int>(slots, static_cast<int>(active.size()));
  for (int s = 0; s < filled; ++s) {
    const AcousticEvent& event = events[active[s].index];
    const Vec2 rel = event.origin - agent.position;
    const double dist = norm(rel);
    // Direction cosines in the heading frame; a co-located source reads as
    // straight ahead.
    double sin_b = 0.0;
    double cos_b = 1.0;
    if (dist > 0.0) {
      cos_b = dot(rel, heading) / dist;
      sin_b = cross(heading, rel) / dist;
    }
    double* slot = out.data() + static_cast<size_t>(s) * kAcousticSlotDim;
    slot[0] = active[s].attenuated;
    slot[1] = sin_b;
    slot[2] = cos_b;
    slot[3 + static_cast<int>(event.category)] = 1.0;
  }
  return out;
}

}  // namespace socgan
