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

#include "socgan/core/scenario.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

namespace socgan {

std::vector<Violation> validate_scenario(const Scenario& scenario) {
  std::vector<Violation> out;
  const auto flag = [&out](int t, int id, std::string msg) {
    out.push_back({t, id, std::move(msg)});
  };

  if (!(scenario.dt > 0.0)) {
    flag(-1, -1, "dt must be positive");
  }

  const ObstacleMap& map = scenario.map;
  if (!(map.cell_size > 0.0)) flag(-1, -1, "map cell_size must be positive");
  if (map.rows < 1 || map.cols < 1) flag(-1, -1, "map dimensions must be >= 1");
  if (map.occupied.size() != static_cast<size_t>(map.rows) * map.cols) {
    flag(-1, -1, "map occupancy size does not match rows*cols");
  }

  for (const AcousticEvent& event : scenario.events) {
    if (event.intensity < 0.0) flag(-1, -1, "event intensity must be >= 0");
    if (event.t_start > event.t_end) flag(-1, -1, "event t_start exceeds t_end");
  }

  std::map<int, AgentClass> first_class;
  for (size_t i = 0; i < scenario.frames.size(); ++i) {
    const Frame& frame = scenario.frames[i];
    if (i > 0 && frame.t != scenario.frames[i - 1].t + 1) {
      flag(frame.t, -1, "frame index does not advance by 1");
    }
    for (size_t j = 0; j < frame.agents.size(); ++j) {
      const AgentState& agent = frame.agents[j];
      if (j > 0 && agent.id == frame.agents[j - 1].id) {
        flag(frame.t, agent.id, "duplicate agent id in frame");
        continue;
      }
      const auto seen = first_class.emplace(agent.id, agent.cls).first;
      if (seen->second != agent.cls) {
        flag(frame.t, agent.id,
             std::string("class changed from ") + class_name(seen->second) +
                 " to " + class_name(agent.cls));
      }
      const double speed = norm(agent.velocity);
      const double cap = class_spec(agent.cls).max_speed + 1e-9;
      if (speed > cap) {
        flag(frame.t, agent.id,
             "speed " + std::to_string(speed) + " exceeds class limit " +
                 std::to_string(cap));
      }
    }
  }
  return out;
}

std::vector<Vec2> to_relative(const std::vector<Vec2>& positions) {
  if (positions.size() < 2) {
    throw std::invalid_argument("to_relative needs at least 2 positions");
  }
  std::vector<Vec2> out;
  out.reserve(positions.size() - 1);
  for (size_t i = 1; i < positions.size(); ++i) {
    out.push_back(positions[i] - positions[i - 1]);
  }
  return out;
}

std::vector<Vec2> from_relative(Vec2 origin, const std::vector<Vec2>& displacements) {
  std::vector<Vec2> out;
  out.reserve(displacements.size() + 1);
  out.push_back(origin);
  Vec2 p = origin;
  for (const Vec2& d : displacements) {
    p = p + d;
    out.push_back(p);
  }
  return out;
}

}  // namespace socgan
