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

#include "socgan/core/types.hpp"

#include <algorithm>
#include <cmath>

#include "socgan/core/error.hpp"

namespace socgan {

namespace {

constexpr ClassSpec kClassTable[kNumAgentClasses] = {
    {0.3, 1.3, 1.8},    // Pedestrian
    {0.5, 3.5, 5.0},    // Cyclist
    {0.4, 2.5, 4.0},    // Skater
    {0.35, 1.0, 1.5},   // Robot
};

constexpr const char* kClassNames[kNumAgentClasses] = {
    "Pedestrian", "Cyclist", "Skater", "Robot"};

constexpr const char* kCategoryNames[kNumEventCategories] = {
    "Siren", "Music", "Chatter"};

bool id_less(const AgentState& a, int id) { return a.id < id; }

}  // namespace

const ClassSpec& class_spec(AgentClass cls) {
  return kClassTable[static_cast<int>(cls)];
}

const char* class_name(AgentClass cls) {
  return kClassNames[static_cast<int>(cls)];
}

AgentClass class_from_name(const std::string& name) {
  for (int i = 0; i < kNumAgentClasses; ++i) {
    if (name == kClassNames[i]) return static_cast<AgentClass>(i);
  }
  throw DataError("unknown agent class: " + name);
}

const char* category_name(EventCategory cat) {
  return kCategoryNames[static_cast<int>(cat)];
}

EventCategory category_from_name(const std::string& name) {
  for (int i = 0; i < kNumEventCategories; ++i) {
    if (name == kCategoryNames[i]) return static_cast<EventCategory>(i);
  }
  throw DataError("unknown event category: " + name);
}

const AgentState* Frame::find(int id) const {
  const auto it = std::lower_bound(agents.begin(), agents.end(), id, id_less);
  if (it == agents.end() || it->id != id) return nullptr;
  return &*it;
}

AgentState* Frame::find(int id) {
  const auto it = std::lower_bound(agents.begin(), agents.end(), id, id_less);
  if (it == agents.end() || it->id != id) return nullptr;
  return &*it;
}

void Frame::insert(const AgentState& state) {
  const auto it = std::lower_bound(agents.begin(), agents.end(), state.id, id_less);
  agents.insert(it, state);
}

bool ObstacleMap::occupied_at(Vec2 p) const {
  const double fx = (p.x - origin.x) / cell_size;
  const double fy = (p.y - origin.y) / cell_size;
  const int c = static_cast<int>(std::floor(fx));
  const int r = static_cast<int>(std::floor(fy));
  if (r < 0 || r >= rows || c < 0 || c >= cols) return true;
  return cell_occupied(r, c);
}

ObstacleMap ObstacleMap::open_area(Vec2 origin, double cell_size, int rows, int cols) {
  ObstacleMap map;
  map.origin = origin;
  map.cell_size = cell_size;
  map.rows = rows;
  map.cols = cols;
  map.occupied.assign(static_cast<size_t>(rows) * cols, 0);
  return map;
}

void Scenario::derive_velocities() {
  for (size_t i = 0; i < frames.size(); ++i) {
    Frame& frame = frames[i];
    const Frame* prev = i > 0 ? &frames[i - 1] : nullptr;
    for (AgentState& agent : frame.agents) {
      const AgentState* before = prev ? prev->find(agent.id) : nullptr;
      agent.velocity = before ? (agent.position - before->position) / dt
                              : Vec2{0.0, 0.0};
    }
  }
}

}  // namespace socgan
