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

#ifndef SOCGAN_CORE_TYPES_HPP
#define SOCGAN_CORE_TYPES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "socgan/core/vec2.hpp"

namespace socgan {

enum class AgentClass { kPedestrian, kCyclist, kSkater, kRobot };

inline constexpr int kNumAgentClasses = 4;

struct ClassSpec {
  double radius;      // m
  double pref_speed;  // m/s
  double max_speed;   // m/s
};

const ClassSpec& class_spec(AgentClass cls);
const char* class_name(AgentClass cls);

/// Parses a class column value; throws DataError on unknown names.
AgentClass class_from_name(const std::string& name);

/// One agent at one frame. The class rides along per frame so that
/// inconsistent input files stay representable; validate_scenario flags
/// agents whose class changes between frames.
struct AgentState {
  int id = 0;
  AgentClass cls = AgentClass::kPedestrian;
  Vec2 position;
  Vec2 velocity;
};

/// One simulation tick: agents kept sorted by id.
struct Frame {
  int t = 0;
  std::vector<AgentState> agents;

  const AgentState* find(int id) const;
  AgentState* find(int id);
  void insert(const AgentState& state);
};

enum class EventCategory { kSiren, kMusic, kChatter };

inline constexpr int kNumEventCategories = 3;

const char* category_name(EventCategory cat);
EventCategory category_from_name(const std::string& name);

/// Point sound source, active on the closed frame interval [t_start, t_end].
struct AcousticEvent {
  Vec2 origin;
  double intensity = 1.0;
  EventCategory category = EventCategory::kSiren;
  int t_start = 0;
  int t_end = 0;

  bool active_at(int frame) const { return frame >= t_start && frame <= t_end; }
};

/// Axis-aligned occupancy grid. Row r, column c covers the square
/// [origin + c*cell, origin + (c+1)*cell) x [origin + r*cell, origin + (r+1)*cell).
struct ObstacleMap {
  Vec2 origin;
  double cell_size = 1.0;
  int rows = 1;
  int cols = 1;
  std::vector<uint8_t> occupied;  // row-major rows*cols, values 0/1

  bool cell_occupied(int r, int c) const {
    return occupied[static_cast<size_t>(r) * cols + c] != 0;
  }

  /// World-point query; everything outside the grid counts as occupied.
  bool occupied_at(Vec2 p) const;

  Vec2 cell_center(int r, int c) const {
    return {origin.x + (c + 0.5) * cell_size, origin.y + (r + 0.5) * cell_size};
  }

  static ObstacleMap open_area(Vec2 origin, double cell_size, int rows, int cols);
};

struct Scenario {
  double dt = 0.4;
  std::vector<Frame> frames;
  ObstacleMap map = ObstacleMap::open_area({-50.0, -50.0}, 1.0, 100, 100);
  std::vector<AcousticEvent> events;

  double time_of(int frame_index) const { return frame_index * dt; }

  /// Rewrites every velocity as the backward difference of positions
  /// ((p[t] - p[t-1]) / dt; zero where the agent has no previous frame).
  /// Velocities are derived state: files carry positions only, and this
  /// keeps in-memory scenarios identical across a save/load round trip.
  void derive_velocities();
};

/// One neighbor visible throughout a sample's observed window.
struct NeighborTrack {
  int agent_id = 0;
  AgentClass cls = AgentClass::kPedestrian;
  std::vector<Vec2> observed;    // T_obs positions
  std::vector<double> crop;      // flattened G*G occupancy at last observed position
  std::vector<double> acoustic;  // acoustic feature vector at last observed step
};

/// One training/evaluation unit: an agent's observed window plus ground truth.
struct Sample {
  int scenario_id = 0;
  int agent_id = 0;
  int start_frame = 0;
  AgentClass cls = AgentClass::kPedestrian;
  double dt = 0.4;
  std::vector<Vec2> observed;                  // T_obs positions
  std::vector<Vec2> future;                    // T_pred positions
  std::vector<double> crop;                    // center crop at last observed position
  std::vector<std::vector<double>> acoustic;   // per observed step feature vectors
  std::vector<NeighborTrack> neighbors;

  Vec2 origin() const { return observed.back(); }
  Vec2 last_step() const {
    const size_t n = observed.size();
    return n >= 2 ? observed[n - 1] - observed[n - 2] : Vec2{0.0, 0.0};
  }
};

}  // namespace socgan

#endif  // SOCGAN_CORE_TYPES_HPP
