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

#include "socgan/sim/archetypes.hpp"

#include <algorithm>
#include <cmath>

namespace socgan {

namespace {

constexpr double kTau = 6.283185307179586476925286766559;

ObstacleMap open_ground() {
  return ObstacleMap::open_area({-50.0, -50.0}, 1.0, 100, 100);
}

}  // namespace

Scenario make_crossing(Rng& rng, const SimParams& params) {
  const double reach_a = rng.uniform(5.0, 8.0);
  const double reach_b = rng.uniform(5.0, 8.0);
  const double off_a = rng.uniform(-0.8, 0.8);
  const double off_b = rng.uniform(-0.8, 0.8);

  std::vector<SimAgent> agents;
  agents.push_back({1, AgentClass::kPedestrian,
                    {-reach_a, off_a},
                    {reach_a, off_a}});
  agents.push_back({2, AgentClass::kPedestrian,
                    {off_b, -reach_b},
                    {off_b, reach_b}});
  return simulate(agents, open_ground(), {}, params);
}

Scenario make_circle_swap(Rng& rng, int agents, const SimParams& params) {
  const double phase = rng.uniform(0.0, kTau);

  // Per-agent radii, angular jitter, and a slower-class minority stagger the
  // center crossings over a couple of seconds. A shared radius would march
  // every agent into the origin on the same frame — a scrum that a sampled
  // reciprocal chooser cannot resolve cleanly and that no real crowd shows.
  std::vector<SimAgent> spec;
  for (int i = 0; i < agents; ++i) {
    const double radius = rng.uniform(4.5, 6.5);
    const double angle =
        phase + kTau * i / agents + rng.uniform(-0.15, 0.15);
    const AgentClass cls =
        rng.uniform01() < 0.25 ? AgentClass::kRobot : AgentClass::kPedestrian;
    const Vec2 start{radius * std::cos(angle), radius * std::sin(angle)};
    spec.push_back({i + 1, cls, start, start * -1.0});
  }
  return simulate(spec, open_ground(), {}, params);
}

Scenario make_corridor(Rng& rng, int agents, const SimParams& params) {
  // Walled corridor: free channel y in [-2, 2), 2 m thick walls either side.
  ObstacleMap map = ObstacleMap::open_area({-10.0, -4.0}, 1.0, 8, 20);
  for (int c = 0; c < map.cols; ++c) {
    for (const int r : {0, 1, 6, 7}) {
      map.occupied[static_cast<size_t>(r) * map.cols + c] = 1;
    }
  }

  // Staggered lanes keep both the starting grid and the goal points at
  // least a meter apart, so latched arrivals can never freeze overlapping.
  const int rightward = (agents + 1) / 2;
  std::vector<SimAgent> spec;
  for (int i = 0; i < agents; ++i) {
    const bool to_right = i < rightward;
    const int lane = to_right ? i : i - rightward;
    const double side = to_right ? -1.0 : 1.0;
    const double slot_y = -1.0 + 1.0 * (lane % 3);
    const double x0 = side * (6.0 + 1.0 * lane) + rng.uniform(-0.2, 0.2);
    const double y0 = slot_y + rng.uniform(-0.15, 0.15);
    const double gx = -side * (6.8 + 1.0 * lane) + rng.uniform(-0.1, 0.1);
    const double gy = slot_y + rng.uniform(-0.1, 0.1);
    const AgentClass cls =
        rng.uniform01() < 0.25 ? AgentClass::kRobot : AgentClass::kPedestrian;
    spec.push_back({i + 1, cls, {x0, y0}, {gx, gy}});
  }

  std::vector<AcousticEvent> events;
  events.push_back({{rng.uniform(-5.0, 5.0), rng.uniform(-1.5, 1.5)},
                    1.0,
                    EventCategory::kMusic,
                    0,
                    params.horizon});
  return simulate(spec, map, events, params);
}

std::pair<Scenario, Scenario> make_siren_pair(Rng& rng,
                                              const SimParams& params) {
  const double gap = rng.uniform(1.5, 2.5);
  const double y_mid = rng.uniform(-0.5, 0.5);

  std::vector<SimAgent> agents;
  agents.push_back({1, AgentClass::kPedestrian,
                    {-6.0 + rng.uniform(-0.5, 0.5), y_mid + gap / 2.0},
                    {8.0, y_mid + gap / 2.0}});
  agents.push_back({2, AgentClass::kPedestrian,
                    {-6.0 + rng.uniform(-0.5, 0.5), y_mid - gap / 2.0},
                    {8.0, y_mid - gap / 2.0}});

  std::vector<AcousticEvent> events;
  AcousticEvent siren;
  siren.origin = {rng.uniform(-1.0, 3.0), y_mid + rng.uniform(-1.5, 1.5)};
  siren.intensity = rng.uniform(25.0, 45.0);
  siren.category = EventCategory::kSiren;
  siren.t_start = rng.uniform_int(6, 10);  // switches on inside observed spans
  siren.t_end = params.horizon;
  events.push_back(siren);

  // The silent twin shares every drawn quantity, so the halves differ only
  // in the events list (and in whatever motion the siren itself causes).
  // Matched halves give a learner a clean with/without contrast.
  return {simulate(agents, open_ground(), events, params),
          simulate(agents, open_ground(), {}, params)};
}

Scenario make_constant_velocity(Rng& rng, const SimParams& params) {
  const Vec2 start{rng.uniform(-8.0, 8.0), rng.uniform(-8.0, 8.0)};
  const double heading = rng.uniform(0.0, kTau);
  const AgentClass cls =
      rng.uniform01() < 0.5 ? AgentClass::kPedestrian : AgentClass::kRobot;
  // A goal far beyond the horizon keeps the preferred velocity saturated at
  // the class speed, so the track is a uniform straight line.
  const Vec2 dir{std::cos(heading), std::sin(heading)};
  std::vector<SimAgent> agents;
  agents.push_back({1, cls, start, start + dir * 1000.0});
  return simulate(agents, open_ground(), {}, params);
}

std::vector<Scenario> make_dataset(const MixConfig& mix) {
  const uint64_t base = Rng::derive(mix.seed, static_cast<uint64_t>(RngStream::kSimulate));
  uint64_t index = 0;
  const auto next_rng = [&base, &index] { return Rng(Rng::derive(base, index++)); };

  std::vector<Scenario> out;
  out.reserve(static_cast<size_t>(mix.cv) + mix.crossing + mix.circle_swap +
              mix.corridor + 2 * static_cast<size_t>(mix.siren));
  for (int i = 0; i < mix.cv; ++i) {
    Rng rng = next_rng();
    out.push_back(make_constant_velocity(rng, mix.sim));
  }
  for (int i = 0; i < mix.crossing; ++i) {
    Rng rng = next_rng();
    out.push_back(make_crossing(rng, mix.sim));
  }
  for (int i = 0; i < mix.circle_swap; ++i) {
    Rng rng = next_rng();
    const int n = std::clamp(2 + static_cast<int>(rng.next_u64() %
                                                  static_cast<uint64_t>(
                                                      std::max(1, mix.agents_max - 1))),
                             mix.agents_min, mix.agents_max);
    out.push_back(make_circle_swap(rng, n, mix.sim));
  }
  for (int i = 0; i < mix.corridor; ++i) {
    Rng rng = next_rng();
    const int n = std::clamp(2 + static_cast<int>(rng.next_u64() %
                                                  static_cast<uint64_t>(
                                                      std::max(1, mix.agents_max - 1))),
                             mix.agents_min, mix.agents_max);
    out.push_back(make_corridor(rng, n, mix.sim));
  }
  for (int i = 0; i < mix.siren; ++i) {
    Rng rng = next_rng();
    auto pair = make_siren_pair(rng, mix.sim);
    out.push_back(std::move(pair.first));
    out.push_back(std::move(pair.second));
  }
  return out;
}

}  // namespace socgan
