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

#include "socgan/sim/simulator.hpp"

#include <algorithm>
#include <cmath>

namespace socgan {

namespace {

struct LiveAgent {
  SimAgent spec;
  Vec2 position;
  Vec2 velocity{0.0, 0.0};
  bool arrived = false;
};

// Reported neighbor discs are capped strictly inside the current separation.
// Without the cap, a breach of the safety buffer makes every candidate's
// time-to-collision zero at once, the urgency term saturates at infinity for
// the whole set, and the tie-break walks the agent straight through its
// neighbor. Keeping the disc a hair inside the separation leaves the term
// finite and ordered, so separating candidates always outrank compressing
// ones and a breached buffer heals instead of deepening.
constexpr double kReportGap = 1e-3;

double reported_radius(double nominal, double distance, double self_radius) {
  return std::max(kReportGap,
                  std::min(nominal, distance - self_radius - kReportGap));
}

void append_obstacle_discs(const ObstacleMap& map, Vec2 position,
                           double self_radius, double reach,
                           std::vector<RvoNeighbor>& out) {
  const double disc_radius = map.cell_size / std::sqrt(2.0);
  // Only cells whose center can be within reach matter; clamp the scan box.
  const int c_lo = std::max(
      0, static_cast<int>(std::floor((position.x - reach - map.origin.x) /
                                     map.cell_size)));
  const int c_hi = std::min(
      map.cols - 1, static_cast<int>(std::floor(
                        (position.x + reach - map.origin.x) / map.cell_size)));
  const int r_lo = std::max(
      0, static_cast<int>(std::floor((position.y - reach - map.origin.y) /
                                     map.cell_size)));
  const int r_hi = std::min(
      map.rows - 1, static_cast<int>(std::floor(
                        (position.y + reach - map.origin.y) / map.cell_size)));
  for (int r = r_lo; r <= r_hi; ++r) {
    for (int c = c_lo; c <= c_hi; ++c) {
      if (!map.cell_occupied(r, c)) continue;
      const Vec2 center = map.cell_center(r, c);
      const double d = norm(center - position);
      if (d <= reach) {
        out.push_back(
            {center, {0.0, 0.0}, reported_radius(disc_radius, d, self_radius)});
      }
    }
  }
}

}  // namespace

Scenario simulate(const std::vector<SimAgent>& agents, const ObstacleMap& map,
                  const std::vector<AcousticEvent>& events,
                  const SimParams& params) {
  Scenario scenario;
  scenario.dt = params.dt;
  scenario.map = map;
  scenario.events = events;

  std::vector<LiveAgent> live;
  live.reserve(agents.size());
  for (const SimAgent& spec : agents) {
    live.push_back({spec, spec.start, {0.0, 0.0}, false});
  }

  const auto snapshot = [&](int t) {
    Frame frame;
    frame.t = t;
    for (const LiveAgent& agent : live) {
      frame.insert({agent.spec.id, agent.spec.cls, agent.position,
                    agent.velocity});
    }
    scenario.frames.push_back(std::move(frame));
  };

  snapshot(0);
  for (int t = 1; t < params.horizon; ++t) {
    // Choices read the frame t-1 state; commits are synchronous.
    std::vector<Vec2> chosen(live.size(), Vec2{0.0, 0.0});
    for (size_t i = 0; i < live.size(); ++i) {
      LiveAgent& agent = live[i];
      if (!agent.arrived &&
          norm(agent.spec.goal - agent.position) < params.arrive_radius) {
        agent.arrived = true;
      }
      if (agent.arrived) continue;  // latched at the goal

      const ClassSpec& spec = class_spec(agent.spec.cls);
      // A strong siren can push the raw preference past the class limit;
      // the physical cap applies to whatever the agent actually drives.
      const Vec2 v_pref = clamp_norm(
          preferred_velocity(agent.position, agent.spec.goal, agent.spec.cls,
                             events, t - 1, params),
          spec.max_speed);

      std::vector<RvoNeighbor> neighbors;
      for (size_t j = 0; j < live.size(); ++j) {
        if (j == i) continue;
        const double d = norm(live[j].position - agent.position);
        if (d <= params.neighbor_radius) {
          // Buffer the reported radius so grazing passes read as collisions
          // and the chooser keeps real clearance around the true discs.
          const double buffered =
              class_spec(live[j].spec.cls).radius + params.safety_margin;
          neighbors.push_back({live[j].position, live[j].velocity,
                               reported_radius(buffered, d, spec.radius)});
        }
      }
      append_obstacle_discs(map, agent.position, spec.radius,
                            params.neighbor_radius, neighbors);

      chosen[i] = rvo_choose_velocity(agent.position, agent.velocity, v_pref,
                                      spec.radius, spec.max_speed, neighbors,
                                      params);
    }
    // Contact brake: the chooser steers on predictions, but both members of
    // a pair predict against the other's stale velocity, so two simultaneous
    // near-tangent picks can still sweep their discs together inside one
    // step. Before committing, scale down the steps of any pair whose swept
    // discs would touch (first-contact root of the relative-motion
    // quadratic), iterating because a shortened step can expose a new pair.
    // Separation >= contact at frame t is the inductive invariant: zero
    // steps always restore it, so the loop has a fixpoint. Scales only
    // shrink, so class speed caps survive, and both members of a pair brake
    // by the same factor, which preserves pair symmetry.
    std::vector<double> step_scale(live.size(), 1.0);
    bool braked = true;
    for (int pass = 0; pass < 16 && braked; ++pass) {
      braked = false;
      for (size_t i = 0; i < live.size(); ++i) {
        for (size_t j = i + 1; j < live.size(); ++j) {
          const Vec2 x_rel = live[j].position - live[i].position;
          const Vec2 u_rel = (chosen[j] * step_scale[j] -
                              chosen[i] * step_scale[i]) *
                             params.dt;
          const double contact = class_spec(live[i].spec.cls).radius +
                                 class_spec(live[j].spec.cls).radius + 1e-6;
          const double a = norm_sq(u_rel);
          if (a == 0.0) continue;  // no relative motion this step
          const double b = 2.0 * dot(x_rel, u_rel);
          const double c = norm_sq(x_rel) - contact * contact;
          if (c < 0.0) {  // should be unreachable under the invariant
            step_scale[i] = step_scale[j] = 0.0;
            braked = true;
            continue;
          }
          const double disc = b * b - 4.0 * a * c;
          if (disc < 0.0) continue;  // swept discs never reach contact
          const double g = (-b - std::sqrt(disc)) / (2.0 * a);
          if (g >= 0.0 && g <= 1.0) {
            const double back = g * (1.0 - 1e-3);  // stop just short
            step_scale[i] *= back;
            step_scale[j] *= back;
            braked = true;
          }
        }
      }
    }
    for (size_t i = 0; i < live.size(); ++i) {
      live[i].velocity = chosen[i] * step_scale[i];
      live[i].position = live[i].position + live[i].velocity * params.dt;
    }
    snapshot(t);
  }

  scenario.derive_velocities();
  return scenario;
}

OverlapStats overlap_stats(const Scenario& scenario) {
  OverlapStats stats;
  for (const Frame& frame : scenario.frames) {
    for (size_t i = 0; i < frame.agents.size(); ++i) {
      for (size_t j = i + 1; j < frame.agents.size(); ++j) {
        const AgentState& a = frame.agents[i];
        const AgentState& b = frame.agents[j];
        const double d = norm(a.position - b.position);
        const double r_sum =
            class_spec(a.cls).radius + class_spec(b.cls).radius;
        ++stats.pair_timesteps;
        if (d < r_sum) ++stats.overlaps;
        const double ratio = d / r_sum;
        if (ratio < stats.min_ratio) stats.min_ratio = ratio;
      }
    }
  }
  return stats;
}

}  // namespace socgan
