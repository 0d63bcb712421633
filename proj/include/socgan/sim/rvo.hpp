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

#ifndef SOCGAN_SIM_RVO_HPP
#define SOCGAN_SIM_RVO_HPP

#include <vector>

#include "socgan/core/types.hpp"

namespace socgan {

struct SimParams {
  double dt = 0.4;
  double w = 2.0;                    // collision-penalty weight, m^2/s
  double neighbor_radius = 5.0;      // m
  double acoustic_gain = 1.0;        // repulsion per attenuated intensity
  double acoustic_threshold = 0.1;   // attenuated intensity floor
  int candidate_rings = 4;
  int candidates_per_ring = 16;      // sampled as mirror pairs about v_pref
  int horizon = 40;                  // frames per scenario, initial included
  double arrive_radius = 0.2;        // m, goal latch distance
  double safety_margin = 0.2;        // m, added to neighbor radii in the sim
};

/// Smallest t >= 0 at which two constant-velocity discs with center offset
/// p_rel, relative velocity v_rel, and summed radius r_sum touch; 0 when
/// already overlapping, +infinity when they never do.
double time_to_collision(Vec2 p_rel, Vec2 v_rel, double r_sum);

/// Goal-seeking velocity at the class preferred speed, slowed to arrive
/// (at most distance/dt) and zero inside the arrival radius, plus repulsion
/// g_a * a * unit(position - origin) from every active Siren event whose
/// attenuated intensity a = I0 / (1 + d^2) clears the threshold. Music and
/// Chatter never push.
Vec2 preferred_velocity(Vec2 position, Vec2 goal, AgentClass cls,
                        const std::vector<AcousticEvent>& events, int frame,
                        const SimParams& params);

/// One disc the chooser must avoid: another agent or a static obstacle cell
/// (zero velocity).
struct RvoNeighbor {
  Vec2 position;
  Vec2 velocity;
  double radius;
};

/// Sampled reciprocal velocity obstacles: evaluates v_pref, the zero
/// velocity, and candidate_rings rings of candidates_per_ring directions
/// (mirror pairs about the v_pref direction, speeds k/rings * max_speed) by
/// penalty w / t_c + |v' - v_pref|, where t_c is the earliest collision of
/// the reciprocal velocity 2 v' - v_current against any neighbor. Ties
/// within 1e-9 (or both penalties infinite) prefer the candidate closer to
/// v_pref, then the one to the right of v_pref, then the earlier candidate.
Vec2 rvo_choose_velocity(Vec2 position, Vec2 v_current, Vec2 v_pref,
                         double radius, double max_speed,
                         const std::vector<RvoNeighbor>& neighbors,
                         const SimParams& params);

}  // namespace socgan

#endif  // SOCGAN_SIM_RVO_HPP
