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

#include "socgan/sim/rvo.hpp"

#include <cmath>
#include <limits>

namespace socgan {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTie = 1e-9;
constexpr double kPi = 3.141592653589793238462643383279502884;

/// Rotation commutes exactly with negation (every term flips sign), which
/// keeps head-on symmetric runs bit-symmetric.
Vec2 rotate(Vec2 v, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {v.x * c - v.y * s, v.x * s + v.y * c};
}

}  // namespace

double time_to_collision(Vec2 p_rel, Vec2 v_rel, double r_sum) {
  const double c = norm_sq(p_rel) - r_sum * r_sum;
  if (c < 0.0) return 0.0;  // already overlapping
  const double a = norm_sq(v_rel);
  if (a == 0.0) return kInf;
  const double b = 2.0 * dot(p_rel, v_rel);
  const double disc = b * b - 4.0 * a * c;
  if (disc < 0.0) return kInf;
  const double t = (-b - std::sqrt(disc)) / (2.0 * a);
  return t >= 0.0 ? t : kInf;
}

Vec2 preferred_velocity(Vec2 position, Vec2 goal, AgentClass cls,
                        const std::vector<AcousticEvent>& events, int frame,
                        const SimParams& params) {
  Vec2 v{0.0, 0.0};
  const Vec2 to_goal = goal - position;
  const double dist = norm(to_goal);
  if (dist >= params.arrive_radius) {
    const double speed = std::min(class_spec(cls).pref_speed, dist / params.dt);
    v = unit(to_goal) * speed;
  }
  for (const AcousticEvent& event : events) {
    if (event.category != EventCategory::kSiren || !event.active_at(frame)) {
      continue;
    }
    const Vec2 away = position - event.origin;
    const double a = event.intensity / (1.0 + norm_sq(away));
    if (a > params.acoustic_threshold) {
      v = v + unit(away) * (params.acoustic_gain * a);
    }
  }
  return v;
}

Vec2 rvo_choose_velocity(Vec2 position, Vec2 v_current, Vec2 v_pref,
                         double radius, double max_speed,
                         const std::vector<RvoNeighbor>& neighbors,
                         const SimParams& params) {
  std::vector<Vec2> candidates;
  candidates.reserve(2 + static_cast<size_t>(params.candidate_rings) *
                             params.candidates_per_ring);
  candidates.push_back(v_pref);
  candidates.push_back({0.0, 0.0});
  const Vec2 base = norm(v_pref) > 1e-12 ? unit(v_pref) : Vec2{1.0, 0.0};
  for (int k = 1; k <= params.candidate_rings; ++k) {
    const double speed = max_speed * k / params.candidate_rings;
    for (int j = 0; j < params.candidates_per_ring / 2; ++j) {
      const double angle = (2.0 * j + 1.0) * kPi / params.candidates_per_ring;
      candidates.push_back(rotate(base, angle) * speed);
      candidates.push_back(rotate(base, -angle) * speed);
    }
  }

  const auto penalty_of = [&](Vec2 v) {
    double t_min = kInf;
    const Vec2 v_eff = v * 2.0 - v_current;  // reciprocity: others avoid too
    for (const RvoNeighbor& n : neighbors) {
      // p_rel tracks neighbor minus self, so its rate of change is the
      // neighbor's velocity minus ours.
      const double t = time_to_collision(n.position - position,
                                         n.velocity - v_eff, radius + n.radius);
      if (t < t_min) t_min = t;
    }
    return params.w / t_min + norm(v - v_pref);
  };

  Vec2 best = candidates[0];
  double best_penalty = penalty_of(best);
  for (size_t i = 1; i < candidates.size(); ++i) {
    const Vec2 v = candidates[i];
    const double penalty = penalty_of(v);
    const bool tie = (std::isinf(penalty) && std::isinf(best_penalty)) ||
                     std::abs(penalty - best_penalty) <= kTie;
    bool take = false;
    if (!tie) {
      take = penalty < best_penalty;
    } else {
      const double d_new = norm(v - v_pref);
      const double d_best = norm(best - v_pref);
      if (std::abs(d_new - d_best) > kTie) {
        take = d_new < d_best;
      } else {
        const bool right_new = cross(v_pref, v) < 0.0;
        const bool right_best = cross(v_pref, best) < 0.0;
        take = right_new && !right_best;  // equal-right keeps the earlier one
      }
    }
    if (take) {
      best = v;
      best_penalty = penalty;
    }
  }
  return best;
}

}  // namespace socgan
