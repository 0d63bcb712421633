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

#ifndef SOCGAN_SIM_ARCHETYPES_HPP
#define SOCGAN_SIM_ARCHETYPES_HPP

#include <utility>

#include "socgan/core/rng.hpp"
#include "socgan/sim/simulator.hpp"

namespace socgan {

// Parameterized scenario families. Each builder consumes the rng (jittered
// geometry) and runs the crowd simulation, so equal rng states give
// bit-identical scenarios.

/// Two pedestrians crossing at right angles near the origin.
Scenario make_crossing(Rng& rng, const SimParams& params);

/// `agents` pedestrians spread on a circle, each heading to its antipode.
Scenario make_circle_swap(Rng& rng, int agents, const SimParams& params);

/// Opposing pedestrian/robot flows in a walled corridor along x; carries an
/// inert Music event so real datasets exercise non-Siren categories.
Scenario make_corridor(Rng& rng, int agents, const SimParams& params);

/// Two pedestrians walking abreast toward +x; a strong Siren switches on
/// mid-run close to their path and shoves them off course. Returns a matched
/// pair: first with the siren active, second the silent twin with identical
/// geometry and no events.
std::pair<Scenario, Scenario> make_siren_pair(Rng& rng,
                                              const SimParams& params);

/// One agent walking a perfectly straight line (far goal, empty ground).
Scenario make_constant_velocity(Rng& rng, const SimParams& params);

struct MixConfig {
  int crossing = 8;
  int circle_swap = 6;
  int corridor = 6;
  int siren = 6;
  int cv = 4;
  int agents_min = 2;   // circle-swap / corridor population range
  int agents_max = 8;
  uint64_t seed = 7;
  SimParams sim;
};

/// Composes the archetype mix in a fixed order (cv, crossing, circle_swap,
/// corridor, siren), each scenario on its own derived rng stream, so the
/// output is deterministic per seed and independent of the mix counts of
/// other archetypes.
std::vector<Scenario> make_dataset(const MixConfig& mix);

}  // namespace socgan

#endif  // SOCGAN_SIM_ARCHETYPES_HPP
