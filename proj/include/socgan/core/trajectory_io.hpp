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

#ifndef SOCGAN_CORE_TRAJECTORY_IO_HPP
#define SOCGAN_CORE_TRAJECTORY_IO_HPP

#include <string>
#include <vector>

#include "socgan/core/types.hpp"

namespace socgan {

// Trajectory TSV: first line "# dt=<decimal>", then one row per
// (frame, agent): frame_id TAB agent_id TAB class_name TAB x TAB y.
// Floats are written with 17 significant digits so doubles round-trip
// exactly. Velocities are not stored; loading re-derives them from
// position differences.

/// Throws DataError with "<path>:<line>: <message>" on malformed input.
Scenario load_trajectory_file(const std::string& path);

void write_trajectory_file(const Scenario& scenario, const std::string& path);

// Events file: one event per line, "t_start t_end x y intensity category",
// where t_start/t_end are inclusive frame indices.
std::vector<AcousticEvent> load_events_file(const std::string& path);
void write_events_file(const std::vector<AcousticEvent>& events, const std::string& path);

// Map file: header "origin_x origin_y cell_size rows cols", then rows lines
// of cols 0/1 tokens.
ObstacleMap load_map_file(const std::string& path);
void write_map_file(const ObstacleMap& map, const std::string& path);

/// Loads every *.tsv under dir (lexicographic order) together with optional
/// sibling .events and .map files sharing the basename.
std::vector<Scenario> load_scenario_dir(const std::string& dir);

/// Writes scenario_NNN.tsv/.events/.map triples under dir.
void write_scenario_dir(const std::vector<Scenario>& scenarios, const std::string& dir);

/// Formats a double with 17 significant digits (exact round trip).
std::string format_double(double v);

}  // namespace socgan

#endif  // SOCGAN_CORE_TRAJECTORY_IO_HPP
