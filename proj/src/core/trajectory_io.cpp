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

#include "socgan/core/trajectory_io.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "socgan/core/error.hpp"

namespace socgan {

namespace {

std::string at_line(const std::string& path, size_t line, const std::string& msg) {
  return path + ":" + std::to_string(line) + ": " + msg;
}

double parse_double(const std::string& token, const std::string& path, size_t line) {
  size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(token, &used);
  } catch (const std::exception&) {
    throw DataError(at_line(path, line, "bad number: " + token));
  }
  if (used != token.size()) {
    throw DataError(at_line(path, line, "bad number: " + token));
  }
  return v;
}

int parse_int(const std::string& token, const std::string& path, size_t line) {
  size_t used = 0;
  long v = 0;
  try {
    v = std::stol(token, &used);
  } catch (const std::exception&) {
    throw DataError(at_line(path, line, "bad integer: " + token));
  }
  if (used != token.size()) {
    throw DataError(at_line(path, line, "bad integer: " + token));
  }
  return static_cast<int>(v);
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    const size_t pos = line.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(line.substr(start));
      break;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string token;
  while (in >> token) out.push_back(token);
  return out;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path);
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write " + path);
  return out;
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

Scenario load_trajectory_file(const std::string& path) {
  std::ifstream in = open_input(path);

  std::string line;
  size_t lineno = 0;
  if (!std::getline(in, line)) throw DataError(at_line(path, 1, "empty file"));
  ++lineno;
  if (line.rfind("# dt=", 0) != 0) {
    throw DataError(at_line(path, 1, "missing '# dt=' header"));
  }
  Scenario scenario;
  scenario.dt = parse_double(line.substr(5), path, 1);
  if (!(scenario.dt > 0.0)) throw DataError(at_line(path, 1, "dt must be positive"));

  // frame index -> (agent id -> state), ordered for deterministic assembly
  std::map<int, std::map<int, AgentState>> table;

  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const std::vector<std::string> cols = split(line, '\t');
    if (cols.size() != 5) {
      throw DataError(at_line(path, lineno, "expected 5 tab-separated columns, got " +
                                                std::to_string(cols.size())));
    }
    const int t = parse_int(cols[0], path, lineno);
    const int id = parse_int(cols[1], path, lineno);
    AgentClass cls;
    try {
      cls = class_from_name(cols[2]);
    } catch (const DataError& e) {
      throw DataError(at_line(path, lineno, e.what()));
    }
    const double x = parse_double(cols[3], path, lineno);
    const double y = parse_double(cols[4], path, lineno);

    AgentState state;
    state.id = id;
    state.cls = cls;
    state.position = {x, y};
    if (!table[t].emplace(id, state).second) {
      throw DataError(at_line(path, lineno, "duplicate row for frame " + std::to_string(t) +
                                                " agent " + std::to_string(id)));
    }
  }

  scenario.frames.reserve(table.size());
  for (const auto& [t, agents] : table) {
    Frame frame;
    frame.t = t;
    for (const auto& [id, state] : agents) frame.agents.push_back(state);
    scenario.frames.push_back(std::move(frame));
  }
  scenario.derive_velocities();
  return scenario;
}

void write_trajectory_file(const Scenario& scenario, const std::string& path) {
  std::ofstream out = open_output(path);
  out << "# dt=" << format_double(scenario.dt) << "\n";
  for (const Frame& frame : scenario.frames) {
    for (const AgentState& agent : frame.agents) {
      out << frame.t << '\t' << agent.id << '\t' << class_name(agent.cls) << '\t'
          << format_double(agent.position.x) << '\t'
          << format_double(agent.position.y) << '\n';
    }
  }
}

std::vector<AcousticEvent> load_events_file(const std::string& path) {
  std::ifstream in = open_input(path);
  std::vector<AcousticEvent> events;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    const std::vector<std::string> cols = split_ws(line);
    if (cols.size() != 6) {
      throw DataError(at_line(path, lineno, "expected 6 columns, got " +
                                                std::to_string(cols.size())));
    }
    AcousticEvent event;
    event.t_start = parse_int(cols[0], path, lineno);
    event.t_end = parse_int(cols[1], path, lineno);
    event.origin = {parse_double(cols[2], path, lineno),
                    parse_double(cols[3], path, lineno)};
    event.intensity = parse_double(cols[4], path, lineno);
    try {
      event.category = category_from_name(cols[5]);
    } catch (const DataError& e) {
      throw DataError(at_line(path, lineno, e.what()));
    }
    events.push_back(event);
  }
  return events;
}

void write_events_file(const std::vector<AcousticEvent>& events, const std::string& path) {
  std::ofstream out = open_output(path);
  for (const AcousticEvent& event : events) {
    out << event.t_start << ' ' << event.t_end << ' '
        << format_double(event.origin.x) << ' ' << format_double(event.origin.y) << ' '
        << format_double(event.intensity) << ' ' << category_name(event.category) << '\n';
  }
}

ObstacleMap load_map_file(const std::string& path) {
  std::ifstream in = open_input(path);
  std::string line;
  if (!std::getline(in, line)) throw DataError(at_line(path, 1, "empty file"));
  const std::vector<std::string> head = split_ws(line);
  if (head.size() != 5) {
    throw DataError(at_line(path, 1, "expected 'origin_x origin_y cell_size rows cols'"));
  }
  ObstacleMap map;
  map.origin = {parse_double(head[0], path, 1), parse_double(head[1], path, 1)};
  map.cell_size = parse_double(head[2], path, 1);
  map.rows = parse_int(head[3], path, 1);
  map.cols = parse_int(head[4], path, 1);
  if (!(map.cell_size > 0.0) || map.rows < 1 || map.cols < 1) {
    throw DataError(at_line(path, 1, "bad map header"));
  }
  map.occupied.reserve(static_cast<size_t>(map.rows) * map.cols);
  size_t lineno = 1;
  for (int r = 0; r < map.rows; ++r) {
    if (!std::getline(in, line)) {
      throw DataError(at_line(path, lineno + 1, "missing map row"));
    }
    ++lineno;
    const std::vector<std::string> cells = split_ws(line);
    if (cells.size() != static_cast<size_t>(map.cols)) {
      throw DataError(at_line(path, lineno, "expected " + std::to_string(map.cols) +
                                                " cells, got " +
                                                std::to_string(cells.size())));
    }
    for (const std::string& cell : cells) {
      if (cell != "0" && cell != "1") {
        throw DataError(at_line(path, lineno, "map cells must be 0 or 1"));
      }
      map.occupied.push_back(cell == "1" ? 1 : 0);
    }
  }
  return map;
}

void write_map_file(const ObstacleMap& map, const std::string& path) {
  std::ofstream out = open_output(path);
  out << format_double(map.origin.x) << ' ' << format_double(map.origin.y) << ' '
      << format_double(map.cell_size) << ' ' << map.rows << ' ' << map.cols << '\n';
  for (int r = 0; r < map.rows; ++r) {
    for (int c = 0; c < map.cols; ++c) {
      out << (map.cell_occupied(r, c) ? '1' : '0') << (c + 1 == map.cols ? '\n' : ' ');
    }
  }
}

std::vector<Scenario> load_scenario_dir(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw DataError("not a directory: " + dir);
  std::vector<std::string> stems;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".tsv") {
      stems.push_back((entry.path().parent_path() / entry.path().stem()).string());
    }
  }
  std::sort(stems.begin(), stems.end());
  if (stems.empty()) throw DataError("no .tsv scenarios in " + dir);

  std::vector<Scenario> out;
  out.reserve(stems.size());
  for (const std::string& stem : stems) {
    Scenario scenario = load_trajectory_file(stem + ".tsv");
    if (fs::exists(stem + ".events")) {
      scenario.events = load_events_file(stem + ".events");
    }
    if (fs::exists(stem + ".map")) {
      scenario.map = load_map_file(stem + ".map");
    }
    out.push_back(std::move(scenario));
  }
  return out;
}

void write_scenario_dir(const std::vector<Scenario>& scenarios, const std::string& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw DataError("cannot create directory " + dir);
  for (size_t i = 0; i < scenarios.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof(name), "scenario_%03zu", i);
    const std::string stem = (fs::path(dir) / name).string();
    write_trajectory_file(scenarios[i], stem + ".tsv");
    write_events_file(scenarios[i].events, stem + ".events");
    write_map_file(scenarios[i].map, stem + ".map");
  }
}

}  // namespace socgan
