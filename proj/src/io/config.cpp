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

#include "socgan/io/config.hpp"

#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <vector>

namespace socgan {
namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    size_t used = 0;
    double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("bad value for " + key + ": '" + value + "'");
  }
}

int parse_int(const std::string& key, const std::string& value) {
  try {
    size_t used = 0;
    long long v = std::stoll(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return static_cast<int>(v);
  } catch (const std::exception&) {
    throw ConfigError("bad value for " + key + ": '" + value + "'");
  }
}

uint64_t parse_u64(const std::string& key, const std::string& value) {
  try {
    size_t used = 0;
    unsigned long long v = std::stoull(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return static_cast<uint64_t>(v);
  } catch (const std::exception&) {
    throw ConfigError("bad value for " + key + ": '" + value + "'");
  }
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// Single table driving parse and serialize so the two can never drift.
struct Field {
  std::string name;
  std::function<void(RunConfig&, const std::string&)> set;
  std::function<std::string(const RunConfig&)> get;
};

std::vector<Field> fields() {
  std::vector<Field> f;
  auto add_d = [&f](const std::string& name, double RunConfig::* m) {
    f.push_back({name,
                 [name, m](RunConfig& c, const std::string& v) {
                   c.*m = parse_double(name, v);
                 },
                 [m](const RunConfig& c) { return format_double(c.*m); }});
  };
  auto add_i = [&f](const std::string& name, int RunConfig::* m) {
    f.push_back({name,
                 [name, m](RunConfig& c, const std::string& v) {
                   c.*m = parse_int(name, v);
                 },
                 [m](const RunConfig& c) { return std::to_string(c.*m); }});
  };
  auto add_u = [&f](const std::string& name, uint64_t RunConfig::* m) {
    f.push_back({name,
                 [name, m](RunConfig& c, const std::string& v) {
                   c.*m = parse_u64(name, v);
                 },
                 [m](const RunConfig& c) { return std::to_string(c.*m); }});
  };

  add_d("dt", &RunConfig::dt);
  add_i("t_obs", &RunConfig::t_obs);
  add_i("t_pred", &RunConfig::t_pred);
  add_i("stride", &RunConfig::stride);
  add_i("hidden_dim", &RunConfig::hidden_dim);
  add_i("embed_dim", &RunConfig::embed_dim);
  add_i("context_dim", &RunConfig::context_dim);
  add_i("pool_grid_n", &RunConfig::pool_grid_n);
  add_d("pool_grid_len", &RunConfig::pool_grid_len);
  add_i("crop_g", &RunConfig::crop_g);
  add_d("crop_len", &RunConfig::crop_len);
  add_i("event_slots", &RunConfig::event_slots);
  add_i("noise_dim", &RunConfig::noise_dim);
  add_i("lstm_layers", &RunConfig::lstm_layers);
  add_i("k_variety", &RunConfig::k_variety);
  add_d("lambda_adv", &RunConfig::lambda_adv);
  add_d("lr_g", &RunConfig::lr_g);
  add_d("lr_d", &RunConfig::lr_d);
  add_i("batch", &RunConfig::batch);
  add_i("epochs", &RunConfig::epochs);
  add_i("d_steps_per_g_step", &RunConfig::d_steps_per_g_step);
  add_i("disc_use_context", &RunConfig::disc_use_context);
  add_u("seed", &RunConfig::seed);
  add_d("w", &RunConfig::w);
  add_d("neighbor_radius", &RunConfig::neighbor_radius);
  add_d("acoustic_gain", &RunConfig::acoustic_gain);
  add_d("acoustic_threshold", &RunConfig::acoustic_threshold);
  add_i("candidate_rings", &RunConfig::candidate_rings);
  add_i("candidates_per_ring", &RunConfig::candidates_per_ring);
  add_i("horizon", &RunConfig::horizon);
  add_i("mix_crossing", &RunConfig::mix_crossing);
  add_i("mix_circle_swap", &RunConfig::mix_circle_swap);
  add_i("mix_corridor", &RunConfig::mix_corridor);
  add_i("mix_siren", &RunConfig::mix_siren);
  add_i("mix_cv", &RunConfig::mix_cv);
  add_i("agents_min", &RunConfig::agents_min);
  add_i("agents_max", &RunConfig::agents_max);
  return f;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  static const std::vector<Field> table = fields();
  std::map<std::string, const Field*> by_name;
  for (const Field& f : table) by_name[f.name] = &f;

  RunConfig config;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(line_no) +
                        ": expected key = value, got '" + line + "'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    auto it = by_name.find(key);
    if (it == by_name.end()) throw ConfigError("unknown key: " + key);
    it->second->set(config, value);
  }
  return config;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string serialize_config(const RunConfig& config) {
  static const std::vector<Field> table = fields();
  std::ostringstream out;
  for (const Field& f : table) {
    out << f.name << " = " << f.get(config) << "\n";
  }
  return out.str();
}

}  // namespace socgan
