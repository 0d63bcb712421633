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

#include <set>

#include "socgan/core/scenario.hpp"
#include "socgan/features/features.hpp"

namespace socgan {

namespace {

struct PresenceRun {
  int agent_id;
  size_t first;  // frame array index of the run start
  size_t count;  // consecutive frames present
};

std::vector<PresenceRun> presence_runs(const Scenario& scenario) {
  std::set<int> ids;
  for (const Frame& frame : scenario.frames) {
    for (const AgentState& agent : frame.agents) ids.insert(agent.id);
  }
  std::vector<PresenceRun> runs;
  for (const int id : ids) {
    size_t start = 0;
    size_t len = 0;
    for (size_t i = 0; i <= scenario.frames.size(); ++i) {
      const bool present =
          i < scenario.frames.size() && scenario.frames[i].find(id) != nullptr;
      if (present) {
        if (len == 0) start = i;
        ++len;
      } else if (len > 0) {
        runs.push_back({id, start, len});
        len = 0;
      }
    }
  }
  return runs;
}

}  // namespace

std::vector<Sample> window_samples(const Scenario& scenario, int scenario_id,
                                   const WindowParams& params) {
  std::vector<Sample> samples;
  if (scenario.frames.empty()) return samples;

  const size_t window = static_cast<size_t>(params.t_obs) + params.t_pred;
  for (const PresenceRun& run : presence_runs(scenario)) {
    if (run.count < window) continue;
    const size_t last_start = run.first + run.count - window;
    for (size_t start = run.first; start <= last_start;
         start += static_cast<size_t>(params.stride)) {
      const size_t obs_end = start + params.t_obs;  // one past last observed

      Sample sample;
      sample.scenario_id = scenario_id;
      sample.agent_id = run.agent_id;
      sample.start_frame = scenario.frames[start].t;
      sample.cls = scenario.frames[start].find(run.agent_id)->cls;
      sample.dt = scenario.dt;
      for (size_t i = start; i < obs_end; ++i) {
        sample.observed.push_back(scenario.frames[i].find(run.agent_id)->position);
      }
      for (size_t i = obs_end; i < start + window; ++i) {
        sample.future.push_back(scenario.frames[i].find(run.agent_id)->position);
      }

      const Frame& last_obs = scenario.frames[obs_end - 1];
      const AgentState& self = *last_obs.find(run.agent_id);
      sample.crop = extract_spatial(scenario.map, self.position, params.crop_g,
                                    params.crop_len);
      for (size_t i = start; i < obs_end; ++i) {
        const Frame& frame = scenario.frames[i];
        sample.acoustic.push_back(extract_acoustic(scenario.events, frame.t,
                                                   *frame.find(run.agent_id),
                                                   params.event_slots));
      }

      // Neighbors: every other agent present at each observed step.
      for (const AgentState& other : last_obs.agents) {
        if (other.id == run.agent_id) continue;
        NeighborTrack track;
        track.agent_id = other.id;
        track.cls = other.cls;
        bool complete = true;
        for (size_t i = start; i < obs_end; ++i) {
          const AgentState* state = scenario.frames[i].find(other.id);
          if (state == nullptr) {
            complete = false;
            break;
          }
          track.observed.push_back(state->position);
        }
        if (!complete) continue;
        track.crop = extract_spatial(scenario.map, other.position,
                                     params.crop_g, params.crop_len);
        track.acoustic = extract_acoustic(scenario.events, last_obs.t, other,
                                          params.event_slots);
        sample.neighbors.push_back(std::move(track));
      }
      samples.push_back(std::move(sample));
    }
  }
  return samples;
}

}  // namespace socgan
