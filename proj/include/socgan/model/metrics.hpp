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

#ifndef SOCGAN_MODEL_METRICS_HPP
#define SOCGAN_MODEL_METRICS_HPP

#include <string>
#include <vector>

#include "socgan/core/types.hpp"
#include "socgan/io/config.hpp"
#include "socgan/model/models.hpp"

namespace socgan {

/// Mean Euclidean position error over all steps. Throws
/// std::invalid_argument on empty or mismatched inputs.
double ade(const std::vector<Vec2>& pred, const std::vector<Vec2>& truth);

/// Euclidean error at the final step.
double fde(const std::vector<Vec2>& pred, const std::vector<Vec2>& truth);

/// One agent's predicted track within a prediction group; groups are keyed
/// by (scenario_id, start_frame) so only co-windowed agents are paired.
struct PredictedAgent {
  int scenario_id = 0;
  int start_frame = 0;
  int agent_id = 0;
  double radius = 0.0;
  std::vector<Vec2> positions;
};

/// Fraction of agent-pair-timesteps (within groups) at distance < r_i + r_j.
/// No pairs at all yields 0.
double collision_rate(const std::vector<PredictedAgent>& agents);

/// Constant-velocity extrapolation of the last observed displacement.
std::vector<Vec2> constant_velocity_pred(const Sample& sample, int t_pred);

struct ScenarioBreakdown {
  int scenario_id = 0;
  double ade = 0.0;
  double fde = 0.0;
  int samples = 0;
};

struct EvalReport {
  double ade = 0.0;             // best-of-k_eval (min per agent)
  double fde = 0.0;             // best-of-k_eval (min per agent)
  double ade_k1 = 0.0;          // first sample only
  double fde_k1 = 0.0;
  double collision_rate = 0.0;  // over each agent's ADE-best sample
  double cv_ade = 0.0;          // constant-velocity baseline
  double cv_fde = 0.0;
  double d_accuracy = 0.0;      // real vs first fake, 0.5 threshold
  int k_eval = 1;
  int samples = 0;
  std::vector<ScenarioBreakdown> per_scenario;
};

/// Best-of-k evaluation with nested per-sample noise streams: sample i draws
/// its k_eval noise vectors from stream derive(derive(seed, eval-noise), i),
/// so k and k+1 share the first k draws and best-of-k ADE/FDE are
/// non-increasing in k. `debug_identity` replaces every prediction with the
/// ground truth (pipeline shakeout; ADE = FDE = 0).
EvalReport evaluate(const std::vector<Sample>& dataset,
                    const ModelParams& params, const RunConfig& cfg,
                    int k_eval, bool zero_acoustic = false,
                    bool debug_identity = false);

/// Mean ADE of deterministic zero-noise rollouts; the training loop's
/// validation metric (no stream consumed, comparable across epochs).
double zero_noise_ade(const std::vector<Sample>& dataset,
                      const ModelParams& params, const RunConfig& cfg,
                      bool zero_acoustic = false);

std::string format_report(const EvalReport& report);

}  // namespace socgan

#endif  // SOCGAN_MODEL_METRICS_HPP
