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

#include "socgan/model/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

namespace socgan {

double ade(const std::vector<Vec2>& pred, const std::vector<Vec2>& truth) {
  if (pred.empty() || pred.size() != truth.size()) {
    throw std::invalid_argument("ade: length mismatch (" +
                                std::to_string(pred.size()) + " vs " +
                                std::to_string(truth.size()) + ")");
  }
  double sum = 0.0;
  for (size_t i = 0; i < pred.size(); ++i) sum += norm(pred[i] - truth[i]);
  return sum / static_cast<double>(pred.size());
}

double fde(const std::vector<Vec2>& pred, const std::vector<Vec2>& truth) {
  if (pred.empty() || pred.size() != truth.size()) {
    throw std::invalid_argument("fde: length mismatch (" +
                                std::to_string(pred.size()) + " vs " +
                                std::to_string(truth.size()) + ")");
  }
  return norm(pred.back() - truth.back());
}

double collision_rate(const std::vector<PredictedAgent>& agents) {
  std::map<std::pair<int, int>, std::vector<const PredictedAgent*>> groups;
  for (const PredictedAgent& a : agents) {
    groups[{a.scenario_id, a.start_frame}].push_back(&a);
  }
  long long total = 0;
  long long hits = 0;
  for (const auto& [key, group] : groups) {
    (void)key;
    for (size_t i = 0; i < group.size(); ++i) {
      for (size_t j = i + 1; j < group.size(); ++j) {
        const size_t steps =
            std::min(group[i]->positions.size(), group[j]->positions.size());
        const double r_sum = group[i]->radius + group[j]->radius;
        for (size_t t = 0; t < steps; ++t) {
          ++total;
          if (norm(group[i]->positions[t] - group[j]->positions[t]) < r_sum) {
            ++hits;
          }
        }
      }
    }
  }
  return total == 0 ? 0.0 : static_cast<double>(hits) / total;
}

std::vector<Vec2> constant_velocity_pred(const Sample& sample, int t_pred) {
  const Vec2 step = sample.last_step();
  const Vec2 origin = sample.origin();
  std::vector<Vec2> pred;
  pred.reserve(t_pred);
  for (int t = 1; t <= t_pred; ++t) {
    pred.push_back(origin + step * static_cast<double>(t));
  }
  return pred;
}

namespace {

Tensor noise_row(Rng& rng, int dim) {
  std::vector<double> z(dim);
  for (double& v : z) v = rng.normal();
  return Tensor::row_vector(std::move(z));
}

std::vector<Tensor> positions_as_rows(const std::vector<Vec2>& pts) {
  std::vector<Tensor> rows;
  rows.reserve(pts.size());
  for (const Vec2& p : pts) rows.push_back(Tensor::row_vector({p.x, p.y}));
  return rows;
}

}  // namespace

EvalReport evaluate(const std::vector<Sample>& dataset,
                    const ModelParams& params, const RunConfig& cfg,
                    int k_eval, bool zero_acoustic, bool debug_identity) {
  if (k_eval < 1) throw std::invalid_argument("evaluate: k_eval must be >= 1");
  EvalReport report;
  report.k_eval = k_eval;
  report.samples = static_cast<int>(dataset.size());
  if (dataset.empty()) return report;

  const uint64_t eval_seed =
      Rng::derive(cfg.seed, static_cast<uint64_t>(RngStream::kEvalNoise));
  std::map<int, ScenarioBreakdown> per_scenario;
  std::vector<PredictedAgent> best_tracks;
  int d_correct = 0;
  int d_total = 0;

  for (size_t i = 0; i < dataset.size(); ++i) {
    const Sample& sample = dataset[i];
    const int t_pred = static_cast<int>(sample.future.size());
    const Tensor context = build_context(sample, params.encoder, cfg,
                                         zero_acoustic);
    Rng sample_rng(Rng::derive(eval_seed, static_cast<uint64_t>(i)));

    double best_ade = std::numeric_limits<double>::infinity();
    double best_fde = std::numeric_limits<double>::infinity();
    double first_ade = 0.0;
    double first_fde = 0.0;
    std::vector<Vec2> best_pred;
    std::vector<Vec2> first_pred;
    for (int k = 0; k < k_eval; ++k) {
      const Tensor z = noise_row(sample_rng, cfg.noise_dim);
      std::vector<Vec2> pred =
          debug_identity
              ? sample.future
              : generate_positions(context, z, sample.last_step(),
                                   sample.origin(), t_pred, params.generator);
      const double a = ade(pred, sample.future);
      const double f = fde(pred, sample.future);
      if (k == 0) {
        first_ade = a;
        first_fde = f;
        first_pred = pred;
      }
      if (a < best_ade) {
        best_ade = a;
        best_pred = std::move(pred);
      }
      best_fde = std::min(best_fde, f);
    }

    report.ade += best_ade;
    report.fde += best_fde;
    report.ade_k1 += first_ade;
    report.fde_k1 += first_fde;

    const std::vector<Vec2> cv = constant_velocity_pred(sample, t_pred);
    report.cv_ade += ade(cv, sample.future);
    report.cv_fde += fde(cv, sample.future);

    ScenarioBreakdown& sc = per_scenario[sample.scenario_id];
    sc.scenario_id = sample.scenario_id;
    sc.ade += best_ade;
    sc.fde += best_fde;
    sc.samples += 1;

    best_tracks.push_back({sample.scenario_id, sample.start_frame,
                           sample.agent_id, class_spec(sample.cls).radius,
                           std::move(best_pred)});

    // Discriminator diagnostic: the real future vs the first drawn fake.
    std::vector<Tensor> real_traj = positions_as_rows(sample.observed);
    std::vector<Tensor> fake_traj = real_traj;
    for (const Tensor& row : positions_as_rows(sample.future)) {
      real_traj.push_back(row);
    }
    for (const Tensor& row : positions_as_rows(first_pred)) {
      fake_traj.push_back(row);
    }
    const bool use_ctx = cfg.disc_use_context != 0;
    const double real_score =
        discriminate(real_traj, context, params.discriminator, use_ctx)
            .value();
    const double fake_score =
        discriminate(fake_traj, context, params.discriminator, use_ctx)
            .value();
    if (real_score > 0.5) ++d_correct;
    if (fake_score <= 0.5) ++d_correct;
    d_total += 2;
  }

  const double n = static_cast<double>(dataset.size());
  report.ade /= n;
  report.fde /= n;
  report.ade_k1 /= n;
  report.fde_k1 /= n;
  report.cv_ade /= n;
  report.cv_fde /= n;
  report.collision_rate = collision_rate(best_tracks);
  report.d_accuracy = d_total == 0 ? 0.0 : static_cast<double>(d_correct) / d_total;
  for (auto& [id, sc] : per_scenario) {
    (void)id;
    sc.ade /= sc.samples;
    sc.fde /= sc.samples;
    report.per_scenario.push_back(sc);
  }
  return report;
}

double zero_noise_ade(const std::vector<Sample>& dataset,
                      const ModelParams& params, const RunConfig& cfg,
                      bool zero_acoustic) {
  if (dataset.empty()) return 0.0;
  double sum = 0.0;
  const Tensor z = Tensor::zeros(1, cfg.noise_dim);
  for (const Sample& sample : dataset) {
    const Tensor context = build_context(sample, params.encoder, cfg,
                                         zero_acoustic);
    const std::vector<Vec2> pred = generate_positions(
        context, z, sample.last_step(), sample.origin(),
        static_cast<int>(sample.future.size()), params.generator);
    sum += ade(pred, sample.future);
  }
  return sum / static_cast<double>(dataset.size());
}

std::string format_report(const EvalReport& report) {
  char line[256];
  std::ostringstream out;
  std::snprintf(line, sizeof(line),
                "samples %d  k_eval %d\n"
                "ade %.6f  fde %.6f  (best of %d)\n"
                "ade_k1 %.6f  fde_k1 %.6f\n"
                "collision_rate %.6f\n"
                "cv_ade %.6f  cv_fde %.6f\n"
                "d_accuracy %.6f\n",
                report.samples, report.k_eval, report.ade, report.fde,
                report.k_eval, report.ade_k1, report.fde_k1,
                report.collision_rate, report.cv_ade, report.cv_fde,
                report.d_accuracy);
  out << line;
  for (const ScenarioBreakdown& sc : report.per_scenario) {
    std::snprintf(line, sizeof(line),
                  "scenario %d  ade %.6f  fde %.6f  samples %d\n",
                  sc.scenario_id, sc.ade, sc.fde, sc.samples);
    out << line;
  }
  return out.str();
}

}  // namespace socgan
