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

#ifndef SOCGAN_MODEL_TRAIN_HPP
#define SOCGAN_MODEL_TRAIN_HPP

#include <string>
#include <utility>
#include <vector>

#include "socgan/io/config.hpp"
#include "socgan/model/models.hpp"
#include "socgan/nn/adam.hpp"
#include "socgan/nn/grad_check.hpp"

namespace socgan {

struct StepStats {
  double g_loss = 0.0;
  double d_loss = 0.0;
  double d_acc = 0.5;
};

/// One adversarial optimization step on a batch: d_steps_per_g_step
/// discriminator updates on (real, detached fake) bce with labels (1, 0),
/// then one generator update on lambda_adv * bce(D(fake), 1) plus the
/// variety loss over k_variety rollouts. With lambda_adv = 0 the
/// discriminator is left untouched and the step is plain supervised
/// training (d_loss 0, d_acc 0.5 placeholders). Noise is consumed from
/// `noise_rng` in a fixed order, so identical inputs reproduce bitwise.
StepStats train_step(const std::vector<const Sample*>& batch,
                     ModelParams& params, Adam& g_opt, Adam& d_opt,
                     const RunConfig& cfg, Rng& noise_rng);

struct TrainLogRow {
  int epoch = 0;
  double g_loss = 0.0;
  double d_loss = 0.0;
  double d_acc = 0.5;
  double val_ade = 0.0;
};

struct TrainResult {
  ModelParams best;          // lowest validation ADE (earliest on ties)
  ModelParams final_params;  // after the last epoch
  std::vector<TrainLogRow> log;
  int best_epoch = -1;
  double best_val_ade = 0.0;
};

/// Seeded epoch loop: weight init (weight-init stream), per-epoch shuffles
/// (shuffle stream), train noise (train-noise stream). Validation ADE is
/// measured with zero-noise rollouts after every epoch; non-finite losses
/// abort with NumericError naming epoch and step. epochs = 0 returns the
/// initialized parameters and an empty log. An empty validation set falls
/// back to validating on the training set.
TrainResult train(const std::vector<Sample>& train_set,
                  const std::vector<Sample>& val_set, const RunConfig& cfg);

/// "epoch,g_loss,d_loss,d_acc,val_ade" header plus one row per epoch.
std::string log_to_csv(const std::vector<TrainLogRow>& log);

/// Deterministic scenario-level split: distinct scenario ids are shuffled
/// on the dataset stream and ceil(10%) of them (at least one when there are
/// two or more) become validation scenarios.
void split_dataset(const std::vector<Sample>& all, uint64_t seed,
                   std::vector<Sample>& train_out,
                   std::vector<Sample>& val_out);

/// Finite-difference verification battery over fixed tiny dims and seeds:
/// every primitive op, the LSTM cell, pooling + fusion end to end, and the
/// full generator and discriminator loss graphs. Deep recurrent graphs use
/// tolerance 1e-3; everything else 1e-4.
std::vector<std::pair<std::string, GradCheckResult>> gradcheck_battery();

}  // namespace socgan

#endif  // SOCGAN_MODEL_TRAIN_HPP
