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

#include "socgan/cli/cli.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>

#include "CLI11.hpp"
#include "socgan/core/error.hpp"
#include "socgan/core/scenario.hpp"
#include "socgan/core/trajectory_io.hpp"
#include "socgan/io/checkpoint.hpp"
#include "socgan/model/metrics.hpp"
#include "socgan/model/train.hpp"
#include "socgan/sim/archetypes.hpp"

namespace socgan::cli {
namespace {

struct Options {
  std::string config_path;
  std::string data_dir;
  std::string out_path;
  std::string ckpt_path;
  std::string input_path;
  uint64_t seed = 0;
  bool seed_set = false;
  int k = 0;
  bool debug_identity = false;
  bool zero_acoustic = false;
};

RunConfig base_config(const Options& opt) {
  RunConfig cfg =
      opt.config_path.empty() ? RunConfig{} : load_config(opt.config_path);
  if (opt.seed_set) cfg.seed = opt.seed;
  return cfg;
}

SimParams sim_params_from(const RunConfig& cfg) {
  SimParams p;
  p.dt = cfg.dt;
  p.w = cfg.w;
  p.neighbor_radius = cfg.neighbor_radius;
  p.acoustic_gain = cfg.acoustic_gain;
  p.acoustic_threshold = cfg.acoustic_threshold;
  p.candidate_rings = cfg.candidate_rings;
  p.candidates_per_ring = cfg.candidates_per_ring;
  p.horizon = cfg.horizon;
  return p;
}

WindowParams window_params_from(const RunConfig& cfg) {
  WindowParams wp;
  wp.t_obs = cfg.t_obs;
  wp.t_pred = cfg.t_pred;
  wp.stride = cfg.stride;
  wp.crop_g = cfg.crop_g;
  wp.crop_len = cfg.crop_len;
  wp.event_slots = cfg.event_slots;
  return wp;
}

std::vector<Sample> load_windows(const std::string& dir,
                                 const RunConfig& cfg) {
  const std::vector<Scenario> scenarios = load_scenario_dir(dir);
  if (scenarios.empty()) throw DataError("no scenarios in " + dir);
  const WindowParams wp = window_params_from(cfg);
  std::vector<Sample> samples;
  for (size_t i = 0; i < scenarios.size(); ++i) {
    for (Sample& s : window_samples(scenarios[i], static_cast<int>(i), wp)) {
      samples.push_back(std::move(s));
    }
  }
  if (samples.empty()) {
    throw DataError("no windows in " + dir + " (need " +
                    std::to_string(cfg.t_obs + cfg.t_pred) +
                    " consecutive frames per agent)");
  }
  return samples;
}

void check_t_obs_match(const Options& opt, const RunConfig& ckpt_cfg) {
  if (opt.config_path.empty()) return;
  const RunConfig file_cfg = load_config(opt.config_path);
  if (file_cfg.t_obs != ckpt_cfg.t_obs) {
    throw ConfigError("checkpoint/config mismatch on t_obs: checkpoint " +
                      std::to_string(ckpt_cfg.t_obs) + ", config " +
                      std::to_string(file_cfg.t_obs));
  }
}

int cmd_simulate(const Options& opt, std::ostream& out) {
  const RunConfig cfg = base_config(opt);
  MixConfig mix;
  mix.crossing = cfg.mix_crossing;
  mix.circle_swap = cfg.mix_circle_swap;
  mix.corridor = cfg.mix_corridor;
  mix.siren = cfg.mix_siren;
  mix.cv = cfg.mix_cv;
  mix.agents_min = cfg.agents_min;
  mix.agents_max = cfg.agents_max;
  mix.seed = cfg.seed;
  mix.sim = sim_params_from(cfg);

  const std::vector<Scenario> scenarios = make_dataset(mix);
  write_scenario_dir(scenarios, opt.out_path);

  OverlapStats total;
  total.min_ratio = 1e300;
  for (const Scenario& s : scenarios) {
    const OverlapStats st = overlap_stats(s);
    total.pair_timesteps += st.pair_timesteps;
    total.overlaps += st.overlaps;
    if (st.min_ratio < total.min_ratio) total.min_ratio = st.min_ratio;
  }
  const double rate = total.pair_timesteps == 0
                          ? 0.0
                          : static_cast<double>(total.overlaps) /
                                static_cast<double>(total.pair_timesteps);
  char line[160];
  out << "scenarios " << scenarios.size() << "\n";
  std::snprintf(line, sizeof(line),
                "pair_timesteps %lld  overlaps %lld  overlap_rate %.6f  "
                "min_separation_ratio %.4f\n",
                static_cast<long long>(total.pair_timesteps),
                static_cast<long long>(total.overlaps), rate,
                total.pair_timesteps == 0 ? 1.0 : total.min_ratio);
  out << line;
  return 0;
}

int cmd_train(const Options& opt, std::ostream& out) {
  const RunConfig cfg = base_config(opt);
  const std::vector<Sample> all = load_windows(opt.data_dir, cfg);
  std::vector<Sample> train_set, val_set;
  split_dataset(all, cfg.seed, train_set, val_set);

  const TrainResult result = train(train_set, val_set, cfg);
  save_checkpoint(opt.out_path, cfg, result.best.named());
  const std::string csv_path = opt.out_path + ".csv";
  {
    std::ofstream csv(csv_path, std::ios::binary);
    if (!csv) throw DataError("cannot write metrics log: " + csv_path);
    csv << log_to_csv(result.log);
  }

  char line[160];
  out << "samples " << all.size() << "  train " << train_set.size()
      << "  val " << val_set.size() << "\n";
  if (!result.log.empty()) {
    std::snprintf(line, sizeof(line), "best_epoch %d  best_val_ade %.6f\n",
                  result.best_epoch, result.best_val_ade);
    out << line;
  }
  out << "checkpoint " << opt.out_path << "\n"
      << "metrics " << csv_path << "\n";
  return 0;
}

// The last t_obs frames of the scenario as prediction windows: one Sample
// (with empty future) per agent present throughout the tail. Reuses the
// training windowing with t_pred = 0 on the truncated scenario.
std::vector<Sample> predict_windows(const Scenario& scenario,
                                    const RunConfig& cfg) {
  const size_t t_obs = static_cast<size_t>(cfg.t_obs);
  if (scenario.frames.size() < t_obs) {
    throw DataError("input has " + std::to_string(scenario.frames.size()) +
                    " frames, need t_obs = " + std::to_string(cfg.t_obs));
  }
  Scenario tail = scenario;
  tail.frames.assign(scenario.frames.end() - static_cast<long>(t_obs),
                     scenario.frames.end());
  WindowParams wp = window_params_from(cfg);
  wp.t_pred = 0;
  wp.stride = 1;
  return window_samples(tail, 0, wp);
}

int cmd_predict(const Options& opt, std::ostream& out) {
  const Checkpoint ckpt = load_checkpoint(opt.ckpt_path);
  check_t_obs_match(opt, ckpt.config);
  RunConfig cfg = ckpt.config;
  if (opt.seed_set) cfg.seed = opt.seed;
  const ModelParams params = load_model(ckpt);

  Scenario scenario = load_trajectory_file(opt.input_path);
  const std::string stem = opt.input_path.substr(0, opt.input_path.rfind('.'));
  {
    std::ifstream probe(stem + ".events");
    if (probe) scenario.events = load_events_file(stem + ".events");
  }
  {
    std::ifstream probe(stem + ".map");
    if (probe) scenario.map = load_map_file(stem + ".map");
  }

  const std::vector<Sample> windows = predict_windows(scenario, cfg);
  if (windows.empty()) {
    throw DataError("no agent spans the last " + std::to_string(cfg.t_obs) +
                    " frames of " + opt.input_path);
  }

  const uint64_t noise_seed =
      Rng::derive(cfg.seed, static_cast<uint64_t>(RngStream::kEvalNoise));
  const int last_t = scenario.frames.back().t;

  std::ofstream file(opt.out_path, std::ios::binary);
  if (!file) throw DataError("cannot write predictions: " + opt.out_path);
  file << "# dt=" << format_double(scenario.dt) << "\n";
  for (size_t i = 0; i < windows.size(); ++i) {
    const Sample& sample = windows[i];
    const Tensor context = build_context(sample, params.encoder, cfg);
    Rng rng(Rng::derive(noise_seed, static_cast<uint64_t>(i)));
    for (int s = 0; s < opt.k; ++s) {
      std::vector<double> z(cfg.noise_dim);
      for (double& v : z) v = rng.normal();
      const std::vector<Vec2> pred = generate_positions(
          context, Tensor::row_vector(std::move(z)), sample.last_step(),
          sample.origin(), cfg.t_pred, params.generator);
      for (size_t t = 0; t < pred.size(); ++t) {
        file << (last_t + 1 + static_cast<int>(t)) << "\t" << sample.agent_id
             << "\t" << class_name(sample.cls) << "\t"
             << format_double(pred[t].x) << "\t" << format_double(pred[t].y)
             << "\t" << s << "\n";
      }
    }
  }
  if (!file) throw DataError("write failed: " + opt.out_path);
  out << "agents " << windows.size() << "  samples_per_agent " << opt.k
      << "  rows " << windows.size() * opt.k * cfg.t_pred << "\n";
  return 0;
}

int cmd_evaluate(const Options& opt, std::ostream& out) {
  const Checkpoint ckpt = load_checkpoint(opt.ckpt_path);
  check_t_obs_match(opt, ckpt.config);
  RunConfig cfg = ckpt.config;
  if (opt.seed_set) cfg.seed = opt.seed;
  const ModelParams params = load_model(ckpt);

  const std::vector<Sample> samples = load_windows(opt.data_dir, cfg);
  const EvalReport report = evaluate(samples, params, cfg, opt.k,
                                     opt.zero_acoustic, opt.debug_identity);
  const std::string text = format_report(report);
  out << text;
  if (!opt.out_path.empty()) {
    std::ofstream file(opt.out_path, std::ios::binary);
    if (!file) throw DataError("cannot write report: " + opt.out_path);
    file << text;
  }
  return 0;
}

int cmd_gradcheck(std::ostream& out) {
  bool all_pass = true;
  char line[160];
  for (const auto& [name, result] : gradcheck_battery()) {
    std::snprintf(line, sizeof(line), "%-28s %s  max_rel_err %.3e%s%s\n",
                  name.c_str(), result.pass ? "PASS" : "FAIL",
                  result.max_rel_err, result.pass ? "" : "  at ",
                  result.pass ? "" : result.worst.c_str());
    out << line;
    all_pass = all_pass && result.pass;
  }
  out << (all_pass ? "gradcheck PASS\n" : "gradcheck FAIL\n");
  return all_pass ? 0 : 3;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"social trajectory prediction over simulated crowds"};
  app.require_subcommand(1);
  Options opt;

  CLI::App* sim = app.add_subcommand("simulate", "generate the archetype scenario mix");
  sim->add_option("--config", opt.config_path, "run configuration file");
  sim->add_option("--out", opt.out_path, "output scenario directory")->required();
  sim->add_option("--seed", opt.seed, "override config seed");

  CLI::App* tr = app.add_subcommand("train", "train on a scenario directory");
  tr->add_option("--config", opt.config_path, "run configuration file");
  tr->add_option("--data", opt.data_dir, "scenario directory")->required();
  tr->add_option("--out", opt.out_path, "output checkpoint path")->required();
  tr->add_option("--seed", opt.seed, "override config seed");

  CLI::App* pr = app.add_subcommand("predict", "sample futures for a trajectory file");
  pr->add_option("--ckpt", opt.ckpt_path, "checkpoint path")->required();
  pr->add_option("--input", opt.input_path, "input trajectory TSV")->required();
  pr->add_option("--out", opt.out_path, "output TSV path")->required();
  pr->add_option("--k", opt.k, "samples per agent")->capture_default_str();
  pr->add_option("--config", opt.config_path, "config to cross-check against the checkpoint");
  pr->add_option("--seed", opt.seed, "override checkpoint seed");

  CLI::App* ev = app.add_subcommand("evaluate", "score a checkpoint on a scenario directory");
  ev->add_option("--ckpt", opt.ckpt_path, "checkpoint path")->required();
  ev->add_option("--data", opt.data_dir, "scenario directory")->required();
  ev->add_option("--out", opt.out_path, "also write the report to this path");
  ev->add_option("--k", opt.k, "best-of-k samples per agent");
  ev->add_option("--config", opt.config_path, "config to cross-check against the checkpoint");
  ev->add_option("--seed", opt.seed, "override checkpoint seed");
  ev->add_flag("--debug-identity", opt.debug_identity,
               "score the ground truth against itself");
  ev->add_flag("--zero-acoustic", opt.zero_acoustic,
               "feed zeros to the acoustic channel");

  CLI::App* gc = app.add_subcommand("gradcheck", "finite-difference verification battery");
  (void)gc;

  std::vector<const char*> argv;
  argv.push_back("socgan");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  // Track which subcommands saw --seed / --k so defaults stay per-command.
  opt.seed_set = (sim->count("--seed") + tr->count("--seed") +
                  pr->count("--seed") + ev->count("--seed")) > 0;
  if (pr->parsed() && pr->count("--k") == 0) opt.k = 1;
  if (ev->parsed() && ev->count("--k") == 0) opt.k = 5;

  try {
    if (sim->parsed()) return cmd_simulate(opt, out);
    if (tr->parsed()) return cmd_train(opt, out);
    if (pr->parsed()) return cmd_predict(opt, out);
    if (ev->parsed()) return cmd_evaluate(opt, out);
    return cmd_gradcheck(out);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return 1;
  } catch (const NumericError& e) {
    err << "numeric error: " << e.what() << "\n";
    return 3;
  } catch (const DataError& e) {
    err << "data error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace socgan::cli
