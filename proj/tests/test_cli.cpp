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

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "socgan/cli/cli.hpp"
#include "socgan/io/checkpoint.hpp"
#include "socgan/model/models.hpp"

using namespace socgan;

namespace {

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  CliResult r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  return std::string((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  REQUIRE(out);
  out << text;
}

struct TempDir {
  std::string path;
  explicit TempDir(const char* tag) {
    char tmpl[160];
    std::snprintf(tmpl, sizeof(tmpl), "/tmp/socgan_cli_%s_XXXXXX", tag);
    REQUIRE(mkdtemp(tmpl) != nullptr);
    path = tmpl;
  }
  std::string file(const char* name) const { return path + "/" + name; }
};

// Small dimensions and a short horizon keep the whole suite near-instant.
const char* kTinyConfig =
    "t_obs = 4\n"
    "t_pred = 4\n"
    "hidden_dim = 4\n"
    "embed_dim = 3\n"
    "context_dim = 5\n"
    "pool_grid_n = 2\n"
    "crop_g = 2\n"
    "event_slots = 1\n"
    "noise_dim = 2\n"
    "k_variety = 1\n"
    "lambda_adv = 0\n"
    "batch = 16\n"
    "epochs = 2\n"
    "horizon = 16\n"
    "mix_crossing = 1\n"
    "mix_circle_swap = 1\n"
    "mix_corridor = 0\n"
    "mix_siren = 0\n"
    "mix_cv = 1\n"
    "agents_min = 2\n"
    "agents_max = 3\n"
    "seed = 7\n";

int count_lines(const std::string& text) {
  int n = 0;
  for (char c : text) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("usage errors exit 1 and help exits 0") {
  CHECK(run_cli({}).code == 1);
  CHECK(run_cli({"frobnicate"}).code == 1);
  CHECK(run_cli({"train"}).code == 1);  // missing required options

  const CliResult help = run_cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("simulate") != std::string::npos);
  CHECK(help.out.find("gradcheck") != std::string::npos);
}

TEST_CASE("simulate, train, predict, evaluate chain end to end") {
  TempDir dir("chain");
  spit(dir.file("run.cfg"), kTinyConfig);

  const CliResult sim = run_cli({"simulate", "--config", dir.file("run.cfg"),
                                 "--out", dir.file("data")});
  REQUIRE(sim.code == 0);
  CHECK(sim.out.find("scenarios 3") != std::string::npos);
  CHECK(slurp(dir.file("data/scenario_000.tsv")).size() > 0);

  const CliResult tr =
      run_cli({"train", "--config", dir.file("run.cfg"), "--data",
               dir.file("data"), "--out", dir.file("model.ckpt")});
  REQUIRE(tr.code == 0);
  CHECK(tr.out.find("best_epoch") != std::string::npos);

  const std::string csv = slurp(dir.file("model.ckpt.csv"));
  CHECK(csv.rfind("epoch,g_loss,d_loss,d_acc,val_ade\n", 0) == 0);
  CHECK(count_lines(csv) == 3);  // header + 2 epochs

  const CliResult pr = run_cli({"predict", "--ckpt", dir.file("model.ckpt"),
                                "--input", dir.file("data/scenario_000.tsv"),
                                "--out", dir.file("pred.tsv"), "--k", "3"});
  REQUIRE(pr.code == 0);
  const std::string pred = slurp(dir.file("pred.tsv"));
  CHECK(pred.rfind("# dt=", 0) == 0);

  // Column shape: frame, agent, class, x, y, sample; 3 samples x 4 steps
  // per agent that survives the full observation tail.
  std::istringstream lines(pred);
  std::string line;
  std::getline(lines, line);  // header
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    int tabs = 0;
    for (char c : line) tabs += c == '\t';
    CHECK(tabs == 5);
  }
  CHECK(rows % (3 * 4) == 0);
  CHECK(rows > 0);

  const CliResult ev =
      run_cli({"evaluate", "--ckpt", dir.file("model.ckpt"), "--data",
               dir.file("data"), "--k", "2", "--out", dir.file("report.txt")});
  REQUIRE(ev.code == 0);
  CHECK(ev.out.find("ade ") != std::string::npos);
  CHECK(ev.out.find("cv_ade") != std::string::npos);
  CHECK(slurp(dir.file("report.txt")) == ev.out);

  const CliResult id =
      run_cli({"evaluate", "--ckpt", dir.file("model.ckpt"), "--data",
               dir.file("data"), "--debug-identity"});
  REQUIRE(id.code == 0);
  CHECK(id.out.find("ade 0.000000  fde 0.000000") != std::string::npos);

  const CliResult muted =
      run_cli({"evaluate", "--ckpt", dir.file("model.ckpt"), "--data",
               dir.file("data"), "--zero-acoustic"});
  REQUIRE(muted.code == 0);
}

TEST_CASE("reruns are byte-identical") {
  TempDir a("det_a");
  TempDir b("det_b");
  spit(a.file("run.cfg"), kTinyConfig);
  spit(b.file("run.cfg"), kTinyConfig);

  for (const TempDir* d : {&a, &b}) {
    REQUIRE(run_cli({"simulate", "--config", d->file("run.cfg"), "--out",
                     d->file("data")}).code == 0);
    REQUIRE(run_cli({"train", "--config", d->file("run.cfg"), "--data",
                     d->file("data"), "--out", d->file("model.ckpt")})
                .code == 0);
    REQUIRE(run_cli({"predict", "--ckpt", d->file("model.ckpt"), "--input",
                     d->file("data/scenario_000.tsv"), "--out",
                     d->file("pred.tsv"), "--k", "2"})
                .code == 0);
  }
  CHECK(slurp(a.file("data/scenario_000.tsv")) ==
        slurp(b.file("data/scenario_000.tsv")));
  CHECK(slurp(a.file("data/scenario_002.tsv")) ==
        slurp(b.file("data/scenario_002.tsv")));
  CHECK(slurp(a.file("model.ckpt")) == slurp(b.file("model.ckpt")));
  CHECK(slurp(a.file("model.ckpt.csv")) == slurp(b.file("model.ckpt.csv")));
  CHECK(slurp(a.file("pred.tsv")) == slurp(b.file("pred.tsv")));

  // A different seed changes the simulated data.
  REQUIRE(run_cli({"simulate", "--config", a.file("run.cfg"), "--out",
                   a.file("data9"), "--seed", "9"}).code == 0);
  CHECK(slurp(a.file("data9/scenario_000.tsv")) !=
        slurp(a.file("data/scenario_000.tsv")));
}

TEST_CASE("zero epochs trains nothing but still writes artifacts") {
  TempDir dir("zeroep");
  spit(dir.file("run.cfg"), std::string(kTinyConfig) + "epochs = 0\n");
  REQUIRE(run_cli({"simulate", "--config", dir.file("run.cfg"), "--out",
                   dir.file("data")}).code == 0);
  const CliResult tr =
      run_cli({"train", "--config", dir.file("run.cfg"), "--data",
               dir.file("data"), "--out", dir.file("model.ckpt")});
  REQUIRE(tr.code == 0);
  CHECK(slurp(dir.file("model.ckpt.csv")) ==
        "epoch,g_loss,d_loss,d_acc,val_ade\n");
  CHECK(load_checkpoint(dir.file("model.ckpt")).config.epochs == 0);
}

TEST_CASE("a zero-parameter checkpoint predicts stationary agents") {
  TempDir dir("zeropar");
  spit(dir.file("run.cfg"), kTinyConfig);
  REQUIRE(run_cli({"simulate", "--config", dir.file("run.cfg"), "--out",
                   dir.file("data")}).code == 0);

  const RunConfig cfg = parse_config(kTinyConfig);
  const ModelParams zeros = ModelParams::zeros(cfg);
  save_checkpoint(dir.file("zero.ckpt"), cfg, zeros.named());

  REQUIRE(run_cli({"predict", "--ckpt", dir.file("zero.ckpt"), "--input",
                   dir.file("data/scenario_000.tsv"), "--out",
                   dir.file("pred.tsv")}).code == 0);

  // Every predicted row repeats the agent's last observed position, so each
  // agent's rows are all identical coordinate pairs.
  std::istringstream lines(slurp(dir.file("pred.tsv")));
  std::string line;
  std::getline(lines, line);  // header
  std::string prev_agent, prev_xy;
  while (std::getline(lines, line)) {
    std::istringstream cols(line);
    std::string frame, agent, cls, x, y;
    std::getline(cols, frame, '\t');
    std::getline(cols, agent, '\t');
    std::getline(cols, cls, '\t');
    std::getline(cols, x, '\t');
    std::getline(cols, y, '\t');
    if (agent == prev_agent) CHECK(x + "," + y == prev_xy);
    prev_agent = agent;
    prev_xy = x + "," + y;
  }
}

TEST_CASE("config and data failures map to exit codes 1 and 2") {
  TempDir dir("codes");
  spit(dir.file("bad.cfg"), "nonsense_key = 1\n");
  spit(dir.file("run.cfg"), kTinyConfig);

  CHECK(run_cli({"simulate", "--config", dir.file("bad.cfg"), "--out",
                 dir.file("d")}).code == 1);
  CHECK(run_cli({"simulate", "--config", dir.file("missing.cfg"), "--out",
                 dir.file("d")}).code == 1);
  CHECK(run_cli({"train", "--config", dir.file("run.cfg"), "--data",
                 dir.file("absent"), "--out", dir.file("m.ckpt")}).code == 2);
  CHECK(run_cli({"evaluate", "--ckpt", dir.file("absent.ckpt"), "--data",
                 dir.file("absent")}).code == 2);
  CHECK(run_cli({"predict", "--ckpt", dir.file("absent.ckpt"), "--input",
                 dir.file("absent.tsv"), "--out", dir.file("p.tsv")})
            .code == 2);

  // Checkpoint/config disagreement on the observation length is a config
  // error, not a data error.
  REQUIRE(run_cli({"simulate", "--config", dir.file("run.cfg"), "--out",
                   dir.file("data")}).code == 0);
  const RunConfig cfg = parse_config(kTinyConfig);
  save_checkpoint(dir.file("m.ckpt"), cfg, ModelParams::zeros(cfg).named());
  spit(dir.file("other.cfg"), std::string(kTinyConfig) + "t_obs = 6\n");
  const CliResult clash =
      run_cli({"predict", "--ckpt", dir.file("m.ckpt"), "--input",
               dir.file("data/scenario_000.tsv"), "--out", dir.file("p.tsv"),
               "--config", dir.file("other.cfg")});
  CHECK(clash.code == 1);
  CHECK(clash.err.find("t_obs") != std::string::npos);

  // An input shorter than the observation window is a data error.
  spit(dir.file("short.tsv"), "0\t1\tPedestrian\t0.0\t0.0\n");
  CHECK(run_cli({"predict", "--ckpt", dir.file("m.ckpt"), "--input",
                 dir.file("short.tsv"), "--out", dir.file("p.tsv")})
            .code == 2);
}

TEST_CASE("gradcheck command reports every entry and exits 0") {
  const CliResult gc = run_cli({"gradcheck"});
  CHECK(gc.code == 0);
  CHECK(gc.out.find("matmul") != std::string::npos);
  CHECK(gc.out.find("lstm_cell") != std::string::npos);
  CHECK(gc.out.find("generator_loss") != std::string::npos);
  CHECK(gc.out.find("discriminator_loss") != std::string::npos);
  CHECK(gc.out.find("gradcheck PASS") != std::string::npos);
  CHECK(gc.out.find("FAIL") == std::string::npos);
}
