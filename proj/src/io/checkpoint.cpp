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

#include "socgan/io/checkpoint.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "socgan/core/error.hpp"

namespace socgan {

void save_checkpoint(const std::string& path, const RunConfig& config,
                     const std::vector<std::pair<std::string, Tensor>>& tensors) {
  std::ostringstream out;
  out << "SOCGAN-CKPT v1\n";

  const std::string cfg_text = serialize_config(config);
  int cfg_lines = 0;
  for (char c : cfg_text) cfg_lines += c == '\n';
  out << "config " << cfg_lines << "\n" << cfg_text;

  out << "tensors " << tensors.size() << "\n";
  for (const auto& [name, tensor] : tensors) {
    out << name << " " << tensor.rows() << " " << tensor.cols() << "\n";
  }

  out << "payload\n";
  char buf[40];
  for (const auto& [name, tensor] : tensors) {
    (void)name;
    const std::vector<double>& values = tensor.values();
    for (size_t i = 0; i < values.size(); ++i) {
      std::snprintf(buf, sizeof(buf), "%.17g", values[i]);
      out << buf << ((i + 1) % 8 == 0 ? '\n' : ' ');
    }
    if (!values.empty() && values.size() % 8 != 0) out << '\n';
  }

  std::ofstream file(path, std::ios::binary);
  if (!file) throw DataError("cannot write checkpoint: " + path);
  file << out.str();
  if (!file) throw DataError("write failed: " + path);
}

Checkpoint load_checkpoint(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open checkpoint: " + path);

  std::string line;
  if (!std::getline(in, line) || line != "SOCGAN-CKPT v1") {
    throw DataError("not a SOCGAN-CKPT: " + path);
  }

  std::string word;
  size_t cfg_lines = 0;
  if (!(in >> word >> cfg_lines) || word != "config") {
    throw DataError(path + ": expected config section");
  }
  std::getline(in, line);  // consume rest of the count line
  std::ostringstream cfg_text;
  for (size_t i = 0; i < cfg_lines; ++i) {
    if (!std::getline(in, line)) {
      throw DataError(path + ": truncated config section");
    }
    cfg_text << line << "\n";
  }

  Checkpoint ckpt;
  ckpt.config = parse_config(cfg_text.str());

  size_t n_tensors = 0;
  if (!(in >> word >> n_tensors) || word != "tensors") {
    throw DataError(path + ": expected tensors section");
  }
  struct Entry {
    std::string name;
    int64_t rows = 0, cols = 0;
  };
  std::vector<Entry> manifest;
  std::set<std::string> seen;
  for (size_t i = 0; i < n_tensors; ++i) {
    Entry e;
    if (!(in >> e.name >> e.rows >> e.cols)) {
      throw DataError(path + ": truncated manifest");
    }
    if (e.rows < 1 || e.cols < 1) {
      throw DataError(path + ": bad shape for " + e.name);
    }
    if (!seen.insert(e.name).second) {
      throw DataError(path + ": duplicate tensor name " + e.name);
    }
    manifest.push_back(e);
  }

  if (!(in >> word) || word != "payload") {
    throw DataError(path + ": expected payload section");
  }
  for (const Entry& e : manifest) {
    std::vector<double> values(static_cast<size_t>(e.rows * e.cols));
    for (double& v : values) {
      if (!(in >> v)) {
        throw DataError(path + ": payload size mismatch for " + e.name);
      }
    }
    ckpt.tensors.emplace_back(
        e.name, Tensor::from_values(e.rows, e.cols, std::move(values)));
  }
  return ckpt;
}

ModelParams load_model(const Checkpoint& ckpt) {
  ModelParams params = ModelParams::zeros(ckpt.config);
  auto expected = params.named();
  if (expected.size() != ckpt.tensors.size()) {
    throw DataError("checkpoint holds " + std::to_string(ckpt.tensors.size()) +
                    " tensors, config implies " +
                    std::to_string(expected.size()));
  }
  for (size_t i = 0; i < expected.size(); ++i) {
    auto& [want_name, want] = expected[i];
    const auto& [got_name, got] = ckpt.tensors[i];
    if (want_name != got_name) {
      throw DataError("checkpoint tensor '" + got_name +
                      "' does not match expected '" + want_name + "'");
    }
    if (want.rows() != got.rows() || want.cols() != got.cols()) {
      throw DataError("checkpoint tensor " + got_name + " has shape " +
                      got.shape_str() + ", config implies " +
                      want.shape_str());
    }
    std::copy(got.values().begin(), got.values().end(), want.data());
  }
  return params;
}

}  // namespace socgan
