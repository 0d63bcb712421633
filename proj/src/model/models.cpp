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

#include "socgan/model/models.hpp"

namespace socgan {
namespace {

void add_embed(std::vector<std::pair<std::string, Tensor>>& out,
               const std::string& prefix, const EmbedParams& p) {
  out.emplace_back(prefix + ".w", p.w);
  out.emplace_back(prefix + ".b", p.b);
}

void add_lstm(std::vector<std::pair<std::string, Tensor>>& out,
              const std::string& prefix, const LstmParams& p) {
  out.emplace_back(prefix + ".w", p.w);
  out.emplace_back(prefix + ".u", p.u);
  out.emplace_back(prefix + ".b", p.b);
}

std::vector<std::pair<std::string, Tensor>> encoder_named(
    const EncoderParams& p) {
  std::vector<std::pair<std::string, Tensor>> out;
  add_embed(out, "enc.dyn_embed", p.dyn_embed);
  for (size_t l = 0; l < p.dyn_lstm.layers.size(); ++l) {
    add_lstm(out, "enc.dyn_lstm." + std::to_string(l), p.dyn_lstm.layers[l]);
  }
  add_embed(out, "enc.spa_embed", p.spa_embed);
  add_embed(out, "enc.aco_embed", p.aco_embed);
  add_embed(out, "enc.fuse", p.fuse);
  return out;
}

std::vector<std::pair<std::string, Tensor>> generator_named(
    const GeneratorParams& p) {
  std::vector<std::pair<std::string, Tensor>> out;
  add_embed(out, "gen.in_embed", p.in_embed);
  add_embed(out, "gen.init_h", p.init_h);
  add_embed(out, "gen.init_c", p.init_c);
  add_lstm(out, "gen.lstm", p.lstm);
  add_embed(out, "gen.out", p.out);
  return out;
}

std::vector<std::pair<std::string, Tensor>> discriminator_named(
    const DiscriminatorParams& p) {
  std::vector<std::pair<std::string, Tensor>> out;
  add_embed(out, "disc.in_embed", p.in_embed);
  add_embed(out, "disc.init_h", p.init_h);
  add_embed(out, "disc.init_c", p.init_c);
  add_lstm(out, "disc.lstm", p.lstm);
  add_embed(out, "disc.score", p.score);
  return out;
}

EmbedParams clone_embed(const EmbedParams& p) {
  return {p.w.clone(), p.b.clone()};
}

LstmParams clone_lstm(const LstmParams& p) {
  return {p.w.clone(), p.u.clone(), p.b.clone()};
}

}  // namespace

ModelParams ModelParams::zeros(const RunConfig& cfg) {
  ModelParams m;
  m.encoder = EncoderParams::zeros(cfg);
  m.generator = GeneratorParams::zeros(cfg);
  m.discriminator = DiscriminatorParams::zeros(cfg);
  return m;
}

ModelParams ModelParams::init(const RunConfig& cfg, Rng& rng) {
  ModelParams m;
  m.encoder = EncoderParams::init(cfg, rng);
  m.generator = GeneratorParams::init(cfg, rng);
  m.discriminator = DiscriminatorParams::init(cfg, rng);
  return m;
}

std::vector<std::pair<std::string, Tensor>> ModelParams::named() const {
  std::vector<std::pair<std::string, Tensor>> out = encoder_named(encoder);
  for (auto& kv : generator_named(generator)) out.push_back(std::move(kv));
  for (auto& kv : discriminator_named(discriminator)) {
    out.push_back(std::move(kv));
  }
  return out;
}

std::vector<Tensor> ModelParams::g_group() const {
  std::vector<Tensor> out;
  for (auto& kv : encoder_named(encoder)) out.push_back(kv.second);
  for (auto& kv : generator_named(generator)) out.push_back(kv.second);
  return out;
}

std::vector<Tensor> ModelParams::d_group() const {
  std::vector<Tensor> out;
  for (auto& kv : discriminator_named(discriminator)) out.push_back(kv.second);
  return out;
}

ModelParams ModelParams::clone() const {
  ModelParams m;
  m.encoder.dyn_embed = clone_embed(encoder.dyn_embed);
  for (const LstmParams& layer : encoder.dyn_lstm.layers) {
    m.encoder.dyn_lstm.layers.push_back(clone_lstm(layer));
  }
  m.encoder.spa_embed = clone_embed(encoder.spa_embed);
  m.encoder.aco_embed = clone_embed(encoder.aco_embed);
  m.encoder.fuse = clone_embed(encoder.fuse);
  m.generator.in_embed = clone_embed(generator.in_embed);
  m.generator.init_h = clone_embed(generator.init_h);
  m.generator.init_c = clone_embed(generator.init_c);
  m.generator.lstm = clone_lstm(generator.lstm);
  m.generator.out = clone_embed(generator.out);
  m.discriminator.in_embed = clone_embed(discriminator.in_embed);
  m.discriminator.init_h = clone_embed(discriminator.init_h);
  m.discriminator.init_c = clone_embed(discriminator.init_c);
  m.discriminator.lstm = clone_lstm(discriminator.lstm);
  m.discriminator.score = clone_embed(discriminator.score);
  return m;
}

}  // namespace socgan
