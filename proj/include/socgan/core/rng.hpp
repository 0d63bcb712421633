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

#ifndef SOCGAN_CORE_RNG_HPP
#define SOCGAN_CORE_RNG_HPP

#include <cmath>
#include <cstdint>

namespace socgan {

/// Deterministic random stream (xoshiro256++ seeded via splitmix64).
///
/// The standard <random> distributions are implementation-defined, so every
/// draw here is spelled out explicitly: identical seeds give bit-identical
/// streams on any conforming platform.
class Rng {
 public:
  explicit Rng(uint64_t seed) {
    uint64_t x = seed;
    for (auto& word : s_) word = splitmix64(x);
  }

  /// Stable sub-stream derivation, used to give each purpose (weight init,
  /// shuffling, noise, simulation) its own independent stream.
  static uint64_t derive(uint64_t seed, uint64_t stream) {
    uint64_t x = seed;
    const uint64_t a = splitmix64(x);
    x = a ^ (0x9e3779b97f4a7c15ULL * (stream + 1));
    return splitmix64(x);
  }

  uint64_t next_u64() {
    const uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform01();
  }

  /// Inclusive integer range.
  int uniform_int(int lo, int hi) {
    const uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(next_u64() % span);
  }

  /// Standard normal via Box-Muller; the second deviate of each pair is
  /// cached so consecutive calls stay cheap and deterministic.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - uniform01();  // (0, 1], keeps log finite
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

 private:
  static uint64_t splitmix64(uint64_t& x) {
    uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  static uint64_t rotl(uint64_t v, int k) {
    return (v << k) | (v >> (64 - k));
  }

  uint64_t s_[4];
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// Fixed stream tags so independent consumers of one user seed never collide.
enum class RngStream : uint64_t {
  kWeightInit = 1,
  kShuffle = 2,
  kTrainNoise = 3,
  kValNoise = 4,
  kEvalNoise = 5,
  kSimulate = 6,
  kDataset = 7,
};

inline Rng make_rng(uint64_t seed, RngStream stream) {
  return Rng(Rng::derive(seed, static_cast<uint64_t>(stream)));
}

}  // namespace socgan

#endif  // SOCGAN_CORE_RNG_HPP
