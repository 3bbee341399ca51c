// Copyright 2026 The qca Authors
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

#ifndef QCA_RNG_HPP
#define QCA_RNG_HPP

#include <cstdint>
#include <random>

namespace qca {

/// SplitMix64 step, used only to whiten seeds.
inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Deterministic random stream. All stochastic choices in the toolkit draw
/// from an instance of this; there is no global random state. Uniform
/// doubles are derived from raw 64-bit output directly, so a given seed
/// reproduces the same draws everywhere.
class RandomStream {
 public:
  explicit RandomStream(uint64_t seed) : gen_(splitmix64(seed)) {}

  uint64_t raw() { return gen_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform() < p; }

  bool bit() { return (gen_() & 1ULL) != 0; }

  /// Stream for shard `index` of a run seeded with `master`. Shards merged
  /// in index order reproduce the single-threaded result regardless of how
  /// many workers ran them.
  static RandomStream for_shard(uint64_t master, uint64_t index) {
    return RandomStream(splitmix64(master) ^ splitmix64(index + 1));
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace qca

#endif  // QCA_RNG_HPP
