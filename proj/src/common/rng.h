// Copyright 2026 The adcop Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ADCOP_COMMON_RNG_H_
#define ADCOP_COMMON_RNG_H_

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace adcop {

// Mixes a 64-bit value (splitmix64 finalizer).
std::uint64_t MixSeed(std::uint64_t x);

// Seed of the stream identified by (base, stream). Distinct streams of the
// same base are statistically independent and reproducible.
std::uint64_t DeriveSeed(std::uint64_t base, std::uint64_t stream);

// Deterministic random stream. The distributions are implemented here rather
// than taken from <random> so that sequences are identical across standard
// library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

  std::uint64_t NextU64() { return engine_(); }

  // Uniform integer in [lo, hi].
  std::int64_t UniformInt(std::int64_t lo, std::int64_t hi);

  // Uniform index in [0, n).
  int Index(int n) { return static_cast<int>(UniformInt(0, n - 1)); }

  // Uniform real in [0, 1).
  double UniformReal();

  bool Bernoulli(double p) { return p >= 1.0 || UniformReal() < p; }

  // Index drawn with probability proportional to weights[i]; weights must be
  // non-negative with a positive sum.
  int Weighted(std::span<const double> weights);

  template <class T>
  void Shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(UniformInt(0, i - 1));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace adcop

#endif  // ADCOP_COMMON_RNG_H_
