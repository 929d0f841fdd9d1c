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

#ifndef ADCOP_GENERATORS_GENERATORS_H_
#define ADCOP_GENERATORS_GENERATORS_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "model/instance.h"

namespace adcop {

struct MaxDiscspParams {
  int n = 10;
  int k = 10;
  double p1 = 0.4;
  double p2 = 0.5;
};

// Cost model of graphical games: each side entry is 0 with probability
// `zero_probability`, otherwise uniform in [lo, hi].
struct GameCosts {
  double zero_probability = 0.35;
  int lo = 1;
  int hi = 100;
};

struct GameParams {
  int n = 200;
  int k = 10;
  // Erdos-Renyi edge probability, used when `mean_degree` is negative.
  double edge_probability = 0.025;
  // Exact edge quota of round(n * mean_degree / 2) when non-negative.
  double mean_degree = -1;
  GameCosts costs;
};

struct ScaleFreeParams {
  int n = 200;
  int k = 10;
  int m0 = 10;
  int m = 4;
  GameCosts costs;
};

Instance GenMaxDiscsp(const MaxDiscspParams& params, std::uint64_t seed);
Instance GenGraphicalGame(const GameParams& params, std::uint64_t seed);
Instance GenScaleFree(const ScaleFreeParams& params, std::uint64_t seed);

// Edge list (i < j) of a graph generator, in the order constraints are
// emitted.
using EdgeList = std::vector<std::pair<int, int>>;
EdgeList ErdosRenyiEdges(int n, double p, std::uint64_t seed);
EdgeList QuotaEdges(int n, int edges, std::uint64_t seed);
EdgeList BarabasiAlbertEdges(int n, int m0, int m, std::uint64_t seed);

enum class Family { kMaxDiscsp, kGame, kScaleFree };

// Generator parameters of any family, as named by presets and overridden
// by the command line.
struct GeneratorSpec {
  std::string preset;
  Family family = Family::kMaxDiscsp;
  MaxDiscspParams discsp;
  GameParams game;
  ScaleFreeParams scale_free;

  int n() const;
  int k() const;
  void set_n(int n);
  void set_k(int k);
};

// Fails with kConfig for unknown names.
GeneratorSpec PresetSpec(const std::string& name);
std::vector<std::string> PresetNames();
// Fails with kConfig when the parameters are out of range.
void ValidateSpec(const GeneratorSpec& spec);
Instance Generate(const GeneratorSpec& spec, std::uint64_t seed);

}  // namespace adcop

#endif  // ADCOP_GENERATORS_GENERATORS_H_
