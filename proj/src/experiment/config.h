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

#ifndef ADCOP_EXPERIMENT_CONFIG_H_
#define ADCOP_EXPERIMENT_CONFIG_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "experiment/algorithms.h"
#include "generators/generators.h"

namespace adcop {

// Optional solver parameters; set fields replace the defaults.
struct ParamOverrides {
  std::optional<int> cycles;
  std::optional<double> p;
  std::optional<double> coord_c;
  std::optional<double> offer_probability;
  std::optional<double> threshold;
  std::optional<OrderPolicy> policy;

  void ApplyTo(AlgorithmParams& params) const;
};

struct ExperimentConfig {
  GeneratorSpec spec = PresetSpec("setup1-desk");
  std::vector<std::string> algorithms;
  int seeds = 1;
  std::uint64_t base_seed = 0;
  std::string out;
  AlgorithmParams defaults;
  // Per-algorithm sections of the config file.
  std::map<std::string, ParamOverrides> per_algorithm;
  // Command-line flags, applied last.
  ParamOverrides flags;

  AlgorithmParams ParamsFor(const std::string& algorithm, std::uint64_t seed) const;
};

// Reads an INI file with an [instance] section (preset plus generator
// overrides), an [experiment] section and optional [algorithm.<name>]
// sections. Fails with kConfig on malformed content and kIo when the file
// cannot be read.
ExperimentConfig LoadConfig(const std::string& path);
ExperimentConfig ParseConfig(const std::string& text);

// Sets one generator parameter by name (n, k, p1, p2, degree, edge_p, z,
// lo, hi, m0, m). Fails with kConfig for unknown names.
void SetGeneratorParam(GeneratorSpec& spec, const std::string& key, double value);

// Fails with kConfig when the configuration cannot run.
void ValidateConfig(const ExperimentConfig& config);

std::vector<std::string> SplitList(const std::string& text);

}  // namespace adcop

#endif  // ADCOP_EXPERIMENT_CONFIG_H_
