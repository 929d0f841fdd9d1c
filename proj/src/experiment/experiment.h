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

#ifndef ADCOP_EXPERIMENT_EXPERIMENT_H_
#define ADCOP_EXPERIMENT_EXPERIMENT_H_

#include <cstdint>
#include <string>
#include <vector>

#include "experiment/config.h"
#include "metrics/report.h"

namespace adcop {

struct AlgorithmSummary {
  std::string algorithm;
  int runs = 0;
  int failures = 0;
  // Means over successful runs with a finite cost.
  double cost = 0;
  double nclo = 0;
  double messages = 0;
  double avg_privacy_loss = 0;
  double max_privacy_gain = 0;
};

struct ExperimentResult {
  // Header plus one row per (seed, algorithm), seed-major.
  std::string csv;
  std::vector<AlgorithmSummary> summary;
};

RowContext ContextFor(const GeneratorSpec& spec, std::uint64_t seed);

// Seed i of the run uses instance seed base_seed + i.
ExperimentResult RunExperiment(const ExperimentConfig& config);
std::string FormatSummary(const std::vector<AlgorithmSummary>& summary);

}  // namespace adcop

#endif  // ADCOP_EXPERIMENT_EXPERIMENT_H_
