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

#ifndef ADCOP_EXPERIMENT_ALGORITHMS_H_
#define ADCOP_EXPERIMENT_ALGORITHMS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "complete/complete.h"
#include "local/local_view.h"
#include "metrics/report.h"
#include "model/instance.h"

namespace adcop {

struct AlgorithmParams {
  std::uint64_t seed = 0;
  OrderPolicy policy = OrderPolicy::kFifo;
  int cycles = 200;
  double p = -1;
  double coord_c = 1.0;
  double offer_probability = 0.5;
  // Privacy cap for syncabb, syncabb2ph and atwb; negative disables it.
  double threshold = -1;
  // Fill optimal_cost from the brute-force oracle when the search space is
  // at most `oracle_cap`.
  bool oracle = true;
  std::uint64_t oracle_cap = kDefaultBruteForceCap;
  std::ostream* trace = nullptr;
};

std::vector<std::string> AlgorithmNames();
bool IsKnownAlgorithm(const std::string& name);
bool IsLocalAlgorithm(const std::string& name);

// Runs `name` on `instance`. Results are always re-evaluated on the instance
// as given, whatever reformulation the algorithm runs on. Fails with
// kUnknownAlgorithm for unknown names.
RunReport RunAlgorithm(const std::string& name, const Instance& instance,
                       const AlgorithmParams& params);

// Size of the joint assignment space, saturating at UINT64_MAX.
std::uint64_t SearchSpace(const Instance& instance);

const char* ErrorCodeName(ErrorCode code);

}  // namespace adcop

#endif  // ADCOP_EXPERIMENT_ALGORITHMS_H_
