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

#ifndef ADCOP_COMPLETE_COMPLETE_H_
#define ADCOP_COMPLETE_COMPLETE_H_

#include <cstdint>

#include "complete/search_common.h"
#include "metrics/report.h"
#include "model/instance.h"

namespace adcop {

struct OptimalSolution {
  Assignment assignment;
  Cost cost = 0;
};

inline constexpr std::uint64_t kDefaultBruteForceCap = 10'000'000;

// Exhaustive minimum of evaluate_global; the lexicographically first
// minimizer wins ties. Fails with kCapExceeded when the search space is
// larger than `cap`.
OptimalSolution BruteForceOptimal(const Instance& instance,
                                  std::uint64_t cap = kDefaultBruteForceCap);
RunReport BruteForce(const Instance& instance, std::uint64_t cap = kDefaultBruteForceCap);

// Symmetric SyncBB with one search node per variable, in variable order.
RunReport SyncBB(const Instance& symmetric, const CompleteOptions& opts = {});

// SyncBB where each agent counts only its own side against its
// predecessors. `claimed_cost` holds the bound it believes in.
RunReport OneSidedSyncBB(const Instance& instance, const CompleteOptions& opts = {});

RunReport SyncAbb(const Instance& instance, const CompleteOptions& opts = {});
RunReport SyncAbb2ph(const Instance& instance, const CompleteOptions& opts = {});

// Asynchronous forward bounding over a symmetric instance.
RunReport Afb(const Instance& symmetric, const CompleteOptions& opts = {});
// Asymmetric two-way bounding.
RunReport Atwb(const Instance& instance, const CompleteOptions& opts = {});

// h2_i(v, j): sum over neighbors l of i with l > j of min_d side_i(v, d).
// Indexed [agent][value][j], j in 0..n-1.
std::vector<std::vector<std::vector<Cost>>> BuildH2(const Instance& instance);

}  // namespace adcop

#endif  // ADCOP_COMPLETE_COMPLETE_H_
