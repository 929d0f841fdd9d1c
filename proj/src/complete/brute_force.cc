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

#include <algorithm>
#include <functional>

#include "complete/complete.h"

namespace adcop {

OptimalSolution BruteForceOptimal(const Instance& instance, std::uint64_t cap) {
  const int n = instance.num_variables();
  std::uint64_t space = 1;
  for (int v = 0; v < n; ++v) {
    space *= static_cast<std::uint64_t>(instance.domain_size(v));
    if (space > cap) {
      Fail(ErrorCode::kCapExceeded, "search space exceeds the brute-force cap of " +
                                        std::to_string(cap) + " assignments");
    }
  }
  // Each constraint is charged at its highest-indexed scope variable.
  std::vector<std::vector<int>> closing(n);
  for (int c = 0; c < instance.num_constraints(); ++c) {
    int last = 0;
    for (int v : instance.constraint(c).scope) last = std::max(last, v);
    closing[last].push_back(c);
  }
  OptimalSolution best;
  best.cost = kInfiniteCost;
  Assignment current(n, 0);
  std::vector<int> scratch;
  std::function<void(int, Cost)> walk = [&](int v, Cost acc) {
    if (v == n) {
      if (acc < best.cost) {
        best.cost = acc;
        best.assignment = current;
      }
      return;
    }
    for (int d = 0; d < instance.domain_size(v); ++d) {
      current[v] = d;
      Cost add = 0;
      for (int c : closing[v]) {
        const auto& con = instance.constraint(c);
        scratch.clear();
        for (int s : con.scope) scratch.push_back(current[s]);
        for (const auto& side : con.sides) add += side.At(scratch);
      }
      walk(v + 1, acc + add);
    }
  };
  walk(0, 0);
  if (n == 0) best.cost = 0;
  return best;
}

RunReport BruteForce(const Instance& instance, std::uint64_t cap) {
  auto opt = BruteForceOptimal(instance, cap);
  RunReport r;
  r.algorithm = "bruteforce";
  r.assignment = opt.assignment;
  r.cost = opt.cost;
  r.claimed_cost = opt.cost;
  r.optimal_cost = opt.cost;
  return r;
}

}  // namespace adcop
