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

#include "local/local_view.h"

namespace adcop {

RunReport Dsa(const Instance& instance, const LocalOptions& opts) {
  RequireLocalShape(instance, "DSA");
  const double p = opts.p < 0 ? 0.6 : opts.p;
  LocalRun run(instance, opts, "dsa", false);
  auto& values = run.values();
  for (int t = 1; t <= opts.cycles; ++t) {
    run.ExchangeValues();
    for (int a = 0; a < run.size(); ++a) {
      auto [best, gain] = run.view(a).BestReduction(values[a], run.ctx(a));
      if (gain > 0 && run.ctx(a).rng.Bernoulli(p)) values[a] = best;
    }
    run.EndCycle(t);
  }
  return run.Finish();
}

}  // namespace adcop
