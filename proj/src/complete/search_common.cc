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

#include "complete/search_common.h"

#include <string>
#include <utility>

namespace adcop {

void RequireOneVariablePerAgent(const Instance& instance, const char* algorithm) {
  if (instance.symmetric() || !instance.all_binary() || !instance.one_variable_per_agent()) {
    Fail(ErrorCode::kPrecondition,
         std::string(algorithm) +
             " needs a binary asymmetric instance with one variable per agent");
  }
}

RunReport FinishSearch(const std::string& algorithm, const Instance& instance,
                       const CpaNetwork& net, SearchObserver& obs, bool completed,
                       bool track_privacy) {
  RunReport r;
  r.algorithm = algorithm;
  r.assignment = obs.best();
  if (!r.assignment.empty()) r.cost = EvaluateGlobal(instance, r.assignment);
  r.claimed_cost = obs.bound();
  r.nclo = net.GlobalNclo();
  r.messages = net.counts();
  r.bound_history = obs.bound_history();
  r.explored = std::move(obs.explored());
  r.halted_by_privacy = !completed;
  if (!completed) r.status = "halted";
  if (track_privacy) {
    r.avg_privacy_loss = obs.ledger().AverageLoss();
    r.max_privacy_gain = obs.ledger().MaxGain();
    for (int a = 0; a < instance.num_agents(); ++a) {
      r.agent_gain.push_back(obs.ledger().Gain(AgentId{a}));
    }
  }
  return r;
}

}  // namespace adcop
