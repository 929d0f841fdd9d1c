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

#include "experiment/algorithms.h"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>

#include "common/error.h"
#include "metrics/privacy.h"
#include "transforms/transforms.h"

namespace adcop {
namespace {

CompleteOptions Complete(const AlgorithmParams& p, bool capped) {
  CompleteOptions o;
  o.seed = p.seed;
  o.policy = p.policy;
  o.trace = p.trace;
  if (capped) o.privacy_threshold = p.threshold;
  return o;
}

LocalOptions Local(const AlgorithmParams& p) {
  LocalOptions o;
  o.cycles = p.cycles;
  o.seed = p.seed;
  o.p = p.p;
  o.coord_c = p.coord_c;
  o.offer_probability = p.offer_probability;
  o.trace = p.trace;
  return o;
}

using SymmetricSolver = RunReport (*)(const Instance&, const CompleteOptions&);

// Symmetric solvers on an asymmetric instance run on the aggregated form,
// whose construction discloses every side to the peer.
RunReport OnAggregate(SymmetricSolver solve, const std::string& name, const Instance& instance,
                      const AlgorithmParams& p) {
  if (instance.symmetric()) {
    RunReport r = solve(instance, Complete(p, false));
    r.algorithm = name;
    return r;
  }
  RunReport r = solve(AggregateSymmetric(instance), Complete(p, false));
  r.algorithm = name;
  PrivacyLedger ledger(instance);
  ledger.RevealAll();
  r.avg_privacy_loss = ledger.AverageLoss();
  r.max_privacy_gain = ledger.MaxGain();
  r.agent_gain.clear();
  for (int a = 0; a < instance.num_agents(); ++a) r.agent_gain.push_back(ledger.Gain(AgentId{a}));
  if (!r.assignment.empty()) r.cost = EvaluateGlobal(instance, r.assignment);
  return r;
}

// Private sides stay inside each agent's own mirror constraints, so the
// reformulation itself discloses nothing.
RunReport OnPeav(SymmetricSolver solve, const std::string& name, const Instance& instance,
                 const AlgorithmParams& p) {
  const PeavInstance peav = ToPeav(instance);
  RunReport r = solve(peav.dcop, Complete(p, false));
  r.algorithm = name;
  if (!r.assignment.empty()) {
    r.assignment = peav.Project(r.assignment);
    r.cost = EvaluateGlobal(instance, r.assignment);
  }
  r.explored.clear();
  return r;
}

using Runner = std::function<RunReport(const Instance&, const AlgorithmParams&)>;

const std::map<std::string, Runner>& Registry() {
  static const auto* registry = new std::map<std::string, Runner>{
      {"bruteforce",
       [](const Instance& i, const AlgorithmParams& p) { return BruteForce(i, p.oracle_cap); }},
      {"syncbb", [](const Instance& i, const AlgorithmParams& p) {
         return OnAggregate(&SyncBB, "syncbb", i, p);
       }},
      {"afb", [](const Instance& i, const AlgorithmParams& p) {
         return OnAggregate(&Afb, "afb", i, p);
       }},
      {"syncbb-peav", [](const Instance& i, const AlgorithmParams& p) {
         return OnPeav(&SyncBB, "syncbb-peav", i, p);
       }},
      {"afb-peav", [](const Instance& i, const AlgorithmParams& p) {
         return OnPeav(&Afb, "afb-peav", i, p);
       }},
      {"onesided-syncbb", [](const Instance& i, const AlgorithmParams& p) {
         return OneSidedSyncBB(i, Complete(p, false));
       }},
      {"syncabb", [](const Instance& i, const AlgorithmParams& p) {
         return SyncAbb(i, Complete(p, true));
       }},
      {"syncabb2ph", [](const Instance& i, const AlgorithmParams& p) {
         return SyncAbb2ph(i, Complete(p, true));
       }},
      {"atwb", [](const Instance& i, const AlgorithmParams& p) {
         return Atwb(i, Complete(p, true));
       }},
      {"dsa", [](const Instance& i, const AlgorithmParams& p) { return Dsa(i, Local(p)); }},
      {"mgm", [](const Instance& i, const AlgorithmParams& p) { return Mgm(i, Local(p)); }},
      {"mgm2", [](const Instance& i, const AlgorithmParams& p) { return Mgm2(i, Local(p)); }},
      {"maxsum", [](const Instance& i, const AlgorithmParams& p) { return MaxSum(i, Local(p)); }},
      {"acls", [](const Instance& i, const AlgorithmParams& p) { return Acls(i, Local(p)); }},
      {"mcsmgm", [](const Instance& i, const AlgorithmParams& p) { return McsMgm(i, Local(p)); }},
      {"gcamgm", [](const Instance& i, const AlgorithmParams& p) { return GcaMgm(i, Local(p)); }},
  };
  return *registry;
}

}  // namespace

std::vector<std::string> AlgorithmNames() {
  std::vector<std::string> names;
  for (const auto& [name, runner] : Registry()) names.push_back(name);
  return names;
}

bool IsKnownAlgorithm(const std::string& name) { return Registry().count(name) > 0; }

bool IsLocalAlgorithm(const std::string& name) {
  static const char* kLocal[] = {"dsa", "mgm", "mgm2", "maxsum", "acls", "mcsmgm", "gcamgm"};
  return std::find(std::begin(kLocal), std::end(kLocal), name) != std::end(kLocal);
}

std::uint64_t SearchSpace(const Instance& instance) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t space = 1;
  for (int v = 0; v < instance.num_variables(); ++v) {
    const auto d = static_cast<std::uint64_t>(instance.domain_size(v));
    if (d != 0 && space > kMax / d) return kMax;
    space *= d;
  }
  return space;
}

RunReport RunAlgorithm(const std::string& name, const Instance& instance,
                       const AlgorithmParams& params) {
  auto it = Registry().find(name);
  if (it == Registry().end()) Fail(ErrorCode::kUnknownAlgorithm, "unknown algorithm '" + name + "'");
  RunReport r = it->second(instance, params);
  if (params.oracle && !r.optimal_cost && SearchSpace(instance) <= params.oracle_cap) {
    r.optimal_cost = BruteForceOptimal(instance, params.oracle_cap).cost;
  }
  return r;
}

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kDomain: return "domain";
    case ErrorCode::kNotFound: return "not_found";
    case ErrorCode::kPrecondition: return "precondition";
    case ErrorCode::kParse: return "parse";
    case ErrorCode::kIo: return "io";
    case ErrorCode::kCapExceeded: return "cap_exceeded";
    case ErrorCode::kProtocol: return "protocol";
    case ErrorCode::kRouting: return "routing";
    case ErrorCode::kUnsoundPenalty: return "unsound_penalty";
    case ErrorCode::kConfig: return "config";
    case ErrorCode::kUnknownAlgorithm: return "unknown_algorithm";
  }
  return "error";
}

}  // namespace adcop
