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

#ifndef ADCOP_LOCAL_LOCAL_VIEW_H_
#define ADCOP_LOCAL_LOCAL_VIEW_H_

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "metrics/privacy.h"
#include "metrics/report.h"
#include "model/instance.h"
#include "simnet/network.h"

namespace adcop {

struct LocalOptions {
  int cycles = 200;
  std::uint64_t seed = 0;
  // Replacement probability; negative selects the algorithm default
  // (0.6 for DSA, 0.5 for ACLS).
  double p = -1;
  double coord_c = 1.0;
  double offer_probability = 0.5;
  std::ostream* trace = nullptr;
  // Check every cycle that transferred costs still sum to the global cost.
  bool verify_transfers = false;
};

struct LocalPayload {
  MsgType type = MsgType::kValue;
  int value = 0;
  Cost lr = 0;
  bool flag = false;
  Cost first = 0;
  Cost second = 0;
  std::vector<Cost> table;
};

using LocalNetwork = Network<LocalPayload>;

// An agent's private picture: a mutable copy of each of its tables, read
// with its own value first, plus the latest value of each neighbor.
class LocalView {
 public:
  struct Edge {
    int neighbor = 0;  // agent
    int constraint = 0;
    int side = 0;      // scope position of this agent
    CostTable table;   // rows: own value, cols: neighbor value
    int neighbor_value = 0;
  };

  LocalView(const Instance& instance, int agent);

  int agent() const { return agent_; }
  int domain() const { return domain_; }
  std::vector<Edge>& edges() { return edges_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors() const { return neighbors_; }

  void SetNeighborValue(int neighbor, int value);

  // Local cost of `value` against the cached neighbor values, charging one
  // check per edge.
  Cost Local(int value, AgentContext& ctx) const;
  // Best value (lowest index among minima) and its reduction relative to
  // `current`, floored at 0.
  std::pair<int, Cost> BestReduction(int current, AgentContext& ctx) const;

  // Cell index in the constraint's scope-ordered table for (own, neighbor).
  int ScopeCell(const Edge& e, int own, int neighbor_value) const;

 private:
  int agent_;
  int domain_;
  std::vector<Edge> edges_;
  std::vector<int> neighbors_;
};

// Per-run scaffolding shared by the synchronous local searches.
class LocalRun {
 public:
  LocalRun(const Instance& instance, const LocalOptions& opts, std::string name,
           bool track_privacy);

  const Instance& instance() const { return instance_; }
  int size() const { return static_cast<int>(views_.size()); }
  LocalNetwork& net() { return net_; }
  AgentContext& ctx(int a) { return net_.ctx(a); }
  LocalView& view(int a) { return views_[a]; }
  Assignment& values() { return values_; }
  PrivacyLedger& ledger() { return ledger_; }
  RunReport& report() { return report_; }

  // Every agent sends its value to each neighbor; caches are refreshed.
  void ExchangeValues();
  // Records the cycle's cost and convergence bookkeeping.
  void EndCycle(int cycle);
  RunReport Finish();

 private:
  const Instance& instance_;
  LocalNetwork net_;
  std::vector<LocalView> views_;
  Assignment values_;
  Assignment last_values_;
  PrivacyLedger ledger_;
  bool track_privacy_;
  RunReport report_;
  int last_change_ = 0;
};

void RequireLocalShape(const Instance& instance, const char* algorithm);

// Local-search entry points.
RunReport Dsa(const Instance& instance, const LocalOptions& opts = {});
RunReport Mgm(const Instance& instance, const LocalOptions& opts = {});
RunReport Mgm2(const Instance& instance, const LocalOptions& opts = {});
RunReport MaxSum(const Instance& instance, const LocalOptions& opts = {});
RunReport Acls(const Instance& instance, const LocalOptions& opts = {});
RunReport McsMgm(const Instance& instance, const LocalOptions& opts = {});
RunReport GcaMgm(const Instance& instance, const LocalOptions& opts = {});

}  // namespace adcop

#endif  // ADCOP_LOCAL_LOCAL_VIEW_H_
