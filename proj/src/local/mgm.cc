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

#include "common/error.h"
#include "local/local_view.h"

namespace adcop {
namespace {

enum class Sharing { kNone, kMinimal, kGuaranteed };

// LR exchange and the winner rule; lower index wins ties.
void LrRound(LocalRun& run, const std::vector<std::pair<int, Cost>>& best,
             std::vector<std::vector<std::pair<int, Cost>>>* heard) {
  auto& net = run.net();
  for (int a = 0; a < run.size(); ++a) {
    for (int nb : run.view(a).neighbors()) {
      LocalPayload p;
      p.type = MsgType::kLr;
      p.lr = best[a].second;
      net.Send(a, nb, std::move(p));
    }
  }
  std::vector<bool> wins(run.size(), true);
  for (const auto& env : net.DeliverRound()) {
    const int a = env.receiver;
    const Cost theirs = env.payload.lr;
    const Cost mine = best[a].second;
    if (theirs > mine || (theirs == mine && env.sender < a)) wins[a] = false;
    if (heard != nullptr) (*heard)[a].push_back({env.sender, theirs});
  }
  for (int a = 0; a < run.size(); ++a) {
    if (best[a].second > 0 && wins[a]) run.values()[a] = best[a].first;
  }
}

RunReport RunMgm(const Instance& instance, const LocalOptions& opts, Sharing sharing) {
  const char* name = sharing == Sharing::kNone      ? "mgm"
                     : sharing == Sharing::kMinimal ? "mcsmgm"
                                                    : "gcamgm";
  RequireLocalShape(instance, name);
  LocalRun run(instance, opts, name, sharing != Sharing::kNone);
  const int n = run.size();
  auto& values = run.values();
  // Neighbor values seen last cycle and last-known LRs, per edge.
  std::vector<std::vector<int>> prev(n);
  std::vector<std::vector<Cost>> last_lr(n);
  for (int a = 0; a < n; ++a) {
    prev[a].assign(run.view(a).edges().size(), -1);
    last_lr[a].assign(run.view(a).edges().size(), 0);
  }
  std::vector<std::vector<std::pair<int, Cost>>> heard(n);
  for (int t = 1; t <= opts.cycles; ++t) {
    run.ExchangeValues();
    if (sharing != Sharing::kNone) {
      for (int a = 0; a < n; ++a) {
        auto& view = run.view(a);
        auto& edges = view.edges();
        for (std::size_t e = 0; e < edges.size(); ++e) {
          auto& edge = edges[e];
          const int old_value = prev[a][e];
          const int new_value = edge.neighbor_value;
          prev[a][e] = new_value;
          if (old_value < 0 || old_value == new_value) continue;
          const int own = values[a];
          run.ctx(a).Charge(2);
          const Cost delta = edge.table(own, new_value) - edge.table(own, old_value);
          const Cost trigger = sharing == Sharing::kMinimal ? last_lr[a][e] : 0;
          if (delta <= trigger) continue;
          LocalPayload p;
          p.type = MsgType::kTransfer;
          p.value = new_value;
          p.table.resize(edge.table.rows());
          for (int x = 0; x < edge.table.rows(); ++x) {
            p.table[x] = edge.table(x, new_value);
            edge.table(x, new_value) = 0;
            run.ledger().Record(AgentId{a}, AgentId{edge.neighbor},
                                EntryRef{edge.constraint, edge.side,
                                         view.ScopeCell(edge, x, new_value)});
          }
          p.first = edge.constraint;
          run.net().Send(a, edge.neighbor, std::move(p));
          ++run.report().transfers;
        }
      }
      for (const auto& env : run.net().DeliverRound()) {
        auto& view = run.view(env.receiver);
        for (auto& edge : view.edges()) {
          if (edge.constraint != env.payload.first) continue;
          for (int x = 0; x < edge.table.cols(); ++x) {
            edge.table(env.payload.value, x) += env.payload.table[x];
          }
        }
      }
      if (opts.verify_transfers) {
        Cost held = 0;
        for (int a = 0; a < n; ++a) {
          for (const auto& edge : run.view(a).edges()) {
            held += edge.table(values[a], values[edge.neighbor]);
          }
        }
        if (held != EvaluateGlobal(instance, values)) {
          Fail(ErrorCode::kProtocol, "transferred costs no longer sum to the global cost");
        }
      }
    }
    std::vector<std::pair<int, Cost>> best(n);
    for (int a = 0; a < n; ++a) best[a] = run.view(a).BestReduction(values[a], run.ctx(a));
    for (auto& h : heard) h.clear();
    LrRound(run, best, &heard);
    for (int a = 0; a < n; ++a) {
      const auto& edges = run.view(a).edges();
      for (const auto& [sender, lr] : heard[a]) {
        for (std::size_t e = 0; e < edges.size(); ++e) {
          if (edges[e].neighbor == sender) last_lr[a][e] = lr;
        }
      }
    }
    run.EndCycle(t);
  }
  return run.Finish();
}

}  // namespace

RunReport Mgm(const Instance& instance, const LocalOptions& opts) {
  return RunMgm(instance, opts, Sharing::kNone);
}

RunReport McsMgm(const Instance& instance, const LocalOptions& opts) {
  return RunMgm(instance, opts, Sharing::kMinimal);
}

RunReport GcaMgm(const Instance& instance, const LocalOptions& opts) {
  return RunMgm(instance, opts, Sharing::kGuaranteed);
}

}  // namespace adcop
