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

#include "complete/complete.h"

namespace adcop {
namespace {

// Agent of the synchronous asymmetric branch and bound. In one-phase mode
// every new assignment is back-checked by all predecessors before the CPA
// moves on; in two-phase mode the search runs one-sided and full
// assignments are back-checked from A_n down.
class SyncAbbAgent {
 public:
  SyncAbbAgent(int id, int num_agents, int domain, const std::vector<Link>& links,
               bool two_phase, SearchObserver& obs)
      : id_(id), n_(num_agents), domain_(domain), two_phase_(two_phase), obs_(obs) {
    for (const auto& l : links) (l.other < id ? preds_ : succs_).push_back(l);
  }

  void Start(CpaNetwork& net) {
    cpa_ = CpaPayload{};
    TryValues(net, 0);
  }

  void Handle(CpaNetwork& net, const Envelope<CpaPayload>& env) {
    const auto& msg = env.payload;
    switch (msg.type) {
      case MsgType::kNewSolution:
        bound_ = std::min(bound_, msg.bound);
        return;
      case MsgType::kTerminate:
        return;
      case MsgType::kCpa:
      case MsgType::kCpaBack:
        break;
      default:
        Fail(ErrorCode::kProtocol, "SyncABB agent got an unexpected message");
    }
    obs_.ObserveReceived(id_, msg.log);
    bound_ = std::min(bound_, msg.bound);
    cpa_ = msg;
    if (msg.type == MsgType::kCpaBack) {
      two_phase_ ? BackCheckAll(net) : BackCheckOne(net);
      return;
    }
    int start = 0;
    if (msg.resume) {
      start = cpa_.values[id_] + 1;
      cpa_.values.resize(id_);
      cpa_.level_cost.resize(id_);
      cpa_.level_log.resize(id_);
      cpa_.log.resize(id_ > 0 ? cpa_.level_log[id_ - 1] : 0);
    }
    TryValues(net, start);
  }

 private:
  void TryValues(CpaNetwork& net, int start) {
    auto& ctx = net.ctx(id_);
    const Cost base = id_ > 0 ? cpa_.level_cost[id_ - 1] : 0;
    for (int v = start; v < domain_; ++v) {
      Cost f = 0;
      for (const auto& l : preds_) f += l.At(v, cpa_.values[l.other]);
      ChargeChecks(ctx, static_cast<std::int64_t>(preds_.size()));
      if (base + f >= bound_) continue;
      cpa_.values.push_back(v);
      cpa_.cost = base + f;
      for (const auto& l : preds_) Log(l, v, cpa_.values[l.other]);
      obs_.Explored(cpa_.values);
      cpa_.last_id = id_;
      if (id_ == n_ - 1) {
        if (n_ == 1) {
          NewSolution(net);
          cpa_.values.pop_back();
          cpa_.log.clear();
          continue;
        }
        Send(net, MsgType::kCpaBack, id_ - 1, false);
        return;
      }
      if (two_phase_ || id_ == 0) {
        Settle();
        Send(net, MsgType::kCpa, id_ + 1, false);
      } else {
        Send(net, MsgType::kCpaBack, id_ - 1, false);
      }
      return;
    }
    if (id_ == 0) {
      for (int a = 1; a < n_; ++a) net.Send(id_, a, Control(MsgType::kTerminate));
      obs_.Terminate();
      return;
    }
    cpa_.values.resize(id_);
    Send(net, MsgType::kCpa, id_ - 1, true);
  }

  // One-phase back-check of the assignment made by A_j.
  void BackCheckOne(CpaNetwork& net) {
    const int j = cpa_.last_id;
    Cost f = 0;
    for (const auto& l : succs_) {
      if (l.other != j) continue;
      net.ctx(id_).Charge(1);
      f = l.At(cpa_.values[id_], cpa_.values[j]);
      Log(l, cpa_.values[id_], cpa_.values[j]);
    }
    cpa_.cost += f;
    if (cpa_.cost >= bound_) {
      Send(net, MsgType::kCpa, j, true);
    } else if (id_ != 0) {
      Send(net, MsgType::kCpaBack, id_ - 1, false);
    } else if (j == n_ - 1) {
      NewSolution(net);
      Send(net, MsgType::kCpa, n_ - 1, true);
    } else {
      Settle();
      Send(net, MsgType::kCpa, j + 1, false);
    }
  }

  // Two-phase back-check: all sides toward higher-indexed agents.
  void BackCheckAll(CpaNetwork& net) {
    Cost f = 0;
    for (const auto& l : succs_) {
      f += l.At(cpa_.values[id_], cpa_.values[l.other]);
      Log(l, cpa_.values[id_], cpa_.values[l.other]);
    }
    ChargeChecks(net.ctx(id_), static_cast<std::int64_t>(succs_.size()));
    cpa_.cost += f;
    if (cpa_.cost >= bound_) {
      Send(net, MsgType::kCpa, n_ - 1, true);
    } else if (id_ != 0) {
      Send(net, MsgType::kCpaBack, id_ - 1, false);
    } else {
      NewSolution(net);
      Send(net, MsgType::kCpa, n_ - 1, true);
    }
  }

  void Settle() {
    cpa_.level_cost.push_back(cpa_.cost);
    cpa_.level_log.push_back(static_cast<int>(cpa_.log.size()));
  }

  void NewSolution(CpaNetwork& net) {
    bound_ = cpa_.cost;
    obs_.Solution(cpa_.values, bound_);
    for (int a = 0; a < n_; ++a) {
      if (a == id_) continue;
      CpaPayload out = Control(MsgType::kNewSolution);
      out.values = cpa_.values;
      net.Send(id_, a, std::move(out));
    }
  }

  void Log(const Link& l, int own, int other) {
    cpa_.log.push_back(LogEntry{obs_.NextLogId(), id_,
                                EntryRef{l.constraint, l.side, l.Cell(own, other)}});
  }

  CpaPayload Control(MsgType type) const {
    CpaPayload out;
    out.type = type;
    out.bound = bound_;
    return out;
  }

  void Send(CpaNetwork& net, MsgType type, int to, bool resume) {
    CpaPayload out = cpa_;
    out.type = type;
    out.resume = resume;
    out.bound = bound_;
    obs_.MarkSeen(id_, out.log);
    net.Send(id_, to, std::move(out));
  }

  int id_;
  int n_;
  int domain_;
  bool two_phase_;
  SearchObserver& obs_;
  std::vector<Link> preds_;
  std::vector<Link> succs_;
  CpaPayload cpa_;
  Cost bound_ = kInfiniteCost;
};

RunReport RunSyncAbb(const Instance& instance, const CompleteOptions& opts, bool two_phase) {
  const char* name = two_phase ? "syncabb2ph" : "syncabb";
  RequireOneVariablePerAgent(instance, name);
  const int n = instance.num_agents();
  auto links = BuildLinks(instance);
  SearchObserver obs(instance, n, true);
  CpaNetwork net(n, opts.seed, opts.policy);
  net.set_trace(opts.trace);
  std::vector<SyncAbbAgent> agents;
  agents.reserve(n);
  for (int a = 0; a < n; ++a) {
    agents.emplace_back(a, n, instance.domain_size(a), links[a], two_phase, obs);
  }
  agents[0].Start(net);
  bool completed = PumpMessages(net, obs, opts, [&](const Envelope<CpaPayload>& env) {
    agents[env.receiver].Handle(net, env);
  });
  return FinishSearch(name, instance, net, obs, completed, true);
}

}  // namespace

RunReport SyncAbb(const Instance& instance, const CompleteOptions& opts) {
  return RunSyncAbb(instance, opts, false);
}

RunReport SyncAbb2ph(const Instance& instance, const CompleteOptions& opts) {
  return RunSyncAbb(instance, opts, true);
}

}  // namespace adcop
