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

// One search node of SyncBB. Each node adds the cost of the tables it holds
// against its predecessors; on a symmetric instance those are the shared
// tables, on an asymmetric one only the node's own sides.
class SyncBBNode {
 public:
  SyncBBNode(int id, int num_nodes, int domain, const std::vector<Link>& links,
             SearchObserver& obs)
      : id_(id), num_nodes_(num_nodes), domain_(domain), obs_(obs) {
    for (const auto& l : links) {
      if (l.other < id) preds_.push_back(l);
    }
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
        break;
      default:
        Fail(ErrorCode::kProtocol, "SyncBB node got an unexpected message");
    }
    bound_ = std::min(bound_, msg.bound);
    cpa_ = msg;
    int start = 0;
    if (msg.resume) {
      start = cpa_.values[id_] + 1;
      cpa_.values.resize(id_);
      cpa_.level_cost.resize(id_);
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
      obs_.Explored(cpa_.values);
      if (id_ == num_nodes_ - 1) {
        bound_ = base + f;
        obs_.Solution(cpa_.values, bound_);
        Broadcast(net, MsgType::kNewSolution);
        cpa_.values.pop_back();
        continue;
      }
      cpa_.level_cost.push_back(base + f);
      Send(net, id_ + 1, false);
      return;
    }
    if (id_ == 0) {
      Broadcast(net, MsgType::kTerminate);
      obs_.Terminate();
      return;
    }
    Send(net, id_ - 1, true);
  }

  void Send(CpaNetwork& net, int to, bool resume) {
    CpaPayload out = cpa_;
    out.type = MsgType::kCpa;
    out.resume = resume;
    out.bound = bound_;
    out.last_id = id_;
    net.Send(id_, to, std::move(out));
  }

  void Broadcast(CpaNetwork& net, MsgType type) {
    for (int n = 0; n < num_nodes_; ++n) {
      if (n == id_) continue;
      CpaPayload out;
      out.type = type;
      out.bound = bound_;
      if (type == MsgType::kNewSolution) out.values = cpa_.values;
      net.Send(id_, n, std::move(out));
    }
  }

  int id_;
  int num_nodes_;
  int domain_;
  SearchObserver& obs_;
  std::vector<Link> preds_;
  CpaPayload cpa_;
  Cost bound_ = kInfiniteCost;
};

RunReport RunSyncBB(const std::string& name, const Instance& instance,
                    const CompleteOptions& opts) {
  const int n = instance.num_variables();
  auto links = BuildLinks(instance);
  SearchObserver obs(instance, n, false);
  CpaNetwork net(n, opts.seed, opts.policy);
  net.set_trace(opts.trace);
  std::vector<SyncBBNode> nodes;
  nodes.reserve(n);
  for (int v = 0; v < n; ++v) {
    nodes.emplace_back(v, n, instance.domain_size(v), links[v], obs);
  }
  bool completed = true;
  if (n == 0) {
    obs.Solution({}, 0);
    obs.Terminate();
  } else {
    nodes[0].Start(net);
    completed = PumpMessages(net, obs, opts, [&](const Envelope<CpaPayload>& env) {
      nodes[env.receiver].Handle(net, env);
    });
  }
  return FinishSearch(name, instance, net, obs, completed, false);
}

}  // namespace

RunReport SyncBB(const Instance& symmetric, const CompleteOptions& opts) {
  if (!symmetric.symmetric() || !symmetric.all_binary()) {
    Fail(ErrorCode::kPrecondition, "SyncBB needs a binary symmetric instance");
  }
  return RunSyncBB("syncbb", symmetric, opts);
}

RunReport OneSidedSyncBB(const Instance& instance, const CompleteOptions& opts) {
  RequireOneVariablePerAgent(instance, "one-sided SyncBB");
  return RunSyncBB("onesided-syncbb", instance, opts);
}

}  // namespace adcop
