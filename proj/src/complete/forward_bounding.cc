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

bool PrefixEqual(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b,
                 std::size_t len) {
  return a.size() >= len && b.size() >= len && std::equal(a.begin(), a.begin() + len, b.begin());
}

// Forward bounding node. In symmetric mode this is AFB: unassigned nodes
// estimate the cost of their shared tables against the CPA. In two-way mode
// (ATWB) assigned predecessors also report their exact sides toward the new
// assignment, and the last agent waits for all of them before accepting a
// full assignment.
class BoundingNode {
 public:
  BoundingNode(int id, int num_nodes, int domain, const std::vector<Link>& links,
               const Instance& instance, bool two_way,
               std::vector<std::vector<Cost>> h2, SearchObserver& obs)
      : id_(id), n_(num_nodes), domain_(domain), two_way_(two_way), links_(links),
        h2_(std::move(h2)), obs_(obs) {
    for (const auto& l : links_) {
      if (l.other < id_) preds_.push_back(l);
    }
    if (!two_way_) {
      // h(v): cheapest cost toward every later node, each pair charged to
      // its lower endpoint.
      h_.assign(domain_, 0);
      for (const auto& l : links_) {
        if (l.other < id_) continue;
        for (int v = 0; v < domain_; ++v) {
          Cost m = kInfiniteCost;
          for (int d = 0; d < instance.domain_size(l.other); ++d) m = std::min(m, l.At(v, d));
          h_[v] += m;
        }
      }
    }
    view_.assign(n_, -1);
    est_.assign(n_, 0);
    have_.assign(n_, false);
  }

  void Start(CpaNetwork& net) {
    holding_ = true;
    prefix_stamp_.clear();
    values_.clear();
    base_ = 0;
    Assign(net, 0);
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
        bound_ = std::min(bound_, msg.bound);
        if (msg.resume) {
          if (!holding_ || msg.stamp != stamp_) return;
          values_.resize(id_ + 1);
          Assign(net, values_[id_] + 1);
          return;
        }
        if (!AcceptForward(msg.stamp)) return;
        holding_ = true;
        prefix_stamp_ = msg.stamp;
        values_ = msg.values;
        base_ = msg.cost;
        Assign(net, 0);
        return;
      case MsgType::kBoundCpa:
        bound_ = std::min(bound_, msg.bound);
        msg.backward ? BackwardEstimate(net, env) : ForwardEstimate(net, env);
        return;
      case MsgType::kEstimate:
        OnEstimate(net, env);
        return;
      default:
        Fail(ErrorCode::kProtocol, "bounding node got an unexpected message");
    }
  }

 private:
  // Staleness of forward traffic from an assigner ordered before this node.
  // Newer prefixes invalidate a CPA held under an older one.
  bool AcceptForward(const std::vector<std::int64_t>& stamp) {
    const std::size_t len = stamp.size();
    if (std::lexicographical_compare(stamp.begin(), stamp.end(), view_.begin(),
                                     view_.begin() + len)) {
      return false;
    }
    if (!PrefixEqual(stamp, view_, len)) {
      std::copy(stamp.begin(), stamp.end(), view_.begin());
      std::fill(view_.begin() + len, view_.begin() + id_, -1);
      if (holding_ && !PrefixEqual(stamp_, stamp, len)) holding_ = false;
    }
    return true;
  }

  Cost OwnBound(int v) const { return two_way_ ? h2_[v][id_] : h_[v]; }

  void Assign(CpaNetwork& net, int start) {
    auto& ctx = net.ctx(id_);
    std::fill(have_.begin(), have_.end(), false);
    backward_count_ = 0;
    for (int v = start; v < domain_; ++v) {
      Cost f = 0;
      for (const auto& l : preds_) f += l.At(v, values_[l.other]);
      ChargeChecks(ctx, static_cast<std::int64_t>(preds_.size()));
      if (base_ + f + OwnBound(v) >= bound_) continue;
      values_.resize(id_);
      values_.push_back(v);
      stamp_ = prefix_stamp_;
      stamp_.push_back(++counter_);
      cost_ = base_ + f;
      obs_.Explored(values_);
      if (id_ == n_ - 1 && (!two_way_ || n_ == 1)) {
        NewSolution(net, cost_);
        continue;
      }
      if (id_ < n_ - 1) {
        Send(net, id_ + 1, MsgType::kCpa, false);
        for (int k = id_ + 1; k < n_; ++k) Send(net, k, MsgType::kBoundCpa, false);
      }
      if (two_way_) {
        for (int i = 0; i < id_; ++i) Send(net, i, MsgType::kBoundCpa, true);
      }
      return;
    }
    holding_ = false;
    if (id_ == 0) {
      for (int k = 1; k < n_; ++k) net.Send(id_, k, Control(MsgType::kTerminate));
      obs_.Terminate();
      return;
    }
    CpaPayload out = Control(MsgType::kCpa);
    out.resume = true;
    out.values.assign(values_.begin(), values_.begin() + id_);
    out.stamp = prefix_stamp_;
    net.Send(id_, id_ - 1, std::move(out));
  }

  void ForwardEstimate(CpaNetwork& net, const Envelope<CpaPayload>& env) {
    const auto& msg = env.payload;
    if (!AcceptForward(msg.stamp)) return;
    const int j = env.sender;
    std::vector<const Link*> assigned;
    for (const auto& l : links_) {
      if (l.other <= j) assigned.push_back(&l);
    }
    Cost best = kInfiniteCost;
    for (int v = 0; v < domain_; ++v) {
      Cost c = two_way_ ? h2_[v][j] : h_[v];
      for (const Link* l : assigned) c += l->At(v, msg.values[l->other]);
      best = std::min(best, c);
    }
    ChargeChecks(net.ctx(id_), static_cast<std::int64_t>(assigned.size()) * domain_);
    Reply(net, j, msg.stamp, best, false);
  }

  void BackwardEstimate(CpaNetwork& net, const Envelope<CpaPayload>& env) {
    const auto& msg = env.payload;
    if (!holding_ || !PrefixEqual(msg.stamp, stamp_, id_ + 1)) return;
    const int j = env.sender;
    const int v = msg.values[id_];
    Cost est = h2_[v][j];
    std::int64_t checks = 0;
    for (const auto& l : links_) {
      if (l.other > id_ && l.other <= j) {
        est += l.At(v, msg.values[l.other]);
        ++checks;
      }
    }
    ChargeChecks(net.ctx(id_), checks);
    Reply(net, j, msg.stamp, est, true);
  }

  void Reply(CpaNetwork& net, int to, const std::vector<std::int64_t>& stamp, Cost estimate,
             bool backward) {
    CpaPayload out = Control(MsgType::kEstimate);
    out.stamp = stamp;
    out.estimate = estimate;
    out.backward = backward;
    net.Send(id_, to, std::move(out));
  }

  void OnEstimate(CpaNetwork& net, const Envelope<CpaPayload>& env) {
    const auto& msg = env.payload;
    if (!holding_ || msg.stamp != stamp_) return;
    const int from = env.sender;
    if (msg.backward) {
      for (const auto& l : links_) {
        if (l.other != from) continue;
        obs_.ledger().Record(AgentId{from}, AgentId{id_},
                             EntryRef{l.constraint, 1 - l.side,
                                      l.Cell(values_[id_], values_[from])});
      }
    }
    if (!have_[from]) {
      have_[from] = true;
      if (msg.backward) ++backward_count_;
    }
    est_[from] = msg.estimate;
    Cost total = cost_ + (two_way_ ? h2_[values_[id_]][id_] : 0);
    for (int a = 0; a < n_; ++a) {
      if (have_[a]) total += est_[a];
    }
    if (total >= bound_) {
      values_.resize(id_ + 1);
      Assign(net, values_[id_] + 1);
    } else if (two_way_ && id_ == n_ - 1 && backward_count_ == n_ - 1) {
      NewSolution(net, total);
      values_.resize(id_ + 1);
      Assign(net, values_[id_] + 1);
    }
  }

  void NewSolution(CpaNetwork& net, Cost total) {
    bound_ = total;
    obs_.Solution(values_, bound_);
    for (int k = 0; k < n_; ++k) {
      if (k == id_) continue;
      CpaPayload out = Control(MsgType::kNewSolution);
      out.values = values_;
      net.Send(id_, k, std::move(out));
    }
  }

  CpaPayload Control(MsgType type) const {
    CpaPayload out;
    out.type = type;
    out.bound = bound_;
    return out;
  }

  void Send(CpaNetwork& net, int to, MsgType type, bool backward) {
    CpaPayload out = Control(type);
    out.values = values_;
    out.stamp = stamp_;
    out.cost = cost_;
    out.last_id = id_;
    out.backward = backward;
    net.Send(id_, to, std::move(out));
  }

  int id_;
  int n_;
  int domain_;
  bool two_way_;
  std::vector<Link> links_;
  std::vector<Link> preds_;
  std::vector<Cost> h_;
  std::vector<std::vector<Cost>> h2_;
  SearchObserver& obs_;

  std::vector<std::int64_t> view_;
  std::int64_t counter_ = 0;
  bool holding_ = false;
  std::vector<std::int64_t> prefix_stamp_;
  std::vector<std::int64_t> stamp_;
  std::vector<int> values_;
  Cost base_ = 0;
  Cost cost_ = 0;
  std::vector<Cost> est_;
  std::vector<bool> have_;
  int backward_count_ = 0;
  Cost bound_ = kInfiniteCost;
};

RunReport RunBounding(const std::string& name, const Instance& instance,
                      const CompleteOptions& opts, bool two_way) {
  const int n = instance.num_variables();
  auto links = BuildLinks(instance);
  std::vector<std::vector<std::vector<Cost>>> h2;
  if (two_way) h2 = BuildH2(instance);
  SearchObserver obs(instance, n, two_way);
  CpaNetwork net(n, opts.seed, opts.policy);
  net.set_trace(opts.trace);
  std::vector<BoundingNode> nodes;
  nodes.reserve(n);
  for (int v = 0; v < n; ++v) {
    nodes.emplace_back(v, n, instance.domain_size(v), links[v], instance, two_way,
                       two_way ? std::move(h2[v]) : std::vector<std::vector<Cost>>{}, obs);
  }
  bool completed = true;
  if (n == 0) {
    obs.Solution({}, 0);
  } else {
    nodes[0].Start(net);
    completed = PumpMessages(net, obs, opts, [&](const Envelope<CpaPayload>& env) {
      nodes[env.receiver].Handle(net, env);
    });
  }
  return FinishSearch(name, instance, net, obs, completed, two_way);
}

}  // namespace

std::vector<std::vector<std::vector<Cost>>> BuildH2(const Instance& instance) {
  const int n = instance.num_variables();
  auto links = BuildLinks(instance);
  std::vector<std::vector<std::vector<Cost>>> h2(n);
  for (int i = 0; i < n; ++i) {
    const int k = instance.domain_size(i);
    h2[i].assign(k, std::vector<Cost>(n, 0));
    for (int v = 0; v < k; ++v) {
      for (const auto& l : links[i]) {
        Cost m = kInfiniteCost;
        for (int d = 0; d < instance.domain_size(l.other); ++d) m = std::min(m, l.At(v, d));
        // Contributes to every j ordered before the neighbor.
        for (int j = 0; j < l.other; ++j) h2[i][v][j] += m;
      }
    }
  }
  return h2;
}

RunReport Afb(const Instance& symmetric, const CompleteOptions& opts) {
  if (!symmetric.symmetric() || !symmetric.all_binary()) {
    Fail(ErrorCode::kPrecondition, "AFB needs a binary symmetric instance");
  }
  return RunBounding("afb", symmetric, opts, false);
}

RunReport Atwb(const Instance& instance, const CompleteOptions& opts) {
  RequireOneVariablePerAgent(instance, "ATWB");
  return RunBounding("atwb", instance, opts, true);
}

}  // namespace adcop
