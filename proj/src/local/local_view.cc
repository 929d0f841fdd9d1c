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

#include <algorithm>

#include "common/error.h"

namespace adcop {

void RequireLocalShape(const Instance& instance, const char* algorithm) {
  if (!instance.all_binary() || !instance.one_variable_per_agent()) {
    Fail(ErrorCode::kPrecondition,
         std::string(algorithm) + " needs a binary instance with one variable per agent");
  }
}

LocalView::LocalView(const Instance& instance, int agent)
    : agent_(agent), domain_(instance.domain_size(agent)) {
  for (int c : instance.constraints_of_variable(agent)) {
    const auto& con = instance.constraint(c);
    const int side = con.scope[0] == agent ? 0 : 1;
    Edge e;
    e.neighbor = con.scope[1 - side];
    e.constraint = c;
    e.side = side;
    const CostTable& t = con.sides[instance.symmetric() ? 0 : side];
    e.table = side == 0 ? t : t.Transposed();
    edges_.push_back(std::move(e));
    neighbors_.push_back(con.scope[1 - side]);
  }
  std::sort(neighbors_.begin(), neighbors_.end());
  neighbors_.erase(std::unique(neighbors_.begin(), neighbors_.end()), neighbors_.end());
}

void LocalView::SetNeighborValue(int neighbor, int value) {
  for (auto& e : edges_) {
    if (e.neighbor == neighbor) e.neighbor_value = value;
  }
}

Cost LocalView::Local(int value, AgentContext& ctx) const {
  Cost c = 0;
  for (const auto& e : edges_) c += e.table(value, e.neighbor_value);
  if (!edges_.empty()) ctx.Charge(static_cast<std::int64_t>(edges_.size()));
  return c;
}

std::pair<int, Cost> LocalView::BestReduction(int current, AgentContext& ctx) const {
  const Cost now = Local(current, ctx);
  int best = current;
  Cost best_cost = now;
  for (int v = 0; v < domain_; ++v) {
    if (v == current) continue;
    const Cost c = Local(v, ctx);
    if (c < best_cost || (c == best_cost && c < now && v < best)) {
      best = v;
      best_cost = c;
    }
  }
  return {best, now - best_cost};
}

int LocalView::ScopeCell(const Edge& e, int own, int neighbor_value) const {
  // The copy is own-major; scope order puts side 0 on the rows.
  return e.side == 0 ? own * e.table.cols() + neighbor_value
                     : neighbor_value * e.table.rows() + own;
}

LocalRun::LocalRun(const Instance& instance, const LocalOptions& opts, std::string name,
                   bool track_privacy)
    : instance_(instance),
      net_(instance.num_agents(), opts.seed),
      ledger_(track_privacy ? PrivacyLedger(instance) : PrivacyLedger()),
      track_privacy_(track_privacy) {
  net_.set_trace(opts.trace);
  report_.algorithm = std::move(name);
  const int n = instance.num_agents();
  views_.reserve(n);
  values_.resize(n);
  for (int a = 0; a < n; ++a) {
    views_.emplace_back(instance, a);
    values_[a] = net_.ctx(a).rng.Index(instance.domain_size(a));
  }
  last_values_ = values_;
  report_.cost_trace.push_back(EvaluateGlobal(instance_, values_));
}

void LocalRun::ExchangeValues() {
  for (int a = 0; a < size(); ++a) {
    for (int nb : views_[a].neighbors()) {
      LocalPayload p;
      p.type = MsgType::kValue;
      p.value = values_[a];
      net_.Send(a, nb, std::move(p));
    }
  }
  for (const auto& env : net_.DeliverRound()) {
    views_[env.receiver].SetNeighborValue(env.sender, env.payload.value);
  }
}

void LocalRun::EndCycle(int cycle) {
  const Cost cost = EvaluateGlobal(instance_, values_);
  if (cost > report_.cost_trace.back()) ++report_.cost_increasing_cycles;
  report_.cost_trace.push_back(cost);
  if (values_ != last_values_) {
    last_change_ = cycle;
    last_values_ = values_;
  }
}

RunReport LocalRun::Finish() {
  report_.assignment = values_;
  report_.cost = EvaluateGlobal(instance_, values_);
  report_.claimed_cost = report_.cost;
  report_.nclo = net_.GlobalNclo();
  report_.messages = net_.counts();
  report_.cycles_to_converge = last_change_;
  if (track_privacy_) {
    report_.avg_privacy_loss = ledger_.AverageLoss();
    report_.max_privacy_gain = ledger_.MaxGain();
    for (int a = 0; a < size(); ++a) report_.agent_gain.push_back(ledger_.Gain(AgentId{a}));
  }
  return report_;
}

}  // namespace adcop
