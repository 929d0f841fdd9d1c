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

#include "metrics/privacy.h"

#include <algorithm>
#include <string>

#include "common/error.h"

namespace adcop {

PrivacyLedger::PrivacyLedger(const Instance& instance) : instance_(&instance) {
  const int n = instance.num_agents();
  zero_entropy_ = instance.cost_alphabet().size() <= 1;
  own_total_.assign(n, 0);
  own_revealed_.assign(n, 0);
  visible_total_.assign(n, 0);
  learned_.assign(n, 0);
  int flat = 0;
  for (int c = 0; c < instance.num_constraints(); ++c) {
    const auto& con = instance.constraint(c);
    first_block_.push_back(static_cast<int>(base_.size()));
    for (std::size_t s = 0; s < con.sides.size(); ++s) {
      base_.push_back(flat);
      const int owner = instance.symmetric() ? -1 : instance.SideOwner(c, static_cast<int>(s));
      owner_of_.push_back(owner);
      const auto cells = static_cast<std::int64_t>(con.sides[s].size());
      flat += static_cast<int>(cells);
      if (owner < 0) continue;
      own_total_[owner] += cells;
      for (int v : con.scope) {
        const int other = instance.variable(v).owner;
        if (other != owner) visible_total_[other] += cells;
      }
    }
  }
  base_.push_back(flat);
  revealed_.assign(flat, false);
  known_.assign(n, std::vector<bool>(flat, false));
}

int PrivacyLedger::Flat(const EntryRef& e) const {
  return base_[first_block_[e.constraint] + e.side] + e.cell;
}

void PrivacyLedger::Record(AgentId from, AgentId to, const EntryRef& entry) {
  if (instance_ == nullptr || instance_->symmetric()) return;
  if (entry.constraint < 0 || entry.constraint >= instance_->num_constraints() ||
      instance_->SideOwner(entry.constraint, entry.side) != from.index) {
    Fail(ErrorCode::kPrecondition, "agent " + std::to_string(from.index + 1) +
                                       " does not own the recorded entry");
  }
  if (from.index == to.index) return;
  const int flat = Flat(entry);
  if (!revealed_[flat]) {
    revealed_[flat] = true;
    ++own_revealed_[from.index];
    ++revealed_total_;
  }
  auto& known = known_[to.index];
  if (known[flat]) return;
  known[flat] = true;
  // Only entries on constraints shared with `to` count toward its gain.
  bool visible = false;
  for (int v : instance_->constraint(entry.constraint).scope) {
    visible = visible || instance_->variable(v).owner == to.index;
  }
  if (!visible) return;
  ++learned_[to.index];
  max_gain_ = std::max(max_gain_, Gain(to));
}

void PrivacyLedger::RevealAll() {
  if (instance_ == nullptr || instance_->symmetric()) return;
  for (int c = 0; c < instance_->num_constraints(); ++c) {
    const auto& con = instance_->constraint(c);
    for (std::size_t s = 0; s < con.sides.size(); ++s) {
      const int owner = instance_->SideOwner(c, static_cast<int>(s));
      for (int v : con.scope) {
        const int other = instance_->variable(v).owner;
        if (other == owner) continue;
        for (std::size_t cell = 0; cell < con.sides[s].size(); ++cell) {
          Record(AgentId{owner}, AgentId{other},
                 EntryRef{c, static_cast<int>(s), static_cast<int>(cell)});
        }
      }
    }
  }
}

double PrivacyLedger::AverageLoss() const {
  if (own_total_.empty() || zero_entropy_) return 0.0;
  double sum = 0;
  for (std::size_t a = 0; a < own_total_.size(); ++a) {
    if (own_total_[a] > 0) sum += 100.0 * own_revealed_[a] / own_total_[a];
  }
  return sum / static_cast<double>(own_total_.size());
}

double PrivacyLedger::Gain(AgentId agent) const {
  if (zero_entropy_ || visible_total_.empty() || visible_total_[agent.index] == 0) return 0.0;
  return 100.0 * learned_[agent.index] / visible_total_[agent.index];
}

}  // namespace adcop
