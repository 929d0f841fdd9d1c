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

#ifndef ADCOP_METRICS_PRIVACY_H_
#define ADCOP_METRICS_PRIVACY_H_

#include <cstdint>
#include <vector>

#include "model/instance.h"

namespace adcop {

// Identifies one cell of one side table.
struct EntryRef {
  int constraint = 0;
  int side = 0;
  int cell = 0;
};

// Tracks which side-table entries each agent can infer exactly. Entropy per
// entry is log2 of the cost alphabet size under a uniform prior, so bit
// ratios reduce to entry-count ratios.
class PrivacyLedger {
 public:
  PrivacyLedger() = default;
  explicit PrivacyLedger(const Instance& instance);

  // Marks `entry` (owned by `from`) as known to `to`. Fails with
  // kPrecondition when `from` does not own the entry's side.
  void Record(AgentId from, AgentId to, const EntryRef& entry);
  // Every side disclosed to every other agent on its constraint.
  void RevealAll();

  // Mean over agents of the percentage of own bits revealed to anyone.
  double AverageLoss() const;
  // Max over agents of the percentage of visible foreign bits learned.
  double MaxGain() const { return max_gain_; }
  double Gain(AgentId agent) const;
  std::int64_t revealed_entries() const { return revealed_total_; }

 private:
  int Flat(const EntryRef& e) const;

  const Instance* instance_ = nullptr;
  bool zero_entropy_ = true;
  std::vector<int> base_;               // first flat index per (constraint, side)
  std::vector<int> owner_of_;           // per (constraint, side) block
  std::vector<int> first_block_;        // per constraint
  std::vector<std::vector<bool>> known_;  // [agent][flat]
  std::vector<bool> revealed_;
  std::vector<std::int64_t> own_total_, own_revealed_;
  std::vector<std::int64_t> visible_total_, learned_;
  std::int64_t revealed_total_ = 0;
  double max_gain_ = 0;
};

}  // namespace adcop

#endif  // ADCOP_METRICS_PRIVACY_H_
