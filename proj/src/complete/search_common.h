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

#ifndef ADCOP_COMPLETE_SEARCH_COMMON_H_
#define ADCOP_COMPLETE_SEARCH_COMMON_H_

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "common/error.h"
#include "metrics/privacy.h"
#include "metrics/report.h"
#include "model/instance.h"
#include "model/links.h"
#include "simnet/network.h"

namespace adcop {

struct CompleteOptions {
  std::uint64_t seed = 0;
  OrderPolicy policy = OrderPolicy::kFifo;
  std::ostream* trace = nullptr;
  // Halt once some agent's privacy gain exceeds this percentage; negative
  // disables the cap.
  double privacy_threshold = -1;
  // Safety valve on deliveries; 0 means unlimited.
  std::int64_t max_deliveries = 0;
};

// One side-table entry folded into a CPA's cost, for the inference model.
struct LogEntry {
  std::int64_t id = 0;
  int owner = 0;
  EntryRef ref;
};

struct CpaPayload {
  MsgType type = MsgType::kCpa;
  // CPA_MSG: continue after the receiver's value on the CPA instead of
  // extending from the first value.
  bool resume = false;
  std::vector<int> values;
  // Settled prefix costs and log lengths, one per settled position.
  std::vector<Cost> level_cost;
  std::vector<int> level_log;
  Cost cost = 0;
  Cost bound = kInfiniteCost;
  int last_id = 0;
  std::vector<LogEntry> log;
  // Forward bounding.
  std::vector<std::int64_t> stamp;
  Cost estimate = 0;
  bool backward = false;
};

using CpaNetwork = Network<CpaPayload>;

// Run-wide bookkeeping outside the agents: results, explored prefixes, the
// privacy ledger and the CPA observation history. Agents never read it to
// make decisions.
class SearchObserver {
 public:
  SearchObserver(const Instance& instance, int num_nodes, bool track_privacy)
      : ledger_(track_privacy ? PrivacyLedger(instance) : PrivacyLedger()),
        last_seen_(num_nodes, -1) {}

  void Solution(const std::vector<int>& values, Cost bound) {
    best_ = values;
    bound_ = bound;
    bound_history_.push_back(bound);
  }
  void Explored(const std::vector<int>& prefix) { explored_.push_back(prefix); }
  void Terminate() { terminated_ = true; }
  bool terminated() const { return terminated_; }

  std::int64_t NextLogId() { return next_log_id_++; }
  PrivacyLedger& ledger() { return ledger_; }

  // Observation rule for sequential CPA passing: the receiver compares the
  // log with what it last saw; a gap holding exactly one foreign entry
  // exposes that entry.
  void ObserveReceived(int node, const std::vector<LogEntry>& log) {
    const std::int64_t seen = last_seen_[node];
    std::size_t start = 0;
    if (seen >= 0) {
      std::size_t i = 0;
      while (i < log.size() && log[i].id != seen) ++i;
      if (i == log.size()) {
        MarkSeen(node, log);
        return;
      }
      start = i + 1;
    }
    const LogEntry* foreign = nullptr;
    int count = 0;
    for (std::size_t i = start; i < log.size(); ++i) {
      if (log[i].owner != node) {
        foreign = &log[i];
        ++count;
      }
    }
    if (count == 1) ledger_.Record(AgentId{foreign->owner}, AgentId{node}, foreign->ref);
    MarkSeen(node, log);
  }
  void MarkSeen(int node, const std::vector<LogEntry>& log) {
    last_seen_[node] = log.empty() ? -1 : log.back().id;
  }

  const std::vector<int>& best() const { return best_; }
  Cost bound() const { return bound_; }
  const std::vector<Cost>& bound_history() const { return bound_history_; }
  std::vector<std::vector<int>>& explored() { return explored_; }

 private:
  PrivacyLedger ledger_;
  std::vector<std::int64_t> last_seen_;
  std::vector<int> best_;
  Cost bound_ = kInfiniteCost;
  std::vector<Cost> bound_history_;
  std::vector<std::vector<int>> explored_;
  std::int64_t next_log_id_ = 0;
  bool terminated_ = false;
};

inline void ChargeChecks(AgentContext& ctx, std::int64_t checks) {
  if (checks > 0) ctx.Charge(checks);
}

// Pumps messages until the protocol terminates, the privacy cap trips, or
// the queues run dry without termination (a protocol error).
template <class Handler>
bool PumpMessages(CpaNetwork& net, SearchObserver& obs, const CompleteOptions& opts,
                  Handler&& handle) {
  std::int64_t deliveries = 0;
  while (!obs.terminated()) {
    if (net.Idle()) {
      Fail(ErrorCode::kProtocol, "deadlock with no termination: " + net.QueueSnapshot());
    }
    auto env = net.Next();
    handle(env);
    ++deliveries;
    if (opts.privacy_threshold >= 0 && obs.ledger().MaxGain() > opts.privacy_threshold) {
      return false;
    }
    if (opts.max_deliveries > 0 && deliveries >= opts.max_deliveries) {
      Fail(ErrorCode::kProtocol, "delivery limit reached: " + net.QueueSnapshot());
    }
  }
  // Late messages are delivered but no longer handled.
  while (!net.Idle()) net.Next();
  return true;
}

// Report for a node-per-variable search over `instance`.
RunReport FinishSearch(const std::string& algorithm, const Instance& instance,
                       const CpaNetwork& net, SearchObserver& obs, bool completed,
                       bool track_privacy);

void RequireOneVariablePerAgent(const Instance& instance, const char* algorithm);

}  // namespace adcop

#endif  // ADCOP_COMPLETE_SEARCH_COMMON_H_
