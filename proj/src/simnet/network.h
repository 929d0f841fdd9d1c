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

#ifndef ADCOP_SIMNET_NETWORK_H_
#define ADCOP_SIMNET_NETWORK_H_

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "common/error.h"
#include "common/rng.h"

namespace adcop {

enum class MsgType : int {
  kCpa,
  kCpaBack,
  kNewSolution,
  kTerminate,
  kBoundCpa,
  kEstimate,
  kValue,
  kLr,
  kProposal,
  kImpact,
  kTransfer,
  kOffer,
  kResponse,
  kConfirm,
  kFuncMsg,
  kVarMsg,
};
inline constexpr int kNumMsgTypes = 16;

const char* MsgTypeName(MsgType type);

enum class OrderPolicy { kFifo, kShuffle };

const char* PolicyName(OrderPolicy policy);
// Accepts "fifo" and "shuffle"; fails with kConfig otherwise.
OrderPolicy ParsePolicy(const std::string& name);

// Per-agent simulation state. `nclo` is the max-propagated logical clock;
// `own_ops` counts only the agent's own charges.
struct AgentContext {
  int id = 0;
  std::int64_t nclo = 0;
  std::int64_t own_ops = 0;
  Rng rng;

  void Charge(std::int64_t n) {
    if (n < 1) Fail(ErrorCode::kInvalidArgument, "charge must be positive");
    nclo += n;
    own_ops += n;
  }
  void Observe(std::int64_t stamp) { nclo = std::max(nclo, stamp); }
};

template <class Payload>
struct Envelope {
  int sender = 0;
  int receiver = 0;
  std::int64_t stamp = 0;
  std::uint64_t seq = 0;
  Payload payload;
};

struct MessageCounts {
  std::int64_t sent = 0;
  std::int64_t delivered = 0;
  std::array<std::int64_t, kNumMsgTypes> by_type{};
};

// Deterministic single-threaded message substrate. Payloads expose a
// `MsgType type` member.
template <class Payload>
class Network {
 public:
  Network(int num_agents, std::uint64_t seed, OrderPolicy policy = OrderPolicy::kFifo)
      : policy_(policy), order_rng_(DeriveSeed(seed, 0x6f72646572ULL)) {
    agents_.resize(num_agents);
    for (int a = 0; a < num_agents; ++a) {
      agents_[a].id = a;
      agents_[a].rng = Rng(DeriveSeed(seed, static_cast<std::uint64_t>(a) + 1));
    }
  }

  int size() const { return static_cast<int>(agents_.size()); }
  AgentContext& ctx(int agent) { return agents_.at(agent); }
  const AgentContext& ctx(int agent) const { return agents_.at(agent); }

  void set_trace(std::ostream* out) { trace_ = out; }

  void Send(int from, int to, Payload payload) {
    if (to < 0 || to >= size()) {
      Fail(ErrorCode::kRouting, "message to unknown agent " + std::to_string(to + 1));
    }
    Envelope<Payload> env{from, to, agents_.at(from).nclo, next_seq_++, std::move(payload)};
    ++counts_.sent;
    ++counts_.by_type[static_cast<int>(env.payload.type)];
    auto key = std::make_pair(from, to);
    auto& channel = channels_[key];
    if (channel.empty()) active_.push_back(key);
    channel.push_back(std::move(env));
    ++pending_;
  }

  bool Idle() const { return pending_ == 0; }
  std::int64_t pending() const { return pending_; }

  // Removes the next envelope per the order policy and applies the
  // max-propagation rule to its receiver.
  Envelope<Payload> Next() {
    if (pending_ == 0) Fail(ErrorCode::kProtocol, "no deliverable message");
    std::size_t pick = 0;
    if (policy_ == OrderPolicy::kFifo) {
      for (std::size_t i = 1; i < active_.size(); ++i) {
        if (channels_[active_[i]].front().seq < channels_[active_[pick]].front().seq) pick = i;
      }
    } else {
      pick = static_cast<std::size_t>(order_rng_.Index(static_cast<int>(active_.size())));
    }
    return PopChannel(pick);
  }

  // Delivers every pending message in send order (synchronous barrier).
  std::vector<Envelope<Payload>> DeliverRound() {
    std::vector<Envelope<Payload>> out;
    out.reserve(pending_);
    for (auto& [key, channel] : channels_) {
      for (auto& env : channel) out.push_back(std::move(env));
      channel.clear();
    }
    active_.clear();
    pending_ = 0;
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.seq < b.seq; });
    for (const auto& env : out) Deliver(env);
    return out;
  }

  std::int64_t GlobalNclo() const {
    std::int64_t m = 0;
    for (const auto& a : agents_) m = std::max(m, a.nclo);
    return m;
  }

  const MessageCounts& counts() const { return counts_; }

  std::string QueueSnapshot() const {
    std::ostringstream os;
    os << pending_ << " pending";
    for (const auto& [key, channel] : channels_) {
      for (const auto& env : channel) {
        os << "; " << key.first + 1 << "->" << key.second + 1 << ' '
           << MsgTypeName(env.payload.type);
      }
    }
    return os.str();
  }

 private:
  Envelope<Payload> PopChannel(std::size_t index) {
    auto key = active_[index];
    auto& channel = channels_[key];
    Envelope<Payload> env = std::move(channel.front());
    channel.pop_front();
    if (channel.empty()) {
      active_[index] = active_.back();
      active_.pop_back();
      // Keep fifo scans and shuffle draws independent of removal history.
      std::sort(active_.begin(), active_.end());
    }
    --pending_;
    Deliver(env);
    return env;
  }

  void Deliver(const Envelope<Payload>& env) {
    ++counts_.delivered;
    agents_[env.receiver].Observe(env.stamp);
    if (trace_ != nullptr) {
      *trace_ << "t=" << step_ << ' ' << env.sender + 1 << "->" << env.receiver + 1 << ' '
              << MsgTypeName(env.payload.type) << " nclo=" << env.stamp << '\n';
    }
    ++step_;
  }

  OrderPolicy policy_;
  Rng order_rng_;
  std::vector<AgentContext> agents_;
  std::map<std::pair<int, int>, std::deque<Envelope<Payload>>> channels_;
  std::vector<std::pair<int, int>> active_;
  std::int64_t pending_ = 0;
  std::uint64_t next_seq_ = 0;
  std::uint64_t step_ = 0;
  MessageCounts counts_;
  std::ostream* trace_ = nullptr;
};

}  // namespace adcop

#endif  // ADCOP_SIMNET_NETWORK_H_
