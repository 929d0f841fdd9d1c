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
#include <array>
#include <vector>

#include "local/local_view.h"

namespace adcop {
namespace {

void Normalize(std::vector<Cost>& m) {
  if (m.empty()) return;
  const Cost low = *std::min_element(m.begin(), m.end());
  for (auto& x : m) x -= low;
}

}  // namespace

RunReport MaxSum(const Instance& instance, const LocalOptions& opts) {
  RequireLocalShape(instance, "Max-Sum");
  LocalRun run(instance, opts, "maxsum", false);
  const int n = run.size();
  const int m = instance.num_constraints();
  auto& net = run.net();
  auto& values = run.values();

  // Function tables hold both sides; each function node lives with the
  // lower-indexed agent of its scope.
  std::vector<CostTable> table(m);
  std::vector<int> host(m);
  for (int c = 0; c < m; ++c) {
    const auto& con = instance.constraint(c);
    table[c] = con.sides[0];
    for (std::size_t s = 1; s < con.sides.size(); ++s) {
      auto dst = table[c].cells();
      auto src = con.sides[s].cells();
      for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += src[i];
    }
    host[c] = std::min(instance.variable(con.scope[0]).owner, instance.variable(con.scope[1]).owner);
  }
  // q[c][s]: variable -> function, r[c][s]: function -> variable, where s is
  // the variable's scope position.
  std::vector<std::array<std::vector<Cost>, 2>> q(m), r(m);
  for (int c = 0; c < m; ++c) {
    for (int s = 0; s < 2; ++s) {
      const int dom = instance.domain_size(instance.constraint(c).scope[s]);
      q[c][s].assign(dom, 0);
      r[c][s].assign(dom, 0);
    }
  }

  for (int t = 1; t <= opts.cycles; ++t) {
    for (int v = 0; v < n; ++v) {
      const auto& mine = instance.constraints_of_variable(v);
      for (int c : mine) {
        const int s = instance.constraint(c).scope[0] == v ? 0 : 1;
        LocalPayload msg;
        msg.type = MsgType::kVarMsg;
        msg.value = c;
        msg.first = s;
        msg.table.assign(instance.domain_size(v), 0);
        for (int other : mine) {
          if (other == c) continue;
          const int os = instance.constraint(other).scope[0] == v ? 0 : 1;
          for (int x = 0; x < instance.domain_size(v); ++x) msg.table[x] += r[other][os][x];
        }
        Normalize(msg.table);
        net.Send(instance.variable(v).owner, host[c], std::move(msg));
      }
    }
    for (const auto& env : net.DeliverRound()) {
      q[env.payload.value][env.payload.first] = env.payload.table;
    }
    for (int c = 0; c < m; ++c) {
      const auto& con = instance.constraint(c);
      const auto& tab = table[c];
      for (int s = 0; s < 2; ++s) {
        const auto& incoming = q[c][1 - s];
        LocalPayload msg;
        msg.type = MsgType::kFuncMsg;
        msg.value = c;
        msg.first = s;
        msg.table.assign(instance.domain_size(con.scope[s]), kInfiniteCost);
        for (int a = 0; a < tab.rows(); ++a) {
          for (int b = 0; b < tab.cols(); ++b) {
            const int own = s == 0 ? a : b;
            const int other = s == 0 ? b : a;
            msg.table[own] = std::min(msg.table[own], tab(a, b) + incoming[other]);
          }
        }
        run.ctx(host[c]).Charge(static_cast<std::int64_t>(tab.size()));
        Normalize(msg.table);
        net.Send(host[c], instance.variable(con.scope[s]).owner, std::move(msg));
      }
    }
    for (const auto& env : net.DeliverRound()) {
      r[env.payload.value][env.payload.first] = env.payload.table;
    }
    for (int v = 0; v < n; ++v) {
      std::vector<Cost> belief(instance.domain_size(v), 0);
      for (int c : instance.constraints_of_variable(v)) {
        const int s = instance.constraint(c).scope[0] == v ? 0 : 1;
        for (std::size_t x = 0; x < belief.size(); ++x) belief[x] += r[c][s][x];
      }
      int best = values[v];
      for (int x = 0; x < static_cast<int>(belief.size()); ++x) {
        if (belief[x] < belief[best]) best = x;
      }
      values[v] = best;
    }
    run.EndCycle(t);
  }
  return run.Finish();
}

}  // namespace adcop
