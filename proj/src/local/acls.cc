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

#include <vector>

#include "local/local_view.h"

namespace adcop {

RunReport Acls(const Instance& instance, const LocalOptions& opts) {
  RequireLocalShape(instance, "ACLS");
  const double p = opts.p < 0 ? 0.5 : opts.p;
  LocalRun run(instance, opts, "acls", true);
  const int n = run.size();
  auto& net = run.net();
  auto& values = run.values();
  for (int t = 1; t <= opts.cycles; ++t) {
    run.ExchangeValues();

    // Proposals drawn in proportion to own-side gain.
    std::vector<int> proposal(n, -1);
    std::vector<Cost> own_delta(n, 0);
    for (int a = 0; a < n; ++a) {
      auto& view = run.view(a);
      auto& ctx = run.ctx(a);
      const Cost now = view.Local(values[a], ctx);
      std::vector<double> weights(view.domain(), 0.0);
      std::vector<Cost> deltas(view.domain(), 0);
      bool any = false;
      for (int v = 0; v < view.domain(); ++v) {
        if (v == values[a]) continue;
        deltas[v] = view.Local(v, ctx) - now;
        if (deltas[v] < 0) {
          weights[v] = static_cast<double>(-deltas[v]);
          any = true;
        }
      }
      if (!any) continue;
      proposal[a] = ctx.rng.Weighted(weights);
      own_delta[a] = deltas[proposal[a]];
      for (int nb : view.neighbors()) {
        LocalPayload msg;
        msg.type = MsgType::kProposal;
        msg.value = proposal[a];
        net.Send(a, nb, std::move(msg));
      }
    }

    // Impacts: the responder's side at the proposer's current and proposed
    // value.
    for (const auto& env : net.DeliverRound()) {
      const int r = env.receiver;
      const int from = env.sender;
      auto& view = run.view(r);
      LocalPayload reply;
      reply.type = MsgType::kImpact;
      for (const auto& e : view.edges()) {
        if (e.neighbor != from) continue;
        reply.first += e.table(values[r], values[from]);
        reply.second += e.table(values[r], env.payload.value);
        run.ctx(r).Charge(2);
        for (int theirs : {values[from], env.payload.value}) {
          run.ledger().Record(AgentId{r}, AgentId{from},
                              EntryRef{e.constraint, e.side, view.ScopeCell(e, values[r], theirs)});
        }
      }
      net.Send(r, from, std::move(reply));
    }
    std::vector<Cost> neighbor_delta(n, 0);
    for (const auto& env : net.DeliverRound()) {
      neighbor_delta[env.receiver] += env.payload.second - env.payload.first;
    }

    for (int a = 0; a < n; ++a) {
      if (proposal[a] < 0) continue;
      const double combined =
          static_cast<double>(own_delta[a]) + opts.coord_c * static_cast<double>(neighbor_delta[a]);
      if (combined < 0 && run.ctx(a).rng.Bernoulli(p)) values[a] = proposal[a];
    }
    run.EndCycle(t);
  }
  return run.Finish();
}

}  // namespace adcop
