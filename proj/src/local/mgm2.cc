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

namespace adcop {
namespace {

// Local cost at `own` if `partner` held `partner_value`, all other
// neighbors unchanged.
Cost CostWithPartner(const LocalView& view, int own, int partner, int partner_value) {
  Cost c = 0;
  for (const auto& e : view.edges()) {
    c += e.table(own, e.neighbor == partner ? partner_value : e.neighbor_value);
  }
  return c;
}

}  // namespace

RunReport Mgm2(const Instance& instance, const LocalOptions& opts) {
  RequireLocalShape(instance, "MGM-2");
  LocalRun run(instance, opts, "mgm2", true);
  const int n = run.size();
  auto& net = run.net();
  auto& values = run.values();
  for (int t = 1; t <= opts.cycles; ++t) {
    run.ExchangeValues();

    // Offers: a random neighbor gets this agent's gain for every joint
    // move except staying put.
    std::vector<int> partner(n, -1);
    std::vector<bool> offerer(n, false);
    for (int a = 0; a < n; ++a) {
      auto& view = run.view(a);
      auto& ctx = run.ctx(a);
      if (!ctx.rng.Bernoulli(opts.offer_probability) || view.neighbors().empty()) continue;
      offerer[a] = true;
      const int to = view.neighbors()[ctx.rng.Index(static_cast<int>(view.neighbors().size()))];
      const int their_domain = instance.domain_size(to);
      const Cost now = CostWithPartner(view, values[a], to, values[to]);
      LocalPayload offer;
      offer.type = MsgType::kOffer;
      offer.table.assign(static_cast<std::size_t>(view.domain()) * their_domain, 0);
      for (int v = 0; v < view.domain(); ++v) {
        for (int w = 0; w < their_domain; ++w) {
          offer.table[v * their_domain + w] = now - CostWithPartner(view, v, to, w);
        }
      }
      ctx.Charge(static_cast<std::int64_t>(offer.table.size()) *
                 static_cast<std::int64_t>(std::max<std::size_t>(1, view.edges().size())));
      for (const auto& e : view.edges()) {
        if (e.neighbor != to) continue;
        for (int v = 0; v < view.domain(); ++v) {
          for (int w = 0; w < their_domain; ++w) {
            run.ledger().Record(AgentId{a}, AgentId{to},
                                EntryRef{e.constraint, e.side, view.ScopeCell(e, v, w)});
          }
        }
      }
      offer.value = values[a];
      net.Send(a, to, std::move(offer));
    }

    // Responses: a receiver that is not offering accepts the best positive
    // joint gain; every other offer is declined.
    std::vector<int> joint_own(n, -1), joint_partner(n, -1);
    std::vector<Cost> joint_gain(n, 0);
    std::vector<std::vector<std::pair<int, std::vector<Cost>>>> offers(n);
    for (const auto& env : net.DeliverRound()) {
      offers[env.receiver].push_back({env.sender, env.payload.table});
    }
    for (int r = 0; r < n; ++r) {
      if (offers[r].empty()) continue;
      auto& view = run.view(r);
      auto& ctx = run.ctx(r);
      int best_from = -1, best_v = -1, best_w = -1;
      Cost best_gain = 0;
      if (!offerer[r]) {
        for (const auto& [from, gains] : offers[r]) {
          const int off_domain = instance.domain_size(from);
          const Cost now = CostWithPartner(view, values[r], from, values[from]);
          for (int v = 0; v < off_domain; ++v) {
            for (int w = 0; w < view.domain(); ++w) {
              if (v == values[from] && w == values[r]) continue;
              Cost g = gains[v * view.domain() + w] + now - CostWithPartner(view, w, from, v);
              // A shared table sits in both local costs; count its change once.
              if (instance.symmetric()) {
                for (const auto& e : view.edges()) {
                  if (e.neighbor == from) g -= e.table(values[r], values[from]) - e.table(w, v);
                }
              }
              if (g > best_gain) {
                best_gain = g;
                best_from = from;
                best_v = v;
                best_w = w;
              }
            }
          }
          ctx.Charge(static_cast<std::int64_t>(gains.size()) *
                     static_cast<std::int64_t>(std::max<std::size_t>(1, view.edges().size())));
        }
      }
      for (const auto& [from, gains] : offers[r]) {
        LocalPayload resp;
        resp.type = MsgType::kResponse;
        resp.flag = from == best_from;
        if (resp.flag) {
          resp.value = best_v;
          resp.lr = best_gain;
          for (const auto& e : view.edges()) {
            if (e.neighbor != from) continue;
            for (auto [own, theirs] : {std::pair{best_w, best_v}, {values[r], values[from]}}) {
              run.ledger().Record(AgentId{r}, AgentId{from},
                                  EntryRef{e.constraint, e.side, view.ScopeCell(e, own, theirs)});
            }
          }
          partner[r] = from;
          joint_own[r] = best_w;
          joint_partner[r] = best_v;
          joint_gain[r] = best_gain;
        }
        net.Send(r, from, std::move(resp));
      }
    }
    for (const auto& env : net.DeliverRound()) {
      if (!env.payload.flag) continue;
      const int a = env.receiver;
      partner[a] = env.sender;
      joint_own[a] = env.payload.value;
      joint_partner[a] = values[env.sender];
      joint_gain[a] = env.payload.lr;
    }

    // Gains: committed pairs announce the joint gain, others their own.
    std::vector<std::pair<int, Cost>> best(n);
    for (int a = 0; a < n; ++a) {
      best[a] = partner[a] >= 0 ? std::pair{joint_own[a], joint_gain[a]}
                                : run.view(a).BestReduction(values[a], run.ctx(a));
      for (int nb : run.view(a).neighbors()) {
        LocalPayload p;
        p.type = MsgType::kLr;
        p.lr = best[a].second;
        net.Send(a, nb, std::move(p));
      }
    }
    std::vector<bool> wins(n, true);
    for (const auto& env : net.DeliverRound()) {
      const int a = env.receiver;
      if (env.sender == partner[a]) continue;
      const Cost theirs = env.payload.lr;
      if (theirs > best[a].second || (theirs == best[a].second && env.sender < a)) wins[a] = false;
    }

    // Pairs move only when both partners won their neighborhoods.
    for (int a = 0; a < n; ++a) {
      if (partner[a] < 0) continue;
      LocalPayload c;
      c.type = MsgType::kConfirm;
      c.flag = wins[a];
      net.Send(a, partner[a], std::move(c));
    }
    std::vector<bool> partner_go(n, false);
    for (const auto& env : net.DeliverRound()) partner_go[env.receiver] = env.payload.flag;
    Assignment next = values;
    for (int a = 0; a < n; ++a) {
      if (best[a].second <= 0 || !wins[a]) continue;
      if (partner[a] >= 0 && !partner_go[a]) continue;
      next[a] = best[a].first;
    }
    values = next;
    run.EndCycle(t);
  }
  return run.Finish();
}

}  // namespace adcop
