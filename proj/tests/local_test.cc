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

#include <gtest/gtest.h>

#include <random>

#include "common/error.h"
#include "complete/complete.h"
#include "fixtures.h"
#include "generators/generators.h"
#include "local/local_view.h"
#include "transforms/transforms.h"

namespace adcop {
namespace {

using testing::Asymmetric;
using testing::Table;

Instance Desk(std::uint64_t seed, int n = 12) {
  GeneratorSpec s = PresetSpec("ls-er");
  s.set_n(n);
  s.set_k(4);
  s.game.edge_probability = 4.0 / (n - 1);
  return Generate(s, seed);
}

// Random-cost chain 0-1-...-(n-1).
Instance Chain(int n, int k, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<Cost> cost(0, 1000);
  std::vector<testing::Edge> edges;
  for (int a = 0; a + 1 < n; ++a) {
    CostTable x(k, k), y(k, k);
    for (auto& c : x.cells()) c = cost(gen);
    for (auto& c : y.cells()) c = cost(gen);
    edges.push_back({a, a + 1, x, y});
  }
  return Asymmetric(n, k, edges);
}

TEST(Dsa, ZeroProbabilityNeverMoves) {
  LocalOptions o;
  o.p = 0;
  o.cycles = 30;
  const RunReport r = Dsa(Desk(1), o);
  for (Cost c : r.cost_trace) EXPECT_EQ(c, r.cost_trace[0]);
  EXPECT_EQ(r.cycles_to_converge, 0);
}

TEST(Dsa, LoneAgentTakesArgmin) {
  // Agent 2 has no neighbors but the instance still needs its two agents
  // to be connected for the others.
  const Instance inst = Asymmetric(2, 3, {{0, 1, Table(3, 3, {5, 5, 5, 1, 1, 1, 7, 7, 7}),
                                           CostTable(3, 3)}});
  LocalOptions o;
  o.p = 1;
  o.cycles = 3;
  EXPECT_EQ(Dsa(inst, o).assignment[0], 1);
}

TEST(Local, TraceHasOneEntryPerCycleAndInitial) {
  LocalOptions o;
  o.cycles = 17;
  const Instance inst = Desk(2);
  for (auto algo : {&Dsa, &Mgm, &Mgm2, &MaxSum, &Acls, &McsMgm, &GcaMgm}) {
    const RunReport r = algo(inst, o);
    ASSERT_EQ(r.cost_trace.size(), 18u) << r.algorithm;
    EXPECT_EQ(r.cost_trace.back(), r.cost);
    EXPECT_EQ(r.cost, EvaluateGlobal(inst, r.assignment));
  }
}

TEST(Local, RejectsMultiVariableAgents) {
  const Instance peav = ToPeav(Desk(3, 6)).dcop;
  try {
    Mgm(peav);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPrecondition);
  }
}

TEST(Mgm, SymmetricCostNeverRises) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const RunReport r = Mgm(AggregateSymmetric(Desk(seed)));
    EXPECT_EQ(r.cost_increasing_cycles, 0);
    for (std::size_t t = 1; t < r.cost_trace.size(); ++t) {
      EXPECT_LE(r.cost_trace[t], r.cost_trace[t - 1]);
    }
  }
}

TEST(Mgm, AsymmetricRunCanRaiseCost) {
  int witnesses = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    if (Mgm(Desk(seed)).cost_increasing_cycles > 0) ++witnesses;
  }
  EXPECT_GT(witnesses, 0);
}

TEST(Mgm2, NoOffersBehavesLikeMgmOnSymmetric) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Instance sym = AggregateSymmetric(Desk(seed));
    LocalOptions o;
    o.seed = seed;
    o.offer_probability = 0;
    const RunReport two = Mgm2(sym, o);
    EXPECT_EQ(two.cost_trace, Mgm(sym, o).cost_trace);
    EXPECT_EQ(two.messages.by_type[static_cast<int>(MsgType::kOffer)], 0);
  }
}

TEST(Mgm2, SymmetricCostNeverRises) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const RunReport r = Mgm2(AggregateSymmetric(Desk(seed)));
    EXPECT_EQ(r.cost_increasing_cycles, 0) << seed;
  }
}

TEST(Mgm2, NoWorseThanMgmOnAverage) {
  double one = 0, two = 0;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Instance sym = AggregateSymmetric(Desk(seed));
    one += static_cast<double>(Mgm(sym).cost);
    two += static_cast<double>(Mgm2(sym).cost);
  }
  EXPECT_LE(two, one);
}

TEST(MaxSum, ExactOnChains) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Instance chain = Chain(6, 3, seed);
    LocalOptions o;
    o.cycles = 20;
    EXPECT_EQ(MaxSum(chain, o).cost, BruteForceOptimal(chain).cost) << seed;
  }
}

// Agent 0 saves 2 by switching to value 1; that switch costs agent 1 an
// extra 5. Agent 1 has nothing to gain on its own.
Instance CoordinationFixture() {
  return Asymmetric(2, 2, {{0, 1, Table(2, 2, {2, 2, 0, 0}), Table(2, 2, {0, 0, 5, 5})}});
}

LocalOptions FixtureOptions(double c) {
  LocalOptions o;
  o.p = 1;
  o.cycles = 1;
  o.coord_c = c;
  // Find a seed whose random start puts agent 0 on value 0.
  for (o.seed = 0;; ++o.seed) {
    if (Acls(CoordinationFixture(), LocalOptions{.cycles = 0, .seed = o.seed}).assignment[0] == 0) {
      return o;
    }
  }
}

TEST(Acls, FullWeightRejectsHarmfulMove) {
  const RunReport r = Acls(CoordinationFixture(), FixtureOptions(1.0));
  EXPECT_EQ(r.assignment[0], 0);
}

TEST(Acls, SmallWeightAcceptsHarmfulMove) {
  const RunReport r = Acls(CoordinationFixture(), FixtureOptions(0.1));
  EXPECT_EQ(r.assignment[0], 1);
}

TEST(Acls, ZeroWeightIgnoresImpacts) {
  const RunReport r = Acls(CoordinationFixture(), FixtureOptions(0));
  EXPECT_EQ(r.assignment[0], 1);
}

TEST(Acls, ImpactRevealsTwoEntries) {
  LocalOptions o = FixtureOptions(1.0);
  const RunReport r = Acls(CoordinationFixture(), o);
  EXPECT_EQ(r.messages.by_type[static_cast<int>(MsgType::kImpact)], 1);
  // Agent 0 learned two of agent 1's four cells.
  EXPECT_DOUBLE_EQ(r.agent_gain[0], 50.0);
}

TEST(Transfers, ConserveGlobalCost) {
  LocalOptions o;
  o.verify_transfers = true;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    o.seed = seed;
    const Instance inst = Desk(seed);
    EXPECT_NO_THROW(McsMgm(inst, o));
    EXPECT_NO_THROW(GcaMgm(inst, o));
  }
}

TEST(Transfers, LoneAgentsTransferNothing) {
  const Instance lonely = Asymmetric(3, 3, {});
  EXPECT_EQ(GcaMgm(lonely).transfers, 0);
  EXPECT_EQ(McsMgm(lonely).transfers, 0);
}

TEST(Transfers, McsTransfersOnAsymmetricRuns) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const RunReport r = McsMgm(Desk(seed));
    EXPECT_GT(r.transfers, 0);
  }
}

}  // namespace
}  // namespace adcop
