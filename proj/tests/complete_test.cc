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

#include <algorithm>
#include <set>

#include "common/error.h"
#include "complete/complete.h"
#include "fixtures.h"
#include "generators/generators.h"
#include "transforms/transforms.h"

namespace adcop {
namespace {

using testing::Asymmetric;
using testing::TriangleExample;
using testing::Table;

Instance Small(std::uint64_t seed) {
  GeneratorSpec s = PresetSpec(seed % 2 ? "setup3-games" : "setup1-desk");
  s.set_n(3 + static_cast<int>(seed % 4));
  s.set_k(2 + static_cast<int>(seed % 3));
  return Generate(s, seed);
}

Instance SingleAgent() { return Asymmetric(1, 3, {}); }

// Walks every assignment with an odometer, independently of the solver's
// DFS.
Cost Enumerate(const Instance& inst) {
  Assignment a(inst.num_variables(), 0);
  Cost best = kInfiniteCost;
  while (true) {
    best = std::min(best, EvaluateGlobal(inst, a));
    int v = 0;
    while (v < inst.num_variables() && ++a[v] == inst.domain_size(v)) a[v++] = 0;
    if (v == inst.num_variables()) return best;
  }
}

TEST(BruteForce, SingleAgentArgmin) {
  std::vector<Variable> vars{{0, 3}};
  Constraint unary{{0}, {CostTable(std::vector<int>{3})}};
  unary.sides[0].cells()[0] = 5;
  unary.sides[0].cells()[1] = 2;
  unary.sides[0].cells()[2] = 2;
  const OptimalSolution s =
      BruteForceOptimal(Instance(Instance::Kind::kAsymmetric, 1, vars, {unary}));
  EXPECT_EQ(s.cost, 2);
  EXPECT_EQ(s.assignment, Assignment{1});
}

TEST(BruteForce, ZeroCostReturnsLexicographicFirst) {
  const Instance zero = Asymmetric(3, 2, {{0, 1, CostTable(2, 2), CostTable(2, 2)}});
  const OptimalSolution s = BruteForceOptimal(zero);
  EXPECT_EQ(s.cost, 0);
  EXPECT_EQ(s.assignment, (Assignment{0, 0, 0}));
}

TEST(BruteForce, MatchesOdometer) {
  GeneratorSpec s = PresetSpec("setup3-games");
  s.set_k(3);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Instance inst = Generate(s, seed);
    EXPECT_EQ(BruteForceOptimal(inst).cost, Enumerate(inst));
  }
}

TEST(BruteForce, RefusesOversizedSpaces) {
  try {
    BruteForceOptimal(Generate(PresetSpec("setup1"), 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCapExceeded);
  }
}

TEST(SyncBB, AggregatedTriangle) {
  const RunReport r = SyncBB(AggregateSymmetric(TriangleExample()));
  EXPECT_EQ(r.cost, 11);
  EXPECT_EQ(r.assignment, (Assignment{1, 0, 0}));
}

TEST(SyncBB, SingleAgent) {
  const RunReport r = SyncBB(AggregateSymmetric(SingleAgent()));
  EXPECT_EQ(r.cost, 0);
  EXPECT_EQ(r.assignment, Assignment{0});
  EXPECT_EQ(r.messages.by_type[static_cast<int>(MsgType::kCpa)], 0);
}

TEST(SyncBB, PeavMatchesOptimum) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    GeneratorSpec s = PresetSpec("setup1-desk");
    s.set_n(4);
    s.set_k(3);
    const Instance inst = Generate(s, seed);
    const PeavInstance p = ToPeav(inst);
    const RunReport r = SyncBB(p.dcop);
    EXPECT_EQ(r.cost, BruteForceOptimal(inst).cost);
    EXPECT_TRUE(p.Consistent(r.assignment));
  }
}

TEST(OneSided, TriangleFailure) {
  const RunReport r = OneSidedSyncBB(TriangleExample());
  EXPECT_EQ(r.assignment, (Assignment{0, 1, 1}));
  EXPECT_EQ(r.claimed_cost, 2);
  EXPECT_EQ(r.cost, 12);
  EXPECT_EQ(BruteForceOptimal(TriangleExample()).cost, 11);
}

TEST(OneSided, CollapsedAsymmetryIsExact) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Instance base = Small(seed);
    std::vector<Constraint> cons = base.constraints();
    for (auto& c : cons) {
      for (std::size_t x = 0; x < c.sides[0].size(); ++x) {
        c.sides[1].cells()[x] += c.sides[0].cells()[x];
        c.sides[0].cells()[x] = 0;
      }
    }
    const Instance collapsed(base.kind(), base.num_agents(), base.variables(), cons);
    const RunReport r = OneSidedSyncBB(collapsed);
    EXPECT_EQ(r.claimed_cost, r.cost);
    EXPECT_EQ(r.cost, BruteForceOptimal(collapsed).cost);
  }
  const Instance zero = Asymmetric(3, 2, {{0, 2, CostTable(2, 2), CostTable(2, 2)}});
  const RunReport z = OneSidedSyncBB(zero);
  EXPECT_EQ(z.claimed_cost, 0);
  EXPECT_EQ(z.cost, 0);
}

bool ExtendedBeyond(const RunReport& r, std::vector<int> prefix) {
  for (const auto& p : r.explored) {
    if (p.size() > prefix.size() && std::equal(prefix.begin(), prefix.end(), p.begin())) {
      return true;
    }
  }
  return false;
}

TEST(SyncAbb2ph, ExtendsBeforeDetectingBreach) {
  const RunReport r = SyncAbb2ph(TriangleExample());
  EXPECT_EQ(r.cost, 11);
  EXPECT_TRUE(ExtendedBeyond(r, {1, 1}));
}

TEST(SyncAbb, BackCheckPrunesBeforeThirdAgent) {
  const RunReport r = SyncAbb(TriangleExample());
  EXPECT_EQ(r.cost, 11);
  EXPECT_EQ(r.assignment, (Assignment{1, 0, 0}));
  // A_2 did try y under b, but A_3 never assigned below it.
  EXPECT_TRUE(std::count(r.explored.begin(), r.explored.end(), std::vector<int>{1, 1}) == 1);
  EXPECT_FALSE(ExtendedBeyond(r, {1, 1}));
}

TEST(Complete, SingleAgentInstances) {
  const Instance one = SingleAgent();
  for (auto algo : {&SyncAbb, &SyncAbb2ph, &Atwb}) {
    const RunReport r = algo(one, {});
    EXPECT_EQ(r.cost, 0);
    EXPECT_EQ(r.messages.by_type[static_cast<int>(MsgType::kCpaBack)], 0);
  }
  EXPECT_EQ(Afb(AggregateSymmetric(one), {}).cost, 0);
}

TEST(Complete, OptimalOnSeededCorpus) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Instance inst = Small(seed);
    const Cost opt = BruteForceOptimal(inst).cost;
    CompleteOptions o;
    o.seed = seed;
    EXPECT_EQ(SyncAbb(inst, o).cost, opt) << seed;
    EXPECT_EQ(SyncAbb2ph(inst, o).cost, opt) << seed;
    EXPECT_EQ(Atwb(inst, o).cost, opt) << seed;
    EXPECT_EQ(SyncBB(AggregateSymmetric(inst), o).cost, opt) << seed;
    EXPECT_EQ(Afb(AggregateSymmetric(inst), o).cost, opt) << seed;
  }
}

TEST(Complete, EightAgentInstances) {
  GeneratorSpec s = PresetSpec("setup1-desk");
  s.set_n(8);
  s.set_k(3);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Instance inst = Generate(s, seed);
    const Cost opt = BruteForceOptimal(inst).cost;
    EXPECT_EQ(SyncAbb(inst).cost, opt);
    EXPECT_EQ(Atwb(inst).cost, opt);
  }
}

TEST(Complete, ShuffledDeliveryKeepsOptimum) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Instance inst = Small(seed);
    const Cost opt = BruteForceOptimal(inst).cost;
    CompleteOptions o;
    o.seed = seed;
    o.policy = OrderPolicy::kShuffle;
    EXPECT_EQ(Atwb(inst, o).cost, opt) << seed;
    EXPECT_EQ(Afb(AggregateSymmetric(inst), o).cost, opt) << seed;
    EXPECT_EQ(SyncAbb2ph(inst, o).cost, opt) << seed;
  }
}

TEST(Complete, BoundsStrictlyDecrease) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Instance inst = Small(seed);
    for (auto algo : {&SyncAbb, &SyncAbb2ph, &Atwb}) {
      const RunReport r = algo(inst, {});
      for (std::size_t i = 1; i < r.bound_history.size(); ++i) {
        EXPECT_LT(r.bound_history[i], r.bound_history[i - 1]);
      }
      ASSERT_FALSE(r.bound_history.empty());
      EXPECT_EQ(r.bound_history.back(), r.cost);
    }
  }
}

TEST(Complete, NoPrefixExploredTwice) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Instance inst = Small(seed);
    for (auto algo : {&SyncAbb, &SyncAbb2ph, &Atwb}) {
      const RunReport r = algo(inst, {});
      std::set<std::vector<int>> seen(r.explored.begin(), r.explored.end());
      EXPECT_EQ(seen.size(), r.explored.size()) << seed;
    }
  }
}

TEST(Complete, SyncAbbPrunesMoreThanTwoPhase) {
  double one = 0, two = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Instance inst = Small(seed);
    one += static_cast<double>(SyncAbb(inst).nclo);
    two += static_cast<double>(SyncAbb2ph(inst).nclo);
  }
  EXPECT_LE(one, two);
}

TEST(H2, LastIndexIsZeroAndMonotone) {
  const Instance inst = Generate(PresetSpec("setup1-desk"), 5);
  const auto h2 = BuildH2(inst);
  const int n = inst.num_agents();
  for (int a = 0; a < n; ++a) {
    for (const auto& row : h2[a]) {
      EXPECT_EQ(row[n - 1], 0);
      for (int j = 1; j < n; ++j) EXPECT_LE(row[j], row[j - 1]);
    }
  }
}

TEST(H2, AdmissibleAgainstSuffixMinimum) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Instance inst = Small(seed);
    const auto h2 = BuildH2(inst);
    const int n = inst.num_agents();
    const int k = inst.domain_size(0);
    for (int a = 0; a < n; ++a) {
      for (int v = 0; v < k; ++v) {
        for (int j = 0; j < n; ++j) {
          // Exact minimum of a's sides against agents after j, with a = v.
          Assignment x(n, 0);
          Cost best = kInfiniteCost;
          while (true) {
            if (x[a] == v) {
              Cost c = 0;
              for (int ci : inst.constraints_of_agent(a)) {
                const Constraint& con = inst.constraint(ci);
                const int side = con.scope[0] == a ? 0 : 1;
                const int other = con.scope[1 - side];
                if (other > j) c += con.sides[side](x[con.scope[0]], x[con.scope[1]]);
              }
              best = std::min(best, c);
            }
            int p = 0;
            while (p < n && ++x[p] == k) x[p++] = 0;
            if (p == n) break;
          }
          EXPECT_LE(h2[a][v][j], best);
        }
      }
    }
  }
}

TEST(Privacy, AtwbFirstAgentLearnsNothing) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const RunReport r = Atwb(Small(seed));
    ASSERT_FALSE(r.agent_gain.empty());
    EXPECT_EQ(r.agent_gain[0], 0.0);
  }
}

TEST(PrivacyCap, FullThresholdMatchesUncapped) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Instance inst = Generate(PresetSpec("setup1-desk"), seed);
    CompleteOptions capped;
    capped.privacy_threshold = 100;
    for (auto algo : {&SyncAbb, &Atwb}) {
      const RunReport a = algo(inst, {}), b = algo(inst, capped);
      EXPECT_EQ(a.cost, b.cost);
      EXPECT_EQ(a.assignment, b.assignment);
      EXPECT_FALSE(b.halted_by_privacy);
    }
  }
}

TEST(PrivacyCap, ZeroThresholdStopsAtFirstLeak) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Instance inst = Generate(PresetSpec("setup1-desk"), seed);
    CompleteOptions capped;
    capped.privacy_threshold = 0;
    for (auto algo : {&SyncAbb, &Atwb}) {
      const RunReport r = algo(inst, capped);
      const RunReport full = algo(inst, {});
      if (!r.bound_history.empty()) {
        EXPECT_EQ(r.claimed_cost, r.bound_history.back());
      }
      EXPECT_LE(r.bound_history.size(), full.bound_history.size());
      EXPECT_TRUE(r.halted_by_privacy || r.max_privacy_gain == 0);
      if (r.halted_by_privacy) {
        EXPECT_GE(r.cost, full.cost);
      }
    }
  }
}

}  // namespace
}  // namespace adcop
