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
#include <numeric>
#include <random>

#include "common/error.h"
#include "fixtures.h"
#include "generators/generators.h"
#include "model/instance.h"
#include "model/io.h"

namespace adcop {
namespace {

using testing::Asymmetric;
using testing::PairExample;
using testing::Table;

TEST(Evaluate, PairExampleSides) {
  const Instance f = PairExample();
  const Assignment bx{1, 0};
  EXPECT_EQ(EvaluateGlobal(f, bx), 9);
  EXPECT_EQ(EvaluateAgent(f, AgentId{0}, bx), 7);
  EXPECT_EQ(EvaluateAgent(f, AgentId{1}, bx), 2);
  EXPECT_EQ(SideCost(f, 0, AgentId{1}, {{0, 0}, {1, 0}}), 4);
  EXPECT_EQ(SideCost(f, 0, AgentId{0}, {{0, 0}, {1, 1}}), 6);
}

TEST(Evaluate, EmptyInstanceIsFree) {
  const Instance empty = Asymmetric(3, 2, {});
  EXPECT_EQ(EvaluateGlobal(empty, Assignment{1, 0, 1}), 0);
  EXPECT_EQ(EvaluateAgent(empty, AgentId{2}, Assignment{1, 0, 1}), 0);
}

TEST(Evaluate, RejectsBadAssignments) {
  const Instance f = PairExample();
  try {
    EvaluateGlobal(f, Assignment{2, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDomain);
  }
  try {
    EvaluateAgent(f, AgentId{5}, Assignment{0, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotFound);
  }
  try {
    SideCost(f, 0, AgentId{0}, {{0, 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPrecondition);
  }
}

TEST(Evaluate, AgentsPartitionGlobalCost) {
  const Instance inst = Generate(PresetSpec("setup1-desk"), 11);
  std::mt19937 gen(5);
  for (int trial = 0; trial < 50; ++trial) {
    Assignment a(inst.num_variables());
    for (auto& v : a) v = static_cast<int>(gen() % 4);
    Cost sum = 0;
    for (int ag = 0; ag < inst.num_agents(); ++ag) sum += EvaluateAgent(inst, AgentId{ag}, a);
    EXPECT_EQ(sum, EvaluateGlobal(inst, a));
    // Independent walk over every side table.
    Cost walk = 0;
    for (const auto& c : inst.constraints()) {
      for (const auto& side : c.sides) walk += side(a[c.scope[0]], a[c.scope[1]]);
    }
    EXPECT_EQ(walk, EvaluateGlobal(inst, a));
  }
}

TEST(Evaluate, ConstraintOrderIsIrrelevant) {
  const Instance inst = Generate(PresetSpec("setup1-desk"), 3);
  auto cons = inst.constraints();
  std::reverse(cons.begin(), cons.end());
  const Instance permuted(inst.kind(), inst.num_agents(), inst.variables(), cons);
  const Assignment a{0, 1, 2, 3, 0, 1, 2};
  EXPECT_EQ(EvaluateGlobal(inst, a), EvaluateGlobal(permuted, a));
}

TEST(Predicates, SingleAgentOptimum) {
  std::vector<Variable> vars{{0, 3}};
  Constraint unary{{0}, {CostTable(std::vector<int>{3})}};
  unary.sides[0].cells()[0] = 4;
  unary.sides[0].cells()[1] = 1;
  unary.sides[0].cells()[2] = 6;
  const Instance one(Instance::Kind::kAsymmetric, 1, vars, {unary});
  EXPECT_TRUE(IsLocalOptimum(one, Assignment{1}));
  EXPECT_FALSE(IsLocalOptimum(one, Assignment{0}));
  EXPECT_TRUE(IsNashStable(one, Assignment{1}));
}

TEST(Predicates, ZeroCostIsNashStable) {
  const Instance zero = Asymmetric(2, 2, {{0, 1, CostTable(2, 2), CostTable(2, 2)}});
  EXPECT_TRUE(IsNashStable(zero, Assignment{1, 0}));
  EXPECT_TRUE(IsLocalOptimum(zero, Assignment{1, 0}));
}

TEST(Predicates, LocalOptimumAndNashDiffer) {
  // A_1 pays 1 to switch; A_2 pays 10 unless A_1 switches.
  const Instance inst = Asymmetric(
      2, 2, {{0, 1, Table(2, 2, {0, 0, 1, 1}), Table(2, 2, {10, 10, 0, 0})}});
  EXPECT_TRUE(IsNashStable(inst, Assignment{0, 0}));
  EXPECT_FALSE(IsLocalOptimum(inst, Assignment{0, 0}));
}

TEST(Predicates, EqualSidesMakeLocalOptimaStable) {
  const Instance base = Generate(PresetSpec("setup1-desk"), 4);
  std::vector<Constraint> cons = base.constraints();
  for (auto& c : cons) c.sides[1] = c.sides[0];
  const Instance equal(Instance::Kind::kAsymmetric, base.num_agents(), base.variables(), cons);
  const int n = equal.num_variables();
  Assignment a(n, 0);
  int optima = 0;
  for (int code = 0; code < (1 << (2 * n)); ++code) {
    for (int v = 0; v < n; ++v) a[v] = (code >> (2 * v)) & 3;
    if (!IsLocalOptimum(equal, a)) continue;
    ++optima;
    EXPECT_TRUE(IsNashStable(equal, a));
  }
  EXPECT_GT(optima, 0);
}

// Exhaustive best-response check against the predicate.
TEST(Predicates, NashMatchesBestResponses) {
  const Instance f = PairExample();
  for (int x1 = 0; x1 < 2; ++x1) {
    for (int x2 = 0; x2 < 2; ++x2) {
      const Assignment a{x1, x2};
      bool stable = true;
      for (int ag = 0; ag < 2; ++ag) {
        for (int d = 0; d < 2; ++d) {
          Assignment b = a;
          b[ag] = d;
          if (EvaluateAgent(f, AgentId{ag}, b) < EvaluateAgent(f, AgentId{ag}, a)) stable = false;
        }
      }
      EXPECT_EQ(IsNashStable(f, a), stable);
    }
  }
}

TEST(Neighbors, EdgesAndIsolation) {
  const Instance f = PairExample();
  ASSERT_EQ(Neighbors(f, AgentId{0}).size(), 1u);
  EXPECT_EQ(Neighbors(f, AgentId{0})[0], AgentId{1});
  const Instance lonely = Asymmetric(3, 2, {{0, 1, CostTable(2, 2), CostTable(2, 2)}});
  EXPECT_TRUE(Neighbors(lonely, AgentId{2}).empty());
}

TEST(Neighbors, MatchGeneratorEdges) {
  const EdgeList edges = ErdosRenyiEdges(20, 0.2, 9);
  GameParams p;
  p.n = 20;
  p.k = 3;
  p.edge_probability = 0.2;
  const Instance inst = GenGraphicalGame(p, 9);
  std::vector<std::vector<int>> expected(20);
  for (auto [i, j] : edges) {
    expected[i].push_back(j);
    expected[j].push_back(i);
  }
  for (int a = 0; a < 20; ++a) {
    std::sort(expected[a].begin(), expected[a].end());
    std::vector<int> got;
    for (AgentId b : Neighbors(inst, AgentId{a})) got.push_back(b.index);
    EXPECT_EQ(got, expected[a]);
  }
}

TEST(Instance, ValidatesStructure) {
  std::vector<Variable> vars{{0, 2}, {1, 2}};
  EXPECT_THROW(Instance(Instance::Kind::kAsymmetric, 2, vars,
                        {Constraint{{0, 5}, {CostTable(2, 2), CostTable(2, 2)}}}),
               Error);
  EXPECT_THROW(Instance(Instance::Kind::kAsymmetric, 2, vars,
                        {Constraint{{0, 1}, {CostTable(2, 2, -1), CostTable(2, 2)}}}),
               Error);
  EXPECT_THROW(Instance(Instance::Kind::kAsymmetric, 1, vars, {}), Error);
}

TEST(Io, RoundTrip) {
  const Instance inst = Generate(PresetSpec("setup1"), 7);
  const std::string text = FormatInstance(inst);
  const Instance back = ParseInstance(text);
  EXPECT_EQ(back, inst);
  EXPECT_EQ(FormatInstance(back), text);
}

TEST(Io, SymmetricRoundTrip) {
  const Instance sym = testing::Symmetric(3, 2, {{{0, 1}, Table(2, 2, {1, 2, 3, 4})},
                                                 {{1, 2}, Table(2, 2, {0, 5, 5, 0})}});
  EXPECT_EQ(ParseInstance(FormatInstance(sym)), sym);
}

TEST(Io, ParseErrorsCarryLine) {
  try {
    ParseInstance("adcop 2 2\nvar 1 1 2\nvar 2 2 2\ncon 1 2\n1 2\n3 x\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParse);
    EXPECT_NE(std::string(e.what()).find("line"), std::string::npos);
  }
  EXPECT_THROW(ParseInstance("bogus 1 1\n"), Error);
}

TEST(Io, ParsesCommentsAndBlankLines) {
  const Instance f = ParseInstance(
      "# figure one\nadcop 2 2\n\nvar 1 1 2\nvar 2 2 2\ncon 1 2\n3 6\n7 9\n4 1\n2 8\n");
  EXPECT_EQ(f, PairExample());
}

}  // namespace
}  // namespace adcop
