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
#include <set>

#include "common/error.h"
#include "generators/generators.h"

namespace adcop {
namespace {

std::vector<int> Degrees(int n, const EdgeList& edges) {
  std::vector<int> d(n, 0);
  for (auto [i, j] : edges) {
    ++d[i];
    ++d[j];
  }
  return d;
}

bool Connected(int n, const EdgeList& edges) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int parts = n;
  for (auto [i, j] : edges) {
    const int a = find(i), b = find(j);
    if (a != b) {
      parent[a] = b;
      --parts;
    }
  }
  return parts <= 1;
}

TEST(Generators, SameSeedSameInstance) {
  for (const auto& name : PresetNames()) {
    GeneratorSpec s = PresetSpec(name);
    if (s.n() > 50) s.set_n(50);
    EXPECT_EQ(Generate(s, 9), Generate(s, 9)) << name;
    EXPECT_NE(Generate(s, 9), Generate(s, 10)) << name;
  }
}

TEST(Generators, UnknownPresetIsConfigError) {
  try {
    PresetSpec("setup9");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kConfig);
  }
}

TEST(Generators, InvalidParametersRejected) {
  GeneratorSpec s = PresetSpec("setup1");
  s.discsp.p1 = 1.5;
  EXPECT_THROW(ValidateSpec(s), Error);
  ScaleFreeParams ba;
  ba.n = 5;
  EXPECT_THROW(GenScaleFree(ba, 1), Error);
}

TEST(MaxDiscsp, NoDensityNoConstraints) {
  EXPECT_EQ(GenMaxDiscsp({8, 3, 0.0, 0.5}, 1).num_constraints(), 0);
  EXPECT_EQ(GenMaxDiscsp({8, 3, 1.0, 0.5}, 1).num_constraints(), 28);
}

TEST(MaxDiscsp, FullTightnessChargesEverySide) {
  const Instance inst = GenMaxDiscsp({9, 3, 0.5, 1.0}, 4);
  const Assignment a(9, 2);
  EXPECT_EQ(EvaluateGlobal(inst, a), 2 * inst.num_constraints());
  EXPECT_EQ(inst.cost_alphabet(), (std::vector<Cost>{0, 1}));
}

TEST(MaxDiscsp, CostInflictingPairFraction) {
  for (double p2 : {0.3, 0.5, 0.7}) {
    std::int64_t pairs = 0, inflicting = 0;
    for (std::uint64_t seed = 0; pairs < 100000; ++seed) {
      const Instance inst = GenMaxDiscsp({20, 10, 0.5, p2}, seed);
      for (const auto& c : inst.constraints()) {
        for (std::size_t x = 0; x < c.sides[0].size(); ++x) {
          ++pairs;
          if (c.sides[0].cells()[x] + c.sides[1].cells()[x] > 0) ++inflicting;
        }
      }
    }
    const double expected = 1 - (1 - p2) * (1 - p2);
    EXPECT_NEAR(static_cast<double>(inflicting) / pairs, expected, 0.02) << p2;
  }
}

TEST(Games, QuotaGivesExactMeanDegree) {
  const EdgeList e = QuotaEdges(200, 500, 3);
  EXPECT_EQ(e.size(), 500u);
  const std::set<std::pair<int, int>> distinct(e.begin(), e.end());
  EXPECT_EQ(distinct.size(), 500u);
}

TEST(Games, ErdosRenyiMeanDegree) {
  double total = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    total += 2.0 * static_cast<double>(ErdosRenyiEdges(200, 0.025, seed).size()) / 200;
  }
  EXPECT_NEAR(total / 20, 0.025 * 199, 0.5);
}

TEST(Games, ZeroCostFraction) {
  const Instance inst = Generate(PresetSpec("ls-er"), 7);
  std::int64_t cells = 0, zeros = 0;
  for (const auto& c : inst.constraints()) {
    for (const auto& side : c.sides) {
      for (Cost x : side.cells()) {
        ++cells;
        if (x == 0) ++zeros;
        EXPECT_LE(x, 100);
      }
    }
  }
  EXPECT_NEAR(static_cast<double>(zeros) / cells, 0.35, 0.01);
}

TEST(Games, DeskPresetHasFixedEdgeCount) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    // round(6 * 2.5 / 2)
    EXPECT_EQ(Generate(PresetSpec("setup3-games"), seed).num_constraints(), 8);
  }
}

TEST(ScaleFree, Connected) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    EXPECT_TRUE(Connected(200, BarabasiAlbertEdges(200, 10, 4, seed)));
  }
}

TEST(ScaleFree, SeedGraphOnly) {
  const EdgeList e = BarabasiAlbertEdges(10, 10, 4, 1);
  EXPECT_EQ(e.size(), 20u);
  EXPECT_TRUE(Connected(10, e));
}

TEST(ScaleFree, HeavierTailThanUniform) {
  int heavier = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const EdgeList ba = BarabasiAlbertEdges(200, 10, 4, seed);
    const EdgeList uniform = QuotaEdges(200, static_cast<int>(ba.size()), seed);
    const auto a = Degrees(200, ba), b = Degrees(200, uniform);
    if (*std::max_element(a.begin(), a.end()) > *std::max_element(b.begin(), b.end())) ++heavier;
  }
  EXPECT_GE(heavier, 90);
}

}  // namespace
}  // namespace adcop
