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

#include "generators/generators.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "common/error.h"
#include "common/rng.h"

namespace adcop {
namespace {

constexpr std::uint64_t kGraphStream = 1;
constexpr std::uint64_t kCostStream = 2;

std::vector<Variable> Agents(int n, int k) {
  std::vector<Variable> vars(n);
  for (int i = 0; i < n; ++i) vars[i] = Variable{i, k};
  return vars;
}

template <class Draw>
Instance Build(int n, int k, const EdgeList& edges, std::vector<Cost> alphabet, Draw draw) {
  std::vector<Constraint> constraints;
  constraints.reserve(edges.size());
  for (auto [i, j] : edges) {
    Constraint c;
    c.scope = {i, j};
    for (int s = 0; s < 2; ++s) {
      CostTable t(k, k);
      for (auto& cell : t.cells()) cell = draw();
      c.sides.push_back(std::move(t));
    }
    constraints.push_back(std::move(c));
  }
  return Instance(Instance::Kind::kAsymmetric, n, Agents(n, k), std::move(constraints),
                  std::move(alphabet));
}

std::vector<Cost> GameAlphabet(const GameCosts& costs) {
  std::vector<Cost> alphabet{0};
  for (int v = std::max(costs.lo, 1); v <= costs.hi; ++v) alphabet.push_back(v);
  if (costs.lo <= 0 && costs.hi < 1) alphabet.assign(1, 0);
  return alphabet;
}

Instance BuildGame(int n, int k, const EdgeList& edges, const GameCosts& costs,
                   std::uint64_t seed) {
  Rng rng(DeriveSeed(seed, kCostStream));
  return Build(n, k, edges, GameAlphabet(costs), [&]() -> Cost {
    if (rng.Bernoulli(costs.zero_probability)) return 0;
    return rng.UniformInt(costs.lo, costs.hi);
  });
}

void Require(bool ok, const std::string& what) {
  if (!ok) Fail(ErrorCode::kConfig, what);
}

bool Probability(double p) { return p >= 0.0 && p <= 1.0; }

}  // namespace

EdgeList ErdosRenyiEdges(int n, double p, std::uint64_t seed) {
  Rng rng(DeriveSeed(seed, kGraphStream));
  EdgeList edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.Bernoulli(p)) edges.emplace_back(i, j);
    }
  }
  return edges;
}

EdgeList QuotaEdges(int n, int count, std::uint64_t seed) {
  Rng rng(DeriveSeed(seed, kGraphStream));
  EdgeList all;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) all.emplace_back(i, j);
  }
  rng.Shuffle(all);
  all.resize(std::min<std::size_t>(all.size(), static_cast<std::size_t>(std::max(count, 0))));
  std::sort(all.begin(), all.end());
  return all;
}

EdgeList BarabasiAlbertEdges(int n, int m0, int m, std::uint64_t seed) {
  Rng rng(DeriveSeed(seed, kGraphStream));
  std::set<std::pair<int, int>> edges;
  auto add = [&](int a, int b) { edges.insert({std::min(a, b), std::max(a, b)}); };
  // Seed subgraph: a random spanning tree, then random extra edges up to
  // mean degree m.
  std::vector<int> order(m0);
  for (int i = 0; i < m0; ++i) order[i] = i;
  rng.Shuffle(order);
  for (int i = 1; i < m0; ++i) add(order[i], order[rng.Index(i)]);
  const std::size_t target = std::min<std::size_t>(
      static_cast<std::size_t>(std::llround(m0 * static_cast<double>(m) / 2.0)),
      static_cast<std::size_t>(m0) * (m0 - 1) / 2);
  while (edges.size() < target) {
    const int a = rng.Index(m0);
    const int b = rng.Index(m0);
    if (a != b) add(a, b);
  }
  // Preferential attachment through an endpoint urn.
  std::vector<int> urn;
  for (auto [a, b] : edges) {
    urn.push_back(a);
    urn.push_back(b);
  }
  for (int v = m0; v < n; ++v) {
    std::set<int> targets;
    const int want = std::min(m, v);
    while (static_cast<int>(targets.size()) < want) {
      const int t = urn.empty() ? rng.Index(v) : urn[rng.Index(static_cast<int>(urn.size()))];
      targets.insert(t);
    }
    for (int t : targets) {
      add(t, v);
      urn.push_back(t);
      urn.push_back(v);
    }
  }
  return EdgeList(edges.begin(), edges.end());
}

Instance GenMaxDiscsp(const MaxDiscspParams& p, std::uint64_t seed) {
  Require(p.n >= 1 && p.k >= 1, "Max-DisCSP needs n >= 1 and k >= 1");
  Require(Probability(p.p1) && Probability(p.p2), "p1 and p2 must lie in [0, 1]");
  Rng rng(DeriveSeed(seed, kCostStream));
  return Build(p.n, p.k, ErdosRenyiEdges(p.n, p.p1, seed), {0, 1},
               [&]() -> Cost { return rng.Bernoulli(p.p2) ? 1 : 0; });
}

Instance GenGraphicalGame(const GameParams& p, std::uint64_t seed) {
  Require(p.n >= 1 && p.k >= 1, "graphical game needs n >= 1 and k >= 1");
  Require(Probability(p.edge_probability) && Probability(p.costs.zero_probability),
          "probabilities must lie in [0, 1]");
  Require(p.costs.lo >= 0 && p.costs.lo <= p.costs.hi, "cost range needs 0 <= lo <= hi");
  EdgeList edges = p.mean_degree >= 0
                       ? QuotaEdges(p.n, static_cast<int>(std::llround(p.n * p.mean_degree / 2.0)), seed)
                       : ErdosRenyiEdges(p.n, p.edge_probability, seed);
  return BuildGame(p.n, p.k, edges, p.costs, seed);
}

Instance GenScaleFree(const ScaleFreeParams& p, std::uint64_t seed) {
  Require(p.k >= 1 && p.m >= 1 && p.m <= p.m0 && p.m0 <= p.n,
          "scale-free graphs need 1 <= m <= m0 <= n");
  Require(Probability(p.costs.zero_probability), "probabilities must lie in [0, 1]");
  Require(p.costs.lo >= 0 && p.costs.lo <= p.costs.hi, "cost range needs 0 <= lo <= hi");
  return BuildGame(p.n, p.k, BarabasiAlbertEdges(p.n, p.m0, p.m, seed), p.costs, seed);
}

int GeneratorSpec::n() const {
  switch (family) {
    case Family::kMaxDiscsp: return discsp.n;
    case Family::kGame: return game.n;
    case Family::kScaleFree: return scale_free.n;
  }
  return 0;
}

int GeneratorSpec::k() const {
  switch (family) {
    case Family::kMaxDiscsp: return discsp.k;
    case Family::kGame: return game.k;
    case Family::kScaleFree: return scale_free.k;
  }
  return 0;
}

void GeneratorSpec::set_n(int n) { discsp.n = game.n = scale_free.n = n; }
void GeneratorSpec::set_k(int k) { discsp.k = game.k = scale_free.k = k; }

GeneratorSpec PresetSpec(const std::string& name) {
  GeneratorSpec s;
  s.preset = name;
  const GameCosts ls_costs{0.35, 1, 100};
  if (name == "setup1") {
    s.discsp = {10, 10, 0.4, 0.5};
  } else if (name == "setup2") {
    s.discsp = {6, 6, 0.5, 0.5};
  } else if (name == "setup1-desk") {
    s.discsp = {7, 4, 0.4, 0.5};
  } else if (name == "setup3-games") {
    s.family = Family::kGame;
    s.game.n = 6;
    s.game.k = 6;
    s.game.mean_degree = 2.5;
    s.game.costs = {0.5, 0, 9};
  } else if (name == "ls-discsp") {
    s.discsp = {200, 10, 0.05, 0.7};
  } else if (name == "ls-er") {
    s.family = Family::kGame;
    s.game.n = 200;
    s.game.k = 10;
    s.game.edge_probability = 0.025;
    s.game.costs = ls_costs;
  } else if (name == "ls-ba") {
    s.family = Family::kScaleFree;
    s.scale_free = {200, 10, 10, 4, ls_costs};
  } else {
    Fail(ErrorCode::kConfig, "unknown preset '" + name + "'");
  }
  return s;
}

std::vector<std::string> PresetNames() {
  return {"setup1", "setup2", "setup3-games", "setup1-desk", "ls-discsp", "ls-er", "ls-ba"};
}

void ValidateSpec(const GeneratorSpec& spec) {
  Require(spec.n() >= 1 && spec.k() >= 1, "n and k must be at least 1");
  if (spec.family == Family::kMaxDiscsp) {
    Require(Probability(spec.discsp.p1) && Probability(spec.discsp.p2),
            "p1 and p2 must lie in [0, 1]");
  } else if (spec.family == Family::kScaleFree) {
    const auto& p = spec.scale_free;
    Require(p.m >= 1 && p.m <= p.m0 && p.m0 <= p.n, "scale-free graphs need 1 <= m <= m0 <= n");
  } else {
    Require(Probability(spec.game.edge_probability), "edge probability must lie in [0, 1]");
  }
}

Instance Generate(const GeneratorSpec& spec, std::uint64_t seed) {
  ValidateSpec(spec);
  switch (spec.family) {
    case Family::kMaxDiscsp: return GenMaxDiscsp(spec.discsp, seed);
    case Family::kGame: return GenGraphicalGame(spec.game, seed);
    case Family::kScaleFree: return GenScaleFree(spec.scale_free, seed);
  }
  return {};
}

}  // namespace adcop
