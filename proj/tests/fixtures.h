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

#ifndef ADCOP_TESTS_FIXTURES_H_
#define ADCOP_TESTS_FIXTURES_H_

#include <initializer_list>
#include <utility>
#include <vector>

#include "model/instance.h"

namespace adcop::testing {

// Row-major 2x2 or kxk table from a flat list.
inline CostTable Table(int rows, int cols, std::initializer_list<Cost> cells) {
  CostTable t(rows, cols);
  auto it = cells.begin();
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) t(r, c) = *it++;
  }
  return t;
}

struct Edge {
  int i;
  int j;
  CostTable side_i;  // indexed (value of i, value of j)
  CostTable side_j;  // same orientation
};

inline Instance Asymmetric(int n, int k, std::vector<Edge> edges, std::vector<Cost> alphabet = {}) {
  std::vector<Variable> vars(n);
  for (int a = 0; a < n; ++a) vars[a] = Variable{a, k};
  std::vector<Constraint> cons;
  for (auto& e : edges) cons.push_back(Constraint{{e.i, e.j}, {e.side_i, e.side_j}});
  return Instance(Instance::Kind::kAsymmetric, n, vars, cons, std::move(alphabet));
}

inline Instance Symmetric(int n, int k, std::vector<std::pair<std::pair<int, int>, CostTable>> edges) {
  std::vector<Variable> vars(n);
  for (int a = 0; a < n; ++a) vars[a] = Variable{a, k};
  std::vector<Constraint> cons;
  for (auto& [scope, t] : edges) cons.push_back(Constraint{{scope.first, scope.second}, {t}});
  return Instance(Instance::Kind::kSymmetric, n, vars, cons);
}

// Two agents, values a/b for A_1 and x/y for A_2. Cells quoted in the text:
// A_1 (a,x)=3 (a,y)=6 (b,x)=7; A_2 (a,x)=4 (b,x)=2 (b,y)=8. The two
// remaining cells, A_1 (b,y)=9 and A_2 (a,y)=1, are fixture choices.
inline Instance PairExample() {
  return Asymmetric(2, 2, {{0, 1, Table(2, 2, {3, 6, 7, 9}), Table(2, 2, {4, 1, 2, 8})}});
}

// Three agents with values a/b, x/y, i/j. One-sided search settles on
// (a,y,j) claiming 2 while its real cost is 12; the optimum is (b,x,i) at 11.
// A_1 taking b with A_2 at y costs 13 once back-checked.
inline Instance TriangleExample() {
  return Asymmetric(3, 2,
                    {{0, 1, Table(2, 2, {4, 6, 2, 5}), Table(2, 2, {5, 1, 3, 8})},
                     {0, 2, Table(2, 2, {2, 3, 2, 3}), Table(2, 2, {3, 0, 1, 4})},
                     {1, 2, Table(2, 2, {2, 0, 2, 1}), Table(2, 2, {1, 2, 1, 1})}});
}

}  // namespace adcop::testing

#endif  // ADCOP_TESTS_FIXTURES_H_
