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

#include "model/instance.h"

#include <algorithm>
#include <set>
#include <string>

#include "common/error.h"

namespace adcop {

PartialAssignment::PartialAssignment(
    std::initializer_list<std::pair<int, int>> pairs) {
  for (const auto& [var, value] : pairs) Assign(var, value);
}

void PartialAssignment::Assign(int variable, int value) {
  if (ValueOf(variable) >= 0) {
    Fail(ErrorCode::kPrecondition,
         "variable " + std::to_string(variable + 1) + " assigned twice");
  }
  pairs_.emplace_back(variable, value);
}

int PartialAssignment::ValueOf(int variable) const {
  for (const auto& [var, value] : pairs_) {
    if (var == variable) return value;
  }
  return -1;
}

CostTable::CostTable(std::vector<int> dims, Cost fill) : dims_(std::move(dims)) {
  std::size_t n = 1;
  for (int d : dims_) {
    if (d < 1) Fail(ErrorCode::kInvalidArgument, "table dimension < 1");
    n *= static_cast<std::size_t>(d);
  }
  cells_.assign(n, fill);
}

std::size_t CostTable::Offset(std::span<const int> values) const {
  std::size_t offset = 0;
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    offset = offset * dims_[i] + values[i];
  }
  return offset;
}

Cost CostTable::Max() const {
  return cells_.empty() ? 0 : *std::max_element(cells_.begin(), cells_.end());
}

CostTable CostTable::Transposed() const {
  CostTable t(cols(), rows());
  for (int r = 0; r < rows(); ++r) {
    for (int c = 0; c < cols(); ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Instance::Instance(Kind kind, int num_agents, std::vector<Variable> variables,
                   std::vector<Constraint> constraints,
                   std::vector<Cost> cost_alphabet)
    : kind_(kind),
      num_agents_(num_agents),
      variables_(std::move(variables)),
      constraints_(std::move(constraints)),
      alphabet_(std::move(cost_alphabet)) {
  Validate();
  if (alphabet_.empty()) {
    std::set<Cost> seen;
    for (const auto& c : constraints_) {
      for (const auto& side : c.sides) seen.insert(side.cells().begin(), side.cells().end());
    }
    if (seen.empty()) seen.insert(0);
    alphabet_.assign(seen.begin(), seen.end());
  } else {
    std::sort(alphabet_.begin(), alphabet_.end());
    alphabet_.erase(std::unique(alphabet_.begin(), alphabet_.end()), alphabet_.end());
  }
  BuildIndex();
}

void Instance::Validate() const {
  auto bad = [](const std::string& what) { Fail(ErrorCode::kInvalidArgument, what); };
  if (num_agents_ < 0) bad("negative agent count");
  std::vector<int> owned(num_agents_, 0);
  for (std::size_t v = 0; v < variables_.size(); ++v) {
    const auto& var = variables_[v];
    if (var.owner < 0 || var.owner >= num_agents_) {
      bad("variable " + std::to_string(v + 1) + " has unknown owner");
    }
    if (var.domain_size < 1) bad("variable " + std::to_string(v + 1) + " has empty domain");
    ++owned[var.owner];
  }
  std::set<std::pair<int, int>> agent_pairs;
  for (std::size_t ci = 0; ci < constraints_.size(); ++ci) {
    const auto& c = constraints_[ci];
    const std::string tag = "constraint " + std::to_string(ci + 1);
    if (c.scope.empty()) bad(tag + " has an empty scope");
    std::vector<int> dims;
    for (int v : c.scope) {
      if (v < 0 || v >= num_variables()) bad(tag + " references an undeclared variable");
      dims.push_back(variables_[v].domain_size);
    }
    std::set<int> distinct(c.scope.begin(), c.scope.end());
    if (distinct.size() != c.scope.size()) bad(tag + " repeats a variable");
    const std::size_t expected_sides = symmetric() ? 1 : c.scope.size();
    if (c.sides.size() != expected_sides) bad(tag + " has the wrong number of sides");
    for (const auto& side : c.sides) {
      if (side.dims() != dims) bad(tag + " has a table that does not match its scope");
      for (Cost x : side.cells()) {
        if (x < 0) bad(tag + " has a negative cost");
      }
    }
    if (!symmetric()) {
      std::set<int> owners;
      for (int v : c.scope) owners.insert(variables_[v].owner);
      if (owners.size() != c.scope.size()) bad(tag + " has two sides owned by one agent");
      if (c.binary()) {
        int a = variables_[c.scope[0]].owner, b = variables_[c.scope[1]].owner;
        if (!agent_pairs.insert(std::minmax(a, b)).second) {
          bad(tag + " duplicates an agent pair");
        }
      }
    }
  }
}

void Instance::BuildIndex() {
  by_variable_.assign(variables_.size(), {});
  by_agent_.assign(num_agents_, {});
  vars_of_agent_.assign(num_agents_, {});
  for (int v = 0; v < num_variables(); ++v) vars_of_agent_[variables_[v].owner].push_back(v);
  for (int ci = 0; ci < num_constraints(); ++ci) {
    std::set<int> agents;
    for (int v : constraints_[ci].scope) {
      by_variable_[v].push_back(ci);
      agents.insert(variables_[v].owner);
    }
    for (int a : agents) by_agent_[a].push_back(ci);
  }
}

int Instance::max_domain_size() const {
  int k = 0;
  for (const auto& v : variables_) k = std::max(k, v.domain_size);
  return k;
}

bool Instance::one_variable_per_agent() const {
  if (num_variables() != num_agents_) return false;
  for (int v = 0; v < num_variables(); ++v) {
    if (variables_[v].owner != v) return false;
  }
  return true;
}

bool Instance::all_binary() const {
  return std::all_of(constraints_.begin(), constraints_.end(),
                     [](const Constraint& c) { return c.binary(); });
}

namespace {

void CheckAssignment(const Instance& instance, std::span<const int> a) {
  if (static_cast<int>(a.size()) != instance.num_variables()) {
    Fail(ErrorCode::kDomain, "assignment size " + std::to_string(a.size()) +
                                 " != variable count " +
                                 std::to_string(instance.num_variables()));
  }
  for (int v = 0; v < instance.num_variables(); ++v) {
    if (a[v] < 0 || a[v] >= instance.domain_size(v)) {
      Fail(ErrorCode::kDomain, "value " + std::to_string(a[v]) +
                                   " outside the domain of variable " +
                                   std::to_string(v + 1));
    }
  }
}

// Scope values of constraint `c` under `a`, with `variable` overridden.
template <std::size_t N = 8>
Cost ConstraintTotal(const Instance& instance, const Constraint& c,
                     std::span<const int> a, int variable, int value) {
  int buffer[N];
  std::vector<int> heap;
  int* values = buffer;
  if (c.scope.size() > N) {
    heap.resize(c.scope.size());
    values = heap.data();
  }
  for (std::size_t i = 0; i < c.scope.size(); ++i) {
    values[i] = c.scope[i] == variable ? value : a[c.scope[i]];
  }
  std::span<const int> view(values, c.scope.size());
  Cost total = 0;
  for (const auto& side : c.sides) total += side.At(view);
  (void)instance;
  return total;
}

Cost OwnSideCost(const Instance& instance, const Constraint& c, int agent,
                 std::span<const int> a, int variable, int value) {
  std::vector<int> values(c.scope.size());
  for (std::size_t i = 0; i < c.scope.size(); ++i) {
    values[i] = c.scope[i] == variable ? value : a[c.scope[i]];
  }
  if (instance.symmetric()) return c.sides[0].At(values);
  Cost total = 0;
  for (std::size_t s = 0; s < c.scope.size(); ++s) {
    if (instance.variable(c.scope[s]).owner == agent) total += c.sides[s].At(values);
  }
  return total;
}

}  // namespace

Cost EvaluateGlobal(const Instance& instance, std::span<const int> assignment) {
  CheckAssignment(instance, assignment);
  Cost total = 0;
  for (const auto& c : instance.constraints()) {
    total += ConstraintTotal(instance, c, assignment, -1, 0);
  }
  return total;
}

Cost EvaluateAgent(const Instance& instance, AgentId agent,
                   std::span<const int> assignment) {
  if (agent.index < 0 || agent.index >= instance.num_agents()) {
    Fail(ErrorCode::kNotFound, "unknown agent " + std::to_string(agent.index + 1));
  }
  CheckAssignment(instance, assignment);
  Cost total = 0;
  for (int ci : instance.constraints_of_agent(agent.index)) {
    total += OwnSideCost(instance, instance.constraint(ci), agent.index,
                         assignment, -1, 0);
  }
  return total;
}

Cost SideCost(const Instance& instance, int constraint, AgentId side_agent,
              const PartialAssignment& pa) {
  if (constraint < 0 || constraint >= instance.num_constraints()) {
    Fail(ErrorCode::kNotFound, "unknown constraint");
  }
  const auto& c = instance.constraint(constraint);
  std::vector<int> values;
  for (int v : c.scope) {
    int value = pa.ValueOf(v);
    if (value < 0) {
      Fail(ErrorCode::kPrecondition, "partial assignment misses variable " +
                                         std::to_string(v + 1) + " of the scope");
    }
    if (value >= instance.domain_size(v)) Fail(ErrorCode::kDomain, "value outside domain");
    values.push_back(value);
  }
  if (instance.symmetric()) return c.sides[0].At(values);
  for (std::size_t s = 0; s < c.scope.size(); ++s) {
    if (instance.variable(c.scope[s]).owner == side_agent.index) {
      return c.sides[s].At(values);
    }
  }
  Fail(ErrorCode::kNotFound, "agent " + std::to_string(side_agent.index + 1) +
                                 " holds no side of this constraint");
}

Cost GlobalDelta(const Instance& instance, std::span<const int> assignment,
                 int variable, int value) {
  Cost delta = 0;
  const int current = assignment[variable];
  for (int ci : instance.constraints_of_variable(variable)) {
    const auto& c = instance.constraint(ci);
    delta += ConstraintTotal(instance, c, assignment, variable, value) -
             ConstraintTotal(instance, c, assignment, variable, current);
  }
  return delta;
}

Cost AgentDelta(const Instance& instance, std::span<const int> assignment,
                int variable, int value) {
  const int agent = instance.variable(variable).owner;
  const int current = assignment[variable];
  Cost delta = 0;
  for (int ci : instance.constraints_of_variable(variable)) {
    const auto& c = instance.constraint(ci);
    delta += OwnSideCost(instance, c, agent, assignment, variable, value) -
             OwnSideCost(instance, c, agent, assignment, variable, current);
  }
  return delta;
}

bool IsLocalOptimum(const Instance& instance, std::span<const int> assignment) {
  CheckAssignment(instance, assignment);
  for (int v = 0; v < instance.num_variables(); ++v) {
    for (int d = 0; d < instance.domain_size(v); ++d) {
      if (d != assignment[v] && GlobalDelta(instance, assignment, v, d) < 0) return false;
    }
  }
  return true;
}

bool IsNashStable(const Instance& instance, std::span<const int> assignment) {
  CheckAssignment(instance, assignment);
  for (int v = 0; v < instance.num_variables(); ++v) {
    for (int d = 0; d < instance.domain_size(v); ++d) {
      if (d != assignment[v] && AgentDelta(instance, assignment, v, d) < 0) return false;
    }
  }
  return true;
}

std::vector<AgentId> Neighbors(const Instance& instance, AgentId agent) {
  if (agent.index < 0 || agent.index >= instance.num_agents()) {
    Fail(ErrorCode::kNotFound, "unknown agent " + std::to_string(agent.index + 1));
  }
  std::set<int> out;
  for (int ci : instance.constraints_of_agent(agent.index)) {
    for (int v : instance.constraint(ci).scope) {
      int owner = instance.variable(v).owner;
      if (owner != agent.index) out.insert(owner);
    }
  }
  std::vector<AgentId> result;
  for (int a : out) result.push_back(AgentId{a});
  return result;
}

int CountEdges(const Instance& instance) {
  std::set<std::pair<int, int>> pairs;
  for (const auto& c : instance.constraints()) {
    for (std::size_t i = 0; i < c.scope.size(); ++i) {
      for (std::size_t j = i + 1; j < c.scope.size(); ++j) {
        int a = instance.variable(c.scope[i]).owner;
        int b = instance.variable(c.scope[j]).owner;
        if (a != b) pairs.insert(std::minmax(a, b));
      }
    }
  }
  return static_cast<int>(pairs.size());
}

}  // namespace adcop
