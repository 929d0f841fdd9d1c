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

#ifndef ADCOP_MODEL_INSTANCE_H_
#define ADCOP_MODEL_INSTANCE_H_

#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

namespace adcop {

// Costs are exact integers; every generator and the text format emit integer
// tables, so sums never drift.
using Cost = std::int64_t;
inline constexpr Cost kInfiniteCost = std::numeric_limits<Cost>::max();

// Zero-based agent index. A_1 in the literature is AgentId{0}; the text
// format and reports use 1-based numbering.
struct AgentId {
  int index = 0;
  friend auto operator<=>(const AgentId&, const AgentId&) = default;
};

// Value index per variable, total over all variables.
using Assignment = std::vector<int>;

// Ordered (variable, value) pairs.
class PartialAssignment {
 public:
  PartialAssignment() = default;
  PartialAssignment(std::initializer_list<std::pair<int, int>> pairs);

  // Fails with kPrecondition when the variable is already assigned.
  void Assign(int variable, int value);
  // Value of `variable`, or -1 when unassigned.
  int ValueOf(int variable) const;
  std::size_t size() const { return pairs_.size(); }
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }

 private:
  std::vector<std::pair<int, int>> pairs_;
};

// Dense row-major table over the cross product of the scope domains.
class CostTable {
 public:
  CostTable() = default;
  explicit CostTable(std::vector<int> dims, Cost fill = 0);
  CostTable(int rows, int cols, Cost fill = 0)
      : CostTable(std::vector<int>{rows, cols}, fill) {}

  const std::vector<int>& dims() const { return dims_; }
  int rows() const { return dims_[0]; }
  int cols() const { return dims_.size() > 1 ? dims_[1] : 1; }
  std::size_t size() const { return cells_.size(); }

  std::size_t Offset(std::span<const int> values) const;
  Cost At(std::span<const int> values) const { return cells_[Offset(values)]; }

  Cost operator()(int row, int col) const {
    return cells_[static_cast<std::size_t>(row) * dims_[1] + col];
  }
  Cost& operator()(int row, int col) {
    return cells_[static_cast<std::size_t>(row) * dims_[1] + col];
  }

  std::span<const Cost> cells() const { return cells_; }
  std::span<Cost> cells() { return cells_; }
  Cost Max() const;
  // Binary tables only.
  CostTable Transposed() const;

  friend bool operator==(const CostTable&, const CostTable&) = default;

 private:
  std::vector<int> dims_;
  std::vector<Cost> cells_;
};

struct Variable {
  int owner = 0;  // agent index
  int domain_size = 1;
  friend bool operator==(const Variable&, const Variable&) = default;
};

// A constraint over `scope` (variable indices). Asymmetric constraints hold
// one side per scope position, owned by that variable's agent; symmetric
// constraints hold a single shared table.
struct Constraint {
  std::vector<int> scope;
  std::vector<CostTable> sides;

  bool binary() const { return scope.size() == 2; }
  friend bool operator==(const Constraint&, const Constraint&) = default;
};

class Instance {
 public:
  enum class Kind { kAsymmetric, kSymmetric };

  Instance() = default;
  // Validates every structural invariant; fails with kInvalidArgument.
  // An empty alphabet is replaced by the distinct costs in the tables.
  Instance(Kind kind, int num_agents, std::vector<Variable> variables,
           std::vector<Constraint> constraints,
           std::vector<Cost> cost_alphabet = {});

  Kind kind() const { return kind_; }
  bool symmetric() const { return kind_ == Kind::kSymmetric; }
  int num_agents() const { return num_agents_; }
  int num_variables() const { return static_cast<int>(variables_.size()); }
  const Variable& variable(int v) const { return variables_[v]; }
  const std::vector<Variable>& variables() const { return variables_; }
  int domain_size(int v) const { return variables_[v].domain_size; }
  int max_domain_size() const;

  const std::vector<Constraint>& constraints() const { return constraints_; }
  const Constraint& constraint(int c) const { return constraints_[c]; }
  int num_constraints() const { return static_cast<int>(constraints_.size()); }
  const std::vector<Cost>& cost_alphabet() const { return alphabet_; }

  // Constraint indices whose scope contains the variable / an agent's
  // variable.
  const std::vector<int>& constraints_of_variable(int v) const {
    return by_variable_[v];
  }
  const std::vector<int>& constraints_of_agent(int agent) const {
    return by_agent_[agent];
  }
  const std::vector<int>& variables_of_agent(int agent) const {
    return vars_of_agent_[agent];
  }

  // Agent owning side `side` of constraint `c` (asymmetric instances).
  int SideOwner(int c, int side) const {
    return variables_[constraints_[c].scope[side]].owner;
  }

  // True when variable i is the only variable of agent i for every i, which
  // is the shape every asymmetric solver requires.
  bool one_variable_per_agent() const;
  bool all_binary() const;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  void Validate() const;
  void BuildIndex();

  Kind kind_ = Kind::kAsymmetric;
  int num_agents_ = 0;
  std::vector<Variable> variables_;
  std::vector<Constraint> constraints_;
  std::vector<Cost> alphabet_;
  std::vector<std::vector<int>> by_variable_;
  std::vector<std::vector<int>> by_agent_;
  std::vector<std::vector<int>> vars_of_agent_;
};

// Sum over all constraints of all sides (asymmetric) or the shared table
// (symmetric). Fails with kDomain on a malformed assignment.
Cost EvaluateGlobal(const Instance& instance, std::span<const int> assignment);

// Cost perceived by `agent`: its own sides (asymmetric) or the shared tables
// of its constraints (symmetric). Fails with kNotFound for unknown agents.
Cost EvaluateAgent(const Instance& instance, AgentId agent,
                   std::span<const int> assignment);

// Entry of `side_agent`'s table at the scope combination in `pa`.
Cost SideCost(const Instance& instance, int constraint, AgentId side_agent,
              const PartialAssignment& pa);

// Change of EvaluateGlobal when `variable` switches to `value`.
Cost GlobalDelta(const Instance& instance, std::span<const int> assignment,
                 int variable, int value);
// Change of the owning agent's EvaluateAgent for the same move.
Cost AgentDelta(const Instance& instance, std::span<const int> assignment,
                int variable, int value);

// No single-variable replacement strictly lowers the global cost.
bool IsLocalOptimum(const Instance& instance, std::span<const int> assignment);
// No single-variable replacement strictly lowers its owner's own cost.
bool IsNashStable(const Instance& instance, std::span<const int> assignment);

// Agents sharing at least one constraint with `agent`, ascending.
std::vector<AgentId> Neighbors(const Instance& instance, AgentId agent);

// Number of distinct unordered agent pairs joined by a constraint.
int CountEdges(const Instance& instance);

}  // namespace adcop

#endif  // ADCOP_MODEL_INSTANCE_H_
