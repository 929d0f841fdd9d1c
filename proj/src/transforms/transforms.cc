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

#include "transforms/transforms.h"

#include <map>
#include <string>

#include "common/error.h"

namespace adcop {
namespace {

void RequireBinaryAsymmetric(const Instance& instance, const char* op) {
  if (instance.symmetric() || !instance.all_binary()) {
    Fail(ErrorCode::kPrecondition, std::string(op) + " requires a binary asymmetric instance");
  }
}

CostTable EqualityTable(int size, Cost penalty) {
  CostTable t(size, size, penalty);
  for (int d = 0; d < size; ++d) t(d, d) = 0;
  return t;
}

}  // namespace

Assignment PeavInstance::Lift(std::span<const int> original) const {
  Assignment out(represents.size());
  for (std::size_t v = 0; v < represents.size(); ++v) out[v] = original[represents[v]];
  return out;
}

Assignment PeavInstance::Project(std::span<const int> peav) const {
  Assignment out(original_var.size());
  for (std::size_t v = 0; v < original_var.size(); ++v) out[v] = peav[original_var[v]];
  return out;
}

bool PeavInstance::Consistent(std::span<const int> peav) const {
  for (std::size_t v = 0; v < represents.size(); ++v) {
    if (peav[v] != peav[original_var[represents[v]]]) return false;
  }
  return true;
}

Cost DefaultPenalty(const Instance& instance) {
  Cost total = 1;
  for (const auto& c : instance.constraints()) {
    for (const auto& side : c.sides) total += side.Max();
  }
  return total;
}

PeavInstance ToPeav(const Instance& instance, Cost penalty) {
  RequireBinaryAsymmetric(instance, "PEAV");
  if (penalty < DefaultPenalty(instance)) {
    Fail(ErrorCode::kUnsoundPenalty,
         "penalty " + std::to_string(penalty) +
             " does not exceed the sum of maximal side costs (" +
             std::to_string(DefaultPenalty(instance) - 1) + ")");
  }
  const int n_vars = instance.num_variables();

  // Variables are grouped by owner: each original followed by the mirrors
  // its agent keeps of its neighbors' variables, in constraint order.
  PeavInstance out;
  out.penalty = penalty;
  out.original_var.assign(n_vars, -1);
  std::vector<Variable> variables;
  std::map<std::pair<int, int>, int> mirror_of;  // (holder var, mirrored var)
  for (int agent = 0; agent < instance.num_agents(); ++agent) {
    for (int v : instance.variables_of_agent(agent)) {
      out.original_var[v] = static_cast<int>(variables.size());
      variables.push_back(instance.variable(v));
      out.represents.push_back(v);
      out.is_mirror.push_back(false);
      for (int ci : instance.constraints_of_variable(v)) {
        const auto& c = instance.constraint(ci);
        const int other = c.scope[0] == v ? c.scope[1] : c.scope[0];
        if (mirror_of.contains({v, other})) continue;
        mirror_of[{v, other}] = static_cast<int>(variables.size());
        variables.push_back(Variable{agent, instance.domain_size(other)});
        out.represents.push_back(other);
        out.is_mirror.push_back(true);
      }
    }
  }

  std::vector<Constraint> constraints;
  for (const auto& c : instance.constraints()) {
    const int vi = c.scope[0], vj = c.scope[1];
    const int xi = out.original_var[vi], xj = out.original_var[vj];
    const int mj_at_i = mirror_of.at({vi, vj});  // i's copy of x_j
    const int mi_at_j = mirror_of.at({vj, vi});  // j's copy of x_i
    // Each agent's side, evaluated on its local view.
    constraints.push_back(Constraint{{xi, mj_at_i}, {c.sides[0]}});
    constraints.push_back(Constraint{{mi_at_j, xj}, {c.sides[1]}});
    constraints.push_back(
        Constraint{{xj, mj_at_i}, {EqualityTable(instance.domain_size(vj), penalty)}});
    constraints.push_back(
        Constraint{{xi, mi_at_j}, {EqualityTable(instance.domain_size(vi), penalty)}});
  }
  std::vector<Cost> alphabet = instance.cost_alphabet();
  if (!constraints.empty()) alphabet.push_back(penalty);
  out.dcop = Instance(Instance::Kind::kSymmetric, instance.num_agents(),
                      std::move(variables), std::move(constraints), std::move(alphabet));
  return out;
}

PeavSizeReport PeavSize(const Instance& instance) {
  RequireBinaryAsymmetric(instance, "PEAV");
  PeavSizeReport r;
  const int edges = instance.num_constraints();
  r.variable_count = instance.num_variables() + 2 * edges;
  r.constraint_count = 4 * edges;
  const double pairs = 0.5 * r.variable_count * (r.variable_count - 1.0);
  r.density = pairs > 0 ? r.constraint_count / pairs : 0.0;
  return r;
}

Instance AggregateSymmetric(const Instance& instance) {
  if (instance.symmetric()) return instance;
  std::vector<Constraint> constraints;
  constraints.reserve(instance.num_constraints());
  for (const auto& c : instance.constraints()) {
    CostTable sum = c.sides[0];
    for (std::size_t s = 1; s < c.sides.size(); ++s) {
      auto src = c.sides[s].cells();
      auto dst = sum.cells();
      for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += src[i];
    }
    constraints.push_back(Constraint{c.scope, {std::move(sum)}});
  }
  return Instance(Instance::Kind::kSymmetric, instance.num_agents(), instance.variables(),
                  std::move(constraints));
}

bool UnaryDecompositionExists(const Constraint& constraint) {
  if (!constraint.binary() || constraint.sides.size() != 2) {
    Fail(ErrorCode::kPrecondition, "decomposition check needs a binary asymmetric constraint");
  }
  const auto& si = constraint.sides[0];
  const auto& sj = constraint.sides[1];
  auto diff = [&](int a, int b) { return si(a, b) - sj(a, b); };
  for (int a = 0; a < si.rows(); ++a) {
    for (int b = 0; b < si.cols(); ++b) {
      if (diff(a, b) - diff(a, 0) - diff(0, b) + diff(0, 0) != 0) return false;
    }
  }
  return true;
}

}  // namespace adcop
