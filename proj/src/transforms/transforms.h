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

#ifndef ADCOP_TRANSFORMS_TRANSFORMS_H_
#define ADCOP_TRANSFORMS_TRANSFORMS_H_

#include <vector>

#include "model/instance.h"

namespace adcop {

// Symmetric reformulation with one mirror variable per (agent, neighbor)
// and equality constraints carrying `penalty` per disagreement.
struct PeavInstance {
  Instance dcop;
  Cost penalty = 0;
  // PEAV variable holding each original variable.
  std::vector<int> original_var;
  // For every PEAV variable, the original variable it stands for (itself
  // for originals, the mirrored variable for mirrors).
  std::vector<int> represents;
  std::vector<bool> is_mirror;

  // Consistent PEAV assignment induced by an original assignment.
  Assignment Lift(std::span<const int> original) const;
  // Original assignment read off the original (non-mirror) variables.
  Assignment Project(std::span<const int> peav) const;
  // True when every mirror agrees with the variable it mirrors.
  bool Consistent(std::span<const int> peav) const;
};

struct PeavSizeReport {
  int variable_count = 0;
  int constraint_count = 0;
  double density = 0;  // constraints over variable pairs
};

// 1 + sum over constraints of each side's maximum entry.
Cost DefaultPenalty(const Instance& instance);

// Requires a binary asymmetric instance. A penalty not exceeding the sum of
// maximal side costs is rejected with kUnsoundPenalty.
PeavInstance ToPeav(const Instance& instance, Cost penalty);
inline PeavInstance ToPeav(const Instance& instance) {
  return ToPeav(instance, DefaultPenalty(instance));
}

PeavSizeReport PeavSize(const Instance& instance);

// Symmetric instance whose tables are the pointwise sum of all sides.
Instance AggregateSymmetric(const Instance& instance);

// Whether the binary asymmetric constraint splits into per-agent unary
// tables plus one shared binary table. Holds iff side_i - side_j separates
// as f(d_i) - g(d_j).
bool UnaryDecompositionExists(const Constraint& constraint);

}  // namespace adcop

#endif  // ADCOP_TRANSFORMS_TRANSFORMS_H_
