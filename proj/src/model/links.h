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

#ifndef ADCOP_MODEL_LINKS_H_
#define ADCOP_MODEL_LINKS_H_

#include <vector>

#include "model/instance.h"

namespace adcop {

// One binary constraint as seen from one of its variables: the table that
// variable's owner holds (its own side, or the shared table), read with the
// own value first.
struct Link {
  int other = 0;       // the other variable
  int constraint = 0;
  int side = 0;        // scope position of the viewing variable
  bool own_is_row = true;
  const CostTable* table = nullptr;

  int Cell(int own, int other_value) const {
    return own_is_row ? own * table->cols() + other_value
                      : other_value * table->cols() + own;
  }
  Cost At(int own, int other_value) const { return table->cells()[Cell(own, other_value)]; }
};

// Links per variable, in constraint order. Requires a binary instance.
inline std::vector<std::vector<Link>> BuildLinks(const Instance& instance) {
  std::vector<std::vector<Link>> links(instance.num_variables());
  for (int c = 0; c < instance.num_constraints(); ++c) {
    const auto& con = instance.constraint(c);
    for (int s = 0; s < 2; ++s) {
      Link l;
      l.other = con.scope[1 - s];
      l.constraint = c;
      l.side = s;
      l.own_is_row = s == 0;
      l.table = &con.sides[instance.symmetric() ? 0 : s];
      links[con.scope[s]].push_back(l);
    }
  }
  return links;
}

}  // namespace adcop

#endif  // ADCOP_MODEL_LINKS_H_
