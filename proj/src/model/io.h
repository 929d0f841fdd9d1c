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

#ifndef ADCOP_MODEL_IO_H_
#define ADCOP_MODEL_IO_H_

#include <iosfwd>
#include <string>
#include <string_view>

#include "model/instance.h"

namespace adcop {

// Line-oriented instance format.
//
//   adcop <n> <k>              (or `dcop` for a symmetric instance)
//   alphabet <c1> <c2> ...     (optional cost alphabet)
//   var <id> <owner> <domain-size>
//   con <i> <j>
//   <|D_i| rows of |D_j| integers>   side of var i's owner (asymmetric only)
//   <|D_i| rows of |D_j| integers>   side of var j's owner, or the shared table
//
// Ids and owners are 1-based. Blank lines and `#` comments are ignored.
// Parse failures raise ErrorCode::kParse with the offending line number.
Instance ParseInstance(std::string_view text);
Instance ReadInstanceFile(const std::string& path);

// Only binary constraints can be written; n-ary ones raise kInvalidArgument.
std::string FormatInstance(const Instance& instance);
void WriteInstanceFile(const Instance& instance, const std::string& path);

}  // namespace adcop

#endif  // ADCOP_MODEL_IO_H_
