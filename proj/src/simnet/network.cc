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

#include "simnet/network.h"

namespace adcop {

const char* MsgTypeName(MsgType type) {
  static constexpr const char* kNames[kNumMsgTypes] = {
      "CPA_MSG", "CPA_BACK_MSG", "NEW_SOLUTION", "TERMINATE", "BOUND_CPA", "ESTIMATE",
      "VALUE",   "LR",           "PROPOSAL",     "IMPACT",    "TRANSFER",  "OFFER",
      "RESPONSE", "CONFIRM",     "FUNC_MSG",     "VAR_MSG"};
  return kNames[static_cast<int>(type)];
}

const char* PolicyName(OrderPolicy policy) {
  return policy == OrderPolicy::kFifo ? "fifo" : "shuffle";
}

OrderPolicy ParsePolicy(const std::string& name) {
  if (name == "fifo") return OrderPolicy::kFifo;
  if (name == "shuffle") return OrderPolicy::kShuffle;
  Fail(ErrorCode::kConfig, "unknown message order policy '" + name + "'");
}

}  // namespace adcop
