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

#ifndef ADCOP_COMMON_ERROR_H_
#define ADCOP_COMMON_ERROR_H_

#include <stdexcept>
#include <string>

namespace adcop {

enum class ErrorCode {
  kInvalidArgument,
  kDomain,
  kNotFound,
  kPrecondition,
  kParse,
  kIo,
  kCapExceeded,
  kProtocol,
  kRouting,
  kUnsoundPenalty,
  kConfig,
  kUnknownAlgorithm,
};

// All failures raised by the library carry one of the codes above; the C API
// maps them onto adcop_status values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void Fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace adcop

#endif  // ADCOP_COMMON_ERROR_H_
