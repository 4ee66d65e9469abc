// Copyright 2026 The Cutlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CUTLAB_ERROR_H_
#define CUTLAB_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace cutlab {

enum class ErrorCode {
  kInvalidArgument,
  kNoFiniteCut,
  kDisconnectedComponent,
  kInstanceTooLarge,
  kInfeasible,
  kNotPlanar,
  kArithmeticBoundExceeded,
  kLpInfeasible,
  kLpUnbounded,
  kIterationLimit,
  kScaleTooSmall,
  kOddOrder,
  kSizeBoundExceeded,
  kParseError,
  kSchemaError,
  kBoundsError,
  kInvalidParams,
};

std::string_view error_code_name(ErrorCode code);

// Every failure raised by the library carries one of the codes above; callers
// that need to distinguish (the CLI, the reductions) switch on `code()`.
class CutError : public std::runtime_error {
 public:
  CutError(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " +
                           message),
        code_(code),
        detail_(message) {}

  ErrorCode code() const { return code_; }
  // The message without the code prefix.
  const std::string& detail() const { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace cutlab

#endif  // CUTLAB_ERROR_H_
