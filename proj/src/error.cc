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

#include "cutlab/error.h"

namespace cutlab {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kNoFiniteCut: return "NoFiniteCut";
    case ErrorCode::kDisconnectedComponent: return "DisconnectedComponent";
    case ErrorCode::kInstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::kInfeasible: return "Infeasible";
    case ErrorCode::kNotPlanar: return "NotPlanar";
    case ErrorCode::kArithmeticBoundExceeded: return "ArithmeticBoundExceeded";
    case ErrorCode::kLpInfeasible: return "LpInfeasible";
    case ErrorCode::kLpUnbounded: return "LpUnbounded";
    case ErrorCode::kIterationLimit: return "IterationLimit";
    case ErrorCode::kScaleTooSmall: return "ScaleTooSmall";
    case ErrorCode::kOddOrder: return "OddOrder";
    case ErrorCode::kSizeBoundExceeded: return "SizeBoundExceeded";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kSchemaError: return "SchemaError";
    case ErrorCode::kBoundsError: return "BoundsError";
    case ErrorCode::kInvalidParams: return "InvalidParams";
  }
  return "Unknown";
}

}  // namespace cutlab
