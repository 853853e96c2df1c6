// Copyright 2026 The certlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "certlab/error.h"

namespace certlab {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
    case ErrorCode::kSizeLimit:
      return "SizeLimit";
    case ErrorCode::kZeroCoefficient:
      return "ZeroCoefficient";
    case ErrorCode::kEmptySamples:
      return "EmptySamples";
    case ErrorCode::kDimensionMismatch:
      return "DimensionMismatch";
    case ErrorCode::kOddRoot:
      return "OddRoot";
    case ErrorCode::kSetTooSmall:
      return "SetTooSmall";
    case ErrorCode::kBudgetExceeded:
      return "BudgetExceeded";
    case ErrorCode::kBadOffset:
      return "BadOffset";
    case ErrorCode::kEmptyDistribution:
      return "EmptyDistribution";
    case ErrorCode::kBudgetZero:
      return "BudgetZero";
    case ErrorCode::kLengthMismatch:
      return "LengthMismatch";
    case ErrorCode::kDeviceFailure:
      return "DeviceFailure";
    case ErrorCode::kFormat:
      return "Format";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
      code_(code) {}

}  // namespace certlab
