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

#ifndef CERTLAB_ERROR_H_
#define CERTLAB_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace certlab {

enum class ErrorCode {
  kInvalidArgument,
  kSizeLimit,
  kZeroCoefficient,
  kEmptySamples,
  kDimensionMismatch,
  kOddRoot,
  kSetTooSmall,
  kBudgetExceeded,
  kBadOffset,
  kEmptyDistribution,
  kBudgetZero,
  kLengthMismatch,
  kDeviceFailure,
  kFormat,
};

std::string_view error_code_name(ErrorCode code);

// All library failures are reported by throwing Error; the code identifies
// which precondition was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace certlab

#endif  // CERTLAB_ERROR_H_
