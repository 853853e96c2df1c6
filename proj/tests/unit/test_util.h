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

#ifndef CERTLAB_TESTS_UNIT_TEST_UTIL_H_
#define CERTLAB_TESTS_UNIT_TEST_UTIL_H_

#include <cstdint>
#include <vector>

#include "certlab/boolfn.h"
#include "certlab/error.h"
#include "gtest/gtest.h"

namespace certlab::test_util {

// The code of the certlab::Error thrown by fn, or a test failure.
template <class Fn>
ErrorCode error_code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no certlab::Error thrown";
  return ErrorCode::kInvalidArgument;
}

inline BooleanFunction from_signs(int n, const std::vector<int>& signs) {
  return BooleanFunction(n, std::vector<std::int8_t>(signs.begin(), signs.end()));
}

inline std::vector<int> to_ints(const BooleanFunction& f) {
  return std::vector<int>(f.values().begin(), f.values().end());
}

}  // namespace certlab::test_util

#endif  // CERTLAB_TESTS_UNIT_TEST_UTIL_H_
