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

#ifndef CERTLAB_TOOLS_CLI_DISPATCH_H_
#define CERTLAB_TOOLS_CLI_DISPATCH_H_

#include <ostream>
#include <string>
#include <vector>

namespace certlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// Parses `args` (without the program name), runs the subcommand and writes
// its output to --out or to `out`. Returns 0 on success, 2 on a usage error,
// and 1 when --check is set and a check fails (check-all always checks).
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace certlab::cli

#endif  // CERTLAB_TOOLS_CLI_DISPATCH_H_
