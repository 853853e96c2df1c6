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

// Result records shared by every subcommand: the JSON payload, an optional
// CSV table, and the named checks evaluated in --check mode.

#ifndef CERTLAB_TOOLS_CLI_REPORT_H_
#define CERTLAB_TOOLS_CLI_REPORT_H_

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "nlohmann/json.hpp"

namespace certlab::cli {

using Json = nlohmann::ordered_json;

enum class Relation { kNear, kAtLeast, kAtMost };

// near:     |value - target| <= tol
// at least: value >= target - tol
// at most:  value <= target + tol
struct Check {
  std::string name;
  double value = 0.0;
  double target = 0.0;
  double tol = 0.0;
  Relation relation = Relation::kNear;

  bool passes(std::optional<double> tol_override = std::nullopt) const;
  Json to_json(std::optional<double> tol_override = std::nullopt) const;
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Json>> rows;
};

struct Report {
  Json config = Json::object();
  Json result = Json::object();
  Table table;
  std::vector<Check> checks;
};

struct Header {
  std::string command;
  Json config;
  unsigned long long seed = 0;
};

// {version, command, config, seed, result, checks?}
void write_json(std::ostream& out, const Header& header, const Report& report,
                bool include_checks, std::optional<double> tol_override);

// One comment line carrying the header as compact JSON, then the table.
void write_csv(std::ostream& out, const Header& header, const Report& report);

const char* version();

}  // namespace certlab::cli

#endif  // CERTLAB_TOOLS_CLI_REPORT_H_
