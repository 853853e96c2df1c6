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

#include "report.h"

#include <cmath>

namespace certlab::cli {

const char* version() { return CERTLAB_VERSION; }

bool Check::passes(std::optional<double> tol_override) const {
  const double t = tol_override.value_or(tol);
  switch (relation) {
    case Relation::kNear:
      return std::abs(value - target) <= t;
    case Relation::kAtLeast:
      return value >= target - t;
    case Relation::kAtMost:
      return value <= target + t;
  }
  return false;
}

Json Check::to_json(std::optional<double> tol_override) const {
  static constexpr const char* kRelation[] = {"near", "at_least", "at_most"};
  Json j;
  j["name"] = name;
  j["relation"] = kRelation[static_cast<int>(relation)];
  j["value"] = value;
  j["target"] = target;
  j["tol"] = tol_override.value_or(tol);
  j["pass"] = passes(tol_override);
  return j;
}

namespace {

Json header_json(const Header& header) {
  Json j;
  j["version"] = version();
  j["command"] = header.command;
  j["config"] = header.config;
  j["seed"] = header.seed;
  return j;
}

std::string csv_cell(const Json& v) {
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
      if (c == '"') quoted += '"';
      quoted += c;
    }
    return quoted + "\"";
  }
  if (v.is_null()) return "";
  return v.dump();
}

}  // namespace

void write_json(std::ostream& out, const Header& header, const Report& report,
                bool include_checks, std::optional<double> tol_override) {
  Json j = header_json(header);
  j["result"] = report.result;
  if (include_checks) {
    Json checks = Json::array();
    for (const auto& c : report.checks) checks.push_back(c.to_json(tol_override));
    j["checks"] = std::move(checks);
  }
  out << j.dump(2) << '\n';
}

void write_csv(std::ostream& out, const Header& header, const Report& report) {
  out << "# " << header_json(header).dump() << '\n';
  for (std::size_t i = 0; i < report.table.columns.size(); ++i) {
    out << (i ? "," : "") << report.table.columns[i];
  }
  out << '\n';
  for (const auto& row : report.table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
    out << '\n';
  }
}

}  // namespace certlab::cli
