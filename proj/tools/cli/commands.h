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

// The experiments behind each subcommand. Every run function is pure in its
// options: the same options produce the same Report.

#ifndef CERTLAB_TOOLS_CLI_COMMANDS_H_
#define CERTLAB_TOOLS_CLI_COMMANDS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "report.h"

namespace certlab::cli {

struct Common {
  std::uint64_t seed = 0;
  int threads = 1;
};

struct WhtOptions {
  int n = 8;
  std::string in;        // BFN1 file; random function from the seed if empty
  std::string save_bfn;  // write the function here if set
};
Report run_wht(const Common& common, const WhtOptions& o);

struct PgpbOptions {
  int n = 12;
  std::uint64_t trials = 100000;
  std::string device = "honest";
};
Report run_pgpb(const Common& common, const PgpbOptions& o);

struct HogOptions {
  int n = 8;
  std::uint64_t trials = 2000;  // functions
  std::uint64_t samples = 64;   // device samples per function
  std::string device = "honest";
};
Report run_hog(const Common& common, const HogOptions& o);

struct SqforrOptions {
  int n = 8;
  double c = 1.0;
  std::uint64_t trials = 100000;
  std::string estimator = "conditional";
  std::string source = "D";
  bool tails = false;
};
Report run_sqforr(const Common& common, const SqforrOptions& o);

struct RhogOptions {
  int n = 8;
  double c = 1.0;
  std::uint64_t trials = 100000;
  std::string source = "D";
  std::string sampler = "fourier";
};
Report run_rhog(const Common& common, const RhogOptions& o);

struct PerturbOptions {
  int n = 12;
  std::uint64_t trials = 1000;
};
Report run_perturb(const Common& common, const PerturbOptions& o);

struct DerandomizeOptions {
  int n = 4;
  double pmax = 0.98;
  std::uint64_t budget = 10000;
  std::uint64_t seeds = 100;
  std::uint64_t reruns = 20;
  double entropy_threshold = 0.5;
  std::uint64_t marginal_draws = 20000;
  std::uint64_t marginal_budget = 200;
};
Report run_derandomize(const Common& common, const DerandomizeOptions& o);

struct LlqsvOptions {
  int n = 4;
  std::uint64_t t = 0;  // 0 means default_list_length(n)
  std::string list_case = "fourier";
  std::string save_llq;
  std::string distinguisher = "none";
  std::uint64_t trials = 1000;      // advantage trials
  std::uint64_t list_length = 64;   // list length for the advantage runs
  std::vector<std::int64_t> balance_offsets;
};
Report run_llqsv(const Common& common, const LlqsvOptions& o);

struct ProtocolOptions {
  int n = 8;
  std::uint64_t t = 4096;
  double b = 1.5;
  double eps = 0.5;
  std::string device = "honest";
  std::string claimed_q = "none";
  std::uint64_t extract_bits = 256;
  bool records = true;
};
Report run_protocol_command(const Common& common, const ProtocolOptions& o);

// Every subcommand's checks at its default options, labelled by command.
Report run_check_all(const Common& common);

}  // namespace certlab::cli

#endif  // CERTLAB_TOOLS_CLI_COMMANDS_H_
