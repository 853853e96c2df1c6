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

#include "dispatch.h"

#include <cmath>
#include <fstream>
#include <functional>
#include <optional>

#include "CLI11.hpp"
#include "certlab/error.h"
#include "commands.h"
#include "report.h"

namespace certlab::cli {

namespace {

// Accepts counts written as integers or in scientific notation ("1e5").
const CLI::Validator kCount(
    [](std::string& text) -> std::string {
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(text, &used);
      } catch (const std::exception&) {
        return "not a number: " + text;
      }
      if (used != text.size() || v < 0 || v != std::floor(v) || v > 9.0e18) {
        return "not a nonnegative integer: " + text;
      }
      text = std::to_string(static_cast<unsigned long long>(v));
      return {};
    },
    "COUNT");

struct Output {
  std::string path = "-";
  std::string format = "json";
  bool check = false;
  std::optional<double> tol;
};

void add_common(CLI::App* sub, Common& common, Output& output) {
  sub->add_option("--seed", common.seed, "64-bit seed")->capture_default_str();
  sub->add_option("--threads", common.threads, "worker threads")
      ->check(CLI::Range(1, 1024))
      ->capture_default_str();
  sub->add_option("--out", output.path, "output file, - for stdout")->capture_default_str();
  sub->add_option("--format", output.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  sub->add_flag("--check", output.check, "exit 1 if any check fails");
  sub->add_option("--tol", output.tol, "override every check's tolerance");
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"certlab: black-box certified randomness simulation lab"};
  app.set_version_flag("--version", version());
  app.require_subcommand(1);

  Common common;
  Output output;
  std::function<Report()> run;
  std::string command;

  auto subcommand = [&](const char* name, const char* description) {
    CLI::App* sub = app.add_subcommand(name, description);
    add_common(sub, common, output);
    return sub;
  };
  auto on_run = [&](CLI::App* sub, std::function<Report()> fn) {
    sub->callback([&, sub, fn] {
      command = sub->get_name();
      run = fn;
    });
  };

  WhtOptions wht;
  {
    CLI::App* sub = subcommand("wht", "Walsh-Hadamard spectrum of one function");
    sub->add_option("--n", wht.n, "input bits")->capture_default_str();
    sub->add_option("--in", wht.in, "read a BFN1 file instead of drawing f");
    sub->add_option("--save-bfn", wht.save_bfn, "write the function as BFN1");
    on_run(sub, [&] { return run_wht(common, wht); });
  }
  PgpbOptions pgpb;
  {
    CLI::App* sub = subcommand("pgpb", "p_B, p_light4 and p_G of a sampler");
    sub->add_option("--n", pgpb.n, "input bits")->capture_default_str();
    sub->add_option("--trials", pgpb.trials, "random functions")->transform(kCount)->capture_default_str();
    sub->add_option("--device", pgpb.device, "honest|uniform|argmax|biased:<p>")->capture_default_str();
    on_run(sub, [&] { return run_pgpb(common, pgpb); });
  }
  HogOptions hog;
  {
    CLI::App* sub = subcommand("hog", "HOG score of a device over random functions");
    sub->add_option("--n", hog.n, "input bits")->capture_default_str();
    sub->add_option("--trials", hog.trials, "random functions")->transform(kCount)->capture_default_str();
    sub->add_option("--samples", hog.samples, "samples per function")->transform(kCount)->capture_default_str();
    sub->add_option("--device", hog.device, "honest|uniform|argmax|biased:<p>")->capture_default_str();
    on_run(sub, [&] { return run_hog(common, hog); });
  }
  SqforrOptions sqforr;
  {
    CLI::App* sub = subcommand("sqforr", "mean phi over Squared-Forrelation pairs");
    sub->add_option("--n", sqforr.n, "input bits")->capture_default_str();
    sub->add_option("--c", sqforr.c, "C in eps = 1/(C ln N)")->capture_default_str();
    sub->add_option("--trials", sqforr.trials, "pairs")->transform(kCount)->capture_default_str();
    sub->add_option("--estimator", sqforr.estimator, "plain or conditional")
        ->check(CLI::IsMember({"plain", "conditional"}))
        ->capture_default_str();
    sub->add_option("--source", sqforr.source, "D or uniform")
        ->check(CLI::IsMember({"D", "uniform"}))
        ->capture_default_str();
    sub->add_flag("--tails", sqforr.tails, "also run the tail and truncation checks");
    on_run(sub, [&] { return run_sqforr(common, sqforr); });
  }
  RhogOptions rhog;
  {
    CLI::App* sub = subcommand("rhog", "RHOG score of the capped rejection sampler");
    sub->add_option("--n", rhog.n, "input bits")->capture_default_str();
    sub->add_option("--c", rhog.c, "C in eps = 1/(C ln N)")->capture_default_str();
    sub->add_option("--trials", rhog.trials, "pairs")->transform(kCount)->capture_default_str();
    sub->add_option("--source", rhog.source, "D or uniform")
        ->check(CLI::IsMember({"D", "uniform"}))
        ->capture_default_str();
    sub->add_option("--sampler", rhog.sampler, "fourier or uniform")
        ->check(CLI::IsMember({"fourier", "uniform"}))
        ->capture_default_str();
    on_run(sub, [&] { return run_rhog(common, rhog); });
  }
  PerturbOptions perturb;
  {
    CLI::App* sub = subcommand("perturb", "heavy-to-light perturbation exactness");
    sub->add_option("--n", perturb.n, "input bits (even)")->capture_default_str();
    sub->add_option("--trials", perturb.trials, "random (f, z) cases")->transform(kCount)->capture_default_str();
    on_run(sub, [&] { return run_perturb(common, perturb); });
  }
  DerandomizeOptions derand;
  {
    CLI::App* sub = subcommand("derandomize", "stability and marginal of the derandomizer");
    sub->add_option("--n", derand.n, "input bits")->capture_default_str();
    sub->add_option("--pmax", derand.pmax, "peak probability of the stability device")->capture_default_str();
    sub->add_option("--budget", derand.budget, "device draws per run")->transform(kCount)->capture_default_str();
    sub->add_option("--seeds", derand.seeds, "fixed seeds r")->transform(kCount)->capture_default_str();
    sub->add_option("--reruns", derand.reruns, "reruns per seed")->transform(kCount)->capture_default_str();
    sub->add_option("--entropy-threshold", derand.entropy_threshold, "low-entropy cutoff in bits")
        ->capture_default_str();
    sub->add_option("--marginal-draws", derand.marginal_draws, "draws for the marginal test")
        ->transform(kCount)
        ->capture_default_str();
    sub->add_option("--marginal-budget", derand.marginal_budget, "budget in the marginal test")
        ->transform(kCount)
        ->capture_default_str();
    on_run(sub, [&] { return run_derandomize(common, derand); });
  }
  LlqsvOptions llqsv;
  {
    CLI::App* sub = subcommand("llqsv", "long-list instances and their statistics");
    sub->add_option("--n", llqsv.n, "input bits")->capture_default_str();
    sub->add_option("--t", llqsv.t, "list length, 0 for min(2^3n, 2^20)")->transform(kCount)->capture_default_str();
    sub->add_option("--case", llqsv.list_case, "fourier or uniform")
        ->check(CLI::IsMember({"fourier", "uniform"}))
        ->capture_default_str();
    sub->add_option("--save-llq", llqsv.save_llq, "write the list as LLQ1");
    sub->add_option("--distinguisher", llqsv.distinguisher, "none, outcome-only or score-sum")
        ->check(CLI::IsMember({"none", "outcome-only", "score-sum"}))
        ->capture_default_str();
    sub->add_option("--trials", llqsv.trials, "advantage trials")->transform(kCount)->capture_default_str();
    sub->add_option("--list-length", llqsv.list_length, "list length in advantage trials")
        ->transform(kCount)
        ->capture_default_str();
    sub->add_option("--balance-offsets", llqsv.balance_offsets, "offsets d for a Balance instance")
        ->delimiter(',');
    on_run(sub, [&] { return run_llqsv(common, llqsv); });
  }
  ProtocolOptions protocol;
  {
    CLI::App* sub = subcommand("protocol", "one certified-randomness protocol run");
    sub->add_option("--n", protocol.n, "input bits")->capture_default_str();
    sub->add_option("--t", protocol.t, "challenges")->transform(kCount)->capture_default_str();
    sub->add_option("--b", protocol.b, "score threshold")->capture_default_str();
    sub->add_option("--eps", protocol.eps, "eps_hog")->capture_default_str();
    sub->add_option("--device", protocol.device, "honest|uniform|argmax|biased:<p>")->capture_default_str();
    sub->add_option("--claimed-q", protocol.claimed_q, "none or argmax")
        ->check(CLI::IsMember({"none", "argmax"}))
        ->capture_default_str();
    sub->add_option("--extract-bits", protocol.extract_bits, "requested extractor output")
        ->transform(kCount)
        ->capture_default_str();
    sub->add_flag("--records,!--no-records", protocol.records, "include per-challenge records");
    on_run(sub, [&] { return run_protocol_command(common, protocol); });
  }
  {
    CLI::App* sub = subcommand("check-all", "every subcommand's checks at default settings");
    on_run(sub, [&] {
      output.check = true;
      return run_check_all(common);
    });
  }

  std::vector<const char*> argv{"certlab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);  // --help and --version
      return kExitOk;
    }
    err << "certlab: " << e.what() << "\n";
    return kExitUsage;
  }

  Report report;
  try {
    report = run();
  } catch (const Error& e) {
    err << "certlab " << command << ": " << e.what() << "\n";
    return kExitUsage;
  }

  const Header header{command, report.config, common.seed};
  auto emit = [&](std::ostream& stream) {
    if (output.format == "csv") {
      write_csv(stream, header, report);
    } else {
      write_json(stream, header, report, true, output.tol);
    }
  };
  if (output.path == "-") {
    emit(out);
  } else {
    std::ofstream file(output.path, std::ios::binary);
    if (!file) {
      err << "certlab: cannot open " << output.path << "\n";
      return kExitUsage;
    }
    emit(file);
  }

  if (!output.check) return kExitOk;
  bool ok = true;
  for (const auto& c : report.checks) {
    if (!c.passes(output.tol)) {
      ok = false;
      err << "check failed: " << c.name << " value=" << c.value << " target=" << c.target
          << " tol=" << output.tol.value_or(c.tol) << "\n";
    }
  }
  return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace certlab::cli
