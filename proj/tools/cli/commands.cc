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

#include "commands.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <span>

#include "certlab/certlab.h"

namespace certlab::cli {

namespace {

Json interval_json(const Interval& ci) { return Json::array({ci.lo, ci.hi}); }

double n_of(int n) { return std::exp2(n); }

// Passes exactly when `target` lies inside the CI of `m`.
Check mean_contains(std::string name, const MeanEstimate& m, double target) {
  return {std::move(name), m.mean, target, m.half_width, Relation::kNear};
}

Check proportion_contains(std::string name, const ProportionEstimate& p, double target) {
  const Interval ci = p.ci();
  const double v = p.value();
  return {std::move(name), v, target, target > v ? ci.hi - v : v - ci.lo, Relation::kNear};
}

std::ofstream open_output(const std::string& path, std::ios::openmode mode) {
  std::ofstream f(path, mode);
  if (!f) throw Error(ErrorCode::kInvalidArgument, "cannot open " + path);
  return f;
}

// CSV rows for a list of (metric, value, ci, reference) summaries.
void add_metric(Table& t, const std::string& metric, double value,
                const Interval& ci, const Json& reference) {
  if (t.columns.empty()) t.columns = {"metric", "value", "ci_lo", "ci_hi", "reference"};
  t.rows.push_back({metric, value, ci.lo, ci.hi, reference});
}

PhiEstimator parse_estimator(const std::string& s) {
  if (s == "plain") return PhiEstimator::kPlain;
  if (s == "conditional") return PhiEstimator::kConditional;
  throw Error(ErrorCode::kInvalidArgument, "unknown estimator: " + s);
}

PairSource parse_source(const std::string& s) {
  if (s == "D") return PairSource::kD;
  if (s == "uniform") return PairSource::kUniform;
  throw Error(ErrorCode::kInvalidArgument, "unknown pair source: " + s);
}

OutcomeSampler parse_outcome_sampler(const std::string& s) {
  if (s == "fourier") return OutcomeSampler::kFourier;
  if (s == "uniform") return OutcomeSampler::kUniform;
  throw Error(ErrorCode::kInvalidArgument, "unknown outcome sampler: " + s);
}

LlqsvCase parse_case(const std::string& s) {
  if (s == "fourier") return LlqsvCase::kFourier;
  if (s == "uniform") return LlqsvCase::kUniform;
  throw Error(ErrorCode::kInvalidArgument, "unknown list case: " + s);
}

}  // namespace

Report run_wht(const Common& common, const WhtOptions& o) {
  Report r;
  BooleanFunction f = BooleanFunction::constant(1, 1);
  if (o.in.empty()) {
    CounterRng rng(common.seed);
    f = random_function(o.n, rng);
  } else {
    std::ifstream in(o.in, std::ios::binary);
    if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot open " + o.in);
    f = read_bfn(in);
  }
  r.config = {{"n", f.n()}, {"in", o.in}, {"save_bfn", o.save_bfn},
              {"seed", common.seed}, {"threads", common.threads}};
  if (!o.save_bfn.empty()) {
    auto out = open_output(o.save_bfn, std::ios::binary);
    write_bfn(out, f);
  }
  const std::size_t N = f.size();
  const auto k = wht_integer(f);
  const FourierSpectrum s = wht(f);
  double parseval = 0.0;
  std::uint64_t counts[3] = {0, 0, 0};
  for (std::size_t z = 0; z < N; ++z) {
    parseval += s[z] * s[z];
    counts[static_cast<int>(classify_scaled(k[z], N))]++;
  }
  // Transforming N fhat again gives N f(x) exactly.
  std::vector<std::int64_t> back(k.begin(), k.end());
  fwht_inplace(std::span<std::int64_t>(back));
  std::uint64_t mismatches = 0;
  for (std::size_t x = 0; x < N; ++x) {
    mismatches += back[x] != static_cast<std::int64_t>(N) * f[x];
  }

  r.result["n"] = f.n();
  r.result["N"] = N;
  r.result["parseval_error"] = std::abs(parseval - 1.0);
  r.result["fourth_moment"] = fourth_moment(s);
  r.result["argmax"] = argmax_outcome(s);
  r.result["heaviness_counts"] = {{"light", counts[0]},
                                  {"slightly_heavy", counts[1]},
                                  {"very_heavy", counts[2]}};
  r.result["scaled"] = k;
  r.table.columns = {"z", "scaled", "coeff", "heaviness"};
  for (std::size_t z = 0; z < N; ++z) {
    r.table.rows.push_back({z, k[z], s[z], heaviness_name(classify_scaled(k[z], N))});
  }
  r.checks.push_back({"parseval_error", std::abs(parseval - 1.0), 0.0, 1e-12, Relation::kAtMost});
  r.checks.push_back({"double_transform_mismatches", static_cast<double>(mismatches), 0.0,
                      0.0, Relation::kNear});
  return r;
}

Report run_pgpb(const Common& common, const PgpbOptions& o) {
  Report r;
  const DeviceModel device = DeviceModel::parse(o.device);
  r.config = {{"n", o.n}, {"trials", o.trials}, {"device", device.name()},
              {"seed", common.seed}, {"threads", common.threads}};
  const PgPbEstimate e = estimate_pg_pb(o.n, make_sampler(device), o.trials,
                                        {.seed = common.seed, .threads = common.threads});
  const HeavinessReference g = gaussian_reference();
  const HeavinessReference lattice = lattice_reference(o.n);
  r.result["p_b"] = e.p_b();
  r.result["p_light4"] = e.p_light4();
  r.result["p_g"] = e.p_g();
  r.result["ci99"] = {{"p_b", interval_json(e.light.ci())},
                      {"p_light4", interval_json(e.light4.ci())},
                      {"p_g", interval_json(e.slightly_heavy.ci())}};
  r.result["trials"] = e.trials();
  r.result["seed"] = common.seed;
  r.result["device"] = device.name();
  r.result["reference"] = {
      {"gaussian", {{"p_b", g.p_b}, {"p_light4", g.p_light4}, {"p_g", g.p_g}}},
      {"lattice", {{"p_b", lattice.p_b}, {"p_light4", lattice.p_light4}, {"p_g", lattice.p_g}}}};
  r.table.columns = {"quantity", "value", "ci_lo", "ci_hi", "gaussian", "lattice"};
  r.table.rows = {
      {"p_b", e.p_b(), e.light.ci().lo, e.light.ci().hi, g.p_b, lattice.p_b},
      {"p_light4", e.p_light4(), e.light4.ci().lo, e.light4.ci().hi, g.p_light4, lattice.p_light4},
      {"p_g", e.p_g(), e.slightly_heavy.ci().lo, e.slightly_heavy.ci().hi, g.p_g, lattice.p_g}};
  if (device.kind == DeviceKind::kHonest) {
    if (o.n >= 10) {
      r.checks.push_back({"p_b", e.p_b(), 0.199, 0.01, Relation::kNear});
      r.checks.push_back({"p_light4", e.p_light4(), 0.739, 0.01, Relation::kNear});
      r.checks.push_back({"p_g", e.p_g(), 0.54, 0.015, Relation::kNear});
    } else {
      r.checks.push_back(proportion_contains("p_b_lattice", e.light, lattice.p_b));
      r.checks.push_back(proportion_contains("p_light4_lattice", e.light4, lattice.p_light4));
    }
  }
  return r;
}

Report run_hog(const Common& common, const HogOptions& o) {
  Report r;
  const DeviceModel device = DeviceModel::parse(o.device);
  r.config = {{"n", o.n}, {"trials", o.trials}, {"samples", o.samples},
              {"device", device.name()}, {"seed", common.seed}, {"threads", common.threads}};
  if (o.n < 1 || o.n > kMaxInputBits) throw Error(ErrorCode::kSizeLimit, "n must lie in [1, 24]");
  if (o.trials == 0 || o.samples == 0) {
    throw Error(ErrorCode::kInvalidArgument, "trials and samples must be positive");
  }
  struct Row {
    double score;
    double fourth;
  };
  struct Partial {
    MeanAccumulator score;
    MeanAccumulator fourth;
    std::vector<Row> rows;
  };
  const auto partials = run_chunks<Partial>(
      o.trials, kTrialChunk, common.threads,
      [&](std::uint64_t chunk, std::uint64_t begin, std::uint64_t end) {
        CounterRng rng(common.seed, chunk + 1);
        Partial part;
        std::vector<std::size_t> samples(o.samples);
        for (std::uint64_t t = begin; t < end; ++t) {
          const FourierSpectrum s = wht(random_function(o.n, rng));
          const BoundDevice dev(device, s);
          for (auto& x : samples) x = dev.sample(rng);
          const Row row{hog_score(s, samples), fourth_moment(s)};
          part.score.add(row.score);
          part.fourth.add(row.fourth);
          part.rows.push_back(row);
        }
        return part;
      });
  MeanAccumulator score, fourth;
  r.table.columns = {"function", "hog_score", "fourth_moment"};
  for (const auto& p : partials) {
    score.merge(p.score);
    fourth.merge(p.fourth);
    for (const auto& row : p.rows) {
      r.table.rows.push_back({r.table.rows.size(), row.score, row.fourth});
    }
  }
  const double N = n_of(o.n);
  const double honest = (3 * N * N - 2 * N) / (N * N * N);
  const MeanEstimate m = score.estimate();
  r.result["mean_score"] = m.mean;
  r.result["ci99"] = interval_json(m.ci());
  r.result["mean_fourth_moment"] = fourth.mean();
  r.result["honest_expectation"] = honest;
  r.result["uniform_expectation"] = 1.0 / N;
  r.result["trials"] = o.trials;
  if (device.kind == DeviceKind::kHonest) {
    r.checks.push_back(mean_contains("mean_score_honest", m, honest));
  } else if (device.kind == DeviceKind::kUniformCheat) {
    r.checks.push_back(mean_contains("mean_score_uniform", m, 1.0 / N));
  }
  return r;
}

Report run_sqforr(const Common& common, const SqforrOptions& o) {
  Report r;
  const DistParams p{.n = o.n, .c = o.c};
  const PhiEstimator estimator = parse_estimator(o.estimator);
  const PairSource source = parse_source(o.source);
  r.config = {{"n", o.n}, {"c", o.c}, {"trials", o.trials}, {"estimator", o.estimator},
              {"source", o.source}, {"tails", o.tails}, {"seed", common.seed},
              {"threads", common.threads}};
  p.validate();
  const RunOptions run{.seed = common.seed, .threads = common.threads};
  const MeanEstimate m = mean_phi_experiment(p, o.trials, estimator, source, run);
  const double N = static_cast<double>(p.N());
  const double eps = p.epsilon();
  const double eps2 = eps * eps;
  const double prediction = eps2 * (2.0 - 2.0 / N);
  r.result["epsilon"] = eps;
  r.result["eps2"] = eps2;
  r.result["gprime_prediction"] = prediction;
  r.result["mean_phi"] = m.mean;
  r.result["ci99"] = interval_json(m.ci());
  r.result["stddev"] = m.stddev;
  r.result["acceptance_probability"] = (1.0 + m.mean) / 2.0;
  r.result["trials"] = m.trials;
  add_metric(r.table, "mean_phi", m.mean, m.ci(), source == PairSource::kD ? prediction : 0.0);
  if (source == PairSource::kD) {
    r.checks.push_back({"mean_phi_at_least_eps2", m.mean, eps2, 0.0, Relation::kAtLeast});
    r.checks.push_back({"ci_lo_above_half_eps2", m.ci().lo, eps2 / 2.0, 0.0, Relation::kAtLeast});
    r.checks.push_back({"within_30pct_of_prediction", m.mean, prediction, 0.3 * prediction,
                        Relation::kNear});
  } else {
    r.checks.push_back(mean_contains("mean_phi_zero", m, 0.0));
  }
  if (o.tails) {
    const RowSumTail tail = row_sum_tail_check(p, o.trials, run);
    const TruncationBalance tb = truncation_balance_check(p, o.trials, run);
    r.result["row_sum_tail"] = {{"rate", tail.exceed.value()},
                                {"ci99", interval_json(tail.exceed.ci())},
                                {"threshold", tail.threshold},
                                {"bound", tail.bound},
                                {"max_abs_sum", tail.max_abs_sum}};
    r.result["truncation"] = {{"rate", tb.truncated.value()},
                              {"ci99", interval_json(tb.truncated.ci())},
                              {"bound", tb.truncation_bound}};
    r.result["hamming_balance"] = {{"imbalanced_rate", tb.imbalanced.value()},
                                   {"ci99", interval_json(tb.imbalanced.ci())},
                                   {"bound", tb.imbalance_bound},
                                   {"weight_lo", tb.weight_lo},
                                   {"weight_hi", tb.weight_hi}};
    add_metric(r.table, "row_sum_tail_rate", tail.exceed.value(), tail.exceed.ci(), tail.bound);
    add_metric(r.table, "truncation_rate", tb.truncated.value(), tb.truncated.ci(),
               tb.truncation_bound);
    add_metric(r.table, "imbalanced_rate", tb.imbalanced.value(), tb.imbalanced.ci(),
               tb.imbalance_bound);
    // A rate is within "bound + CI" when the CI reaches down to the bound.
    r.checks.push_back({"row_sum_tail", tail.exceed.ci().lo, tail.bound, 0.0, Relation::kAtMost});
    r.checks.push_back({"truncation_rate", tb.truncated.ci().lo, tb.truncation_bound, 0.0,
                        Relation::kAtMost});
    r.checks.push_back({"hamming_imbalance_rate", tb.imbalanced.ci().lo, tb.imbalance_bound,
                        0.0, Relation::kAtMost});
  }
  return r;
}

Report run_rhog(const Common& common, const RhogOptions& o) {
  Report r;
  const DistParams p{.n = o.n, .c = o.c};
  const PairSource source = parse_source(o.source);
  const OutcomeSampler sampler = parse_outcome_sampler(o.sampler);
  r.config = {{"n", o.n}, {"c", o.c}, {"trials", o.trials}, {"source", o.source},
              {"sampler", o.sampler}, {"seed", common.seed}, {"threads", common.threads}};
  p.validate();
  const MeanEstimate m =
      rhog_score(p, o.trials, source, sampler, {.seed = common.seed, .threads = common.threads});
  const double eps = p.epsilon();
  const double target = 1.0 + eps * eps / 8.0;
  r.result["score"] = m.mean;
  r.result["ci99"] = interval_json(m.ci());
  r.result["target"] = target;
  r.result["margin"] = m.mean - target;
  r.result["attempts"] = rejection_attempts(o.n);
  r.result["trials"] = m.trials;
  const bool honest = source == PairSource::kD && sampler == OutcomeSampler::kFourier;
  add_metric(r.table, "score", m.mean, m.ci(), honest ? target : 1.0);
  if (honest) {
    r.checks.push_back({"score_at_least_target", m.mean, target, 0.0, Relation::kAtLeast});
    r.checks.push_back({"ci_excludes_one", m.ci().lo, 1.0, 0.0, Relation::kAtLeast});
  } else {
    r.checks.push_back(mean_contains("score_one", m, 1.0));
  }
  return r;
}

Report run_perturb(const Common& common, const PerturbOptions& o) {
  Report r;
  r.config = {{"n", o.n}, {"trials", o.trials}, {"seed", common.seed},
              {"threads", common.threads}};
  if (o.n < 2 || o.n > kMaxInputBits || o.n % 2 != 0) {
    throw Error(ErrorCode::kOddRoot, "perturb needs an even n in [2, 24]");
  }
  const std::size_t N = std::size_t{1} << o.n;
  const auto root = std::int64_t{1} << (o.n / 2);
  const double bound = 2.0 * std::pow(static_cast<double>(N), -1.0 / 8.0);
  CounterRng rng(common.seed);
  std::uint64_t exact = 0;
  std::uint64_t cases = 0;
  double max_tv = 0.0;
  MeanAccumulator tv;
  r.table.columns = {"case", "z", "scaled_before", "scaled_after", "tv"};
  for (std::uint64_t t = 0; t < o.trials; ++t) {
    const BooleanFunction f = random_function(o.n, rng);
    const auto k = wht_integer(f);
    std::vector<std::size_t> heavy;
    for (std::size_t z = 0; z < N; ++z) {
      if (classify_scaled(k[z], N) == Heaviness::kSlightlyHeavy) heavy.push_back(z);
    }
    if (heavy.empty()) continue;
    const std::size_t z = heavy[rng.below(heavy.size())];
    const Perturbation pert = perturb_make_light(f, z, rng);
    const auto k2 = wht_integer(pert.result);
    const std::int64_t sign = k[z] > 0 ? 1 : -1;
    exact += k2[z] == k[z] - sign * root;
    const double d = tv_distance(wht(f), wht(pert.result));
    max_tv = std::max(max_tv, d);
    tv.add(d);
    ++cases;
    r.table.rows.push_back({t, z, k[z], k2[z], d});
  }
  r.result["cases"] = cases;
  r.result["exact_identity"] = exact;
  r.result["max_tv"] = max_tv;
  r.result["mean_tv"] = tv.mean();
  r.result["tv_bound"] = bound;
  r.result["degree_ratio"] = degree_ratio(N);
  r.checks.push_back({"exact_identity", static_cast<double>(exact), static_cast<double>(cases),
                      0.0, Relation::kNear});
  r.checks.push_back({"max_tv", max_tv, bound, 0.0, Relation::kAtMost});
  return r;
}

Report run_derandomize(const Common& common, const DerandomizeOptions& o) {
  Report r;
  r.config = {{"n", o.n},
              {"pmax", o.pmax},
              {"budget", o.budget},
              {"seeds", o.seeds},
              {"reruns", o.reruns},
              {"entropy_threshold", o.entropy_threshold},
              {"marginal_draws", o.marginal_draws},
              {"marginal_budget", o.marginal_budget},
              {"seed", common.seed},
              {"threads", common.threads}};
  if (o.n < 1 || o.n > 16) throw Error(ErrorCode::kSizeLimit, "n must lie in [1, 16]");
  const std::size_t N = std::size_t{1} << o.n;
  if (!(o.pmax >= 1.0 / static_cast<double>(N) && o.pmax <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "pmax must lie in [1/N, 1]");
  }
  if (o.seeds == 0 || o.marginal_draws == 0) {
    throw Error(ErrorCode::kInvalidArgument, "seeds and marginal-draws must be positive");
  }
  // Outcome 0 with probability pmax, otherwise uniform over the rest.
  const double pmax = o.pmax;
  const Sampler peaked = [pmax, N](CounterRng& rng) -> std::size_t {
    if (N == 1 || rng.uniform01() < pmax) return 0;
    return 1 + static_cast<std::size_t>(rng.below(N - 1));
  };
  const DerandomizeStability st =
      derandomize_stability(peaked, N, o.budget, o.seeds, o.reruns, o.entropy_threshold,
                            {.seed = common.seed, .threads = common.threads});
  const double constant_fraction =
      static_cast<double>(st.constant_seeds) / static_cast<double>(st.seeds);

  // Marginal equality against an honest Fourier device.
  CounterRng frng(common.seed, 1);
  const FourierSpectrum s = wht(random_function(o.n, frng));
  const FourierSampler honest(s);
  const Sampler device = [&honest](CounterRng& rng) { return honest(rng); };
  std::vector<std::uint64_t> counts(N, 0);
  CounterRng drng(common.seed, 2);
  for (std::uint64_t t = 0; t < o.marginal_draws; ++t) {
    counts[derandomize(device, N, {derive_seed(common.seed, t)}, o.marginal_budget, drng)]++;
  }
  std::vector<double> law(N);
  for (std::size_t z = 0; z < N; ++z) law[z] = s[z] * s[z];
  const ChiSquareResult chi = chi_square_gof(counts, law);

  double mean_entropy = 0.0;
  for (double h : st.rerun_min_entropy) mean_entropy += h;
  mean_entropy /= static_cast<double>(st.rerun_min_entropy.size());
  r.result["stability"] = {{"seeds", st.seeds},
                           {"constant_seeds", st.constant_seeds},
                           {"constant_fraction", constant_fraction},
                           {"low_entropy_seeds", st.low_entropy_seeds},
                           {"entropy_threshold", st.entropy_threshold},
                           {"mean_rerun_min_entropy", mean_entropy}};
  r.result["marginal"] = {{"draws", o.marginal_draws},
                          {"chi_square", chi.statistic},
                          {"dof", chi.dof},
                          {"p_value", chi.p_value}};
  r.table.columns = {"seed_index", "rerun_min_entropy"};
  for (std::size_t i = 0; i < st.rerun_min_entropy.size(); ++i) {
    r.table.rows.push_back({i, st.rerun_min_entropy[i]});
  }
  r.checks.push_back({"constant_fraction", constant_fraction, 0.9, 0.0, Relation::kAtLeast});
  r.checks.push_back({"marginal_p_value", chi.p_value, 0.01, 0.0, Relation::kAtLeast});
  return r;
}

Report run_llqsv(const Common& common, const LlqsvOptions& o) {
  Report r;
  const LlqsvCase list_case = parse_case(o.list_case);
  const std::uint64_t T = o.t == 0 ? default_list_length(o.n) : o.t;
  r.config = {{"n", o.n},
              {"t", T},
              {"case", o.list_case},
              {"save_llq", o.save_llq},
              {"distinguisher", o.distinguisher},
              {"trials", o.trials},
              {"list_length", o.list_length},
              {"balance_offsets", o.balance_offsets},
              {"seed", common.seed},
              {"threads", common.threads}};
  const MeanEstimate m = llqsv_score_mean(o.n, T, list_case, common.seed);
  const double N = n_of(o.n);
  const double expected =
      list_case == LlqsvCase::kUniform ? 1.0 / N : (3 * N * N - 2 * N) / (N * N * N);
  r.result["mean_score"] = m.mean;
  r.result["ci99"] = interval_json(m.ci());
  r.result["expected"] = expected;
  r.result["t"] = T;
  add_metric(r.table, "mean_score", m.mean, m.ci(), expected);
  r.checks.push_back(mean_contains("mean_score", m, expected));
  if (!o.save_llq.empty()) {
    const LongList list = llqsv_instance(o.n, T, list_case, common.seed);
    auto out = open_output(o.save_llq, std::ios::binary);
    write_llq(out, list);
  }
  if (o.distinguisher != "none") {
    Distinguisher d;
    if (o.distinguisher == "outcome-only") {
      d = outcome_only_distinguisher();
    } else if (o.distinguisher == "score-sum") {
      d = score_sum_distinguisher();
    } else {
      throw Error(ErrorCode::kInvalidArgument, "unknown distinguisher: " + o.distinguisher);
    }
    const Advantage a = advantage(d, o.n, o.list_length, o.trials,
                                  {.seed = derive_seed(common.seed, 1), .threads = common.threads});
    r.result["advantage"] = {{"distinguisher", o.distinguisher},
                             {"value", a.value},
                             {"ci99", interval_json(a.ci())},
                             {"fourier_accept", a.fourier_accept.value()},
                             {"uniform_accept", a.uniform_accept.value()},
                             {"mean_reads", a.mean_reads}};
    add_metric(r.table, "advantage", a.value, a.ci(), nullptr);
    if (o.distinguisher == "outcome-only") {
      r.checks.push_back({"advantage_zero", a.value, 0.0, a.half_width, Relation::kNear});
    } else {
      r.checks.push_back({"advantage_positive", a.ci().lo, 0.0, 0.0, Relation::kAtLeast});
    }
  }
  if (!o.balance_offsets.empty()) {
    CounterRng rng(common.seed, 2);
    const auto strings =
        balance_instance(o.balance_offsets, static_cast<std::size_t>(N), rng);
    Json list = Json::array();
    for (const auto& s : strings) {
      std::string bits(s.size(), '0');
      for (std::size_t i = 0; i < s.size(); ++i) bits[i] = s.bit(i) ? '1' : '0';
      list.push_back({{"d", s.offset()}, {"weight", s.weight()}, {"bits", bits}});
    }
    r.result["balance_instance"] = std::move(list);
  }
  return r;
}

Report run_protocol_command(const Common& common, const ProtocolOptions& o) {
  Report r;
  const DeviceModel device = DeviceModel::parse(o.device);
  const ClaimedQ claimed = parse_claimed_q(o.claimed_q);
  ProtocolConfig c;
  c.n = o.n;
  c.T = o.t;
  c.b = o.b;
  c.eps_hog = o.eps;
  c.extractor_output_bits = o.extract_bits;
  c.seed = common.seed;
  c.threads = common.threads;
  c.keep_records = o.records;
  r.config = {{"n", o.n},
              {"t", o.t},
              {"b", o.b},
              {"eps", o.eps},
              {"delta", c.delta()},
              {"device", device.name()},
              {"claimed_q", claimed_q_name(claimed)},
              {"extract_bits", o.extract_bits},
              {"records", o.records},
              {"seed", common.seed},
              {"threads", common.threads}};
  const ProtocolTranscript tr = run_protocol(c, device, claimed);
  const double mu = static_cast<double>(c.T) / static_cast<double>(c.N());
  const double eps = c.eps_hog;
  r.result["S"] = tr.S;
  r.result["mu"] = mu;
  r.result["score_threshold"] = (c.b - eps / 2.0) * mu;
  r.result["score_pass"] = tr.score_pass;
  r.result["V"] = tr.V ? Json(*tr.V) : Json(nullptr);
  r.result["uniform_below"] = std::min(1.0 + eps * eps, 1.0 + eps / 4.0) * mu;
  r.result["quantum_above"] = std::max(1.0 + eps * eps, 1.0 + eps / 4.0) * mu;
  r.result["verdict"] = verdict_name(tr.verdict);
  r.result["min_entropy_estimate"] = tr.min_entropy_estimate;
  r.result["extractor_input_bits"] = tr.extractor_input_bits;
  r.result["extracted_length"] = tr.extracted.size();
  r.result["extracted"] = tr.extracted.to_string();
  Json records = Json::array();
  double resummed = 0.0;
  r.table.columns = {"i", "function_seed", "sample", "score", "collision"};
  for (std::size_t i = 0; i < tr.records.size(); ++i) {
    const ChallengeRecord& rec = tr.records[i];
    resummed += rec.score;
    records.push_back({{"i", i},
                       {"function_seed", rec.function_seed},
                       {"sample", rec.sample},
                       {"score", rec.score},
                       {"collision", rec.collision}});
    r.table.rows.push_back({i, rec.function_seed, rec.sample, rec.score, rec.collision});
  }
  if (o.records) {
    r.result["records"] = std::move(records);
    r.checks.push_back({"S_recomputed", resummed, tr.S, 1e-9, Relation::kNear});
  }
  if (device.kind == DeviceKind::kHonest) {
    r.checks.push_back({"honest_passes", tr.score_pass ? 1.0 : 0.0, 1.0, 0.0, Relation::kNear});
  } else if (device.kind == DeviceKind::kUniformCheat) {
    r.checks.push_back({"uniform_fails", tr.score_pass ? 1.0 : 0.0, 0.0, 0.0, Relation::kNear});
  } else if (device.kind == DeviceKind::kArgmaxDeterministic && tr.V) {
    r.checks.push_back({"argmax_collides_always", static_cast<double>(*tr.V),
                        static_cast<double>(c.T), 0.0, Relation::kNear});
  }
  return r;
}

Report run_check_all(const Common& common) {
  Report r;
  r.config = {{"seed", common.seed}, {"threads", common.threads}};
  r.table.columns = {"command", "check", "relation", "value", "target", "tol", "pass"};
  Json commands = Json::array();
  std::uint64_t failed = 0;
  auto collect = [&](const std::string& label, const Report& sub) {
    Json checks = Json::array();
    for (const auto& c : sub.checks) {
      Check named = c;
      named.name = label + ": " + c.name;
      failed += !c.passes();
      const Json j = c.to_json();
      checks.push_back(j);
      r.table.rows.push_back({label, c.name, j["relation"], c.value, c.target, c.tol, c.passes()});
      r.checks.push_back(std::move(named));
    }
    commands.push_back({{"command", label}, {"checks", std::move(checks)}});
  };
  collect("wht", run_wht(common, {}));
  collect("pgpb", run_pgpb(common, {}));
  collect("hog honest", run_hog(common, {}));
  collect("hog uniform", run_hog(common, {.device = "uniform"}));
  collect("sqforr D", run_sqforr(common, {}));
  collect("sqforr uniform", run_sqforr(common, {.estimator = "plain", .source = "uniform"}));
  collect("rhog D", run_rhog(common, {}));
  collect("rhog uniform", run_rhog(common, {.source = "uniform"}));
  collect("perturb", run_perturb(common, {}));
  collect("derandomize", run_derandomize(common, {}));
  LlqsvOptions uniform_list;
  uniform_list.list_case = "uniform";
  uniform_list.distinguisher = "outcome-only";
  collect("llqsv uniform", run_llqsv(common, uniform_list));
  collect("llqsv fourier", run_llqsv(common, {}));
  collect("protocol honest", run_protocol_command(common, {.claimed_q = "argmax"}));
  collect("protocol uniform", run_protocol_command(common, {.device = "uniform"}));
  collect("protocol argmax", run_protocol_command(common, {.device = "argmax",
                                                           .claimed_q = "argmax"}));
  r.result["commands"] = std::move(commands);
  r.result["checks"] = r.checks.size();
  r.result["failed"] = failed;
  return r;
}

}  // namespace certlab::cli
