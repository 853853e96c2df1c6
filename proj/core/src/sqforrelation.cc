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

#include "certlab/sqforrelation.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "certlab/error.h"

namespace certlab {

double DistParams::epsilon() const {
  return 1.0 / (c * std::log(static_cast<double>(N())));
}

void DistParams::validate() const {
  if (n < 1 || n > kMaxInputBits) {
    throw Error(ErrorCode::kSizeLimit, "n must lie in [1, 24]");
  }
  if (!(c > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "c must be positive");
  }
  if (!(epsilon() < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "epsilon = 1/(c ln N) must be below 1, got " +
                    std::to_string(epsilon()));
  }
}

void orthonormal_hadamard(std::span<double> v) {
  fwht_inplace(v);
  const double scale = 1.0 / std::sqrt(static_cast<double>(v.size()));
  for (double& x : v) x *= scale;
}

RealPair sample_gprime(const DistParams& params, CounterRng& rng) {
  params.validate();
  const std::size_t N = params.N();
  const double eps = params.epsilon();
  const double sd = std::sqrt(eps);
  RealPair z;
  z.x.resize(N);
  for (double& v : z.x) v = sd * rng.normal();
  z.yp = z.x;
  orthonormal_hadamard(z.yp);
  for (double& v : z.yp) v = v * v - eps;
  return z;
}

double trnc(double a) { return std::clamp(a, -1.0, 1.0); }

std::vector<double> trnc(std::span<const double> v) {
  std::vector<double> out(v.size());
  std::transform(v.begin(), v.end(), out.begin(),
                 [](double a) { return trnc(a); });
  return out;
}

bool is_truncated(const RealPair& z) {
  auto outside = [](double a) { return a < -1.0 || a > 1.0; };
  return std::any_of(z.x.begin(), z.x.end(), outside) ||
         std::any_of(z.yp.begin(), z.yp.end(), outside);
}

BooleanFunction round_to_boolean(int n, std::span<const double> z,
                                 CounterRng& rng) {
  std::vector<std::int8_t> values(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    const double p = 0.5 * (1.0 + trnc(z[i]));
    values[i] = rng.uniform01() < p ? 1 : -1;
  }
  return BooleanFunction(n, std::move(values));
}

BooleanPair round_to_boolean(const RealPair& z, CounterRng& rng) {
  const int n = std::countr_zero(z.x.size());
  BooleanFunction f = round_to_boolean(n, z.x, rng);
  BooleanFunction g = round_to_boolean(n, z.yp, rng);
  return {std::move(f), std::move(g)};
}

BooleanPair sample_d(const DistParams& params, CounterRng& rng) {
  return round_to_boolean(sample_gprime(params, rng), rng);
}

BooleanPair sample_uniform_pair(int n, CounterRng& rng) {
  BooleanFunction f = random_function(n, rng);
  BooleanFunction g = random_function(n, rng);
  return {std::move(f), std::move(g)};
}

double phi(const BooleanFunction& f, const BooleanFunction& g) {
  if (f.n() != g.n()) {
    throw Error(ErrorCode::kDimensionMismatch, "f and g differ in n");
  }
  const auto k = wht_integer(f);
  std::int64_t sum = 0;
  for (std::size_t z = 0; z < k.size(); ++z) {
    sum += static_cast<std::int64_t>(k[z]) * k[z] * g[z];
  }
  const double N = static_cast<double>(f.size());
  return static_cast<double>(sum) / (N * N);
}

double phi(const BooleanPair& pair) { return phi(pair.f, pair.g); }

double acceptance(const BooleanPair& pair) { return 0.5 * (1.0 + phi(pair)); }

double phi_conditional(const RealPair& z) {
  const std::size_t N = z.x.size();
  if (z.yp.size() != N) {
    throw Error(ErrorCode::kDimensionMismatch, "X and Yp differ in length");
  }
  std::vector<double> t = trnc(z.x);
  double spread = 0.0;
  for (double v : t) spread += 1.0 - v * v;
  const double inv_n = 1.0 / static_cast<double>(N);
  spread *= inv_n;  // sum_j H_ij^2 (1 - t_j^2)
  orthonormal_hadamard(t);
  double sum = 0.0;
  for (std::size_t i = 0; i < N; ++i) {
    sum += (t[i] * t[i] + spread) * trnc(z.yp[i]);
  }
  return sum * inv_n;
}

const char* phi_estimator_name(PhiEstimator e) {
  return e == PhiEstimator::kPlain ? "plain" : "conditional";
}

const char* pair_source_name(PairSource s) {
  return s == PairSource::kD ? "D" : "uniform";
}

MeanEstimate mean_phi_experiment(const DistParams& params,
                                 std::uint64_t trials, PhiEstimator estimator,
                                 PairSource source,
                                 const RunOptions& options) {
  params.validate();
  if (trials == 0) {
    throw Error(ErrorCode::kInvalidArgument, "trials must be at least 1");
  }
  const auto partials = run_chunks<MeanAccumulator>(
      trials, kTrialChunk, options.threads,
      [&](std::uint64_t chunk, std::uint64_t begin, std::uint64_t end) {
        CounterRng rng(options.seed, chunk + 1);
        MeanAccumulator acc;
        for (std::uint64_t t = begin; t < end; ++t) {
          if (source == PairSource::kUniform) {
            // Uniform +-1 vectors round deterministically, so both
            // estimators coincide.
            acc.add(phi(sample_uniform_pair(params.n, rng)));
          } else if (estimator == PhiEstimator::kPlain) {
            acc.add(phi(sample_d(params, rng)));
          } else {
            acc.add(phi_conditional(sample_gprime(params, rng)));
          }
        }
        return acc;
      });
  MeanAccumulator total;
  for (const auto& p : partials) total.merge(p);
  return total.estimate();
}

RowSumTail row_sum_tail_check(const DistParams& params, std::uint64_t trials,
                              const RunOptions& options) {
  params.validate();
  struct Partial {
    ProportionEstimate exceed;
    double max_abs = 0.0;
  };
  const double threshold = 3.0 * std::sqrt(static_cast<double>(params.N()));
  const auto partials = run_chunks<Partial>(
      trials, kTrialChunk, options.threads,
      [&](std::uint64_t chunk, std::uint64_t begin, std::uint64_t end) {
        CounterRng rng(options.seed, chunk + 1);
        Partial part;
        for (std::uint64_t t = begin; t < end; ++t) {
          const RealPair z = sample_gprime(params, rng);
          double s = 0.0;
          for (double v : z.yp) s += v;
          part.exceed.trials++;
          part.exceed.successes += std::abs(s) >= threshold;
          part.max_abs = std::max(part.max_abs, std::abs(s));
        }
        return part;
      });
  RowSumTail out;
  out.threshold = threshold;
  out.bound = 2.0 * std::exp(-1.0 / params.epsilon());
  for (const auto& p : partials) {
    out.exceed.merge(p.exceed);
    out.max_abs_sum = std::max(out.max_abs_sum, p.max_abs);
  }
  return out;
}

TruncationBalance truncation_balance_check(const DistParams& params,
                                           std::uint64_t trials,
                                           const RunOptions& options) {
  params.validate();
  const double N = static_cast<double>(params.N());
  const double delta = std::cbrt(1.0 / N);
  TruncationBalance out;
  out.truncation_bound = 2.0 / (N * N);
  out.imbalance_bound = 5.0 / (N * N);
  out.weight_lo = (1.0 - delta) * N / 2.0;
  out.weight_hi = (1.0 + delta) * N / 2.0;
  struct Partial {
    ProportionEstimate truncated;
    ProportionEstimate imbalanced;
  };
  const auto partials = run_chunks<Partial>(
      trials, kTrialChunk, options.threads,
      [&](std::uint64_t chunk, std::uint64_t begin, std::uint64_t end) {
        CounterRng rng(options.seed, chunk + 1);
        Partial part;
        for (std::uint64_t t = begin; t < end; ++t) {
          const RealPair z = sample_gprime(params, rng);
          const BooleanPair pair = round_to_boolean(z, rng);
          const auto weight = static_cast<double>(pair.g.count_plus());
          part.truncated.trials++;
          part.truncated.successes += is_truncated(z);
          part.imbalanced.trials++;
          part.imbalanced.successes +=
              weight < out.weight_lo || weight > out.weight_hi;
        }
        return part;
      });
  for (const auto& p : partials) {
    out.truncated.merge(p.truncated);
    out.imbalanced.merge(p.imbalanced);
  }
  return out;
}

void for_each_pair(
    const DistParams& params, std::uint64_t T, PairSource source,
    std::uint64_t seed,
    const std::function<void(std::uint64_t, const BooleanPair&)>& visit) {
  params.validate();
  for (std::uint64_t chunk = 0; chunk * kTrialChunk < T; ++chunk) {
    CounterRng rng(seed, chunk + 1);
    const std::uint64_t end = std::min(T, (chunk + 1) * kTrialChunk);
    for (std::uint64_t t = chunk * kTrialChunk; t < end; ++t) {
      visit(t, source == PairSource::kD ? sample_d(params, rng)
                                        : sample_uniform_pair(params.n, rng));
    }
  }
}

std::vector<BooleanPair> long_list_d(const DistParams& params, std::uint64_t T,
                                     PairSource source, std::uint64_t seed) {
  if (T > kMaxDenseList) {
    throw Error(ErrorCode::kBudgetExceeded,
                "dense lists hold at most 2^20 pairs; use for_each_pair");
  }
  std::vector<BooleanPair> out;
  out.reserve(T);
  for_each_pair(params, T, source, seed,
                [&](std::uint64_t, const BooleanPair& p) { out.push_back(p); });
  return out;
}

}  // namespace certlab
