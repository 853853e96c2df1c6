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

// Squared Forrelation: the correlated Gaussian pair G', its Boolean image D,
// and the statistic phi(f, g) = sum_z fhat(z)^2 g(z).
//
// H below is always the orthonormal Hadamard matrix, H_ij = (-1)^{i.j}/sqrt(N),
// so that H^2 = I and Y = H X has the same per-coordinate variance as X.

#ifndef CERTLAB_SQFORRELATION_H_
#define CERTLAB_SQFORRELATION_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "certlab/boolfn.h"
#include "certlab/parallel.h"
#include "certlab/rng.h"
#include "certlab/stats.h"

namespace certlab {

struct DistParams {
  int n = 8;
  double c = 20.0;

  std::size_t N() const { return std::size_t{1} << n; }
  // 1 / (c ln N)
  double epsilon() const;
  // Throws unless 1 <= n <= 24, c > 0 and epsilon < 1.
  void validate() const;
};

// Z = (X, Y^2 - eps) with X iid N(0, eps) and Y = H X.
struct RealPair {
  std::vector<double> x;
  std::vector<double> yp;
};

struct BooleanPair {
  BooleanFunction f;
  BooleanFunction g;
};

// In place, v <- H v.
void orthonormal_hadamard(std::span<double> v);

RealPair sample_gprime(const DistParams& params, CounterRng& rng);

double trnc(double a);
std::vector<double> trnc(std::span<const double> v);

// True if any coordinate of X or Yp lies outside [-1, 1].
bool is_truncated(const RealPair& z);

// Coordinate i becomes +1 with probability (1 + trnc(z_i)) / 2.
BooleanFunction round_to_boolean(int n, std::span<const double> z,
                                 CounterRng& rng);
BooleanPair round_to_boolean(const RealPair& z, CounterRng& rng);

BooleanPair sample_d(const DistParams& params, CounterRng& rng);
BooleanPair sample_uniform_pair(int n, CounterRng& rng);

double phi(const BooleanPair& pair);
double phi(const BooleanFunction& f, const BooleanFunction& g);

// Probability that the one-query quantum distinguisher accepts: (1 + phi) / 2.
double acceptance(const BooleanPair& pair);

// E[phi(round(Z)) | Z], using multilinearity of phi in each rounded bit.
double phi_conditional(const RealPair& z);

enum class PhiEstimator { kPlain, kConditional };
enum class PairSource { kD, kUniform };

const char* phi_estimator_name(PhiEstimator e);
const char* pair_source_name(PairSource s);

MeanEstimate mean_phi_experiment(const DistParams& params,
                                 std::uint64_t trials, PhiEstimator estimator,
                                 PairSource source, const RunOptions& options);

// Pr[|sum_i Yp_i| >= 3 sqrt(N)] under G', against the bound 2 exp(-1/eps).
struct RowSumTail {
  ProportionEstimate exceed;
  double threshold = 0.0;
  double bound = 0.0;
  double max_abs_sum = 0.0;
};

RowSumTail row_sum_tail_check(const DistParams& params, std::uint64_t trials,
                              const RunOptions& options);

// Frequency of truncation under G' and of g's weight leaving
// [(1 - N^{-1/3}) N/2, (1 + N^{-1/3}) N/2] under D.
struct TruncationBalance {
  ProportionEstimate truncated;
  ProportionEstimate imbalanced;
  double truncation_bound = 0.0;  // 2 N^-2
  double imbalance_bound = 0.0;   // 5 N^-2
  double weight_lo = 0.0;
  double weight_hi = 0.0;
};

TruncationBalance truncation_balance_check(const DistParams& params,
                                           std::uint64_t trials,
                                           const RunOptions& options);

inline constexpr std::uint64_t kMaxDenseList = std::uint64_t{1} << 20;

// Visits T independent pairs in order. Pair t is drawn from
// CounterRng(seed, t / kTrialChunk + 1), so a list and the plain phi
// experiment with the same seed see the same pairs.
void for_each_pair(const DistParams& params, std::uint64_t T,
                   PairSource source, std::uint64_t seed,
                   const std::function<void(std::uint64_t, const BooleanPair&)>&
                       visit);

// Dense list; throws BudgetExceeded beyond kMaxDenseList pairs.
std::vector<BooleanPair> long_list_d(const DistParams& params, std::uint64_t T,
                                     PairSource source, std::uint64_t seed);

}  // namespace certlab

#endif  // CERTLAB_SQFORRELATION_H_
