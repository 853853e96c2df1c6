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

// The capped rejection sampler R_g: draw uniform x until g(x) = +1, giving up
// after 4 n^2 attempts and returning a fresh uniform point instead.

#ifndef CERTLAB_REJECTION_H_
#define CERTLAB_REJECTION_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "certlab/boolfn.h"
#include "certlab/parallel.h"
#include "certlab/rng.h"
#include "certlab/sqforrelation.h"
#include "certlab/stats.h"

namespace certlab {

// 4 n^2
std::uint64_t rejection_attempts(int n);

struct RejectionOutcome {
  std::size_t output = 0;
  bool accepted = false;
  std::uint64_t attempts_used = 0;
};

RejectionOutcome rejection_sample(const BooleanFunction& g, CounterRng& rng);

// The law of R_g takes two values: one on accepting points, one elsewhere.
struct RejectionLaw {
  double on_accepting = 0.0;
  double on_rejecting = 0.0;
  double failure = 0.0;  // (1 - a)^K, probability that every attempt fails
  std::size_t accepting = 0;

  double operator()(const BooleanFunction& g, std::size_t x) const {
    return g[x] > 0 ? on_accepting : on_rejecting;
  }
};

RejectionLaw rejection_law(const BooleanFunction& g);
std::vector<double> exact_distribution(const BooleanFunction& g);

enum class OutcomeSampler { kFourier, kUniform };

const char* outcome_sampler_name(OutcomeSampler s);

// N * E[Pr[R_g outputs x]] with (f, g) from `source` and x drawn from f by
// `sampler`. The honest target is at least 1 + eps^2 / 8.
MeanEstimate rhog_score(const DistParams& params, std::uint64_t trials,
                        PairSource source, OutcomeSampler sampler,
                        const RunOptions& options);

// Observed rejection failures for g drawn from D, alongside the exact mean
// failure probability E[(1 - a)^K].
struct RejectionFailure {
  ProportionEstimate failed;
  double exact_mean = 0.0;
};

RejectionFailure rejection_failure_check(const DistParams& params,
                                         std::uint64_t trials,
                                         const RunOptions& options);

}  // namespace certlab

#endif  // CERTLAB_REJECTION_H_
