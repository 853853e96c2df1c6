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

#include "certlab/rejection.h"

#include <cmath>

#include "certlab/device.h"
#include "certlab/error.h"

namespace certlab {

std::uint64_t rejection_attempts(int n) {
  return 4 * static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n);
}

RejectionOutcome rejection_sample(const BooleanFunction& g, CounterRng& rng) {
  const std::uint64_t K = rejection_attempts(g.n());
  for (std::uint64_t k = 1; k <= K; ++k) {
    const auto x = static_cast<std::size_t>(rng.below(g.size()));
    if (g[x] > 0) return {x, true, k};
  }
  return {static_cast<std::size_t>(rng.below(g.size())), false, K};
}

RejectionLaw rejection_law(const BooleanFunction& g) {
  const double N = static_cast<double>(g.size());
  const std::size_t accepting = g.count_plus();
  const double a = static_cast<double>(accepting) / N;
  const double K = static_cast<double>(rejection_attempts(g.n()));
  RejectionLaw law;
  law.accepting = accepting;
  law.failure = std::pow(1.0 - a, K);
  law.on_rejecting = law.failure / N;
  law.on_accepting =
      accepting == 0 ? law.on_rejecting
                     : (1.0 - law.failure) / (a * N) + law.failure / N;
  return law;
}

std::vector<double> exact_distribution(const BooleanFunction& g) {
  const RejectionLaw law = rejection_law(g);
  std::vector<double> d(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) d[x] = law(g, x);
  return d;
}

const char* outcome_sampler_name(OutcomeSampler s) {
  return s == OutcomeSampler::kFourier ? "fourier" : "uniform";
}

MeanEstimate rhog_score(const DistParams& params, std::uint64_t trials,
                        PairSource source, OutcomeSampler sampler,
                        const RunOptions& options) {
  params.validate();
  if (trials == 0) {
    throw Error(ErrorCode::kInvalidArgument, "trials must be at least 1");
  }
  const double N = static_cast<double>(params.N());
  const auto partials = run_chunks<MeanAccumulator>(
      trials, kTrialChunk, options.threads,
      [&](std::uint64_t chunk, std::uint64_t begin, std::uint64_t end) {
        CounterRng rng(options.seed, chunk + 1);
        MeanAccumulator acc;
        for (std::uint64_t t = begin; t < end; ++t) {
          const BooleanPair pair = source == PairSource::kD
                                       ? sample_d(params, rng)
                                       : sample_uniform_pair(params.n, rng);
          std::size_t x = 0;
          if (sampler == OutcomeSampler::kFourier) {
            x = FourierSampler(wht(pair.f))(rng);
          } else {
            x = static_cast<std::size_t>(rng.below(pair.f.size()));
          }
          acc.add(N * rejection_law(pair.g)(pair.g, x));
        }
        return acc;
      });
  MeanAccumulator total;
  for (const auto& p : partials) total.merge(p);
  return total.estimate();
}

RejectionFailure rejection_failure_check(const DistParams& params,
                                         std::uint64_t trials,
                                         const RunOptions& options) {
  params.validate();
  struct Partial {
    ProportionEstimate failed;
    MeanAccumulator exact;
  };
  const auto partials = run_chunks<Partial>(
      trials, kTrialChunk, options.threads,
      [&](std::uint64_t chunk, std::uint64_t begin, std::uint64_t end) {
        CounterRng rng(options.seed, chunk + 1);
        Partial part;
        for (std::uint64_t t = begin; t < end; ++t) {
          const BooleanPair pair = sample_d(params, rng);
          part.failed.trials++;
          part.failed.successes += !rejection_sample(pair.g, rng).accepted;
          part.exact.add(rejection_law(pair.g).failure);
        }
        return part;
      });
  RejectionFailure out;
  MeanAccumulator exact;
  for (const auto& p : partials) {
    out.failed.merge(p.failed);
    exact.merge(p.exact);
  }
  out.exact_mean = exact.mean();
  return out;
}

}  // namespace certlab
