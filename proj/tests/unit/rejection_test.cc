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
#include <numeric>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.h"
#include "test_util.h"

using namespace certlab;
using certlab::test_util::from_signs;

TEST(rejection, attempts) {
  EXPECT_EQ(rejection_attempts(1), 4u);
  EXPECT_EQ(rejection_attempts(8), 256u);
}

TEST(rejection, single_point_law) {
  const BooleanFunction g = from_signs(2, {-1, -1, 1, -1});
  const RejectionLaw law = rejection_law(g);
  EXPECT_EQ(law.accepting, 1u);
  const double expect = oracle::single_point_rejection(4, 16);
  EXPECT_NEAR(law(g, 2), expect, 1e-15);
  EXPECT_NEAR(expect, 0.992483, 1e-6);
  EXPECT_NEAR(law(g, 0), (1.0 - expect) / 3.0, 1e-15);
  EXPECT_NEAR(law.failure, std::pow(0.75, 16), 1e-15);
}

TEST(rejection, degenerate_tables) {
  // No accepting point: always the uniform fallback.
  const RejectionLaw none = rejection_law(BooleanFunction::constant(3, -1));
  EXPECT_EQ(none.failure, 1.0);
  EXPECT_NEAR(none.on_rejecting, 1.0 / 8, 1e-15);
  // Every point accepts: uniform again, no failure.
  const RejectionLaw all = rejection_law(BooleanFunction::constant(3, 1));
  EXPECT_EQ(all.failure, 0.0);
  EXPECT_NEAR(all.on_accepting, 1.0 / 8, 1e-15);
}

TEST(rejection, exact_distribution_sums_to_one) {
  CounterRng rng(1);
  for (int n = 1; n <= 8; ++n) {
    const BooleanFunction g = random_function(n, rng);
    const auto d = exact_distribution(g);
    EXPECT_NEAR(std::accumulate(d.begin(), d.end(), 0.0), 1.0, 1e-12);
    const RejectionLaw law = rejection_law(g);
    for (std::size_t x = 0; x < g.size(); ++x) EXPECT_EQ(d[x], law(g, x));
    if (law.accepting > 0) EXPECT_GE(law.on_accepting, law.on_rejecting);
  }
}

TEST(rejection, sampler_matches_exact_law) {
  CounterRng rng(2);
  for (int n : {2, 4}) {
    const BooleanFunction g = random_function(n, rng);
    const auto d = exact_distribution(g);
    std::vector<std::uint64_t> counts(g.size(), 0);
    for (int t = 0; t < 200000; ++t) counts[rejection_sample(g, rng).output]++;
    EXPECT_GT(chi_square_gof(counts, d).p_value, 0.01) << n;
  }
}

TEST(rejection, sparse_table_failure_rate) {
  const BooleanFunction g = from_signs(2, {-1, -1, 1, -1});
  CounterRng rng(3);
  std::uint64_t failed = 0;
  std::uint64_t attempts = 0;
  const int trials = 200000;
  for (int t = 0; t < trials; ++t) {
    const RejectionOutcome o = rejection_sample(g, rng);
    failed += !o.accepted;
    attempts += o.attempts_used;
    ASSERT_LE(o.attempts_used, 16u);
    if (o.accepted) ASSERT_EQ(o.output, 2u);
  }
  EXPECT_TRUE(wilson_interval(failed, trials).contains(std::pow(0.75, 16)));
}

TEST(rejection, uniform_outcomes_score_one) {
  const DistParams p{.n = 5, .c = 2.0};
  const MeanEstimate m =
      rhog_score(p, 20000, PairSource::kD, OutcomeSampler::kUniform, {.seed = 4});
  EXPECT_TRUE(m.ci().contains(1.0)) << m.mean;
}

TEST(rejection, fourier_outcomes_on_d_beat_one) {
  const DistParams p{.n = 4, .c = 0.5};
  const MeanEstimate honest =
      rhog_score(p, 40000, PairSource::kD, OutcomeSampler::kFourier, {.seed = 5});
  const double eps = p.epsilon();
  EXPECT_GT(honest.ci().lo, 1.0);
  EXPECT_GE(honest.mean, 1.0 + eps * eps / 8.0);
  const MeanEstimate uniform_pair =
      rhog_score(p, 40000, PairSource::kUniform, OutcomeSampler::kFourier, {.seed = 6});
  EXPECT_TRUE(uniform_pair.ci().contains(1.0)) << uniform_pair.mean;
}

TEST(rejection, rhog_is_thread_independent) {
  const DistParams p{.n = 4, .c = 1.0};
  const MeanEstimate a = rhog_score(p, 3000, PairSource::kD, OutcomeSampler::kFourier,
                                    {.seed = 7, .threads = 1});
  const MeanEstimate b = rhog_score(p, 3000, PairSource::kD, OutcomeSampler::kFourier,
                                    {.seed = 7, .threads = 3});
  EXPECT_EQ(a.mean, b.mean);
}

TEST(rejection, failure_check_against_exact_mean) {
  const DistParams p{.n = 3, .c = 1.0};
  const RejectionFailure r = rejection_failure_check(p, 100000, {.seed = 8});
  EXPECT_GT(r.exact_mean, 0.0);
  EXPECT_TRUE(r.failed.ci().contains(r.exact_mean))
      << r.failed.value() << " vs " << r.exact_mean;
}
