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

#include <cmath>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.h"
#include "test_util.h"

using namespace certlab;
using certlab::test_util::error_code_of;
using certlab::test_util::from_signs;
using certlab::test_util::to_ints;

TEST(sqforrelation, params) {
  const DistParams p{.n = 8, .c = 20.0};
  EXPECT_EQ(p.N(), 256u);
  EXPECT_NEAR(p.epsilon(), 1.0 / (20.0 * std::log(256.0)), 1e-15);
  EXPECT_EQ(error_code_of([] { DistParams{.n = 0}.validate(); }), ErrorCode::kSizeLimit);
  EXPECT_EQ(error_code_of([] { DistParams{.n = 4, .c = -1.0}.validate(); }),
            ErrorCode::kInvalidArgument);
  // c ln N <= 1 gives eps >= 1.
  EXPECT_EQ(error_code_of([] { DistParams{.n = 1, .c = 1.0}.validate(); }),
            ErrorCode::kInvalidArgument);
}

TEST(sqforrelation, hadamard_matches_matrix_and_squares_to_identity) {
  CounterRng rng(1);
  for (std::size_t N : {2u, 8u, 32u}) {
    std::vector<double> v(N);
    for (auto& x : v) x = rng.normal();
    const auto H = oracle::hadamard_matrix(N);
    std::vector<double> w = v;
    orthonormal_hadamard(w);
    for (std::size_t i = 0; i < N; ++i) {
      double expect = 0.0;
      for (std::size_t j = 0; j < N; ++j) expect += H[i][j] * v[j];
      EXPECT_NEAR(w[i], expect, 1e-12);
    }
    orthonormal_hadamard(w);
    for (std::size_t i = 0; i < N; ++i) EXPECT_NEAR(w[i], v[i], 1e-12);
  }
}

TEST(sqforrelation, trnc_examples) {
  EXPECT_EQ(trnc(0.3), 0.3);
  EXPECT_EQ(trnc(1.7), 1.0);
  EXPECT_EQ(trnc(-2.0), -1.0);
  EXPECT_EQ(trnc(1.0), 1.0);
  const std::vector<double> v{-3.0, 0.5, 2.0};
  EXPECT_EQ(trnc(v), (std::vector<double>{-1.0, 0.5, 1.0}));
  EXPECT_FALSE(is_truncated({{0.5, -1.0}, {1.0, 0.0}}));
  EXPECT_TRUE(is_truncated({{0.5, -1.0}, {1.01, 0.0}}));
}

TEST(sqforrelation, gprime_structure) {
  const DistParams p{.n = 5, .c = 2.0};
  CounterRng rng(2);
  for (int t = 0; t < 20; ++t) {
    const RealPair z = sample_gprime(p, rng);
    ASSERT_EQ(z.x.size(), 32u);
    ASSERT_EQ(z.yp.size(), 32u);
    std::vector<double> y = z.x;
    orthonormal_hadamard(y);
    for (std::size_t i = 0; i < 32; ++i) {
      EXPECT_NEAR(z.yp[i], y[i] * y[i] - p.epsilon(), 1e-12);
    }
  }
}

TEST(sqforrelation, gprime_moments) {
  // E[X_i^2] = eps, E[Yp_i] = 0, Var[Yp_i] = 2 eps^2.
  const DistParams p{.n = 4, .c = 1.0};
  const double eps = p.epsilon();
  CounterRng rng(3);
  MeanAccumulator x2, yp, yp2;
  for (int t = 0; t < 40000; ++t) {
    const RealPair z = sample_gprime(p, rng);
    for (std::size_t i = 0; i < z.x.size(); ++i) {
      x2.add(z.x[i] * z.x[i]);
      yp.add(z.yp[i]);
      yp2.add(z.yp[i] * z.yp[i]);
    }
  }
  EXPECT_TRUE(x2.estimate().ci().contains(eps)) << x2.mean();
  EXPECT_TRUE(yp.estimate().ci().contains(0.0)) << yp.mean();
  EXPECT_TRUE(yp2.estimate().ci().contains(2 * eps * eps)) << yp2.mean();
}

TEST(sqforrelation, rounding_frequencies) {
  CounterRng rng(4);
  const std::vector<double> z{-1.0, -0.5, 0.0, 0.5, 1.0, 3.0, -0.2, 0.8};
  std::vector<int> plus(8, 0);
  const int trials = 40000;
  for (int t = 0; t < trials; ++t) {
    const BooleanFunction f = round_to_boolean(3, z, rng);
    for (std::size_t i = 0; i < 8; ++i) plus[i] += f[i] == 1;
  }
  for (std::size_t i = 0; i < 8; ++i) {
    const double p = (1.0 + trnc(z[i])) / 2.0;
    const Interval ci = wilson_interval(plus[i], trials);
    EXPECT_TRUE(ci.contains(p)) << i;
  }
  EXPECT_EQ(error_code_of([&] { round_to_boolean(2, z, rng); }),
            ErrorCode::kDimensionMismatch);
}

TEST(sqforrelation, phi_matches_dense_oracle) {
  CounterRng rng(5);
  for (int n = 1; n <= 6; ++n) {
    for (int t = 0; t < 10; ++t) {
      const BooleanPair pair = sample_uniform_pair(n, rng);
      EXPECT_NEAR(phi(pair), oracle::dense_phi(to_ints(pair.f), to_ints(pair.g)),
                  1e-12);
    }
  }
}

TEST(sqforrelation, phi_examples) {
  // sum_z fhat(z)^2 = 1, so a constant +1 g gives phi = 1.
  CounterRng rng(6);
  const BooleanFunction f = random_function(5, rng);
  EXPECT_EQ(phi(f, BooleanFunction::constant(5, 1)), 1.0);
  EXPECT_EQ(phi(f, BooleanFunction::constant(5, -1)), -1.0);
  const BooleanFunction chi = BooleanFunction::character(3, 5);
  const BooleanFunction g = from_signs(3, {1, 1, 1, 1, 1, -1, 1, 1});
  EXPECT_EQ(phi(chi, g), -1.0);
  EXPECT_EQ(acceptance({chi, g}), 0.0);
  EXPECT_EQ(acceptance({chi, BooleanFunction::constant(3, 1)}), 1.0);
  EXPECT_EQ(error_code_of([&] { phi(f, BooleanFunction::constant(4, 1)); }),
            ErrorCode::kDimensionMismatch);
}

TEST(sqforrelation, phi_is_odd_in_g) {
  CounterRng rng(7);
  for (int t = 0; t < 30; ++t) {
    const BooleanPair pair = sample_uniform_pair(6, rng);
    EXPECT_EQ(phi(pair.f, pair.g) + phi(pair.f, pair.g.times(BooleanFunction::constant(6, -1))), 0.0);
    EXPECT_GE(phi(pair), -1.0);
    EXPECT_LE(phi(pair), 1.0);
  }
}

TEST(sqforrelation, conditional_matches_dense_oracle) {
  const DistParams p{.n = 4, .c = 0.5};
  CounterRng rng(8);
  for (int t = 0; t < 20; ++t) {
    RealPair z = sample_gprime(p, rng);
    // Push some coordinates outside [-1, 1] so truncation is exercised.
    z.x[t % 16] *= 20.0;
    z.yp[(t + 3) % 16] = -4.0;
    EXPECT_NEAR(phi_conditional(z), oracle::dense_phi_conditional(z.x, z.yp), 1e-12);
  }
}

TEST(sqforrelation, conditional_is_mean_of_rounded_phi) {
  const DistParams p{.n = 3, .c = 0.7};
  CounterRng rng(9);
  const RealPair z = sample_gprime(p, rng);
  MeanAccumulator acc;
  for (int t = 0; t < 200000; ++t) acc.add(phi(round_to_boolean(z, rng)));
  EXPECT_TRUE(acc.estimate().ci().contains(phi_conditional(z)))
      << acc.mean() << " vs " << phi_conditional(z);
}

TEST(sqforrelation, uniform_pairs_have_mean_zero) {
  const DistParams p{.n = 6, .c = 5.0};
  for (auto e : {PhiEstimator::kPlain, PhiEstimator::kConditional}) {
    const MeanEstimate m =
        mean_phi_experiment(p, 20000, e, PairSource::kUniform, {.seed = 10});
    EXPECT_TRUE(m.ci().contains(0.0)) << phi_estimator_name(e) << " " << m.mean;
  }
}

TEST(sqforrelation, experiment_is_thread_independent) {
  const DistParams p{.n = 5, .c = 3.0};
  const MeanEstimate a = mean_phi_experiment(p, 3000, PhiEstimator::kPlain,
                                             PairSource::kD, {.seed = 11, .threads = 1});
  const MeanEstimate b = mean_phi_experiment(p, 3000, PhiEstimator::kPlain,
                                             PairSource::kD, {.seed = 11, .threads = 4});
  EXPECT_EQ(a.mean, b.mean);
  EXPECT_EQ(a.stddev, b.stddev);
}

TEST(sqforrelation, estimators_agree_on_d) {
  const DistParams p{.n = 5, .c = 2.0};
  const MeanEstimate plain =
      mean_phi_experiment(p, 60000, PhiEstimator::kPlain, PairSource::kD, {.seed = 12});
  const MeanEstimate cond = mean_phi_experiment(p, 60000, PhiEstimator::kConditional,
                                                PairSource::kD, {.seed = 13});
  EXPECT_GT(plain.mean, 0.0);
  EXPECT_LT(cond.half_width, plain.half_width);
  const double diff = plain.mean - cond.mean;
  EXPECT_LT(std::abs(diff), std::hypot(plain.half_width, cond.half_width));
}

TEST(sqforrelation, for_each_pair_matches_list_and_experiment) {
  const DistParams p{.n = 4, .c = 2.0};
  const auto list = long_list_d(p, 2500, PairSource::kD, 14);
  ASSERT_EQ(list.size(), 2500u);
  std::uint64_t seen = 0;
  MeanAccumulator acc;
  for_each_pair(p, 2500, PairSource::kD, 14, [&](std::uint64_t t, const BooleanPair& b) {
    EXPECT_EQ(t, seen++);
    EXPECT_EQ(b.f, list[t].f);
    EXPECT_EQ(b.g, list[t].g);
    acc.add(phi(b));
  });
  const MeanEstimate m =
      mean_phi_experiment(p, 2500, PhiEstimator::kPlain, PairSource::kD, {.seed = 14});
  EXPECT_NEAR(acc.mean(), m.mean, 1e-12);
  EXPECT_EQ(error_code_of([&] { long_list_d(p, kMaxDenseList + 1, PairSource::kD, 1); }),
            ErrorCode::kBudgetExceeded);
}

TEST(sqforrelation, tail_checks_report_bounds) {
  const DistParams p{.n = 6, .c = 20.0};
  const RowSumTail tail = row_sum_tail_check(p, 2000, {.seed = 15});
  EXPECT_EQ(tail.threshold, 3.0 * 8.0);
  EXPECT_NEAR(tail.bound, 2.0 * std::exp(-1.0 / p.epsilon()), 1e-300);
  EXPECT_EQ(tail.exceed.successes, 0u);
  EXPECT_GT(tail.max_abs_sum, 0.0);

  const TruncationBalance tb = truncation_balance_check(p, 2000, {.seed = 16});
  EXPECT_EQ(tb.truncation_bound, 2.0 / (64.0 * 64.0));
  EXPECT_EQ(tb.imbalance_bound, 5.0 / (64.0 * 64.0));
  EXPECT_NEAR(tb.weight_lo, (1.0 - 0.25) * 32.0, 1e-12);
  EXPECT_NEAR(tb.weight_hi, (1.0 + 0.25) * 32.0, 1e-12);
  EXPECT_EQ(tb.truncated.trials, 2000u);
  EXPECT_EQ(tb.truncated.successes, 0u);
}
