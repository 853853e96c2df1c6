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

#include "certlab/stats.h"

#include <cmath>
#include <vector>

#include "certlab/error.h"
#include "gtest/gtest.h"

using namespace certlab;

TEST(stats, wilson_interval_values) {
  const Interval ci = wilson_interval(30, 100);
  EXPECT_NEAR(ci.lo, 0.19746065620990516, 1e-12);
  EXPECT_NEAR(ci.hi, 0.427427618876424, 1e-12);
  const Interval zero = wilson_interval(0, 50);
  EXPECT_NEAR(zero.lo, 0.0, 1e-15);
  EXPECT_NEAR(zero.hi, 0.11715209171762796, 1e-12);
  EXPECT_TRUE(zero.contains(0.0));
}

TEST(stats, proportion_merge) {
  ProportionEstimate a{3, 10};
  a.merge({7, 30});
  EXPECT_EQ(a.successes, 10u);
  EXPECT_EQ(a.trials, 40u);
  EXPECT_DOUBLE_EQ(a.value(), 0.25);
  EXPECT_EQ(ProportionEstimate{}.value(), 0.0);
}

TEST(stats, mean_accumulator_merge_matches_sequential) {
  MeanAccumulator whole;
  MeanAccumulator left;
  MeanAccumulator right;
  for (int i = 0; i < 100; ++i) {
    const double x = std::sin(i * 0.7) * 3.0 + i * 0.01;
    whole.add(x);
    (i < 37 ? left : right).add(x);
  }
  left.merge(right);
  EXPECT_EQ(left.count(), 100u);
  EXPECT_NEAR(left.mean(), whole.mean(), 1e-12);
  EXPECT_NEAR(left.variance(), whole.variance(), 1e-10);

  MeanAccumulator empty;
  empty.merge(whole);
  EXPECT_NEAR(empty.mean(), whole.mean(), 1e-15);
}

TEST(stats, mean_estimate_half_width) {
  MeanAccumulator acc;
  for (double x : {1.0, 2.0, 3.0, 4.0}) acc.add(x);
  const MeanEstimate e = acc.estimate();
  EXPECT_DOUBLE_EQ(e.mean, 2.5);
  EXPECT_NEAR(e.stddev, std::sqrt(5.0 / 3.0), 1e-12);
  EXPECT_NEAR(e.half_width, kZ99 * std::sqrt(5.0 / 3.0) / 2.0, 1e-12);
  EXPECT_TRUE(e.ci().contains(2.5));
}

TEST(stats, chi_square_survival) {
  EXPECT_NEAR(chi_square_sf(10.0, 5), 0.07523524614651217, 1e-10);
  EXPECT_NEAR(chi_square_sf(3.841458820694124, 1), 0.05, 1e-10);
}

TEST(stats, chi_square_gof_uniform) {
  const std::vector<std::uint64_t> obs = {18, 22, 30, 30};
  const std::vector<double> p(4, 0.25);
  const ChiSquareResult r = chi_square_gof(obs, p);
  EXPECT_NEAR(r.statistic, 4.32, 1e-12);
  EXPECT_EQ(r.dof, 3);
  EXPECT_NEAR(r.p_value, 0.22891886433610517, 1e-9);
}

TEST(stats, chi_square_gof_pools_small_cells) {
  // Cells 2..4 expect 1 each and are pooled into one cell of expectation 3,
  // which is then merged with the tail.
  const std::vector<std::uint64_t> obs = {48, 47, 2, 1, 2};
  const std::vector<double> p = {0.485, 0.485, 0.01, 0.01, 0.01};
  const ChiSquareResult r = chi_square_gof(obs, p);
  EXPECT_LT(r.dof, 4);
  EXPECT_GT(r.p_value, 0.01);
}

TEST(stats, chi_square_gof_impossible_cell) {
  const std::vector<std::uint64_t> obs = {10, 1};
  const std::vector<double> p = {1.0, 0.0};
  EXPECT_EQ(chi_square_gof(obs, p).p_value, 0.0);
}

TEST(stats, chi_square_gof_length_mismatch) {
  const std::vector<std::uint64_t> obs = {1, 2};
  const std::vector<double> p = {1.0};
  EXPECT_THROW(chi_square_gof(obs, p), Error);
}

TEST(stats, normal_functions) {
  EXPECT_NEAR(normal_cdf(1.5), 0.9331927987311419, 1e-14);
  EXPECT_NEAR(normal_pdf(0.0), 1.0 / std::sqrt(2.0 * M_PI), 1e-15);
}

TEST(stats, log_binomial) {
  EXPECT_NEAR(log_binomial(10, 3), std::log(120.0), 1e-12);
  EXPECT_NEAR(log_binomial(7, 0), 0.0, 1e-12);
}

TEST(stats, adaptive_simpson_integrates) {
  EXPECT_NEAR(adaptive_simpson([](double x) { return x * x * x; }, 0, 2, 1e-12),
              4.0, 1e-12);
  EXPECT_NEAR(adaptive_simpson([](double x) { return std::exp(-x); }, 0, 5, 1e-12),
              1.0 - std::exp(-5.0), 1e-11);
}
