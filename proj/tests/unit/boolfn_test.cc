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

#include "certlab/boolfn.h"

#include <cmath>
#include <sstream>
#include <vector>

#include "certlab/error.h"
#include "certlab/rng.h"
#include "gtest/gtest.h"
#include "oracles.h"
#include "test_util.h"

using namespace certlab;

namespace {

using certlab::test_util::from_signs;

std::vector<int> as_ints(const BooleanFunction& f) {
  return std::vector<int>(f.values().begin(), f.values().end());
}

ErrorCode code_of(auto&& fn) { return certlab::test_util::error_code_of(fn); }

}  // namespace

TEST(boolfn, construction_checks) {
  EXPECT_EQ(code_of([] { from_signs(2, {1, 1, 1}); }), ErrorCode::kDimensionMismatch);
  EXPECT_EQ(code_of([] { from_signs(2, {1, 1, 0, 1}); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { BooleanFunction::constant(25, 1); }), ErrorCode::kSizeLimit);
  EXPECT_EQ(code_of([] { BooleanFunction::constant(0, 1); }), ErrorCode::kSizeLimit);
  CounterRng rng(1);
  EXPECT_EQ(code_of([&] { random_function(25, rng); }), ErrorCode::kSizeLimit);
}

TEST(boolfn, constant_has_delta_spectrum) {
  const FourierSpectrum s = wht(BooleanFunction::constant(3, 1));
  EXPECT_EQ(s[0], 1.0);
  for (std::size_t z = 1; z < 8; ++z) EXPECT_EQ(s[z], 0.0);
}

TEST(boolfn, character_has_unit_coefficient) {
  for (std::uint64_t s = 0; s < 16; ++s) {
    const FourierSpectrum spec = wht(BooleanFunction::character(4, s));
    for (std::size_t z = 0; z < 16; ++z) EXPECT_EQ(spec[z], z == s ? 1.0 : 0.0);
  }
}

TEST(boolfn, small_example_spectrum) {
  const FourierSpectrum s = wht(from_signs(2, {1, 1, 1, -1}));
  EXPECT_EQ(s[0], 0.5);
  EXPECT_EQ(s[1], 0.5);
  EXPECT_EQ(s[2], 0.5);
  EXPECT_EQ(s[3], -0.5);
}

TEST(boolfn, wht_matches_naive_transform) {
  CounterRng rng(2024);
  for (int n = 1; n <= 9; ++n) {
    const BooleanFunction f = random_function(n, rng);
    const auto naive = oracle::naive_scaled_wht(as_ints(f));
    const auto fast = wht_integer(f);
    for (std::size_t z = 0; z < f.size(); ++z) ASSERT_EQ(fast[z], naive[z]);
  }
}

TEST(boolfn, double_transform_recovers_function) {
  CounterRng rng(7);
  const BooleanFunction f = random_function(10, rng);
  auto k = wht_integer(f);
  for (auto v : k) ASSERT_EQ((v - static_cast<std::int32_t>(f.size())) % 2, 0);
  fwht_inplace(std::span<std::int32_t>(k));
  for (std::size_t x = 0; x < f.size(); ++x) {
    ASSERT_EQ(k[x], f[x] * static_cast<std::int32_t>(f.size()));
  }
}

TEST(boolfn, parseval_and_range) {
  CounterRng rng(8);
  for (int n : {1, 4, 12, 16}) {
    const FourierSpectrum s = wht(random_function(n, rng));
    double total = 0.0;
    for (double c : s.coeffs()) {
      ASSERT_LE(std::abs(c), 1.0);
      total += c * c;
    }
    EXPECT_NEAR(total, 1.0, 1e-12);
  }
}

TEST(boolfn, classify_examples) {
  EXPECT_EQ(classify(0.0, 64), Heaviness::kLight);
  EXPECT_EQ(classify(0.5, 4), Heaviness::kLight);
  EXPECT_EQ(classify(0.75, 16), Heaviness::kVeryHeavy);
  EXPECT_EQ(classify(0.5, 16), Heaviness::kSlightlyHeavy);
  EXPECT_EQ(classify(-0.5, 16), Heaviness::kSlightlyHeavy);
  EXPECT_EQ(classify(0.3, 16), Heaviness::kSlightlyHeavy);
}

TEST(boolfn, classify_scaled_boundaries) {
  // N = 64: |k| <= 8 is light, |k| <= 16 slightly heavy.
  EXPECT_EQ(classify_scaled(8, 64), Heaviness::kLight);
  EXPECT_EQ(classify_scaled(-8, 64), Heaviness::kLight);
  EXPECT_EQ(classify_scaled(10, 64), Heaviness::kSlightlyHeavy);
  EXPECT_EQ(classify_scaled(16, 64), Heaviness::kSlightlyHeavy);
  EXPECT_EQ(classify_scaled(18, 64), Heaviness::kVeryHeavy);
  for (std::int64_t k = -64; k <= 64; k += 2) {
    EXPECT_EQ(classify_scaled(k, 64), classify(k / 64.0, 64)) << k;
  }
}

TEST(boolfn, p_set_examples) {
  const BooleanFunction f = from_signs(2, {1, 1, 1, -1});
  EXPECT_EQ(p_set(f, 0), (std::vector<std::size_t>{0, 1, 2}));
  const BooleanFunction chi = BooleanFunction::character(3, 5);
  EXPECT_EQ(p_set(chi, 5).size(), 8u);
  EXPECT_EQ(p_set(BooleanFunction::constant(3, 1), 0).size(), 8u);
}

TEST(boolfn, p_set_size_identity) {
  CounterRng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const BooleanFunction f = random_function(6, rng);
    const auto k = wht_integer(f);
    for (std::size_t z = 0; z < f.size(); ++z) {
      if (k[z] == 0) continue;
      ASSERT_EQ(2 * p_set(f, z).size(), f.size() + std::abs(k[z]));
    }
  }
}

TEST(boolfn, p_set_zero_coefficient) {
  const BooleanFunction f = from_signs(1, {1, -1});  // fhat(0) = 0
  EXPECT_EQ(code_of([&] { p_set(f, 0); }), ErrorCode::kZeroCoefficient);
  EXPECT_EQ(p_set(f, 0, 1), (std::vector<std::size_t>{0}));
  EXPECT_EQ(p_set(f, 0, -1), (std::vector<std::size_t>{1}));
}

TEST(boolfn, fourth_moment_examples) {
  EXPECT_EQ(fourth_moment(wht(BooleanFunction::character(5, 3))), 1.0);
  EXPECT_DOUBLE_EQ(fourth_moment(wht(from_signs(2, {1, 1, 1, -1}))), 0.25);
}

TEST(boolfn, fourth_moment_average_at_n2) {
  double total = 0.0;
  for (std::uint64_t bits = 0; bits < 16; ++bits) {
    const auto t = oracle::table_from_bits(bits, 4);
    total += fourth_moment(wht(from_signs(2, t)));
  }
  EXPECT_DOUBLE_EQ(total / 16.0, 0.625);
  EXPECT_DOUBLE_EQ(oracle::exhaustive_fourth_moment(2), 0.625);
}

TEST(boolfn, random_function_is_reproducible) {
  CounterRng a(99);
  CounterRng b(99);
  EXPECT_EQ(random_function(3, a), random_function(3, b));
  EXPECT_EQ(random_function(11, a), random_function(11, b));
}

TEST(boolfn, random_function_statistics) {
  CounterRng rng(5);
  const int n = 4;
  const int draws = 20000;
  std::vector<int> plus(16, 0);
  std::vector<double> sq(16, 0.0);
  for (int t = 0; t < draws; ++t) {
    const BooleanFunction f = random_function(n, rng);
    const FourierSpectrum s = wht(f);
    for (std::size_t x = 0; x < 16; ++x) {
      plus[x] += f[x] > 0;
      sq[x] += s[x] * s[x];
    }
  }
  // Pr[f(x) = +1] = 1/2 with sd 0.0035. E fhat^2 = 1/16, and with
  // Var[k^2] = 2N^2 - 2N for k = N fhat the mean has sd 0.0006.
  for (std::size_t x = 0; x < 16; ++x) {
    EXPECT_NEAR(plus[x] / double(draws), 0.5, 4 * 0.0036);
    EXPECT_NEAR(sq[x] / draws, 1.0 / 16, 4 * 0.0006);
  }
}

TEST(boolfn, flipped_and_times) {
  const BooleanFunction f = from_signs(2, {1, 1, 1, -1});
  const std::vector<std::size_t> pos = {0, 3};
  EXPECT_EQ(f.flipped(pos), from_signs(2, {-1, 1, 1, 1}));
  EXPECT_EQ(f.times(BooleanFunction::character(2, 3)), from_signs(2, {1, -1, -1, -1}));
  EXPECT_EQ(f.count_plus(), 3u);
  EXPECT_EQ(code_of([&] { f.times(BooleanFunction::constant(3, 1)); }),
            ErrorCode::kDimensionMismatch);
}

TEST(boolfn, bfn_round_trip) {
  CounterRng rng(1);
  for (int n : {1, 3, 4, 9}) {
    const BooleanFunction f = random_function(n, rng);
    std::stringstream io;
    write_bfn(io, f);
    EXPECT_EQ(io.str().size(), 8 + (f.size() + 7) / 8);
    EXPECT_EQ(read_bfn(io), f);
  }
}

TEST(boolfn, bfn_layout) {
  std::stringstream io;
  write_bfn(io, from_signs(2, {1, -1, -1, 1}));
  const std::string bytes = io.str();
  ASSERT_EQ(bytes.size(), 9u);
  EXPECT_EQ(bytes.substr(0, 4), "BFN1");
  EXPECT_EQ(bytes[4], 2);
  EXPECT_EQ(bytes[5], 0);
  EXPECT_EQ(bytes[8], 0b0110);
}

TEST(boolfn, bfn_rejects_bad_input) {
  std::stringstream bad_magic("XXXX");
  EXPECT_EQ(code_of([&] { read_bfn(bad_magic); }), ErrorCode::kFormat);
  std::stringstream truncated(std::string("BFN1\x03\x00\x00\x00", 8));
  EXPECT_EQ(code_of([&] { read_bfn(truncated); }), ErrorCode::kFormat);
  std::stringstream big_n(std::string("BFN1\x20\x00\x00\x00", 8));
  EXPECT_EQ(code_of([&] { read_bfn(big_n); }), ErrorCode::kFormat);
}
