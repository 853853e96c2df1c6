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

// Monte Carlo bookkeeping: proportions with Wilson intervals, streaming means,
// chi-square goodness of fit and a small adaptive quadrature.

#ifndef CERTLAB_STATS_H_
#define CERTLAB_STATS_H_

#include <cstdint>
#include <functional>
#include <span>

namespace certlab {

// Two-sided 99% standard normal quantile.
inline constexpr double kZ99 = 2.5758293035489004;

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double x) const { return lo <= x && x <= hi; }
  double half_width() const { return 0.5 * (hi - lo); }
};

Interval wilson_interval(std::uint64_t successes, std::uint64_t trials,
                         double z = kZ99);

struct ProportionEstimate {
  std::uint64_t successes = 0;
  std::uint64_t trials = 0;

  double value() const {
    return trials == 0 ? 0.0
                       : static_cast<double>(successes) /
                             static_cast<double>(trials);
  }
  Interval ci(double z = kZ99) const {
    return wilson_interval(successes, trials, z);
  }
  void merge(const ProportionEstimate& other) {
    successes += other.successes;
    trials += other.trials;
  }
};

struct MeanEstimate {
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation of one trial
  std::uint64_t trials = 0;
  double half_width = 0.0;  // z * stddev / sqrt(trials)

  Interval ci() const { return {mean - half_width, mean + half_width}; }
};

// Welford accumulator; merge() uses Chan's pairwise update so that merging
// per-chunk partials in a fixed order gives a thread-count-independent result.
class MeanAccumulator {
 public:
  void add(double x);
  void merge(const MeanAccumulator& other);

  std::uint64_t count() const { return count_; }
  double mean() const { return mean_; }
  double variance() const;  // unbiased
  MeanEstimate estimate(double z = kZ99) const;

 private:
  std::uint64_t count_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

struct ChiSquareResult {
  double statistic = 0.0;
  int dof = 0;
  double p_value = 1.0;
};

// Pearson goodness of fit of `observed` counts against `probabilities`.
// Cells with expected count below `min_expected` are pooled. A positive count
// in a zero-probability cell yields p_value = 0.
ChiSquareResult chi_square_gof(std::span<const std::uint64_t> observed,
                               std::span<const double> probabilities,
                               double min_expected = 5.0);

// Upper tail of the chi-square distribution with `dof` degrees of freedom.
double chi_square_sf(double statistic, int dof);

double normal_pdf(double x);
double normal_cdf(double x);

// log of the binomial coefficient C(n, k) via lgamma.
double log_binomial(double n, double k);

// Adaptive Simpson quadrature with Richardson correction.
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tolerance);

}  // namespace certlab

#endif  // CERTLAB_STATS_H_
