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
#include <limits>
#include <numbers>
#include <vector>

#include <boost/math/special_functions/gamma.hpp>

#include "certlab/error.h"

namespace certlab {

Interval wilson_interval(std::uint64_t successes, std::uint64_t trials,
                         double z) {
  if (trials == 0) return {0.0, 1.0};
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double spread =
      z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  return {std::max(0.0, center - spread), std::min(1.0, center + spread)};
}

void MeanAccumulator::add(double x) {
  ++count_;
  const double delta = x - mean_;
  mean_ += delta / static_cast<double>(count_);
  m2_ += delta * (x - mean_);
}

void MeanAccumulator::merge(const MeanAccumulator& other) {
  if (other.count_ == 0) return;
  if (count_ == 0) {
    *this = other;
    return;
  }
  const double na = static_cast<double>(count_);
  const double nb = static_cast<double>(other.count_);
  const double n = na + nb;
  const double delta = other.mean_ - mean_;
  mean_ += delta * nb / n;
  m2_ += other.m2_ + delta * delta * na * nb / n;
  count_ += other.count_;
}

double MeanAccumulator::variance() const {
  return count_ < 2 ? 0.0 : m2_ / static_cast<double>(count_ - 1);
}

MeanEstimate MeanAccumulator::estimate(double z) const {
  MeanEstimate e;
  e.mean = mean_;
  e.trials = count_;
  e.stddev = std::sqrt(variance());
  e.half_width =
      count_ == 0 ? 0.0 : z * e.stddev / std::sqrt(static_cast<double>(count_));
  return e;
}

double chi_square_sf(double statistic, int dof) {
  if (dof <= 0) return 1.0;
  if (!std::isfinite(statistic)) return 0.0;
  if (statistic <= 0.0) return 1.0;
  return boost::math::gamma_q(0.5 * dof, 0.5 * statistic);
}

ChiSquareResult chi_square_gof(std::span<const std::uint64_t> observed,
                               std::span<const double> probabilities,
                               double min_expected) {
  if (observed.size() != probabilities.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "observed and probabilities differ in length");
  }
  std::uint64_t total = 0;
  for (auto c : observed) total += c;
  ChiSquareResult result;
  if (total == 0) return result;
  const double n = static_cast<double>(total);

  std::vector<double> obs_cells;
  std::vector<double> exp_cells;
  double pooled_obs = 0.0;
  double pooled_exp = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const double expected = probabilities[i] * n;
    const auto count = static_cast<double>(observed[i]);
    if (probabilities[i] <= 0.0) {
      if (observed[i] > 0) {
        result.statistic = std::numeric_limits<double>::infinity();
        result.dof = static_cast<int>(observed.size()) - 1;
        result.p_value = 0.0;
        return result;
      }
      continue;
    }
    if (expected < min_expected) {
      pooled_obs += count;
      pooled_exp += expected;
      if (pooled_exp >= min_expected) {
        obs_cells.push_back(pooled_obs);
        exp_cells.push_back(pooled_exp);
        pooled_obs = pooled_exp = 0.0;
      }
      continue;
    }
    obs_cells.push_back(count);
    exp_cells.push_back(expected);
  }
  if (pooled_exp > 0.0) {
    if (exp_cells.empty()) {
      obs_cells.push_back(pooled_obs);
      exp_cells.push_back(pooled_exp);
    } else {
      obs_cells.back() += pooled_obs;
      exp_cells.back() += pooled_exp;
    }
  }
  double stat = 0.0;
  for (std::size_t i = 0; i < obs_cells.size(); ++i) {
    const double d = obs_cells[i] - exp_cells[i];
    stat += d * d / exp_cells[i];
  }
  result.statistic = stat;
  result.dof = static_cast<int>(obs_cells.size()) - 1;
  result.p_value = chi_square_sf(stat, result.dof);
  return result;
}

double normal_pdf(double x) {
  return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
}

double normal_cdf(double x) {
  return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

double log_binomial(double n, double k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
         std::lgamma(n - k + 1.0);
}

namespace {

double simpson_step(const std::function<double(double)>& f, double a,
                    double fa, double b, double fb, double whole,
                    double tolerance, int depth) {
  const double m = 0.5 * (a + b);
  const double fm = f(m);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tolerance) {
    return left + right + delta / 15.0;
  }
  return simpson_step(f, a, fa, m, fm, left, 0.5 * tolerance, depth - 1) +
         simpson_step(f, m, fm, b, fb, right, 0.5 * tolerance, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tolerance) {
  const double fa = f(a);
  const double fb = f(b);
  const double m = 0.5 * (a + b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * f(m) + fb);
  return simpson_step(f, a, fa, b, fb, whole, tolerance, 50);
}

}  // namespace certlab
