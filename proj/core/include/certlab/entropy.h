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

// Min-entropy bookkeeping, the heavy-to-light perturbation, and the
// rejection-sampling derandomizer.

#ifndef CERTLAB_ENTROPY_H_
#define CERTLAB_ENTROPY_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "certlab/boolfn.h"
#include "certlab/parallel.h"
#include "certlab/rng.h"
#include "certlab/stats.h"

namespace certlab {

// A probability law over {0, ..., domain-1}, stored as sorted
// (outcome, probability) pairs with zero entries dropped.
class OutcomeDistribution {
 public:
  using Entry = std::pair<std::size_t, double>;

  // Entries may repeat an outcome; repeats are summed. Probabilities must be
  // nonnegative and sum to 1 within 1e-9.
  OutcomeDistribution(std::size_t domain, std::vector<Entry> entries);

  static OutcomeDistribution dense(std::span<const double> probabilities);
  static OutcomeDistribution point_mass(std::size_t domain, std::size_t z);
  static OutcomeDistribution uniform(std::size_t domain);

  std::size_t domain() const noexcept { return domain_; }
  std::span<const Entry> entries() const noexcept { return entries_; }
  double probability(std::size_t x) const;
  std::vector<double> to_dense() const;

  // Lexicographically first outcome of maximal probability.
  std::size_t argmax() const;
  double max_probability() const;

  std::size_t sample(CounterRng& rng) const;

 private:
  std::size_t domain_;
  std::vector<Entry> entries_;
  std::vector<double> cdf_;
};

// -log2 max_z p_z.
double min_entropy(const OutcomeDistribution& d);

// Total mass on outcomes z with p_z >= 2^-h.
double concentrated_mass(const OutcomeDistribution& d, double h);
bool satisfies_mass_condition(const OutcomeDistribution& d, double h,
                              double mass = 0.99);

double statistical_distance(const OutcomeDistribution& a,
                            const OutcomeDistribution& b);

OutcomeDistribution empirical_distribution(std::span<const std::size_t> samples,
                                           std::size_t domain);

struct Perturbation {
  BooleanFunction result;
  std::vector<std::size_t> flipped;  // ascending
};

// Flips sqrt(N)/2 positions drawn uniformly without replacement from
// p_set(f, z). Each flip moves N fhat(z) two steps toward zero, so
// fhat'(z) = fhat(z) - sgn(fhat(z)) / sqrt(N).
Perturbation perturb_make_light(const BooleanFunction& f, std::size_t z,
                                CounterRng& rng);

// binom(N/2 + sqrt(N)/2, sqrt(N)/2) / binom(N/2, sqrt(N)/2) for N = 4^j.
double degree_ratio(std::uint64_t N);

enum class GoodBad { kGood, kBad, kNeither };

const char* good_bad_name(GoodBad g);

struct GoodBadResult {
  GoodBad label = GoodBad::kNeither;
  std::size_t z = 0;           // most probable device output
  Heaviness heaviness = Heaviness::kLight;
  double min_entropy = 0.0;
};

// Good: fhat(z) slightly heavy and H_inf <= h.
// Bad:  fhat(z) light and H_inf <= h + 0.01.
GoodBadResult classify_good_bad(const OutcomeDistribution& device_law,
                                const BooleanFunction& f, double h);

// Seed for the rejection sampler: an endless stream of uniform points
// (x_i, y_i) in [N] x [0, 1) generated by CounterRng(value).
struct RejSampSeed {
  std::uint64_t value = 0;
};

// First x_i in the stream with y_i < d(x_i).
std::size_t rejsamp(const OutcomeDistribution& d, RejSampSeed r);

// Pr_r[rejsamp(a, r) != rejsamp(b, r)] over independent seeds.
ProportionEstimate coupling_disagreement(const OutcomeDistribution& a,
                                         const OutcomeDistribution& b,
                                         std::uint64_t trials,
                                         const RunOptions& options);

// The exact value of the same probability:
//   (2 delta - sum_x |a - b|(x) min(a, b)(x)) / (1 + delta).
// It reduces to 2 delta / (1 + delta) when the two laws differ only on
// outcomes that one of them never produces.
double coupling_disagreement_exact(const OutcomeDistribution& a,
                                   const OutcomeDistribution& b);

// A device: one sample over {0, ..., N-1} per call.
using Sampler = std::function<std::size_t(CounterRng&)>;

// Estimates the device law from `budget` draws, then rejection-samples
// from the estimate with seed r.
std::size_t derandomize(const Sampler& device, std::size_t domain,
                        RejSampSeed r, std::uint64_t budget, CounterRng& rng);

struct DerandomizeStability {
  std::uint64_t seeds = 0;
  std::uint64_t constant_seeds = 0;   // same output in every rerun
  std::uint64_t low_entropy_seeds = 0;  // rerun law has H_inf <= threshold
  double entropy_threshold = 0.0;
  std::vector<double> rerun_min_entropy;  // per seed
};

// For each of `seeds` fixed r, reruns the derandomizer `reruns` times with
// fresh device randomness.
DerandomizeStability derandomize_stability(const Sampler& device,
                                           std::size_t domain,
                                           std::uint64_t budget,
                                           std::uint64_t seeds,
                                           std::uint64_t reruns,
                                           double entropy_threshold,
                                           const RunOptions& options);

}  // namespace certlab

#endif  // CERTLAB_ENTROPY_H_
