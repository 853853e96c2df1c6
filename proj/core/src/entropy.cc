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

#include "certlab/entropy.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <string>

#include "certlab/error.h"

namespace certlab {

OutcomeDistribution::OutcomeDistribution(std::size_t domain,
                                         std::vector<Entry> entries)
    : domain_(domain) {
  if (domain == 0 || entries.empty()) {
    throw Error(ErrorCode::kEmptyDistribution, "distribution has no outcomes");
  }
  std::sort(entries.begin(), entries.end());
  double total = 0.0;
  for (const auto& [x, p] : entries) {
    if (x >= domain) {
      throw Error(ErrorCode::kInvalidArgument, "outcome outside the domain");
    }
    if (!(p >= 0.0)) {
      throw Error(ErrorCode::kInvalidArgument, "negative probability");
    }
    total += p;
    if (p == 0.0) continue;
    if (!entries_.empty() && entries_.back().first == x) {
      entries_.back().second += p;
    } else {
      entries_.emplace_back(x, p);
    }
  }
  if (entries_.empty()) {
    throw Error(ErrorCode::kEmptyDistribution, "distribution has zero mass");
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw Error(ErrorCode::kInvalidArgument,
                "probabilities sum to " + std::to_string(total));
  }
  cdf_.reserve(entries_.size());
  double acc = 0.0;
  for (const auto& e : entries_) {
    acc += e.second;
    cdf_.push_back(acc);
  }
}

OutcomeDistribution OutcomeDistribution::dense(
    std::span<const double> probabilities) {
  std::vector<Entry> entries;
  for (std::size_t x = 0; x < probabilities.size(); ++x) {
    if (probabilities[x] != 0.0) entries.emplace_back(x, probabilities[x]);
  }
  return OutcomeDistribution(probabilities.size(), std::move(entries));
}

OutcomeDistribution OutcomeDistribution::point_mass(std::size_t domain,
                                                    std::size_t z) {
  return OutcomeDistribution(domain, {{z, 1.0}});
}

OutcomeDistribution OutcomeDistribution::uniform(std::size_t domain) {
  std::vector<Entry> entries;
  entries.reserve(domain);
  for (std::size_t x = 0; x < domain; ++x) {
    entries.emplace_back(x, 1.0 / static_cast<double>(domain));
  }
  return OutcomeDistribution(domain, std::move(entries));
}

double OutcomeDistribution::probability(std::size_t x) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), x,
      [](const Entry& e, std::size_t key) { return e.first < key; });
  return it != entries_.end() && it->first == x ? it->second : 0.0;
}

std::vector<double> OutcomeDistribution::to_dense() const {
  std::vector<double> out(domain_, 0.0);
  for (const auto& [x, p] : entries_) out[x] = p;
  return out;
}

std::size_t OutcomeDistribution::argmax() const {
  const Entry* best = &entries_.front();
  for (const auto& e : entries_) {
    if (e.second > best->second) best = &e;
  }
  return best->first;
}

double OutcomeDistribution::max_probability() const {
  return probability(argmax());
}

std::size_t OutcomeDistribution::sample(CounterRng& rng) const {
  const double u = rng.uniform01() * cdf_.back();
  auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  if (it == cdf_.end()) --it;
  return entries_[static_cast<std::size_t>(it - cdf_.begin())].first;
}

double min_entropy(const OutcomeDistribution& d) {
  return -std::log2(d.max_probability());
}

double concentrated_mass(const OutcomeDistribution& d, double h) {
  const double floor = std::exp2(-h);
  double mass = 0.0;
  for (const auto& [x, p] : d.entries()) {
    if (p >= floor) mass += p;
  }
  return mass;
}

bool satisfies_mass_condition(const OutcomeDistribution& d, double h,
                              double mass) {
  return concentrated_mass(d, h) >= mass;
}

double statistical_distance(const OutcomeDistribution& a,
                            const OutcomeDistribution& b) {
  if (a.domain() != b.domain()) {
    throw Error(ErrorCode::kDimensionMismatch, "distributions differ in domain");
  }
  const auto da = a.to_dense();
  const auto db = b.to_dense();
  double sum = 0.0;
  for (std::size_t x = 0; x < da.size(); ++x) sum += std::abs(da[x] - db[x]);
  return 0.5 * sum;
}

OutcomeDistribution empirical_distribution(std::span<const std::size_t> samples,
                                           std::size_t domain) {
  if (samples.empty()) {
    throw Error(ErrorCode::kEmptySamples, "no samples to tabulate");
  }
  std::map<std::size_t, std::uint64_t> counts;
  for (auto s : samples) counts[s]++;
  std::vector<OutcomeDistribution::Entry> entries;
  entries.reserve(counts.size());
  const double total = static_cast<double>(samples.size());
  for (const auto& [x, c] : counts) {
    entries.emplace_back(x, static_cast<double>(c) / total);
  }
  return OutcomeDistribution(domain, std::move(entries));
}

Perturbation perturb_make_light(const BooleanFunction& f, std::size_t z,
                                CounterRng& rng) {
  if (f.n() % 2 != 0) {
    throw Error(ErrorCode::kOddRoot, "sqrt(N)/2 is integral only for even n");
  }
  const std::size_t k = (std::size_t{1} << (f.n() / 2)) / 2;
  std::vector<std::size_t> pool = p_set(f, z);
  if (pool.size() < k) {
    throw Error(ErrorCode::kSetTooSmall,
                "P_f has fewer than sqrt(N)/2 elements");
  }
  // Partial Fisher-Yates: the first k slots become a uniform k-subset.
  for (std::size_t i = 0; i < k; ++i) {
    const auto j = i + static_cast<std::size_t>(rng.below(pool.size() - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  BooleanFunction result = f.flipped(pool);
  return {std::move(result), std::move(pool)};
}

double degree_ratio(std::uint64_t N) {
  if (N < 4 || !std::has_single_bit(N) || std::countr_zero(N) % 2 != 0) {
    throw Error(ErrorCode::kOddRoot, "N must be a power of 4");
  }
  // binom(a + k, k) / binom(a, k) = prod_{i=1}^{k} (a + i) / (a - k + i)
  const std::uint64_t root = std::uint64_t{1} << (std::countr_zero(N) / 2);
  const double a = static_cast<double>(N / 2);
  const std::uint64_t k = root / 2;
  double log_ratio = 0.0;
  for (std::uint64_t i = 1; i <= k; ++i) {
    const double lower = a - static_cast<double>(k) + static_cast<double>(i);
    log_ratio += std::log1p(static_cast<double>(k) / lower);
  }
  return std::exp(log_ratio);
}

const char* good_bad_name(GoodBad g) {
  switch (g) {
    case GoodBad::kGood:
      return "good";
    case GoodBad::kBad:
      return "bad";
    case GoodBad::kNeither:
      return "neither";
  }
  return "unknown";
}

GoodBadResult classify_good_bad(const OutcomeDistribution& device_law,
                                const BooleanFunction& f, double h) {
  if (device_law.domain() != f.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "device law and function differ in size");
  }
  GoodBadResult out;
  out.z = device_law.argmax();
  out.min_entropy = min_entropy(device_law);
  out.heaviness = classify_scaled(wht_integer(f)[out.z], f.size());
  if (out.heaviness == Heaviness::kSlightlyHeavy && out.min_entropy <= h) {
    out.label = GoodBad::kGood;
  } else if (out.heaviness == Heaviness::kLight &&
             out.min_entropy <= h + 0.01) {
    out.label = GoodBad::kBad;
  }
  return out;
}

std::size_t rejsamp(const OutcomeDistribution& d, RejSampSeed r) {
  CounterRng rng(r.value);
  for (;;) {
    const auto x = static_cast<std::size_t>(rng.below(d.domain()));
    const double y = rng.uniform01();
    if (y < d.probability(x)) return x;
  }
}

ProportionEstimate coupling_disagreement(const OutcomeDistribution& a,
                                         const OutcomeDistribution& b,
                                         std::uint64_t trials,
                                         const RunOptions& options) {
  if (a.domain() != b.domain()) {
    throw Error(ErrorCode::kDimensionMismatch, "distributions differ in domain");
  }
  const auto partials = run_chunks<ProportionEstimate>(
      trials, kTrialChunk, options.threads,
      [&](std::uint64_t chunk, std::uint64_t begin, std::uint64_t end) {
        CounterRng rng(options.seed, chunk + 1);
        ProportionEstimate part;
        for (std::uint64_t t = begin; t < end; ++t) {
          const RejSampSeed r{rng()};
          part.trials++;
          part.successes += rejsamp(a, r) != rejsamp(b, r);
        }
        return part;
      });
  ProportionEstimate total;
  for (const auto& p : partials) total.merge(p);
  return total;
}

double coupling_disagreement_exact(const OutcomeDistribution& a,
                                   const OutcomeDistribution& b) {
  if (a.domain() != b.domain()) {
    throw Error(ErrorCode::kDimensionMismatch, "distributions differ in domain");
  }
  const auto da = a.to_dense();
  const auto db = b.to_dense();
  double l1 = 0.0;
  double overlap = 0.0;
  for (std::size_t x = 0; x < da.size(); ++x) {
    const double diff = std::abs(da[x] - db[x]);
    l1 += diff;
    overlap += diff * std::min(da[x], db[x]);
  }
  const double delta = 0.5 * l1;
  return (l1 - overlap) / (1.0 + delta);
}

std::size_t derandomize(const Sampler& device, std::size_t domain,
                        RejSampSeed r, std::uint64_t budget, CounterRng& rng) {
  if (budget == 0) {
    throw Error(ErrorCode::kBudgetZero, "derandomize needs at least one draw");
  }
  std::vector<std::size_t> draws(budget);
  for (auto& s : draws) {
    s = device(rng);
    if (s >= domain) {
      throw Error(ErrorCode::kDeviceFailure, "device output out of range");
    }
  }
  return rejsamp(empirical_distribution(draws, domain), r);
}

DerandomizeStability derandomize_stability(const Sampler& device,
                                           std::size_t domain,
                                           std::uint64_t budget,
                                           std::uint64_t seeds,
                                           std::uint64_t reruns,
                                           double entropy_threshold,
                                           const RunOptions& options) {
  if (reruns == 0) {
    throw Error(ErrorCode::kInvalidArgument, "reruns must be at least 1");
  }
  struct Partial {
    bool constant = false;
    double min_entropy = 0.0;
  };
  const CounterRng seed_stream(options.seed);
  const auto partials = run_chunks<Partial>(
      seeds, 1, options.threads,
      [&](std::uint64_t s, std::uint64_t, std::uint64_t) {
        const RejSampSeed r{seed_stream.at(s + 1)};
        std::map<std::size_t, std::uint64_t> outputs;
        for (std::uint64_t j = 0; j < reruns; ++j) {
          CounterRng rng(options.seed, 1 + s * reruns + j);
          outputs[derandomize(device, domain, r, budget, rng)]++;
        }
        std::uint64_t top = 0;
        for (const auto& [x, c] : outputs) top = std::max(top, c);
        Partial part;
        part.constant = outputs.size() == 1;
        part.min_entropy = -std::log2(static_cast<double>(top) /
                                      static_cast<double>(reruns));
        return part;
      });
  DerandomizeStability out;
  out.seeds = seeds;
  out.entropy_threshold = entropy_threshold;
  for (const auto& p : partials) {
    out.constant_seeds += p.constant;
    out.low_entropy_seeds += p.min_entropy <= entropy_threshold;
    out.rerun_min_entropy.push_back(p.min_entropy);
  }
  return out;
}

}  // namespace certlab
