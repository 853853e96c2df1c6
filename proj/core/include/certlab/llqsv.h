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

// Balance Checking and long-list sample verification instances.

#ifndef CERTLAB_LLQSV_H_
#define CERTLAB_LLQSV_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include "certlab/boolfn.h"
#include "certlab/parallel.h"
#include "certlab/rng.h"
#include "certlab/stats.h"

namespace certlab {

// An N-bit string, packed least significant bit first.
class BalancedString {
 public:
  BalancedString(std::size_t N, std::int64_t d, std::vector<std::uint64_t> words);

  std::size_t size() const noexcept { return N_; }
  std::int64_t offset() const noexcept { return d_; }
  bool bit(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1; }
  std::size_t weight() const;
  std::span<const std::uint64_t> words() const noexcept { return words_; }

 private:
  std::size_t N_;
  std::int64_t d_;
  std::vector<std::uint64_t> words_;
};

// Uniform over strings of weight N/2 - d or N/2 + d. Needs N even and
// 0 <= d <= N/2, otherwise kBadOffset.
BalancedString sample_u_d(std::size_t N, std::int64_t d, CounterRng& rng);

std::vector<BalancedString> balance_instance(std::span<const std::int64_t> d,
                                             std::size_t N, CounterRng& rng);

enum class LlqsvCase { kUniform, kFourier };

const char* llqsv_case_name(LlqsvCase c);

struct LongListEntry {
  BooleanFunction f;
  std::size_t s = 0;
};

struct LongList {
  int n = 0;
  std::vector<LongListEntry> entries;
  LlqsvCase label = LlqsvCase::kUniform;
};

// Entry t is drawn from CounterRng(seed, t / kTrialChunk + 1): a uniform f,
// then s uniform (kUniform) or s ~ fhat^2 (kFourier).
void for_each_llqsv_entry(
    int n, std::uint64_t T, LlqsvCase c, std::uint64_t seed,
    const std::function<void(std::uint64_t, const LongListEntry&)>& visit);

// Dense list; throws BudgetExceeded beyond 2^20 entries.
LongList llqsv_instance(int n, std::uint64_t T, LlqsvCase c,
                        std::uint64_t seed);

// min(2^{3n}, 2^20)
std::uint64_t default_list_length(int n);

// Mean of fhat_i(s_i)^2 over a streamed instance.
MeanEstimate llqsv_score_mean(int n, std::uint64_t T, LlqsvCase c,
                              std::uint64_t seed);

// h(f . chi_s) - N/2, where h counts inputs with value -1. Equal to
// -N fhat(s) / 2.
std::int64_t hamming_offset(const BooleanFunction& f, std::size_t s);

// Read-counting access to a list. Every call to function(), outcome() or
// value() counts as one read.
class LongListOracle {
 public:
  explicit LongListOracle(const LongList& list) : list_(&list) {}

  int n() const noexcept { return list_->n; }
  std::size_t size() const noexcept { return list_->entries.size(); }
  const BooleanFunction& function(std::size_t i);
  std::size_t outcome(std::size_t i);
  int value(std::size_t i, std::size_t x);
  std::uint64_t reads() const noexcept { return reads_; }

 private:
  const LongList* list_;
  std::uint64_t reads_ = 0;
};

using Distinguisher = std::function<bool(LongListOracle&)>;

Distinguisher constant_distinguisher(bool accept);
// Accepts when sum_i fhat_i(s_i)^2 >= factor * T / N.
Distinguisher score_sum_distinguisher(double factor = 2.0);
// Looks only at the s_i: accepts when more than half have even weight.
Distinguisher outcome_only_distinguisher();

struct Advantage {
  ProportionEstimate fourier_accept;
  ProportionEstimate uniform_accept;
  double value = 0.0;       // Pr[accept | Fourier] - Pr[accept | Uniform]
  double half_width = 0.0;  // 99% normal-approximation half width
  double mean_reads = 0.0;

  Interval ci() const { return {value - half_width, value + half_width}; }
};

Advantage advantage(const Distinguisher& distinguisher, int n, std::uint64_t T,
                    std::uint64_t trials, const RunOptions& options);

struct CoefficientTail {
  ProportionEstimate exceed;  // max_z fhat(z)^2 > p^2 / N
  double threshold = 0.0;     // p^2 / N
  double stated_bound = 0.0;  // 2 exp(-p^2 / (6 ln N))
  double union_bound = 0.0;   // 2 N exp(-p^2 / 6)
};

CoefficientTail max_coeff_tail(int n, double p, std::uint64_t trials,
                               const RunOptions& options);

// "LLQ1", n and T as u32 little endian, then per entry a BFN1 record and s
// as u32 little endian.
void write_llq(std::ostream& out, const LongList& list);
LongList read_llq(std::istream& in);

}  // namespace certlab

#endif  // CERTLAB_LLQSV_H_
