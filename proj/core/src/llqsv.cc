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

#include "certlab/llqsv.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>

#include "certlab/device.h"
#include "certlab/error.h"
#include "binary_io.h"

namespace certlab {

BalancedString::BalancedString(std::size_t N, std::int64_t d,
                               std::vector<std::uint64_t> words)
    : N_(N), d_(d), words_(std::move(words)) {
  if (words_.size() != (N + 63) / 64) {
    throw Error(ErrorCode::kDimensionMismatch, "word count does not match N");
  }
}

std::size_t BalancedString::weight() const {
  std::size_t w = 0;
  for (auto word : words_) w += static_cast<std::size_t>(std::popcount(word));
  return w;
}

BalancedString sample_u_d(std::size_t N, std::int64_t d, CounterRng& rng) {
  if (N == 0 || N % 2 != 0) {
    throw Error(ErrorCode::kBadOffset, "N must be positive and even");
  }
  if (d < 0 || static_cast<std::size_t>(d) > N / 2) {
    throw Error(ErrorCode::kBadOffset, "offset must lie in [0, N/2]");
  }
  // Both weights have binom(N, N/2 - d) strings, so a fair coin picks one.
  const bool upper = rng() & 1;
  const std::size_t weight = upper ? N / 2 + static_cast<std::size_t>(d)
                                   : N / 2 - static_cast<std::size_t>(d);
  // Choose the smaller of the one-set and the zero-set by partial
  // Fisher-Yates.
  const bool pick_ones = weight <= N - weight;
  const std::size_t picks = pick_ones ? weight : N - weight;
  std::vector<std::size_t> pool(N);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  for (std::size_t i = 0; i < picks; ++i) {
    const auto j = i + static_cast<std::size_t>(rng.below(N - i));
    std::swap(pool[i], pool[j]);
  }
  std::vector<std::uint64_t> words((N + 63) / 64, 0);
  if (!pick_ones) {
    for (std::size_t i = 0; i < N; ++i) words[i / 64] |= std::uint64_t{1} << (i % 64);
  }
  for (std::size_t i = 0; i < picks; ++i) {
    words[pool[i] / 64] ^= std::uint64_t{1} << (pool[i] % 64);
  }
  return BalancedString(N, d, std::move(words));
}

std::vector<BalancedString> balance_instance(std::span<const std::int64_t> d,
                                             std::size_t N, CounterRng& rng) {
  std::vector<BalancedString> out;
  out.reserve(d.size());
  for (auto di : d) out.push_back(sample_u_d(N, di, rng));
  return out;
}

const char* llqsv_case_name(LlqsvCase c) {
  return c == LlqsvCase::kUniform ? "uniform" : "fourier";
}

namespace {

LongListEntry draw_entry(int n, LlqsvCase c, CounterRng& rng) {
  BooleanFunction f = random_function(n, rng);
  std::size_t s = 0;
  if (c == LlqsvCase::kUniform) {
    s = static_cast<std::size_t>(rng.below(f.size()));
  } else {
    s = FourierSampler(wht(f))(rng);
  }
  return {std::move(f), s};
}

}  // namespace

void for_each_llqsv_entry(
    int n, std::uint64_t T, LlqsvCase c, std::uint64_t seed,
    const std::function<void(std::uint64_t, const LongListEntry&)>& visit) {
  if (n < 1 || n > kMaxInputBits) {
    throw Error(ErrorCode::kSizeLimit, "n must lie in [1, 24]");
  }
  for (std::uint64_t chunk = 0; chunk * kTrialChunk < T; ++chunk) {
    CounterRng rng(seed, chunk + 1);
    const std::uint64_t end = std::min(T, (chunk + 1) * kTrialChunk);
    for (std::uint64_t t = chunk * kTrialChunk; t < end; ++t) {
      visit(t, draw_entry(n, c, rng));
    }
  }
}

LongList llqsv_instance(int n, std::uint64_t T, LlqsvCase c,
                        std::uint64_t seed) {
  if (T > (std::uint64_t{1} << 20)) {
    throw Error(ErrorCode::kBudgetExceeded,
                "dense lists hold at most 2^20 entries; use for_each_llqsv_entry");
  }
  LongList list;
  list.n = n;
  list.label = c;
  list.entries.reserve(T);
  for_each_llqsv_entry(n, T, c, seed, [&](std::uint64_t, const LongListEntry& e) {
    list.entries.push_back(e);
  });
  return list;
}

std::uint64_t default_list_length(int n) {
  if (n < 1 || n > kMaxInputBits) {
    throw Error(ErrorCode::kSizeLimit, "n must lie in [1, 24]");
  }
  const int bits = std::min(3 * n, 20);
  return std::uint64_t{1} << bits;
}

MeanEstimate llqsv_score_mean(int n, std::uint64_t T, LlqsvCase c,
                              std::uint64_t seed) {
  MeanAccumulator acc;
  for_each_llqsv_entry(n, T, c, seed, [&](std::uint64_t, const LongListEntry& e) {
    const double k = static_cast<double>(wht_integer(e.f)[e.s]);
    const double N = static_cast<double>(e.f.size());
    acc.add(k * k / (N * N));
  });
  return acc.estimate();
}

std::int64_t hamming_offset(const BooleanFunction& f, std::size_t s) {
  if (s >= f.size()) throw Error(ErrorCode::kInvalidArgument, "s out of range");
  std::int64_t minus = 0;
  for (std::size_t x = 0; x < f.size(); ++x) {
    minus += f[x] * (parity(x, s) ? -1 : 1) < 0;
  }
  return minus - static_cast<std::int64_t>(f.size() / 2);
}

const BooleanFunction& LongListOracle::function(std::size_t i) {
  ++reads_;
  return list_->entries.at(i).f;
}

std::size_t LongListOracle::outcome(std::size_t i) {
  ++reads_;
  return list_->entries.at(i).s;
}

int LongListOracle::value(std::size_t i, std::size_t x) {
  ++reads_;
  const BooleanFunction& f = list_->entries.at(i).f;
  if (x >= f.size()) throw Error(ErrorCode::kInvalidArgument, "x out of range");
  return f[x];
}

Distinguisher constant_distinguisher(bool accept) {
  return [accept](LongListOracle&) { return accept; };
}

Distinguisher score_sum_distinguisher(double factor) {
  return [factor](LongListOracle& oracle) {
    double score = 0.0;
    for (std::size_t i = 0; i < oracle.size(); ++i) {
      const BooleanFunction& f = oracle.function(i);
      const std::size_t s = oracle.outcome(i);
      const double k = static_cast<double>(wht_integer(f)[s]);
      const double N = static_cast<double>(f.size());
      score += k * k / (N * N);
    }
    const double N = static_cast<double>(std::size_t{1} << oracle.n());
    return score >= factor * static_cast<double>(oracle.size()) / N;
  };
}

Distinguisher outcome_only_distinguisher() {
  return [](LongListOracle& oracle) {
    std::size_t even = 0;
    for (std::size_t i = 0; i < oracle.size(); ++i) {
      even += std::popcount(oracle.outcome(i)) % 2 == 0;
    }
    return 2 * even > oracle.size();
  };
}

Advantage advantage(const Distinguisher& distinguisher, int n, std::uint64_t T,
                    std::uint64_t trials, const RunOptions& options) {
  if (trials == 0) {
    throw Error(ErrorCode::kInvalidArgument, "trials must be at least 1");
  }
  struct Partial {
    ProportionEstimate fourier;
    ProportionEstimate uniform;
    std::uint64_t reads = 0;
  };
  const auto partials = run_chunks<Partial>(
      trials, 1, options.threads,
      [&](std::uint64_t t, std::uint64_t, std::uint64_t) {
        Partial part;
        for (LlqsvCase c : {LlqsvCase::kFourier, LlqsvCase::kUniform}) {
          const std::uint64_t index = 2 * t + (c == LlqsvCase::kUniform);
          const LongList list =
              llqsv_instance(n, T, c, derive_seed(options.seed, index));
          LongListOracle oracle(list);
          const bool accept = distinguisher(oracle);
          auto& target = c == LlqsvCase::kFourier ? part.fourier : part.uniform;
          target.trials++;
          target.successes += accept;
          part.reads += oracle.reads();
        }
        return part;
      });
  Advantage out;
  std::uint64_t reads = 0;
  for (const auto& p : partials) {
    out.fourier_accept.merge(p.fourier);
    out.uniform_accept.merge(p.uniform);
    reads += p.reads;
  }
  const double p1 = out.fourier_accept.value();
  const double p0 = out.uniform_accept.value();
  const double m = static_cast<double>(trials);
  out.value = p1 - p0;
  out.half_width = kZ99 * std::sqrt(p1 * (1.0 - p1) / m + p0 * (1.0 - p0) / m);
  out.mean_reads = static_cast<double>(reads) / (2.0 * m);
  return out;
}

CoefficientTail max_coeff_tail(int n, double p, std::uint64_t trials,
                               const RunOptions& options) {
  if (n < 1 || n > kMaxInputBits) {
    throw Error(ErrorCode::kSizeLimit, "n must lie in [1, 24]");
  }
  const double N = std::exp2(n);
  CoefficientTail out;
  out.threshold = p * p / N;
  out.stated_bound = 2.0 * std::exp(-p * p / (6.0 * std::log(N)));
  out.union_bound = 2.0 * N * std::exp(-p * p / 6.0);
  // fhat^2 > p^2 / N  <=>  k^2 > p^2 N on the integer scale k = N fhat.
  const double limit = p * p * N;
  const auto partials = run_chunks<ProportionEstimate>(
      trials, kTrialChunk, options.threads,
      [&](std::uint64_t chunk, std::uint64_t begin, std::uint64_t end) {
        CounterRng rng(options.seed, chunk + 1);
        ProportionEstimate part;
        for (std::uint64_t t = begin; t < end; ++t) {
          const auto k = wht_integer(random_function(n, rng));
          std::int64_t top = 0;
          for (auto v : k) top = std::max<std::int64_t>(top, std::abs(v));
          part.trials++;
          part.successes += static_cast<double>(top) * static_cast<double>(top) > limit;
        }
        return part;
      });
  for (const auto& p : partials) out.exceed.merge(p);
  return out;
}

void write_llq(std::ostream& out, const LongList& list) {
  out.write("LLQ1", 4);
  internal::write_u32(out, static_cast<std::uint32_t>(list.n));
  internal::write_u32(out, static_cast<std::uint32_t>(list.entries.size()));
  for (const auto& e : list.entries) {
    write_bfn(out, e.f);
    internal::write_u32(out, static_cast<std::uint32_t>(e.s));
  }
}

LongList read_llq(std::istream& in) {
  internal::expect_magic(in, "LLQ1");
  LongList list;
  const std::uint32_t n = internal::read_u32(in);
  if (n < 1 || n > static_cast<std::uint32_t>(kMaxInputBits)) {
    throw Error(ErrorCode::kFormat, "LLQ1 n out of range");
  }
  list.n = static_cast<int>(n);
  const std::uint32_t T = internal::read_u32(in);
  for (std::uint32_t i = 0; i < T; ++i) {
    BooleanFunction f = read_bfn(in);
    if (f.n() != list.n) {
      throw Error(ErrorCode::kFormat, "LLQ1 entry has a different n");
    }
    const std::uint32_t s = internal::read_u32(in);
    if (s >= f.size()) throw Error(ErrorCode::kFormat, "LLQ1 outcome out of range");
    list.entries.push_back({std::move(f), s});
  }
  return list;
}

}  // namespace certlab
