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

// A simulated certified-randomness round: the verifier issues T random
// challenge functions, a device answers each with one sample, and the
// verifier scores the answers, counts collisions with a claimed
// deterministic strategy, and hashes the samples with a Toeplitz extractor.

#ifndef CERTLAB_PROTOCOL_H_
#define CERTLAB_PROTOCOL_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "certlab/boolfn.h"
#include "certlab/device.h"
#include "certlab/rng.h"

namespace certlab {

class BitString {
 public:
  BitString() = default;
  explicit BitString(std::size_t size);

  // Uniform bits from the generator.
  static BitString random(std::size_t size, CounterRng& rng);
  // Parses a string of '0' and '1'.
  static BitString from_string(const std::string& bits);

  std::size_t size() const noexcept { return size_; }
  bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1; }
  void set(std::size_t i, bool v);
  // Appends the low `count` bits of `value`, least significant first.
  void append(std::uint64_t value, int count);
  const std::vector<std::uint64_t>& words() const noexcept { return words_; }
  std::string to_string() const;

  BitString operator^(const BitString& other) const;
  friend bool operator==(const BitString&, const BitString&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;  // bits past size_ are always zero
};

// out_j = XOR_i seed[i - j + k - 1] & input[i], for j < k. The seed must
// hold exactly m + k - 1 bits and k <= m, otherwise kLengthMismatch.
BitString toeplitz_extract(const BitString& input, const BitString& seed,
                           std::size_t k);

// Output length allowed for an estimated min-entropy h: floor(h) - 64, the
// leftover-hash allowance for a 2^-32 error, and at most m.
std::size_t extractor_budget(double min_entropy_bits, std::size_t m);

enum class ClaimedQ { kNone, kArgmax };

const char* claimed_q_name(ClaimedQ q);
ClaimedQ parse_claimed_q(const std::string& text);

struct ProtocolConfig {
  int n = 8;
  std::uint64_t T = 4096;
  double eps_hog = 0.5;
  double b = 1.5;  // score threshold, b = 1 + eps_hog by default
  std::size_t extractor_output_bits = 256;  // clipped to the budget
  std::uint64_t seed = 0;
  int threads = 1;
  bool keep_records = true;

  double delta() const { return eps_hog * eps_hog; }
  std::size_t N() const { return std::size_t{1} << n; }
  void validate() const;
};

enum class EntropyVerdict { kNotRun, kUniformLike, kQuantumLike, kInconclusive };

const char* verdict_name(EntropyVerdict v);

struct ChallengeRecord {
  std::uint64_t function_seed = 0;
  std::size_t sample = 0;
  double score = 0.0;  // fhat(sample)^2
  bool collision = false;
};

struct ProtocolTranscript {
  ProtocolConfig config;
  std::string device;
  ClaimedQ claimed_q = ClaimedQ::kNone;
  std::vector<ChallengeRecord> records;  // empty unless keep_records
  double S = 0.0;
  std::optional<std::uint64_t> V;
  bool score_pass = false;
  EntropyVerdict verdict = EntropyVerdict::kNotRun;
  double min_entropy_estimate = 0.0;  // sum over challenges, in bits
  std::size_t extractor_input_bits = 0;
  BitString extracted;
};

// Challenge i is random_function(n, CounterRng(derive_seed(seed, i))); the
// device answers it with randomness from CounterRng(derive_seed(seed, i), 1).
BooleanFunction challenge_function(std::uint64_t seed, std::uint64_t i, int n);

ProtocolTranscript run_protocol(const ProtocolConfig& config,
                                const DeviceModel& device, ClaimedQ claimed_q);

// A black-box device. Its min-entropy is unknown, so nothing is extracted.
// Exceptions and out-of-range answers surface as kDeviceFailure.
using ChallengeDevice =
    std::function<std::size_t(const BooleanFunction&, CounterRng&)>;

ProtocolTranscript run_protocol(const ProtocolConfig& config,
                                const ChallengeDevice& device,
                                ClaimedQ claimed_q);

// S >= (b - eps_hog / 2) T / N
bool verify_score(double S, const ProtocolConfig& config);
bool verify_score(const ProtocolTranscript& transcript,
                  const ProtocolConfig& config);

// With mu = T/N: uniform-like below min(1 + eps^2, 1 + eps/4) mu,
// quantum-like above max(1 + eps^2, 1 + eps/4) mu, inconclusive between.
EntropyVerdict collision_verdict(std::uint64_t V, std::uint64_t T,
                                 std::size_t N, double eps_hog);

}  // namespace certlab

#endif  // CERTLAB_PROTOCOL_H_
