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

#include "certlab/protocol.h"

#include <algorithm>
#include <bit>
#include <cmath>

#include "certlab/error.h"
#include "certlab/parallel.h"

namespace certlab {

BitString::BitString(std::size_t size)
    : size_(size), words_((size + 63) / 64, 0) {}

BitString BitString::random(std::size_t size, CounterRng& rng) {
  BitString out(size);
  for (auto& w : out.words_) w = rng();
  if (size % 64 != 0) out.words_.back() &= (std::uint64_t{1} << (size % 64)) - 1;
  return out;
}

BitString BitString::from_string(const std::string& bits) {
  BitString out(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != '0' && bits[i] != '1') {
      throw Error(ErrorCode::kInvalidArgument, "bit strings hold only 0 and 1");
    }
    out.set(i, bits[i] == '1');
  }
  return out;
}

void BitString::set(std::size_t i, bool v) {
  const std::uint64_t mask = std::uint64_t{1} << (i % 64);
  if (v) {
    words_[i / 64] |= mask;
  } else {
    words_[i / 64] &= ~mask;
  }
}

void BitString::append(std::uint64_t value, int count) {
  for (int b = 0; b < count; ++b) {
    if (size_ % 64 == 0) words_.push_back(0);
    ++size_;
    set(size_ - 1, (value >> b) & 1);
  }
}

std::string BitString::to_string() const {
  std::string out(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if (get(i)) out[i] = '1';
  }
  return out;
}

BitString BitString::operator^(const BitString& other) const {
  if (other.size_ != size_) {
    throw Error(ErrorCode::kLengthMismatch, "bit strings differ in length");
  }
  BitString out = *this;
  for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] ^= other.words_[w];
  return out;
}

BitString toeplitz_extract(const BitString& input, const BitString& seed,
                           std::size_t k) {
  const std::size_t m = input.size();
  if (k > m) {
    throw Error(ErrorCode::kLengthMismatch, "output longer than input");
  }
  if (k == 0) return BitString();
  if (seed.size() != m + k - 1) {
    throw Error(ErrorCode::kLengthMismatch, "seed must hold m + k - 1 bits");
  }
  const auto& in = input.words();
  const auto& sw = seed.words();
  // Row j reads the seed window starting at bit k - 1 - j.
  auto window = [&](std::size_t start) {
    const std::size_t q = start / 64;
    const unsigned r = start % 64;
    std::uint64_t w = sw[q] >> r;
    if (r != 0 && q + 1 < sw.size()) w |= sw[q + 1] << (64 - r);
    return w;
  };
  BitString out(k);
  for (std::size_t j = 0; j < k; ++j) {
    const std::size_t offset = k - 1 - j;
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < in.size(); ++w) {
      acc ^= window(offset + 64 * w) & in[w];
    }
    out.set(j, std::popcount(acc) & 1);
  }
  return out;
}

std::size_t extractor_budget(double min_entropy_bits, std::size_t m) {
  const double usable = std::floor(min_entropy_bits) - 64.0;
  if (!(usable > 0.0)) return 0;
  return std::min(m, static_cast<std::size_t>(usable));
}

const char* claimed_q_name(ClaimedQ q) {
  return q == ClaimedQ::kNone ? "none" : "argmax";
}

ClaimedQ parse_claimed_q(const std::string& text) {
  if (text == "none") return ClaimedQ::kNone;
  if (text == "argmax") return ClaimedQ::kArgmax;
  throw Error(ErrorCode::kInvalidArgument, "unknown claimed Q: " + text);
}

void ProtocolConfig::validate() const {
  if (n < 1 || n > kMaxInputBits) {
    throw Error(ErrorCode::kSizeLimit, "n must lie in [1, 24]");
  }
  if (T < 1) throw Error(ErrorCode::kInvalidArgument, "T must be at least 1");
  if (!(b > 1.0)) throw Error(ErrorCode::kInvalidArgument, "b must exceed 1");
  if (!(eps_hog > 0.0 && eps_hog < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "eps_hog must lie in (0, 1)");
  }
}

const char* verdict_name(EntropyVerdict v) {
  switch (v) {
    case EntropyVerdict::kNotRun:
      return "not-run";
    case EntropyVerdict::kUniformLike:
      return "uniform-like";
    case EntropyVerdict::kQuantumLike:
      return "quantum-like";
    case EntropyVerdict::kInconclusive:
      return "inconclusive";
  }
  return "unknown";
}

BooleanFunction challenge_function(std::uint64_t seed, std::uint64_t i, int n) {
  CounterRng rng(derive_seed(seed, i));
  return random_function(n, rng);
}

namespace {

struct Answer {
  std::size_t sample = 0;
  double min_entropy = 0.0;
};

using AnswerFn = std::function<Answer(const BooleanFunction&,
                                      const FourierSpectrum&, CounterRng&)>;

ProtocolTranscript run_impl(const ProtocolConfig& config, const AnswerFn& answer,
                            ClaimedQ claimed_q, bool extract) {
  config.validate();
  const std::size_t N = config.N();
  const double inv_n = 1.0 / static_cast<double>(N);
  ProtocolTranscript tr;
  tr.config = config;
  tr.claimed_q = claimed_q;
  if (config.keep_records) tr.records.resize(config.T);
  std::vector<std::uint32_t> samples(config.T);

  struct Partial {
    double S = 0.0;
    std::uint64_t V = 0;
    double entropy = 0.0;
  };
  const auto partials = run_chunks<Partial>(
      config.T, kTrialChunk, config.threads,
      [&](std::uint64_t, std::uint64_t begin, std::uint64_t end) {
        Partial part;
        for (std::uint64_t i = begin; i < end; ++i) {
          const std::uint64_t fseed = derive_seed(config.seed, i);
          CounterRng frng(fseed);
          const BooleanFunction f = random_function(config.n, frng);
          const auto k = wht_integer(f);
          std::vector<double> coeffs(N);
          std::size_t argmax = 0;
          for (std::size_t z = 0; z < N; ++z) {
            coeffs[z] = k[z] * inv_n;
            if (std::abs(k[z]) > std::abs(k[argmax])) argmax = z;
          }
          const FourierSpectrum spectrum(config.n, std::move(coeffs));
          CounterRng drng(fseed, 1);
          const Answer a = answer(f, spectrum, drng);
          if (a.sample >= N) {
            throw Error(ErrorCode::kDeviceFailure,
                        "device answered outside {0,1}^n");
          }
          const double score = spectrum[a.sample] * spectrum[a.sample];
          const bool collision =
              claimed_q == ClaimedQ::kArgmax && a.sample == argmax;
          part.S += score;
          part.V += collision;
          part.entropy += a.min_entropy;
          samples[i] = static_cast<std::uint32_t>(a.sample);
          if (config.keep_records) tr.records[i] = {fseed, a.sample, score, collision};
        }
        return part;
      });
  double entropy = 0.0;
  std::uint64_t V = 0;
  for (const auto& p : partials) {
    tr.S += p.S;
    V += p.V;
    entropy += p.entropy;
  }
  tr.score_pass = verify_score(tr.S, config);
  if (claimed_q != ClaimedQ::kNone) {
    tr.V = V;
    tr.verdict = collision_verdict(V, config.T, N, config.eps_hog);
  }

  tr.min_entropy_estimate = extract ? entropy : 0.0;
  BitString input;
  for (auto s : samples) input.append(s, config.n);
  tr.extractor_input_bits = input.size();
  const std::size_t k =
      std::min(config.extractor_output_bits,
               extractor_budget(tr.min_entropy_estimate, input.size()));
  if (k > 0) {
    CounterRng seed_rng(config.seed);
    const BitString seed = BitString::random(input.size() + k - 1, seed_rng);
    tr.extracted = toeplitz_extract(input, seed, k);
  }
  return tr;
}

}  // namespace

ProtocolTranscript run_protocol(const ProtocolConfig& config,
                                const DeviceModel& device, ClaimedQ claimed_q) {
  auto answer = [&device](const BooleanFunction&, const FourierSpectrum& spectrum,
                          CounterRng& rng) {
    const BoundDevice bound(device, spectrum);
    const auto law = bound.distribution();
    const double top = *std::max_element(law.begin(), law.end());
    return Answer{bound.sample(rng), -std::log2(top)};
  };
  ProtocolTranscript tr = run_impl(config, answer, claimed_q, true);
  tr.device = device.name();
  return tr;
}

ProtocolTranscript run_protocol(const ProtocolConfig& config,
                                const ChallengeDevice& device,
                                ClaimedQ claimed_q) {
  auto answer = [&device](const BooleanFunction& f, const FourierSpectrum&,
                          CounterRng& rng) {
    std::size_t s = 0;
    try {
      s = device(f, rng);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kDeviceFailure) throw;
      throw Error(ErrorCode::kDeviceFailure, e.what());
    } catch (const std::exception& e) {
      throw Error(ErrorCode::kDeviceFailure, e.what());
    }
    return Answer{s, 0.0};
  };
  ProtocolTranscript tr = run_impl(config, answer, claimed_q, false);
  tr.device = "custom";
  return tr;
}

bool verify_score(double S, const ProtocolConfig& config) {
  const double mu = static_cast<double>(config.T) / static_cast<double>(config.N());
  return S >= (config.b - config.eps_hog / 2.0) * mu;
}

bool verify_score(const ProtocolTranscript& transcript,
                  const ProtocolConfig& config) {
  return verify_score(transcript.S, config);
}

EntropyVerdict collision_verdict(std::uint64_t V, std::uint64_t T,
                                 std::size_t N, double eps_hog) {
  const double mu = static_cast<double>(T) / static_cast<double>(N);
  const double a = 1.0 + eps_hog * eps_hog;
  const double b = 1.0 + eps_hog / 4.0;
  const double v = static_cast<double>(V);
  if (v < std::min(a, b) * mu) return EntropyVerdict::kUniformLike;
  if (v > std::max(a, b) * mu) return EntropyVerdict::kQuantumLike;
  return EntropyVerdict::kInconclusive;
}

}  // namespace certlab
