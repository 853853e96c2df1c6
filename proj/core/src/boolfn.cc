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

#include <array>
#include <cmath>
#include <istream>
#include <ostream>
#include <string>

#include "certlab/error.h"
#include "binary_io.h"

namespace certlab {
namespace {

void check_bits(int n) {
  if (n < 1 || n > kMaxInputBits) {
    throw Error(ErrorCode::kSizeLimit,
                "n must lie in [1, " + std::to_string(kMaxInputBits) +
                    "], got " + std::to_string(n));
  }
}

}  // namespace

BooleanFunction::BooleanFunction(int n, std::vector<std::int8_t> values)
    : n_(n), values_(std::move(values)) {
  check_bits(n);
  if (values_.size() != (std::size_t{1} << n)) {
    throw Error(ErrorCode::kDimensionMismatch,
                "sign table length must be 2^n");
  }
  for (auto v : values_) {
    if (v != 1 && v != -1) {
      throw Error(ErrorCode::kInvalidArgument, "sign table entries must be +-1");
    }
  }
}

BooleanFunction BooleanFunction::constant(int n, int sign) {
  check_bits(n);
  if (sign != 1 && sign != -1) {
    throw Error(ErrorCode::kInvalidArgument, "sign must be +-1");
  }
  return BooleanFunction(
      n, std::vector<std::int8_t>(std::size_t{1} << n,
                                  static_cast<std::int8_t>(sign)));
}

BooleanFunction BooleanFunction::character(int n, std::uint64_t s) {
  check_bits(n);
  const std::size_t N = std::size_t{1} << n;
  if (s >= N) throw Error(ErrorCode::kInvalidArgument, "character out of range");
  std::vector<std::int8_t> values(N);
  for (std::size_t x = 0; x < N; ++x) values[x] = parity(x, s) ? -1 : 1;
  return BooleanFunction(n, std::move(values));
}

BooleanFunction BooleanFunction::flipped(
    std::span<const std::size_t> positions) const {
  BooleanFunction out = *this;
  for (auto x : positions) {
    if (x >= size()) throw Error(ErrorCode::kInvalidArgument, "flip out of range");
    out.values_[x] = static_cast<std::int8_t>(-out.values_[x]);
  }
  return out;
}

BooleanFunction BooleanFunction::times(const BooleanFunction& other) const {
  if (other.n_ != n_) {
    throw Error(ErrorCode::kDimensionMismatch, "functions differ in n");
  }
  BooleanFunction out = *this;
  for (std::size_t x = 0; x < size(); ++x) {
    out.values_[x] = static_cast<std::int8_t>(values_[x] * other.values_[x]);
  }
  return out;
}

std::size_t BooleanFunction::count_plus() const noexcept {
  std::size_t c = 0;
  for (auto v : values_) c += (v > 0);
  return c;
}

FourierSpectrum::FourierSpectrum(int n, std::vector<double> coeffs)
    : n_(n), coeffs_(std::move(coeffs)) {
  check_bits(n);
  if (coeffs_.size() != (std::size_t{1} << n)) {
    throw Error(ErrorCode::kDimensionMismatch, "spectrum length must be 2^n");
  }
}

const char* heaviness_name(Heaviness h) {
  switch (h) {
    case Heaviness::kLight:
      return "light";
    case Heaviness::kSlightlyHeavy:
      return "slightly_heavy";
    case Heaviness::kVeryHeavy:
      return "very_heavy";
  }
  return "unknown";
}

std::vector<std::int32_t> wht_integer(const BooleanFunction& f) {
  std::vector<std::int32_t> v(f.values().begin(), f.values().end());
  fwht_inplace(std::span<std::int32_t>(v));
  return v;
}

FourierSpectrum wht(const BooleanFunction& f) {
  const auto scaled = wht_integer(f);
  const double inv_n = 1.0 / static_cast<double>(f.size());
  std::vector<double> coeffs(scaled.size());
  for (std::size_t z = 0; z < scaled.size(); ++z) {
    coeffs[z] = static_cast<double>(scaled[z]) * inv_n;
  }
  return FourierSpectrum(f.n(), std::move(coeffs));
}

Heaviness classify(double coeff, std::size_t N) {
  const double s = coeff * coeff * static_cast<double>(N);
  if (s <= 1.0) return Heaviness::kLight;
  if (s <= 4.0) return Heaviness::kSlightlyHeavy;
  return Heaviness::kVeryHeavy;
}

Heaviness classify_scaled(std::int64_t scaled, std::size_t N) {
  // (k/N)^2 <= c/N  <=>  k^2 <= c * N
  const auto k2 = static_cast<unsigned long long>(scaled * scaled);
  const auto n = static_cast<unsigned long long>(N);
  if (k2 <= n) return Heaviness::kLight;
  if (k2 <= 4 * n) return Heaviness::kSlightlyHeavy;
  return Heaviness::kVeryHeavy;
}

std::vector<std::size_t> p_set(const BooleanFunction& f, std::size_t z,
                               std::optional<int> tie_sign) {
  if (z >= f.size()) throw Error(ErrorCode::kInvalidArgument, "z out of range");
  std::int64_t correlation = 0;
  for (std::size_t x = 0; x < f.size(); ++x) {
    correlation += parity(x, z) ? -f[x] : f[x];
  }
  int sign = 0;
  if (correlation > 0) {
    sign = 1;
  } else if (correlation < 0) {
    sign = -1;
  } else {
    if (!tie_sign) {
      throw Error(ErrorCode::kZeroCoefficient,
                  "fhat(z) = 0 and no sign convention supplied");
    }
    if (*tie_sign != 1 && *tie_sign != -1) {
      throw Error(ErrorCode::kInvalidArgument, "tie_sign must be +-1");
    }
    sign = *tie_sign;
  }
  std::vector<std::size_t> out;
  out.reserve(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) {
    const int chi = parity(x, z) ? -1 : 1;
    if (f[x] == chi * sign) out.push_back(x);
  }
  return out;
}

double fourth_moment(const FourierSpectrum& spectrum) {
  double s = 0.0;
  for (double c : spectrum.coeffs()) {
    const double c2 = c * c;
    s += c2 * c2;
  }
  return s;
}

BooleanFunction random_function(int n, CounterRng& rng) {
  check_bits(n);
  const std::size_t N = std::size_t{1} << n;
  std::vector<std::int8_t> values(N);
  for (std::size_t base = 0; base < N; base += 64) {
    std::uint64_t word = rng();
    const std::size_t limit = std::min<std::size_t>(64, N - base);
    for (std::size_t b = 0; b < limit; ++b) {
      values[base + b] = (word >> b) & 1 ? -1 : 1;
    }
  }
  return BooleanFunction(n, std::move(values));
}

void write_bfn(std::ostream& out, const BooleanFunction& f) {
  out.write("BFN1", 4);
  internal::write_u32(out, static_cast<std::uint32_t>(f.n()));
  std::vector<char> packed((f.size() + 7) / 8, 0);
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (f[x] < 0) packed[x / 8] = static_cast<char>(packed[x / 8] | (1 << (x % 8)));
  }
  out.write(packed.data(), static_cast<std::streamsize>(packed.size()));
}

BooleanFunction read_bfn(std::istream& in) {
  internal::expect_magic(in, "BFN1");
  const std::uint32_t n = internal::read_u32(in);
  if (n < 1 || n > static_cast<std::uint32_t>(kMaxInputBits)) {
    throw Error(ErrorCode::kFormat, "BFN1 n out of range");
  }
  const std::size_t N = std::size_t{1} << n;
  std::vector<unsigned char> packed((N + 7) / 8);
  in.read(reinterpret_cast<char*>(packed.data()),
          static_cast<std::streamsize>(packed.size()));
  if (!in) throw Error(ErrorCode::kFormat, "truncated BFN1 payload");
  std::vector<std::int8_t> values(N);
  for (std::size_t x = 0; x < N; ++x) {
    values[x] = (packed[x / 8] >> (x % 8)) & 1 ? -1 : 1;
  }
  return BooleanFunction(static_cast<int>(n), std::move(values));
}

}  // namespace certlab
