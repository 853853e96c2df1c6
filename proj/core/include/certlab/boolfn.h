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

// Boolean functions f : {0,1}^n -> {+1,-1} stored as sign tables, and their
// Fourier spectra
//
//   fhat(z) = (1/N) * sum_x f(x) * (-1)^{popcount(x & z)},   N = 2^n.
//
// Inputs x and frequencies z are the integers 0..N-1.

#ifndef CERTLAB_BOOLFN_H_
#define CERTLAB_BOOLFN_H_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "certlab/rng.h"

namespace certlab {

inline constexpr int kMaxInputBits = 24;

constexpr int parity(std::uint64_t x, std::uint64_t z) noexcept {
  return std::popcount(x & z) & 1;
}

class BooleanFunction {
 public:
  // `values` must have length 2^n with every entry +1 or -1.
  BooleanFunction(int n, std::vector<std::int8_t> values);

  static BooleanFunction constant(int n, int sign);
  // chi_s(x) = (-1)^{s.x}
  static BooleanFunction character(int n, std::uint64_t s);

  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return values_.size(); }
  int operator[](std::size_t x) const noexcept { return values_[x]; }
  std::span<const std::int8_t> values() const noexcept { return values_; }

  // Copy with the sign flipped at every listed position.
  BooleanFunction flipped(std::span<const std::size_t> positions) const;
  // Pointwise product f * g.
  BooleanFunction times(const BooleanFunction& other) const;
  // Number of inputs with f(x) = +1.
  std::size_t count_plus() const noexcept;

  friend bool operator==(const BooleanFunction&,
                         const BooleanFunction&) = default;

 private:
  int n_;
  std::vector<std::int8_t> values_;
};

class FourierSpectrum {
 public:
  FourierSpectrum(int n, std::vector<double> coeffs);

  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  double operator[](std::size_t z) const noexcept { return coeffs_[z]; }
  std::span<const double> coeffs() const noexcept { return coeffs_; }

 private:
  int n_;
  std::vector<double> coeffs_;
};

enum class Heaviness { kLight, kSlightlyHeavy, kVeryHeavy };

const char* heaviness_name(Heaviness h);

// In-place unnormalized butterfly: v <- H v with H_{xz} = (-1)^{x.z}.
// v.size() must be a power of two.
template <class T>
void fwht_inplace(std::span<T> v) {
  const std::size_t n = v.size();
  for (std::size_t h = 1; h < n; h <<= 1) {
    for (std::size_t i = 0; i < n; i += h << 1) {
      for (std::size_t j = i; j < i + h; ++j) {
        const T a = v[j];
        const T b = v[j + h];
        v[j] = a + b;
        v[j + h] = a - b;
      }
    }
  }
}

// N * fhat(z) for every z. Each entry is an integer with the parity of N.
std::vector<std::int32_t> wht_integer(const BooleanFunction& f);

FourierSpectrum wht(const BooleanFunction& f);

// Light: |c| <= 1/sqrt(N); SlightlyHeavy: 1/sqrt(N) < |c| <= 2/sqrt(N);
// VeryHeavy otherwise. Compared as c^2 * N against 1 and 4, which is exact
// for every coefficient of a spectrum produced by wht().
Heaviness classify(double coeff, std::size_t N);

// Exact variant on the integer scale k = N * fhat.
Heaviness classify_scaled(std::int64_t scaled, std::size_t N);

// P_f(z) = { x : f(x) = (-1)^{z.x} sgn(fhat(z)) }. When fhat(z) = 0 the
// caller must pass tie_sign (+1 or -1); otherwise kZeroCoefficient.
std::vector<std::size_t> p_set(const BooleanFunction& f, std::size_t z,
                               std::optional<int> tie_sign = std::nullopt);

// sum_z fhat(z)^4, the collision probability of Fourier sampling.
double fourth_moment(const FourierSpectrum& spectrum);

// Independent uniform signs; f(x) = (-1)^b with b the x-th generator bit.
BooleanFunction random_function(int n, CounterRng& rng);

// "BFN1" + n (u32 LE) + N bits packed LSB first, bit b encodes (-1)^b.
void write_bfn(std::ostream& out, const BooleanFunction& f);
BooleanFunction read_bfn(std::istream& in);

}  // namespace certlab

#endif  // CERTLAB_BOOLFN_H_
