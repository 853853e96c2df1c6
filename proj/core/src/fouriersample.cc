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

#include "certlab/fouriersample.h"

#include <cmath>

#include "certlab/error.h"

namespace certlab {

std::size_t fourier_sample(const FourierSpectrum& spectrum, CounterRng& rng) {
  return FourierSampler(spectrum)(rng);
}

double hog_score(const FourierSpectrum& spectrum,
                 std::span<const std::size_t> samples) {
  if (samples.empty()) {
    throw Error(ErrorCode::kEmptySamples, "hog_score needs at least one sample");
  }
  double sum = 0.0;
  for (auto s : samples) {
    if (s >= spectrum.size()) {
      throw Error(ErrorCode::kInvalidArgument, "sample index out of range");
    }
    sum += spectrum[s] * spectrum[s];
  }
  return sum / static_cast<double>(samples.size());
}

PgPbEstimate estimate_pg_pb(int n, const FunctionSampler& algorithm,
                            std::uint64_t functions,
                            const RunOptions& options) {
  const auto partials = run_chunks<PgPbEstimate>(
      functions, kTrialChunk, options.threads,
      [&](std::uint64_t chunk, std::uint64_t begin, std::uint64_t end) {
        CounterRng rng(options.seed, chunk + 1);
        PgPbEstimate part;
        for (std::uint64_t t = begin; t < end; ++t) {
          const BooleanFunction f = random_function(n, rng);
          const auto scaled = wht_integer(f);
          std::vector<double> coeffs(scaled.size());
          const double inv_n = 1.0 / static_cast<double>(f.size());
          for (std::size_t z = 0; z < scaled.size(); ++z) {
            coeffs[z] = scaled[z] * inv_n;
          }
          const FourierSpectrum spectrum(n, std::move(coeffs));
          const std::size_t s = algorithm(f, spectrum, rng);
          if (s >= f.size()) {
            throw Error(ErrorCode::kDeviceFailure, "sampler output out of range");
          }
          const Heaviness h = classify_scaled(scaled[s], f.size());
          part.light.trials++;
          part.light4.trials++;
          part.slightly_heavy.trials++;
          part.light.successes += (h == Heaviness::kLight);
          part.light4.successes += (h != Heaviness::kVeryHeavy);
          part.slightly_heavy.successes += (h == Heaviness::kSlightlyHeavy);
        }
        return part;
      });
  PgPbEstimate total;
  for (const auto& p : partials) {
    total.light.merge(p.light);
    total.light4.merge(p.light4);
    total.slightly_heavy.merge(p.slightly_heavy);
  }
  return total;
}

HeavinessReference gaussian_reference() {
  auto integrand = [](double t) { return t * t * normal_pdf(t); };
  HeavinessReference ref;
  ref.p_b = adaptive_simpson(integrand, -1.0, 1.0, 1e-12);
  ref.p_light4 = adaptive_simpson(integrand, -2.0, 2.0, 1e-12);
  ref.p_g = ref.p_light4 - ref.p_b;
  return ref;
}

HeavinessReference lattice_reference(int n) {
  if (n < 1 || n > kMaxInputBits) {
    throw Error(ErrorCode::kSizeLimit, "lattice_reference needs 1 <= n <= 24");
  }
  const auto N = static_cast<std::int64_t>(1) << n;
  const double log_half_n = static_cast<double>(N) * std::log(0.5);
  HeavinessReference ref;
  // N * E[fhat^2 1{class}] with fhat = (2K - N) / N.
  for (std::int64_t k = 0; k <= N; ++k) {
    const std::int64_t scaled = 2 * k - N;
    const Heaviness h = classify_scaled(scaled, static_cast<std::size_t>(N));
    if (h == Heaviness::kVeryHeavy) continue;
    const double pmf = std::exp(log_binomial(static_cast<double>(N),
                                             static_cast<double>(k)) +
                                log_half_n);
    const double mass = pmf * static_cast<double>(scaled) *
                        static_cast<double>(scaled) / static_cast<double>(N);
    if (h == Heaviness::kLight) ref.p_b += mass;
    ref.p_light4 += mass;
  }
  ref.p_g = ref.p_light4 - ref.p_b;
  return ref;
}

double tv_distance(const FourierSpectrum& a, const FourierSpectrum& b) {
  if (a.n() != b.n()) {
    throw Error(ErrorCode::kDimensionMismatch, "spectra differ in n");
  }
  double sum = 0.0;
  for (std::size_t z = 0; z < a.size(); ++z) {
    sum += std::abs(a[z] * a[z] - b[z] * b[z]);
  }
  return 0.5 * sum;
}

}  // namespace certlab
