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

// Exact classical simulation of Fourier sampling and the heavy-output
// statistics it is scored by.

#ifndef CERTLAB_FOURIERSAMPLE_H_
#define CERTLAB_FOURIERSAMPLE_H_

#include <cstddef>
#include <cstdint>
#include <span>

#include "certlab/boolfn.h"
#include "certlab/device.h"
#include "certlab/parallel.h"
#include "certlab/rng.h"
#include "certlab/stats.h"

namespace certlab {

std::size_t fourier_sample(const FourierSpectrum& spectrum, CounterRng& rng);

// Mean of fhat(s)^2 over the samples.
double hog_score(const FourierSpectrum& spectrum,
                 std::span<const std::size_t> samples);

// Heaviness of one device output per fresh random function.
//   p_b      : |fhat(s)| <= 1/sqrt(N)
//   p_light4 : |fhat(s)| <= 2/sqrt(N)
//   p_g      : 1/sqrt(N) < |fhat(s)| <= 2/sqrt(N)   (= p_light4 - p_b)
struct PgPbEstimate {
  ProportionEstimate light;
  ProportionEstimate light4;
  ProportionEstimate slightly_heavy;

  double p_b() const { return light.value(); }
  double p_light4() const { return light4.value(); }
  double p_g() const { return slightly_heavy.value(); }
  std::uint64_t trials() const { return light.trials; }
};

PgPbEstimate estimate_pg_pb(int n, const FunctionSampler& algorithm,
                            std::uint64_t functions, const RunOptions& options);

struct HeavinessReference {
  double p_b = 0.0;
  double p_light4 = 0.0;
  double p_g = 0.0;
};

// Large-N values for the honest sampler, where sqrt(N) fhat(z) ~ N(0,1):
// p_b = int_{-1}^{1} t^2 phi(t) dt, p_light4 = int_{-2}^{2} t^2 phi(t) dt.
HeavinessReference gaussian_reference();

// The same quantities at finite N, summed exactly over the binomial law of
// N fhat(z) = 2K - N with K ~ Bin(N, 1/2).
HeavinessReference lattice_reference(int n);

// Half L1 distance between the Fourier sampling laws fhat1^2 and fhat2^2.
double tv_distance(const FourierSpectrum& a, const FourierSpectrum& b);

}  // namespace certlab

#endif  // CERTLAB_FOURIERSAMPLE_H_
