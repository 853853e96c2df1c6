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

#include "benchmark/benchmark.h"
#include "certlab/boolfn.h"
#include "certlab/device.h"
#include "certlab/fouriersample.h"
#include "certlab/rejection.h"
#include "certlab/rng.h"
#include "certlab/sqforrelation.h"

namespace {

void BM_fourier_sampler_build(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  certlab::CounterRng rng(1);
  const auto spectrum = certlab::wht(certlab::random_function(n, rng));
  for (auto _ : state) {
    benchmark::DoNotOptimize(certlab::FourierSampler(spectrum));
  }
}
BENCHMARK(BM_fourier_sampler_build)->Arg(8)->Arg(12)->Arg(16);

void BM_fourier_sampler_draw(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  certlab::CounterRng rng(2);
  const certlab::FourierSampler sampler(certlab::wht(certlab::random_function(n, rng)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sampler(rng));
  }
}
BENCHMARK(BM_fourier_sampler_draw)->Arg(8)->Arg(12)->Arg(16);

void BM_sample_gprime(benchmark::State& state) {
  const certlab::DistParams params{static_cast<int>(state.range(0)), 20.0};
  certlab::CounterRng rng(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(certlab::sample_gprime(params, rng));
  }
}
BENCHMARK(BM_sample_gprime)->Arg(8)->Arg(12)->Arg(16);

void BM_sample_d(benchmark::State& state) {
  const certlab::DistParams params{static_cast<int>(state.range(0)), 20.0};
  certlab::CounterRng rng(4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(certlab::sample_d(params, rng));
  }
}
BENCHMARK(BM_sample_d)->Arg(8)->Arg(12);

void BM_phi(benchmark::State& state) {
  const certlab::DistParams params{static_cast<int>(state.range(0)), 20.0};
  certlab::CounterRng rng(5);
  const auto pair = certlab::sample_d(params, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(certlab::phi(pair));
  }
}
BENCHMARK(BM_phi)->Arg(8)->Arg(12);

void BM_rejection_sample(benchmark::State& state) {
  const certlab::DistParams params{static_cast<int>(state.range(0)), 20.0};
  certlab::CounterRng rng(6);
  const auto pair = certlab::sample_d(params, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(certlab::rejection_sample(pair.g, rng));
  }
}
BENCHMARK(BM_rejection_sample)->Arg(8)->Arg(12);

}  // namespace
