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

// Simulated sampling devices. Each one is white-box: besides drawing a sample
// it can report its exact output distribution on a given function.

#ifndef CERTLAB_DEVICE_H_
#define CERTLAB_DEVICE_H_

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "certlab/boolfn.h"
#include "certlab/rng.h"

namespace certlab {

// Inverse-CDF sampler for z ~ fhat(z)^2.
class FourierSampler {
 public:
  explicit FourierSampler(const FourierSpectrum& spectrum);

  std::size_t operator()(CounterRng& rng) const;
  std::size_t size() const noexcept { return cdf_.size(); }

 private:
  std::vector<double> cdf_;
};

enum class DeviceKind {
  kHonest,               // Fourier sampler
  kUniformCheat,         // ignores f
  kArgmaxDeterministic,  // first z maximizing |fhat(z)|
  kBiased,               // argmax with probability p, else a Fourier sample
};

struct DeviceModel {
  DeviceKind kind = DeviceKind::kHonest;
  double p = 0.0;

  static DeviceModel honest() { return {DeviceKind::kHonest, 0.0}; }
  static DeviceModel uniform() { return {DeviceKind::kUniformCheat, 0.0}; }
  static DeviceModel argmax() { return {DeviceKind::kArgmaxDeterministic, 0.0}; }
  static DeviceModel biased(double p);

  // Accepts "honest", "uniform", "argmax" and "biased:<p>".
  static DeviceModel parse(std::string_view text);
  std::string name() const;
};

// Lexicographically first z with maximal |fhat(z)|.
std::size_t argmax_outcome(const FourierSpectrum& spectrum);

// A device specialised to one function. The spectrum must outlive it.
class BoundDevice {
 public:
  BoundDevice(const DeviceModel& model, const FourierSpectrum& spectrum);

  std::size_t sample(CounterRng& rng) const;
  std::vector<double> distribution() const;
  std::size_t argmax() const noexcept { return argmax_; }

 private:
  DeviceModel model_;
  const FourierSpectrum* spectrum_;
  FourierSampler sampler_;
  std::size_t argmax_;
};

// A sampler over functions: one index per call.
using FunctionSampler = std::function<std::size_t(
    const BooleanFunction&, const FourierSpectrum&, CounterRng&)>;

FunctionSampler make_sampler(const DeviceModel& model);

}  // namespace certlab

#endif  // CERTLAB_DEVICE_H_
