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

#include "certlab/device.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "certlab/error.h"

namespace certlab {

FourierSampler::FourierSampler(const FourierSpectrum& spectrum)
    : cdf_(spectrum.size()) {
  double acc = 0.0;
  for (std::size_t z = 0; z < spectrum.size(); ++z) {
    acc += spectrum[z] * spectrum[z];
    cdf_[z] = acc;
  }
}

std::size_t FourierSampler::operator()(CounterRng& rng) const {
  const double u = rng.uniform01() * cdf_.back();
  // First z with cdf[z] > u; zero-mass entries are never selected.
  auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  if (it == cdf_.end()) {
    // u rounded up to the total: take the last entry with positive mass.
    it = std::lower_bound(cdf_.begin(), cdf_.end(), cdf_.back());
  }
  return static_cast<std::size_t>(it - cdf_.begin());
}

DeviceModel DeviceModel::biased(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "biased device needs p in [0,1]");
  }
  return {DeviceKind::kBiased, p};
}

DeviceModel DeviceModel::parse(std::string_view text) {
  if (text == "honest") return honest();
  if (text == "uniform") return uniform();
  if (text == "argmax") return argmax();
  constexpr std::string_view kPrefix = "biased:";
  if (text.starts_with(kPrefix)) {
    const std::string rest(text.substr(kPrefix.size()));
    std::size_t used = 0;
    double p = 0.0;
    try {
      p = std::stod(rest, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != rest.size()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "cannot parse device probability: " + rest);
    }
    return biased(p);
  }
  throw Error(ErrorCode::kInvalidArgument,
              "unknown device: " + std::string(text));
}

std::string DeviceModel::name() const {
  switch (kind) {
    case DeviceKind::kHonest:
      return "honest";
    case DeviceKind::kUniformCheat:
      return "uniform";
    case DeviceKind::kArgmaxDeterministic:
      return "argmax";
    case DeviceKind::kBiased: {
      std::ostringstream os;
      os << "biased:" << p;
      return os.str();
    }
  }
  return "unknown";
}

std::size_t argmax_outcome(const FourierSpectrum& spectrum) {
  std::size_t best = 0;
  double best_abs = -1.0;
  for (std::size_t z = 0; z < spectrum.size(); ++z) {
    const double a = std::abs(spectrum[z]);
    if (a > best_abs) {
      best_abs = a;
      best = z;
    }
  }
  return best;
}

BoundDevice::BoundDevice(const DeviceModel& model,
                         const FourierSpectrum& spectrum)
    : model_(model),
      spectrum_(&spectrum),
      sampler_(spectrum),
      argmax_(argmax_outcome(spectrum)) {}

std::size_t BoundDevice::sample(CounterRng& rng) const {
  switch (model_.kind) {
    case DeviceKind::kHonest:
      return sampler_(rng);
    case DeviceKind::kUniformCheat:
      return static_cast<std::size_t>(rng.below(spectrum_->size()));
    case DeviceKind::kArgmaxDeterministic:
      return argmax_;
    case DeviceKind::kBiased:
      return rng.bernoulli(model_.p) ? argmax_ : sampler_(rng);
  }
  return argmax_;
}

std::vector<double> BoundDevice::distribution() const {
  const std::size_t N = spectrum_->size();
  std::vector<double> d(N, 0.0);
  switch (model_.kind) {
    case DeviceKind::kHonest:
      for (std::size_t z = 0; z < N; ++z) d[z] = (*spectrum_)[z] * (*spectrum_)[z];
      break;
    case DeviceKind::kUniformCheat:
      std::fill(d.begin(), d.end(), 1.0 / static_cast<double>(N));
      break;
    case DeviceKind::kArgmaxDeterministic:
      d[argmax_] = 1.0;
      break;
    case DeviceKind::kBiased:
      for (std::size_t z = 0; z < N; ++z) {
        d[z] = (1.0 - model_.p) * (*spectrum_)[z] * (*spectrum_)[z];
      }
      d[argmax_] += model_.p;
      break;
  }
  return d;
}

FunctionSampler make_sampler(const DeviceModel& model) {
  return [model](const BooleanFunction&, const FourierSpectrum& spectrum,
                 CounterRng& rng) {
    return BoundDevice(model, spectrum).sample(rng);
  };
}

}  // namespace certlab
