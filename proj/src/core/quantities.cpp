// Copyright 2026 The chirpsfg Authors
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

#include "chirpsfg/quantities.hpp"

#include <string>

#include "chirpsfg/error.hpp"

namespace chirpsfg::quantities {

Width Width::fwhm(double hz) {
  if (!(hz > 0.0) || !std::isfinite(hz))
    throw DomainError("width must be positive and finite, got " + std::to_string(hz));
  return {hz, WidthConvention::IntensityFwhm};
}

Width Width::rms(double hz) {
  if (!(hz > 0.0) || !std::isfinite(hz))
    throw DomainError("width must be positive and finite, got " + std::to_string(hz));
  return {hz, WidthConvention::AmplitudeRms};
}

double wavelength_to_frequency(double wavelength_m) {
  if (!(wavelength_m > 0.0) || !std::isfinite(wavelength_m))
    throw DomainError("wavelength must be positive, got " + std::to_string(wavelength_m));
  return kSpeedOfLight / wavelength_m;
}

double frequency_to_wavelength(double frequency_hz) {
  if (!(frequency_hz > 0.0) || !std::isfinite(frequency_hz))
    throw DomainError("frequency must be positive, got " + std::to_string(frequency_hz));
  return kSpeedOfLight / frequency_hz;
}

double bandwidth_wl_to_freq(double width_m, double center_m) {
  if (!(center_m > 0.0)) throw DomainError("center wavelength must be positive");
  if (width_m < 0.0) throw DomainError("bandwidth must be non-negative");
  if (width_m > 0.5 * center_m)
    throw DomainError("bandwidth exceeds half the center wavelength; narrow-band conversion invalid");
  return kSpeedOfLight * width_m / (center_m * center_m);
}

double bandwidth_freq_to_wl(double width_hz, double center_m) {
  if (!(center_m > 0.0)) throw DomainError("center wavelength must be positive");
  if (width_hz < 0.0) throw DomainError("bandwidth must be non-negative");
  const double width_m = width_hz * center_m * center_m / kSpeedOfLight;
  if (width_m > 0.5 * center_m)
    throw DomainError("bandwidth exceeds half the center wavelength; narrow-band conversion invalid");
  return width_m;
}

Width fwhm_rms_convert(const Width& w, WidthConvention target) {
  if (w.convention == target) return w;
  if (target == WidthConvention::AmplitudeRms)
    return {w.value / kFwhmPerSigma, target};
  return {w.value * kFwhmPerSigma, target};
}

}  // namespace chirpsfg::quantities
