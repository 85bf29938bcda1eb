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

#pragma once

// Physical constants and unit conversions. Everything inside the library is
// SI: frequencies in Hz, times in s, chirp parameters in s^2. Conversions to
// nm, GHz, ps or fs^2 belong at I/O boundaries only.

#include <cmath>
#include <numbers>

namespace chirpsfg::quantities {

/// Speed of light in vacuum, m/s (exact).
inline constexpr double kSpeedOfLight = 299'792'458.0;

/// Intensity FWHM of a Gaussian over its amplitude RMS width sigma, where the
/// amplitude is exp(-(nu - nu0)^2 / (2 sigma^2)).
inline const double kFwhmPerSigma = 2.0 * std::sqrt(std::numbers::ln2);

// Unit scale factors into SI.
inline constexpr double kNano = 1e-9;
inline constexpr double kPico = 1e-12;
inline constexpr double kFemto = 1e-15;
inline constexpr double kGiga = 1e9;
inline constexpr double kTera = 1e12;
/// 1 fs^2 in s^2.
inline constexpr double kFs2 = 1e-30;

enum class WidthConvention { IntensityFwhm, AmplitudeRms };

/// A spectral width tagged with the convention it is expressed in.
struct Width {
  double value = 0.0;  // Hz
  WidthConvention convention = WidthConvention::IntensityFwhm;

  static Width fwhm(double hz);
  static Width rms(double hz);
};

double wavelength_to_frequency(double wavelength_m);
double frequency_to_wavelength(double frequency_hz);

/// Narrow-band conversion c * dlambda / lambda0^2. Rejects widths above
/// lambda0 / 2 where the linearization is meaningless.
double bandwidth_wl_to_freq(double width_m, double center_m);
double bandwidth_freq_to_wl(double width_hz, double center_m);

Width fwhm_rms_convert(const Width& w, WidthConvention target);

inline double fwhm_to_sigma(double fwhm_hz) { return fwhm_hz / kFwhmPerSigma; }
inline double sigma_to_fwhm(double sigma_hz) { return sigma_hz * kFwhmPerSigma; }

}  // namespace chirpsfg::quantities
