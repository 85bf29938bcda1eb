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

// Post-processing of measured spectra: background removal, Gaussian fits and
// removal of the spectrometer's instrument width.

#include <string>
#include <string_view>
#include <vector>

#include "chirpsfg/pulses.hpp"

namespace chirpsfg::spectro {

struct MeasuredWidth {
  double value = 0.0;  // Hz
  double sigma = 0.0;  // Hz, 1-sigma

  void validate() const;
};

/// sqrt(M^2 - R^2) with sigma = sqrt((M sM)^2 + (R sR)^2) / value. Both
/// profiles are taken as Gaussian. Throws DomainError when M <= R.
MeasuredWidth deconvolve_resolution(const MeasuredWidth& measured,
                                    const MeasuredWidth& resolution);

/// Quadrature sum.
double combine_uncertainty(double fit_sigma, double resolution_sigma);

enum class AxisUnit { WavelengthNm, FrequencyHz };

struct SampledSpectrum {
  AxisUnit unit = AxisUnit::FrequencyHz;
  std::vector<double> x;
  std::vector<double> y;
};

struct BackgroundResult {
  SampledSpectrum spectrum;
  double clamped_fraction = 0.0;  // share of samples clamped to zero
};

/// Pointwise signal - background, clamped at zero. The two spectra must share
/// unit and axis (relative tolerance 1e-9).
BackgroundResult background_subtract(const SampledSpectrum& signal,
                                     const SampledSpectrum& background);

/// Parses a header line naming the axis (`wavelength_nm` or `frequency_hz`,
/// optionally followed by a second column name) and then `x,y` rows. Blank
/// lines and lines starting with '#' are skipped.
SampledSpectrum parse_spectrum_csv(std::string_view text);

/// Reorders to ascending frequency, converting a wavelength axis.
SampledSpectrum to_frequency_axis(const SampledSpectrum& s);

struct SpectrumFit {
  pulses::GaussianFit fit;   // on the frequency axis, Hz
  double center_wl = 0.0;    // m
  double fwhm_wl = 0.0;      // m
  double fwhm_wl_sigma = 0.0;
};

SpectrumFit fit_spectrum(const SampledSpectrum& s);

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double slope_sigma = 0.0;
  double intercept_sigma = 0.0;
  double residual_rms = 0.0;
};

/// Ordinary least squares; uncertainties from the residual variance with
/// n - 2 degrees of freedom. Needs at least three points.
LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace chirpsfg::spectro
