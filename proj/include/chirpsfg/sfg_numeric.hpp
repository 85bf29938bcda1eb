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

// Brute-force numerical reference for the upconverted spectrum. The SFG field
// is the frequency-domain convolution
//
//   E(nu3) = sum_k E_P(nu_k) E_L(nu3 - nu_k) w_k step_P
//
// evaluated by direct O(N M) quadrature (trapezoidal end weights), with the
// laser amplitude linearly interpolated on its own grid. None of the closed
// forms in sfg_analytic.hpp are used to compute values here; they only place
// the default output window.

#include <string>
#include <vector>

#include "chirpsfg/pulses.hpp"

namespace chirpsfg::numeric {

inline constexpr std::size_t kDefaultInputPoints = std::size_t{1} << 13;
inline constexpr std::size_t kDefaultOutputPoints = std::size_t{1} << 12;
inline constexpr double kDefaultOutputSpanFwhms = 6.0;
/// Largest fraction of output energy allowed in the edge bands of the window.
inline constexpr double kMaxEdgeEnergyFraction = 1e-6;

struct UpconversionResult {
  pulses::SpectralAmplitude spectrum;  // normalized to unit peak intensity
  double raw_peak_intensity = 0.0;     // peak |E|^2 before normalization
  double edge_energy_fraction = 0.0;   // energy in the outer 1/32 of each side
};

/// Throws GridError if either input fails its own adequacy rule (when its
/// source spec is known) or the combined integrand phase is undersampled on
/// the photon grid; WindowError if the output window clips the signal.
UpconversionResult upconvert(const pulses::SpectralAmplitude& photon,
                             const pulses::SpectralAmplitude& laser,
                             const pulses::FrequencyGrid& out_grid);

struct GridOptions {
  std::size_t input_points = kDefaultInputPoints;    // minimum; raised by the phase rule
  std::size_t output_points = kDefaultOutputPoints;
  double output_span_fwhms = kDefaultOutputSpanFwhms;
};

/// Output window centered on the predicted SFG frequency, spanning
/// `span_fwhms` times the predicted FWHM.
pulses::FrequencyGrid default_output_grid(const pulses::PulseSpec& photon,
                                          const pulses::PulseSpec& laser,
                                          const GridOptions& opts = {});

/// Synthesizes both pulses on adequate grids and upconverts them.
UpconversionResult upconvert(const pulses::PulseSpec& photon, const pulses::PulseSpec& laser,
                             const GridOptions& opts = {});

struct ScanRow {
  double delta_tau = 0.0;       // s
  double center_freq = 0.0;     // Hz, midpoint of half-maximum crossings
  double center_wl = 0.0;       // m
  double fwhm = 0.0;            // Hz
  double peak_intensity = 0.0;  // relative to delta_tau = 0
  bool ok = false;
  std::string error;
};

/// Upconverts once per relative delay (laser delay = photon delay + delta_tau).
/// Rows are returned in input order; a failing row records its error and the
/// scan continues. Rows whose peak falls below 1e-4 of the zero-delay peak
/// are flagged as outside the overlap range.
std::vector<ScanRow> delay_scan(const pulses::PulseSpec& photon, const pulses::PulseSpec& laser,
                                const std::vector<double>& delays, const GridOptions& opts = {});

struct ProductCheck {
  double max_deviation = 0.0;  // max |I_conv - I_product| on unit-peak intensities
  std::size_t compared_points = 0;
};

/// Cross-checks the convolution against the classical picture: the SFG field
/// is the product of the two input fields in the time domain. Both inputs
/// must share step and count (see pulses::common_grids). Fields synthesized
/// from a pulse are evaluated in closed form on the time window conjugate to
/// the grid, so the routes agree only when each pulse fits inside that
/// window, which the phase-resolution rule guarantees. The direct sum is evaluated
/// on every sample above 1e-3 of the peak plus a uniform stride, thinned to
/// at most `max_points`; input samples below 1e-16 of their field's peak
/// amplitude are skipped.
ProductCheck classical_product_check(const pulses::SpectralAmplitude& photon,
                                     const pulses::SpectralAmplitude& laser,
                                     std::size_t max_points = 2048);

}  // namespace chirpsfg::numeric
