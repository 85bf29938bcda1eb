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

// Gaussian pulse descriptions and sampled complex spectral amplitudes.
//
// A pulse is E(nu) = U(nu) exp(i phi(nu)) with
//   U(nu)   = exp(-2 ln2 (nu - nu0)^2 / fwhm^2)        (intensity FWHM = fwhm)
//   phi(nu) = 2 pi (nu - nu0) delay + chirp (nu - nu0)^2
// where nu is ordinary frequency in Hz and chirp is in s^2. A positive delay
// moves the temporal envelope to later times; the instantaneous frequency
// sweeps at pi / chirp Hz per second.

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace chirpsfg::pulses {

using Complex = std::complex<double>;

struct PulseSpec {
  double nu0 = 0.0;    // center frequency, Hz
  double fwhm = 0.0;   // intensity FWHM, Hz
  double chirp = 0.0;  // quadratic spectral phase coefficient A, s^2
  double delay = 0.0;  // linear spectral phase (group delay) tau, s

  /// Throws DomainError when an invariant is violated.
  void validate() const;
};

struct FrequencyGrid {
  double start = 0.0;  // Hz
  double step = 0.0;   // Hz
  std::size_t count = 0;

  double at(std::size_t k) const { return start + static_cast<double>(k) * step; }
  double end() const { return at(count - 1); }
  void validate() const;
};

/// Complex amplitude sampled on a uniform frequency grid. Immutable once built.
class SpectralAmplitude {
 public:
  SpectralAmplitude(FrequencyGrid grid, std::vector<Complex> values,
                    std::optional<PulseSpec> source = std::nullopt);

  const FrequencyGrid& grid() const { return grid_; }
  /// The pulse this amplitude was synthesized from, if any.
  const std::optional<PulseSpec>& source() const { return source_; }
  std::span<const Complex> values() const { return values_; }
  std::size_t size() const { return values_.size(); }

  std::vector<double> frequencies() const;
  /// |E|^2, normalized to unit peak when `normalize` is set.
  std::vector<double> intensity(bool normalize = true) const;
  /// Sum |E|^2 * step.
  double energy() const;

 private:
  FrequencyGrid grid_;
  std::vector<Complex> values_;
  std::optional<PulseSpec> source_;
};

// ---------------------------------------------------------------------------
// Grid adequacy
//
// A grid is adequate for a pulse when it covers nu0 +/- 4 fwhm and the chirp
// phase changes by less than pi/8 between neighbouring samples at the far edge
// of the grid, i.e. step < pi / (8 |A| max|nu - nu0|).

inline constexpr std::size_t kMinGridPoints = 16;
inline constexpr double kCoverageFwhms = 4.0;

/// Largest admissible step for a grid whose farthest sample sits
/// `half_span` Hz from nu0. Infinite for an unchirped pulse.
double max_phase_step(double chirp, double half_span);

/// Throws GridError naming the required parameters when `grid` is too narrow
/// or too coarse for `spec`.
void check_grid(const PulseSpec& spec, const FrequencyGrid& grid);

/// Smallest power-of-two grid (at least `min_points`) that is adequate for
/// `spec`, with nu0 on a sample and the step refined by `step_margin` >= 1
/// beyond the phase rule.
FrequencyGrid adequate_grid(const PulseSpec& spec, std::size_t min_points = 8192,
                            double step_margin = 1.0);

/// Grids with a shared step and count, one per spec, each with its nu0 on a
/// sample. Used where two fields must be combined sample by sample.
std::pair<FrequencyGrid, FrequencyGrid> common_grids(const PulseSpec& a, const PulseSpec& b,
                                                     std::size_t min_points = 1024);

SpectralAmplitude synthesize(const PulseSpec& spec, const FrequencyGrid& grid);

/// Same as synthesize but without the adequacy check. Only for constructing
/// deliberately undersampled fields.
SpectralAmplitude synthesize_unchecked(const PulseSpec& spec, const FrequencyGrid& grid);

// ---------------------------------------------------------------------------
// Measurement

struct HalfMaximum {
  double left = 0.0;   // interpolated crossing below the peak
  double right = 0.0;  // interpolated crossing above the peak
  std::size_t peak_index = 0;
  double peak_value = 0.0;

  double width() const { return right - left; }
  double midpoint() const { return 0.5 * (left + right); }
};

/// Half-maximum crossings by linear interpolation, walking outward from the
/// global maximum. Throws MeasurementError if the peak sits on a boundary or
/// either side never drops below half maximum.
HalfMaximum half_maximum(std::span<const double> x, std::span<const double> y);

inline double measure_fwhm(std::span<const double> x, std::span<const double> y) {
  return half_maximum(x, y).width();
}

/// y = offset + amplitude * exp(-4 ln2 (x - center)^2 / fwhm^2)
struct GaussianFit {
  double center = 0.0;
  double fwhm = 0.0;
  double amplitude = 0.0;
  double offset = 0.0;
  double center_sigma = 0.0;
  double fwhm_sigma = 0.0;
  double amplitude_sigma = 0.0;
  double offset_sigma = 0.0;
  double residual_norm = 0.0;
  int iterations = 0;
};

inline constexpr int kFitMaxIterations = 200;
inline constexpr double kFitTolerance = 1e-10;

/// Damped least squares (Levenberg-Marquardt) with an analytic Jacobian.
/// Seeds come from the background-subtracted centroid and variance. The
/// 1-sigma uncertainties are sqrt(diag(cov)) with cov = s^2 (J^T J)^-1.
GaussianFit fit_gaussian(std::span<const double> x, std::span<const double> y);

// ---------------------------------------------------------------------------
// Time domain

/// Complex temporal envelope relative to a carrier frequency.
///
///   e(t) = sum_k E(nu_k) exp(-2 pi i (nu_k - carrier) t) * step
///
/// With this sign a spectral phase 2 pi nu tau delays the envelope by tau, and
/// the instantaneous frequency is carrier - (1 / 2pi) d arg e / dt.
struct TemporalEnvelope {
  double t_start = 0.0;  // s
  double dt = 0.0;       // s
  double carrier = 0.0;  // Hz
  std::vector<Complex> values;

  std::vector<double> times() const;
  std::vector<double> intensity(bool normalize = true) const;
  /// Sum |e|^2 * dt; equals SpectralAmplitude::energy() (Parseval).
  double energy() const;
  /// Instantaneous frequency at each interior sample from central phase
  /// differences, as an offset from the carrier in Hz. End samples copy
  /// their neighbours.
  std::vector<double> instantaneous_frequency() const;
};

/// Transforms to the time domain. A grid whose count is not a power of two is
/// zero-padded to the next one; `oversample` (a power of two) pads further,
/// refining the time step by that factor.
TemporalEnvelope time_envelope(const SpectralAmplitude& amp, std::size_t oversample = 1);

}  // namespace chirpsfg::pulses
