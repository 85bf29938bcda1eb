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

// Frequency-entangled photon pairs. The joint spectral amplitude is
//
//   f(nu_s, nu_i) = exp(-xs^2 / 2 sigma^2) exp(-xi^2 / 2 sigma^2)
//                   exp(-(xs + xi)^2 / 2 sigma_c^2)
//
// with xs = nu_s - nu0, xi = nu_i - nu0. sigma and sigma_c are amplitude RMS
// scales; sigma_c -> infinity is separable, sigma_c -> 0 is perfectly
// energy-time correlated. The laser is a classical PulseSpec with
// sigma_L = fwhm / (2 sqrt(ln 2)).

#include <vector>

#include "chirpsfg/pulses.hpp"

namespace chirpsfg::entanglement {

struct JsaSpec {
  double nu0 = 0.0;      // degenerate center frequency, Hz
  double sigma = 0.0;    // single-photon amplitude RMS scale, Hz
  double sigma_c = 0.0;  // correlation scale, Hz

  void validate() const;
};

struct PurityReport {
  double purity_initial = 1.0;  // Tr rho_S^2
  double purity_final = 1.0;    // Tr rho_SFG^2
  double purity_difference = 0.0;
  double renyi2_initial = 0.0;  // -ln purity, nats
  double renyi2_final = 0.0;
};

/// Intensity FWHM of either photon's marginal spectrum.
double marginal_bandwidth(double sigma, double sigma_c);

/// SFG intensity FWHM for balanced chirps +A (signal) and -A (laser) in the
/// large-chirp limit A^2 sigma^4 >> 1:
///
///   2 sqrt(ln2) sqrt( [s^2 sL^2 + sc^2 (s^2 + sL^2)] X
///                   / (2 s^2 sL^2 {s^2 + 2 A^2 sc^2 X}) ),
///   X = s^4 + 2 s^2 sL^2 + sc^2 (s^2 + sL^2).
double entangled_sfg_bandwidth(double sigma, double sigma_c, double sigma_laser, double chirp);

/// RMS width of the signal photon after the idler is detected at a sharp
/// frequency. The heralded signal is pure.
double heralded_effective_sigma(double sigma, double sigma_c);

/// Heralded signal as a chirped pulse. Detecting the idler at
/// `idler_frequency` moves the signal center by -xi sigma^2 / (sigma^2 + sigma_c^2).
pulses::PulseSpec heralded_pulse(const JsaSpec& jsa, double idler_frequency, double chirp);

/// sigma_c sqrt(2 sigma^2 + sigma_c^2) / (sigma^2 + sigma_c^2)
double purity_initial(double sigma, double sigma_c);

/// The same quantity in unsimplified form,
/// sqrt(sc^2 (s^2 + sc^2)^2 (2 s^2 + sc^2)) / (s^2 + sc^2)^2.
double purity_initial_expanded(double sigma, double sigma_c);

/// Purity of the SFG photon's reduced state for balanced chirps. Evaluated
/// in units of sigma so that extreme width ratios do not overflow; the
/// difference is computed from its own closed form rather than by
/// subtraction.
PurityReport purity_final(double sigma, double sigma_c, double sigma_laser, double chirp);

/// Independent numerical purity of the SFG photon for balanced chirps: the
/// effective amplitude G(nu_i, nu3) is built by quadrature over the signal
/// frequency, then Tr rho^2 is summed on a `points` x `points` grid.
double purity_quadrature(double sigma, double sigma_c, double sigma_laser, double chirp,
                         std::size_t points = 192);

struct TraceOptions {
  std::size_t idler_points = 512;
  std::size_t signal_points = 512;  // minimum; raised to resolve the phase
  bool check_convergence = true;    // repeat at doubled resolution
};

struct TracedSpectrum {
  pulses::FrequencyGrid grid;
  std::vector<double> intensity;  // unit peak
  double convergence_delta = 0.0; // max change under doubling (0 if unchecked)
  double edge_energy_fraction = 0.0;
};

inline constexpr double kMaxConvergenceDelta = 1e-6;

/// S(nu3) = int d nu_i | int d nu_s f(nu_s, nu_i) exp(i A_s xs^2) E_L(nu3 - nu_s) |^2
/// by nested trapezoidal quadrature. Throws WindowError when more than 1e-6
/// of the energy lies in the edge bands of `out_grid`, GridError when the
/// doubling check moves the spectrum by more than kMaxConvergenceDelta.
TracedSpectrum traced_spectrum(const JsaSpec& jsa, const pulses::PulseSpec& laser,
                               double chirp_signal, const pulses::FrequencyGrid& out_grid,
                               const TraceOptions& opts = {});

/// Output window centered on nu0 + nu0L plus the delay shift, spanning
/// `span_fwhms` times the large-chirp width (capped at the unchirped width).
pulses::FrequencyGrid default_traced_grid(const JsaSpec& jsa, const pulses::PulseSpec& laser,
                                          double chirp_signal, std::size_t points = 256,
                                          double span_fwhms = 8.0);

}  // namespace chirpsfg::entanglement
