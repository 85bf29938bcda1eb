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

// Closed-form predictions for sum-frequency generation between two chirped
// Gaussian fields. Sign convention: the photon carries chirp +A and the laser
// -A; delta_tau = tau_laser - tau_photon, so a positive delta_tau means the
// laser path is delayed relative to the photon path.

#include "chirpsfg/pulses.hpp"

namespace chirpsfg::analytic {

/// nu0P + nu0L + pi delta_tau / A. A may be zero only when delta_tau is zero.
double center_frequency(double nu0_photon, double nu0_laser, double chirp, double delta_tau);

/// Intensity FWHM of |E_SFG|^2 for arbitrary chirps A_P, A_L:
///
///   sqrt( ((A_L + A_P)^2 L^4 P^4 + ln(4)^2 (L^2 + P^2)^2)
///       / ((A_L^2 L^2 + A_P^2 P^2) L^2 P^2 + ln(4)^2 (L^2 + P^2)) )
///
/// with P, L the input intensity FWHMs. Independent of delay.
double bandwidth_general(double fwhm_photon, double fwhm_laser, double chirp_photon,
                         double chirp_laser);

/// Large-chirp limit for opposite chirps +/-A: (ln 4 / A) sqrt(1/P^2 + 1/L^2).
double bandwidth_compressed(double fwhm_photon, double fwhm_laser, double chirp);

/// A^2 dnu^4; the compressed-bandwidth formula needs this to be >> 1.
double large_chirp_metric(double chirp, double fwhm);

struct OverlapRange {
  double overlap = 1.0;            // intensity prefactor in (0, 1]
  double tuning_range_fwhm = 0.0;  // Hz
};

/// Overlap prefactor exp(-4 ln2 dnu^2 / (P^2 + L^2)) with dnu = pi delta_tau / A,
/// and the FWHM tuning range sqrt(P^2 + L^2) it implies.
OverlapRange overlap_and_range(double delta_tau, double chirp, double fwhm_photon,
                               double fwhm_laser);

/// Delay that reduces the overlap prefactor to one half.
double half_overlap_delay(double chirp, double fwhm_photon, double fwhm_laser);

struct CenterWavelength {
  double exact = 0.0;         // m
  double linear_slope = 0.0;  // m per s of delay
};

/// lambda_SFG(delta_tau) = c A lP lL / (c A (lP + lL) + pi delta_tau lP lL)
/// and its first-order slope -pi lP^2 lL^2 / (c A (lP + lL)^2).
CenterWavelength center_wavelength(double lambda_photon, double lambda_laser, double chirp,
                                   double delta_tau);

/// Inverts the linear slope for the chirp parameter.
double chirp_from_wavelength_slope(double lambda_photon, double lambda_laser, double slope);

/// Conversion efficiency above which compression yields a net spectral
/// brightness gain: 1 / ratio.
double net_gain_threshold(double compression_ratio);

struct TimeBinResolution {
  double min_separation = 0.0;  // s
  double usable_range = 0.0;    // s
};

/// Converts frequency resolution into timing resolution through the chirp
/// rate pi / A.
TimeBinResolution timebin_resolution(double measured_fwhm, double chirp, double tuning_range);

/// Ratio of input to output bandwidth.
double compression_ratio(double input_fwhm, double output_fwhm);

/// Summary of every closed-form prediction for one photon/laser pair.
struct SfgReport {
  double center_freq = 0.0;        // Hz
  double center_wl = 0.0;          // m
  double fwhm = 0.0;               // Hz, general formula
  double fwhm_compressed = 0.0;    // Hz, large-chirp formula (0 when not applicable)
  double fwhm_unchirped = 0.0;     // Hz, same inputs without chirp
  double overlap = 1.0;
  double tuning_range_fwhm = 0.0;  // Hz
  double compression_ratio = 0.0;  // photon FWHM / SFG FWHM
  double large_chirp_metric = 0.0; // using the photon chirp and FWHM
};

SfgReport predict(const pulses::PulseSpec& photon, const pulses::PulseSpec& laser);

}  // namespace chirpsfg::analytic
