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

// Timing chain between the two optical paths that meet at the crystal. The
// laser pulse travelling path 2 left the oscillator n periods after the one
// that seeded the photon in path 1, so the relative delay depends on the
// repetition rate R:
//
//   dt = t2 + n / R - t1 - t1'

namespace chirpsfg::timing {

struct PathTiming {
  double t1 = 0.0;   // source path, s
  double t1p = 0.0;  // fiber path, s
  double t2 = 0.0;   // stretcher path, s
  int n = 0;         // pulse offset
  double repetition_rate = 0.0;  // Hz

  double t3() const { return t2 + n / repetition_rate; }
  void validate() const;
};

double timing_difference(const PathTiming& pt);

/// d lambda_SFG / dR = lambda^2 n pi / (c A R^2), m per Hz.
double reprate_sensitivity(double wavelength, double chirp, double repetition_rate, int n);

struct Measured {
  double value = 0.0;
  double sigma = 0.0;  // 1-sigma uncertainty
};

/// n = |d lambda/dR| R^2 / |d lambda/dt3| with first-order error
/// propagation. Slopes enter as magnitudes because the two scans are
/// reported with opposite sign conventions; n is positive by construction.
Measured estimate_pulse_offset(Measured slope_delay, Measured slope_reprate,
                               double repetition_rate);

struct JitterTolerance {
  double max_detuning = 0.0;  // Hz; +inf when insensitive
  bool insensitive = false;   // n == 0: both pulses share an origin
};

/// Detuning at which the induced center shift equals `linewidth`.
JitterTolerance jitter_tolerance(double linewidth, double wavelength, double chirp,
                                 double repetition_rate, int n);

}  // namespace chirpsfg::timing
