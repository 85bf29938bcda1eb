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

// Canned reference scenario and the table of checks run by
// `chirpsfg reproduce-paper` and the acceptance suite.

#include <cstdint>
#include <string>
#include <vector>

#include "chirpsfg/pulses.hpp"

namespace chirpsfg::reproduce {

// Reference experiment.
inline constexpr double kPhotonWavelength = 811.11e-9;  // m
inline constexpr double kLaserWavelength = 787.62e-9;   // m
inline constexpr double kPhotonFwhm = 1740e9;           // Hz
inline constexpr double kLaserFwhm = 4770e9;            // Hz
inline constexpr double kChirp = 25.8e6 * 1e-30;        // s^2
inline constexpr double kMeasuredFwhm = 74e9;           // Hz
inline constexpr double kRepetitionRate = 80e6;         // Hz
inline constexpr int kPulseOffset = 12;

pulses::PulseSpec reference_photon();  // +A
pulses::PulseSpec reference_laser();   // -A

enum class Comparison {
  Within,      // |computed - reference| <= tolerance
  AtMost,      // computed <= reference
  AtLeast,     // computed >= reference
};

struct CheckRow {
  int criterion = 0;  // 1..12; 0 for supporting rows
  std::string name;
  std::string unit;
  double reference = 0.0;
  double computed = 0.0;
  double tolerance = 0.0;
  Comparison comparison = Comparison::Within;
  bool pass = false;
  std::string note;
};

struct SweepPoint {
  double fwhm_photon = 0.0;  // Hz
  double fwhm_laser = 0.0;   // Hz
  double chirp = 0.0;        // s^2
  double fwhm_formula = 0.0;
  double fwhm_numeric = 0.0;
  double fwhm_delayed = 0.0;  // numeric, at the delay where the overlap is 0.01
  double product_deviation = 0.0;
};

/// One point of the oracle sweep: numeric FWHM at zero delay and at the
/// delay giving overlap 0.01, plus the time-domain product cross-check.
SweepPoint sweep_point(double fwhm_photon, double fwhm_laser, double chirp);

/// The 5 x 5 x 5 sweep grid: photon FWHM, laser FWHM and the large-chirp
/// metric A^2 dnu_P^4 each take five values.
std::vector<SweepPoint> oracle_sweep();

struct Options {
  bool include_sweep = true;
  std::uint64_t seed = 1;  // random purity draws
  int purity_draws = 10000;
};

std::vector<CheckRow> run_checks(const Options& opts = {});

/// Short description of each numbered criterion.
std::string criterion_title(int criterion);

}  // namespace chirpsfg::reproduce
