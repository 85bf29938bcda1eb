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

#include "chirpsfg/timing_sync.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "chirpsfg/error.hpp"
#include "chirpsfg/quantities.hpp"

namespace chirpsfg::timing {

namespace {
void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v))
    throw DomainError(std::string(name) + " must be positive and finite");
}
}  // namespace

void PathTiming::validate() const {
  require_positive(repetition_rate, "repetition rate");
  if (n < 0) throw DomainError("pulse offset n must be non-negative");
  if (!std::isfinite(t1) || !std::isfinite(t1p) || !std::isfinite(t2))
    throw DomainError("path delays must be finite");
}

double timing_difference(const PathTiming& pt) {
  pt.validate();
  return pt.t2 + pt.n / pt.repetition_rate - pt.t1 - pt.t1p;
}

double reprate_sensitivity(double wavelength, double chirp, double repetition_rate, int n) {
  require_positive(wavelength, "wavelength");
  require_positive(repetition_rate, "repetition rate");
  if (chirp == 0.0 || !std::isfinite(chirp))
    throw DomainError("rep-rate sensitivity needs a nonzero finite chirp");
  if (n < 0) throw DomainError("pulse offset n must be non-negative");
  return wavelength * wavelength * n * std::numbers::pi /
         (quantities::kSpeedOfLight * chirp * repetition_rate * repetition_rate);
}

Measured estimate_pulse_offset(Measured slope_delay, Measured slope_reprate,
                               double repetition_rate) {
  require_positive(repetition_rate, "repetition rate");
  if (slope_delay.value == 0.0 || !std::isfinite(slope_delay.value))
    throw DomainError("delay slope must be nonzero");
  if (slope_delay.sigma < 0.0 || slope_reprate.sigma < 0.0)
    throw DomainError("uncertainties must be non-negative");
  const double sd = std::abs(slope_delay.value);
  const double sr = std::abs(slope_reprate.value);
  const double r2 = repetition_rate * repetition_rate;
  Measured n;
  n.value = sr * r2 / sd;
  n.sigma = r2 * std::hypot(slope_reprate.sigma / sd, sr * slope_delay.sigma / (sd * sd));
  return n;
}

JitterTolerance jitter_tolerance(double linewidth, double wavelength, double chirp,
                                 double repetition_rate, int n) {
  if (!(linewidth >= 0.0)) throw DomainError("linewidth must be non-negative");
  if (n == 0) return {std::numeric_limits<double>::infinity(), true};
  const double s = std::abs(reprate_sensitivity(wavelength, chirp, repetition_rate, n));
  return {linewidth / s, false};
}

}  // namespace chirpsfg::timing
