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

#include "chirpsfg/sfg_analytic.hpp"

#include <cmath>
#include <numbers>

#include "chirpsfg/error.hpp"
#include "chirpsfg/quantities.hpp"

namespace chirpsfg::analytic {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kLn2 = std::numbers::ln2;
const double kLn4 = std::log(4.0);
using quantities::kSpeedOfLight;

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v))
    throw DomainError(std::string(name) + " must be positive and finite");
}
}  // namespace

double center_frequency(double nu0_photon, double nu0_laser, double chirp, double delta_tau) {
  if (delta_tau == 0.0) return nu0_photon + nu0_laser;
  if (chirp == 0.0)
    throw DomainError("frequency shift pi*delay/A undefined: chirp is zero but delay is nonzero");
  return nu0_photon + nu0_laser + kPi * delta_tau / chirp;
}

double bandwidth_general(double fwhm_photon, double fwhm_laser, double chirp_photon,
                         double chirp_laser) {
  require_positive(fwhm_photon, "photon FWHM");
  require_positive(fwhm_laser, "laser FWHM");
  const double p2 = fwhm_photon * fwhm_photon;
  const double l2 = fwhm_laser * fwhm_laser;
  const double k = kLn4 * kLn4;
  const double csum = chirp_laser + chirp_photon;
  const double num = csum * csum * l2 * l2 * p2 * p2 + k * (l2 + p2) * (l2 + p2);
  const double den =
      (chirp_laser * chirp_laser * l2 + chirp_photon * chirp_photon * p2) * l2 * p2 + k * (l2 + p2);
  return std::sqrt(num / den);
}

double bandwidth_compressed(double fwhm_photon, double fwhm_laser, double chirp) {
  require_positive(fwhm_photon, "photon FWHM");
  require_positive(fwhm_laser, "laser FWHM");
  if (!(chirp > 0.0)) throw DomainError("compressed bandwidth needs a positive chirp");
  return kLn4 / chirp *
         std::sqrt(1.0 / (fwhm_photon * fwhm_photon) + 1.0 / (fwhm_laser * fwhm_laser));
}

double large_chirp_metric(double chirp, double fwhm) {
  require_positive(fwhm, "FWHM");
  const double f2 = fwhm * fwhm;
  return chirp * chirp * f2 * f2;
}

OverlapRange overlap_and_range(double delta_tau, double chirp, double fwhm_photon,
                               double fwhm_laser) {
  require_positive(fwhm_photon, "photon FWHM");
  require_positive(fwhm_laser, "laser FWHM");
  if (chirp == 0.0) throw DomainError("overlap prefactor undefined for zero chirp");
  const double sum2 = fwhm_photon * fwhm_photon + fwhm_laser * fwhm_laser;
  const double dnu = kPi * delta_tau / chirp;
  return {std::exp(-4.0 * kLn2 * dnu * dnu / sum2), std::sqrt(sum2)};
}

double half_overlap_delay(double chirp, double fwhm_photon, double fwhm_laser) {
  // exp(-4 ln2 dnu^2 / S) = 1/2  <=>  dnu = sqrt(S) / 2
  const auto r = overlap_and_range(0.0, chirp, fwhm_photon, fwhm_laser);
  return std::abs(chirp) * r.tuning_range_fwhm / (2.0 * kPi);
}

CenterWavelength center_wavelength(double lambda_photon, double lambda_laser, double chirp,
                                   double delta_tau) {
  require_positive(lambda_photon, "photon wavelength");
  require_positive(lambda_laser, "laser wavelength");
  if (chirp == 0.0) throw DomainError("center wavelength shift undefined for zero chirp");
  const double c = kSpeedOfLight;
  const double sum = lambda_photon + lambda_laser;
  const double prod = lambda_photon * lambda_laser;
  const double den = c * chirp * sum + delta_tau * kPi * prod;
  if (!(den / (c * chirp) > 0.0))
    throw DomainError("delay shifts the SFG frequency to or below zero; outside validity");
  CenterWavelength out;
  out.exact = c * chirp * prod / den;
  out.linear_slope = -kPi * prod * prod / (c * chirp * sum * sum);
  return out;
}

double chirp_from_wavelength_slope(double lambda_photon, double lambda_laser, double slope) {
  require_positive(lambda_photon, "photon wavelength");
  require_positive(lambda_laser, "laser wavelength");
  if (slope == 0.0 || !std::isfinite(slope)) throw DomainError("slope must be finite and nonzero");
  const double sum = lambda_photon + lambda_laser;
  const double prod = lambda_photon * lambda_laser;
  return -kPi * prod * prod / (kSpeedOfLight * slope * sum * sum);
}

double net_gain_threshold(double compression_ratio) {
  if (!(compression_ratio >= 1.0))
    throw DomainError("compression ratio below 1 is a broadening, not a compression");
  return 1.0 / compression_ratio;
}

TimeBinResolution timebin_resolution(double measured_fwhm, double chirp, double tuning_range) {
  require_positive(measured_fwhm, "measured FWHM");
  require_positive(chirp, "chirp");
  require_positive(tuning_range, "tuning range");
  return {measured_fwhm * chirp / kPi, tuning_range * chirp / kPi};
}

double compression_ratio(double input_fwhm, double output_fwhm) {
  require_positive(input_fwhm, "input FWHM");
  require_positive(output_fwhm, "output FWHM");
  return input_fwhm / output_fwhm;
}

SfgReport predict(const pulses::PulseSpec& photon, const pulses::PulseSpec& laser) {
  photon.validate();
  laser.validate();
  const double delta_tau = laser.delay - photon.delay;
  SfgReport r;
  r.center_freq = center_frequency(photon.nu0, laser.nu0, photon.chirp, delta_tau);
  if (!(r.center_freq > 0.0)) throw DomainError("predicted SFG frequency is not positive");
  r.center_wl = quantities::frequency_to_wavelength(r.center_freq);
  r.fwhm = bandwidth_general(photon.fwhm, laser.fwhm, photon.chirp, laser.chirp);
  r.fwhm_unchirped = bandwidth_general(photon.fwhm, laser.fwhm, 0.0, 0.0);
  if (photon.chirp > 0.0) r.fwhm_compressed = bandwidth_compressed(photon.fwhm, laser.fwhm, photon.chirp);
  if (photon.chirp != 0.0) {
    const auto ov = overlap_and_range(delta_tau, photon.chirp, photon.fwhm, laser.fwhm);
    r.overlap = ov.overlap;
    r.tuning_range_fwhm = ov.tuning_range_fwhm;
  } else {
    r.tuning_range_fwhm = r.fwhm_unchirped;
  }
  r.compression_ratio = compression_ratio(photon.fwhm, r.fwhm);
  r.large_chirp_metric = large_chirp_metric(photon.chirp, photon.fwhm);
  return r;
}

}  // namespace chirpsfg::analytic
