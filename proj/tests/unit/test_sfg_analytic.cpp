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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "chirpsfg/error.hpp"
#include "chirpsfg/quantities.hpp"
#include "chirpsfg/sfg_analytic.hpp"

namespace a = chirpsfg::analytic;
namespace q = chirpsfg::quantities;

namespace {

constexpr double kFs2 = 1e-30;
constexpr double kA = 25.8e6 * kFs2;
constexpr double kP = 1740e9;
constexpr double kL = 4770e9;
constexpr double kLp = 811.11e-9;
constexpr double kLl = 787.62e-9;
constexpr double kNmPerPs = 1e-9 / 1e-12;  // m/s

}  // namespace

TEST(CenterFrequency, ZeroDelayIsSum) {
  EXPECT_DOUBLE_EQ(a::center_frequency(369.6e12, 380.63e12, kA, 0.0), 369.6e12 + 380.63e12);
}

TEST(CenterFrequency, ReferenceCenter) {
  const double nu = a::center_frequency(q::wavelength_to_frequency(kLp),
                                        q::wavelength_to_frequency(kLl), kA, 0.0);
  EXPECT_NEAR(nu / 1e12, 750.23, 0.01);
  EXPECT_NEAR(q::frequency_to_wavelength(nu) * 1e9, 399.60, 0.01);
}

TEST(CenterFrequency, DelaySlopeIsPiOverA) {
  const double h = 1e-13;
  const double d = (a::center_frequency(369.6e12, 380.63e12, kA, h) -
                    a::center_frequency(369.6e12, 380.63e12, kA, -h)) /
                   (2.0 * h);
  EXPECT_NEAR(std::abs(d) * 1e-12 / 1.218e11, 1.0, 1e-3);
  EXPECT_NEAR(std::abs(d) / (std::numbers::pi / kA), 1.0, 1e-9);
}

TEST(CenterFrequency, ZeroChirpIsDomainError) {
  EXPECT_THROW(a::center_frequency(369.6e12, 380.63e12, 0.0, 1e-12), chirpsfg::DomainError);
}

TEST(BandwidthGeneral, UnchirpedIsQuadratureSum) {
  EXPECT_NEAR(a::bandwidth_general(kP, kL, 0, 0), std::hypot(kP, kL), 1.0);
  const double w = a::bandwidth_general(kP, kL, 0, 0);
  EXPECT_NEAR(w / 1e9, 5077, 1.0);
  EXPECT_NEAR(w / kP, 2.92, 0.005);
}

TEST(BandwidthGeneral, OppositeChirps) {
  EXPECT_NEAR(a::bandwidth_general(kP, kL, kA, -kA) / 1e9, 32.9, 0.05);
}

TEST(BandwidthCompressed, Examples) {
  const double w = a::bandwidth_compressed(kP, kL, kA);
  EXPECT_NEAR(w / 1e9, 32.9, 0.05);
  EXPECT_NEAR(a::bandwidth_compressed(kP, kL, 2 * kA), w / 2, 1e-9 * w);
  const double huge = a::bandwidth_compressed(kP, 1e20, kA);
  EXPECT_NEAR(huge / (std::log(4.0) / (kA * kP)), 1.0, 1e-12);
  EXPECT_THROW(a::bandwidth_compressed(kP, kL, 0.0), chirpsfg::DomainError);
}

TEST(LargeChirpMetric, Examples) {
  EXPECT_NEAR(a::large_chirp_metric(kA, kP) / 6.1e3, 1.0, 0.01);
  EXPECT_EQ(a::large_chirp_metric(0.0, kP), 0.0);
}

TEST(LargeChirpMetric, GeneralVsCompressedAtReference) {
  const double g = a::bandwidth_general(kP, kL, kA, -kA);
  const double c = a::bandwidth_compressed(kP, kL, kA);
  EXPECT_LE(std::abs(g - c) / c, 1e-4);
}

TEST(OverlapAndRange, Examples) {
  const auto zero = a::overlap_and_range(0.0, kA, kP, kL);
  EXPECT_DOUBLE_EQ(zero.overlap, 1.0);
  EXPECT_NEAR(zero.tuning_range_fwhm / 1e9, 5077, 1.0);
  EXPECT_NEAR(q::bandwidth_freq_to_wl(zero.tuning_range_fwhm, 400e-9) * 1e9, 2.7, 0.05);

  const double half = kA * std::hypot(kP, kL) / (2.0 * std::numbers::pi);
  EXPECT_NEAR(half * 1e12, 20.8, 0.1);
  EXPECT_NEAR(a::half_overlap_delay(kA, kP, kL), half, 1e-9 * half);
  EXPECT_NEAR(a::overlap_and_range(half, kA, kP, kL).overlap, 0.5, 1e-9);
  EXPECT_NEAR(a::overlap_and_range(-half, kA, kP, kL).overlap, 0.5, 1e-9);
  EXPECT_NEAR(2 * half * 1e12, 42, 0.5);
}

TEST(CenterWavelength, Examples) {
  const auto c = a::center_wavelength(kLp, kLl, kA, 0.0);
  EXPECT_NEAR(c.exact * 1e9, 399.60, 0.005);
  EXPECT_NEAR(c.exact, kLp * kLl / (kLp + kLl), 1e-18);
  EXPECT_NEAR(c.linear_slope / kNmPerPs, -0.0648, 0.0648 * 0.01);
  const double chirp = a::chirp_from_wavelength_slope(kLp, kLl, -0.0641 * kNmPerPs);
  EXPECT_NEAR(chirp / (1e6 * kFs2), 26.1, 0.05);
  EXPECT_NEAR(chirp / (1e6 * kFs2), 26.2, 0.2);
}

TEST(NetGainThreshold, Examples) {
  EXPECT_NEAR(a::net_gain_threshold(40), 0.025, 1e-15);
  EXPECT_DOUBLE_EQ(a::net_gain_threshold(1), 1.0);
  EXPECT_NEAR(a::net_gain_threshold(100), 0.01, 1e-15);
  EXPECT_THROW(a::net_gain_threshold(0), chirpsfg::DomainError);
}

TEST(TimebinResolution, Examples) {
  const double range = a::bandwidth_general(kP, kL, 0, 0);
  const auto r = a::timebin_resolution(74e9, kA, range);
  EXPECT_NEAR(r.min_separation * 1e12, 0.61, 0.005);
  EXPECT_NEAR(r.usable_range * 1e12, 41.7, 0.05);
  const auto h = a::timebin_resolution(37e9, kA, range);
  EXPECT_NEAR(h.min_separation, r.min_separation / 2, 1e-24);
}

TEST(TimebinResolution, SeparationShiftsCenterByOneWidth) {
  const auto r = a::timebin_resolution(74e9, kA, 5077e9);
  const double shift = std::abs(a::center_frequency(369.6e12, 380.63e12, kA, r.min_separation) -
                                a::center_frequency(369.6e12, 380.63e12, kA, 0.0));
  EXPECT_NEAR(shift / 74e9, 1.0, 1e-6);
}

TEST(Predict, ReferenceReport) {
  const chirpsfg::pulses::PulseSpec ph{q::wavelength_to_frequency(kLp), kP, kA, 0.0};
  const chirpsfg::pulses::PulseSpec la{q::wavelength_to_frequency(kLl), kL, -kA, 0.0};
  const auto r = a::predict(ph, la);
  EXPECT_NEAR(r.fwhm / 1e9, 32.9, 0.05);
  EXPECT_NEAR(r.fwhm_unchirped / 1e9, 5077, 1);
  EXPECT_NEAR(r.center_wl * 1e9, 399.60, 0.005);
  EXPECT_DOUBLE_EQ(r.overlap, 1.0);
  EXPECT_NEAR(r.compression_ratio, kP / r.fwhm, 1e-12);
  EXPECT_NEAR(a::compression_ratio(kP, 43e9), 40, 0.5);
}

// Properties.

TEST(SfgAnalyticProperty, GeneralMatchesCompressedAtLargeMetric) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> fw(500e9, 6000e9), ch(1e6 * kFs2, 100e6 * kFs2);
  int tested = 0;
  while (tested < 500) {
    const double p = fw(rng), l = fw(rng), A = ch(rng);
    if (a::large_chirp_metric(A, p) < 1e3 || a::large_chirp_metric(A, l) < 1e3) continue;
    ++tested;
    const double g = a::bandwidth_general(p, l, A, -A);
    const double c = a::bandwidth_compressed(p, l, A);
    ASSERT_NEAR(g / c, 1.0, 1e-3) << p << " " << l << " " << A;
  }
}

TEST(SfgAnalyticProperty, OppositeChirpApproachesMinimumBandwidth) {
  double prev_offset = INFINITY, prev_penalty = INFINITY;
  for (double ap : {5e6 * kFs2, kA, 60e6 * kFs2}) {
    double best = INFINITY, best_al = 0.0;
    const int n = 40001;
    for (int i = 0; i < n; ++i) {
      const double al = -2.0 * ap + 4.0 * ap * i / (n - 1);
      const double w = a::bandwidth_general(kP, kL, ap, al);
      if (w < best) best = w, best_al = al;
    }
    const double offset = std::abs(best_al / -ap - 1.0);
    EXPECT_LT(offset, 0.02);
    EXPECT_LE(offset, prev_offset);
    prev_offset = offset;
    const double penalty = a::bandwidth_general(kP, kL, ap, -ap) / best - 1.0;
    EXPECT_LT(penalty, ap >= kA ? 1e-3 : 1e-2);
    EXPECT_LE(penalty, prev_penalty);
    prev_penalty = penalty;
  }
}

TEST(SfgAnalyticProperty, CenterWavelengthLinearizationIsFirstOrder) {
  // Remainder r(h) = exact(h) - exact(0) - slope h scales as h^2.
  auto r = [](double h) {
    const auto c0 = a::center_wavelength(kLp, kLl, kA, 0.0);
    return a::center_wavelength(kLp, kLl, kA, h).exact - c0.exact - c0.linear_slope * h;
  };
  for (double h : {1e-12, 4e-12, 16e-12}) {
    const double ratio = r(2 * h) / r(h);
    EXPECT_NEAR(ratio, 4.0, 0.05) << h;
  }
  // Richardson: the extrapolated slope matches the linear slope.
  const double h = 1e-12;
  const auto d = [&](double s) {
    return (a::center_wavelength(kLp, kLl, kA, s).exact -
            a::center_wavelength(kLp, kLl, kA, -s).exact) /
           (2 * s);
  };
  const double rich = (4 * d(h) - d(2 * h)) / 3;
  EXPECT_NEAR(rich / a::center_wavelength(kLp, kLl, kA, 0).linear_slope, 1.0, 1e-6);
}

TEST(SfgAnalyticProperty, BandwidthSymmetricInPulses) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> fw(500e9, 6000e9), ch(-50e6 * kFs2, 50e6 * kFs2);
  for (int i = 0; i < 200; ++i) {
    const double p = fw(rng), l = fw(rng), ap = ch(rng), al = ch(rng);
    EXPECT_NEAR(a::bandwidth_general(p, l, ap, al) / a::bandwidth_general(l, p, al, ap), 1.0,
                1e-12);
  }
}
