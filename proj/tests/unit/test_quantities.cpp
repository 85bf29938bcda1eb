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
#include <random>

#include "chirpsfg/error.hpp"
#include "chirpsfg/quantities.hpp"

namespace q = chirpsfg::quantities;

TEST(Quantities, WavelengthToFrequencyExamples) {
  EXPECT_NEAR(q::wavelength_to_frequency(811.11e-9) / 1e12, 369.60, 0.01);
  EXPECT_NEAR(q::wavelength_to_frequency(787.62e-9) / 1e12, 380.63, 0.005);
  EXPECT_DOUBLE_EQ(q::wavelength_to_frequency(q::kSpeedOfLight), 1.0);
  EXPECT_NEAR(q::wavelength_to_frequency(404e-9) / 1e12, 742.06, 0.005);
}

TEST(Quantities, SumOfCentersMapsToBlueWavelength) {
  const double sum = q::wavelength_to_frequency(811.11e-9) + q::wavelength_to_frequency(787.62e-9);
  EXPECT_NEAR(sum / 1e12, 750.23, 0.01);
  EXPECT_NEAR(q::frequency_to_wavelength(sum) * 1e9, 399.60, 0.01);
}

TEST(Quantities, RejectsNonPositiveWavelength) {
  EXPECT_THROW(q::wavelength_to_frequency(0.0), chirpsfg::DomainError);
  EXPECT_THROW(q::wavelength_to_frequency(-1e-6), chirpsfg::DomainError);
  EXPECT_THROW(q::frequency_to_wavelength(0.0), chirpsfg::DomainError);
  EXPECT_THROW(q::wavelength_to_frequency(NAN), chirpsfg::DomainError);
}

TEST(Quantities, BandwidthWavelengthToFrequencyExamples) {
  EXPECT_NEAR(q::bandwidth_wl_to_freq(0.033e-9, 404e-9) / 1e9, 60.7, 0.1);
  EXPECT_NEAR(q::bandwidth_wl_to_freq(9.86e-9, 787.62e-9) / 1e9, 4766, 1.0);
  EXPECT_EQ(q::bandwidth_wl_to_freq(0.0, 800e-9), 0.0);
}

TEST(Quantities, BandwidthConversionsRoundTrip) {
  const double hz = q::bandwidth_wl_to_freq(1.5e-9, 800e-9);
  EXPECT_NEAR(q::bandwidth_freq_to_wl(hz, 800e-9), 1.5e-9, 1e-21);
}

TEST(Quantities, FwhmRmsExamples) {
  const auto f = q::fwhm_rms_convert(q::Width::rms(1e12), q::WidthConvention::IntensityFwhm);
  EXPECT_NEAR(f.value / 1e12, 1.6651, 1e-4);
  EXPECT_EQ(f.convention, q::WidthConvention::IntensityFwhm);
  const auto s = q::fwhm_rms_convert(q::Width::fwhm(4770e9), q::WidthConvention::AmplitudeRms);
  EXPECT_NEAR(s.value / 1e9, 2864.8, 0.15);
  const auto back = q::fwhm_rms_convert(s, q::WidthConvention::IntensityFwhm);
  EXPECT_NEAR(back.value, 4770e9, 4770e9 * 4e-16);
  const auto same = q::fwhm_rms_convert(s, q::WidthConvention::AmplitudeRms);
  EXPECT_EQ(same.value, s.value);
}

// Properties over random inputs.

TEST(QuantitiesProperty, WavelengthFrequencyRoundTrip) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> wl(200e-9, 3000e-9);
  for (int i = 0; i < 1000; ++i) {
    const double l = wl(rng);
    const double back = q::frequency_to_wavelength(q::wavelength_to_frequency(l));
    EXPECT_NEAR(back / l, 1.0, 1e-12);
  }
}

TEST(QuantitiesProperty, BandwidthConversionIsLinear) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> wl(300e-9, 2000e-9);
  std::uniform_real_distribution<double> dl(1e-12, 5e-9);
  for (int i = 0; i < 500; ++i) {
    const double l = wl(rng), d = dl(rng);
    const double one = q::bandwidth_wl_to_freq(d, l);
    EXPECT_NEAR(q::bandwidth_wl_to_freq(2.0 * d, l) / (2.0 * one), 1.0, 1e-12);
  }
}
