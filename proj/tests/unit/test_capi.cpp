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
#include <cstring>
#include <string>
#include <thread>
#include <vector>

#include "chirpsfg/chirpsfg.h"

namespace {

constexpr double kFs2 = 1e-30;
constexpr double kA = 25.8e6 * kFs2;

csfg_pulse photon() {
  csfg_pulse p{};
  EXPECT_EQ(csfg_reference_photon(&p), CSFG_OK);
  return p;
}

csfg_pulse laser() {
  csfg_pulse p{};
  EXPECT_EQ(csfg_reference_laser(&p), CSFG_OK);
  return p;
}

}  // namespace

TEST(CApi, VersionAndStatusStrings) {
  EXPECT_STRNE(csfg_version(), "");
  for (int s = CSFG_OK; s <= CSFG_ERR_INTERNAL; ++s)
    EXPECT_STRNE(csfg_status_string(static_cast<csfg_status>(s)), "");
  EXPECT_GE(csfg_max_threads(), 1u);
}

TEST(CApi, ReferencePulses) {
  const auto p = photon(), l = laser();
  EXPECT_DOUBLE_EQ(p.chirp, kA);
  EXPECT_DOUBLE_EQ(l.chirp, -kA);
  EXPECT_DOUBLE_EQ(p.fwhm, 1740e9);
  EXPECT_DOUBLE_EQ(l.fwhm, 4770e9);
}

TEST(CApi, NullPointersAreArgumentErrors) {
  EXPECT_EQ(csfg_wavelength_to_frequency(800e-9, nullptr), CSFG_ERR_ARGUMENT);
  EXPECT_NE(std::string(csfg_last_error_message()).find("null"), std::string::npos);
  EXPECT_EQ(csfg_predict(nullptr, nullptr, nullptr), CSFG_ERR_ARGUMENT);
  csfg_field_free(nullptr);
  csfg_spectrum_free(nullptr);
  csfg_report_free(nullptr);
}

TEST(CApi, DomainErrorsCarryMessages) {
  double v = 0.0;
  EXPECT_EQ(csfg_wavelength_to_frequency(-1.0, &v), CSFG_ERR_DOMAIN);
  EXPECT_STRNE(csfg_last_error_message(), "");
  EXPECT_EQ(csfg_wavelength_to_frequency(800e-9, &v), CSFG_OK);
  EXPECT_STREQ(csfg_last_error_message(), "");
}

TEST(CApi, LastErrorIsThreadLocal) {
  double v = 0.0;
  EXPECT_EQ(csfg_wavelength_to_frequency(-1.0, &v), CSFG_ERR_DOMAIN);
  std::string other;
  std::thread t([&] { other = csfg_last_error_message(); });
  t.join();
  EXPECT_EQ(other, "");
  EXPECT_STRNE(csfg_last_error_message(), "");
}

TEST(CApi, PredictAndUpconvertAgree) {
  const auto p = photon(), l = laser();
  csfg_sfg_report rep{};
  ASSERT_EQ(csfg_predict(&p, &l, &rep), CSFG_OK);
  EXPECT_NEAR(rep.fwhm / 1e9, 32.9, 0.05);

  csfg_field* out = nullptr;
  double raw = 0.0;
  ASSERT_EQ(csfg_upconvert(&p, &l, nullptr, &out, &raw), CSFG_OK);
  ASSERT_NE(out, nullptr);
  const std::size_t n = csfg_field_size(out);
  csfg_grid g{};
  ASSERT_EQ(csfg_field_grid(out, &g), CSFG_OK);
  EXPECT_EQ(g.count, n);
  std::vector<double> x(n), y(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = g.start + static_cast<double>(i) * g.step;
  ASSERT_EQ(csfg_field_intensity(out, y.data(), n), CSFG_OK);
  EXPECT_EQ(csfg_field_intensity(out, y.data(), n - 1), CSFG_ERR_ARGUMENT);
  csfg_half_maximum hm{};
  ASSERT_EQ(csfg_half_maximum_measure(x.data(), y.data(), n, &hm), CSFG_OK);
  EXPECT_NEAR(hm.width / rep.fwhm, 1.0, 0.005);
  csfg_field_free(out);
}

TEST(CApi, CoarseExplicitGridIsGridError) {
  const auto p = photon();
  const csfg_grid g{p.nu0 - 4 * p.fwhm, 8 * p.fwhm / 63, 64};
  csfg_field* f = nullptr;
  EXPECT_EQ(csfg_field_synthesize(&p, &g, &f), CSFG_ERR_GRID);
  EXPECT_EQ(f, nullptr);
}

TEST(CApi, FieldFromSamplesRoundTrip) {
  const csfg_grid g{1e14, 1e9, 32};
  std::vector<double> re_im(64);
  for (std::size_t i = 0; i < 32; ++i) {
    re_im[2 * i] = std::exp(-0.01 * (i - 16.0) * (i - 16.0));
    re_im[2 * i + 1] = 0.5 * re_im[2 * i];
  }
  csfg_field* f = nullptr;
  ASSERT_EQ(csfg_field_from_samples(&g, re_im.data(), &f), CSFG_OK);
  std::vector<double> back(64);
  ASSERT_EQ(csfg_field_samples(f, back.data(), 64), CSFG_OK);
  EXPECT_EQ(back, re_im);
  csfg_field_free(f);
}

TEST(CApi, DelayScanRows) {
  const auto p = photon(), l = laser();
  csfg_grid_options o;
  csfg_grid_options_default(&o);
  o.output_points = 512;
  const double delays[3] = {-5e-12, 0.0, 5e-12};
  csfg_scan_row rows[3];
  ASSERT_EQ(csfg_delay_scan(&p, &l, delays, 3, &o, rows), CSFG_OK);
  for (const auto& r : rows) EXPECT_EQ(r.ok, 1) << r.error;
  EXPECT_NEAR(rows[1].peak_intensity, 1.0, 1e-12);
  EXPECT_LT(rows[2].center_wl, rows[0].center_wl);
}

TEST(CApi, EntanglementAndPurity) {
  const csfg_jsa jsa{375e12, 1e12, 1e12};
  EXPECT_EQ(csfg_jsa_validate(&jsa), CSFG_OK);
  const csfg_jsa bad{375e12, -1.0, 1e12};
  EXPECT_EQ(csfg_jsa_validate(&bad), CSFG_ERR_DOMAIN);
  double pi = 0.0;
  ASSERT_EQ(csfg_purity_initial(1e12, 1e12, &pi), CSFG_OK);
  EXPECT_NEAR(pi, std::sqrt(3.0) / 2.0, 1e-12);
  csfg_purity_report r{};
  ASSERT_EQ(csfg_purity_final(1e12, 1e12, 1e12, 0.0, &r), CSFG_OK);
  double quad = 0.0;
  ASSERT_EQ(csfg_purity_quadrature(1e12, 1e12, 1e12, 0.0, 128, &quad), CSFG_OK);
  EXPECT_NEAR(quad, r.purity_final, 1e-4);
  csfg_pulse h{};
  ASSERT_EQ(csfg_heralded_pulse(&jsa, 375e12, kA, &h), CSFG_OK);
  EXPECT_DOUBLE_EQ(h.chirp, kA);
}

TEST(CApi, TracedSpectrum) {
  const csfg_jsa jsa{375e12, 1740e9 / 1.6651092223153954, 1740e9 / 1.6651092223153954};
  csfg_pulse l = laser();
  l.nu0 = 375e12;
  csfg_grid g{};
  ASSERT_EQ(csfg_traced_default_grid(&jsa, &l, kA, 128, 8.0, &g), CSFG_OK);
  std::vector<double> out(g.count);
  double delta = 0.0;
  ASSERT_EQ(csfg_traced_spectrum(&jsa, &l, kA, &g, 1, out.data(), &delta), CSFG_OK);
  EXPECT_LE(delta, 1e-6);
  double peak = 0.0;
  for (double v : out) peak = std::max(peak, v);
  EXPECT_DOUBLE_EQ(peak, 1.0);
}

TEST(CApi, TimingChain) {
  double n = 0.0, ns = 0.0;
  ASSERT_EQ(csfg_estimate_pulse_offset(-64.1, 0.5, 0.1188e-12, 0.0004e-12, 80e6, &n, &ns),
            CSFG_OK);
  EXPECT_NEAR(n, 11.9, 0.05);
  double tol = 0.0;
  int insensitive = -1;
  ASSERT_EQ(csfg_jitter_tolerance(0.04e-9, 400e-9, 26.2e6 * kFs2, 80e6, 0, &tol, &insensitive),
            CSFG_OK);
  EXPECT_EQ(insensitive, 1);
  EXPECT_TRUE(std::isinf(tol));
}

TEST(CApi, SpectrumParseFitAndBackground) {
  std::string csv = "wavelength_nm,counts\n";
  for (int i = 0; i <= 100; ++i) {
    const double x = 399.5 + 0.004 * i;
    const double u = (x - 399.7) / 0.04;
    csv += std::to_string(x) + "," + std::to_string(1000 * std::exp(-4 * std::log(2) * u * u) + 3) + "\n";
  }
  csfg_spectrum* s = nullptr;
  ASSERT_EQ(csfg_spectrum_parse(csv.data(), csv.size(), &s), CSFG_OK);
  EXPECT_EQ(csfg_spectrum_unit(s), CSFG_AXIS_WAVELENGTH_NM);
  const std::size_t n = csfg_spectrum_size(s);
  EXPECT_EQ(n, 101u);
  std::vector<double> x(n), y(n, 3.0);
  EXPECT_EQ(csfg_spectrum_data(s, x.data(), nullptr, n - 1), CSFG_ERR_ARGUMENT);
  ASSERT_EQ(csfg_spectrum_data(s, x.data(), nullptr, n), CSFG_OK);
  EXPECT_NEAR(x.front(), 399.5, 1e-9);
  csfg_spectrum* bg = nullptr;
  ASSERT_EQ(csfg_spectrum_create(CSFG_AXIS_WAVELENGTH_NM, x.data(), y.data(), n, &bg), CSFG_OK);
  csfg_spectrum* sub = nullptr;
  double clamped = -1.0;
  ASSERT_EQ(csfg_background_subtract(s, bg, &sub, &clamped), CSFG_OK);
  csfg_spectrum_fit fit{};
  ASSERT_EQ(csfg_fit_spectrum(sub, &fit), CSFG_OK);
  EXPECT_NEAR(fit.center_wl * 1e9, 399.7, 1e-3);
  EXPECT_NEAR(fit.fwhm_wl * 1e9, 0.04, 2e-4);
  csfg_spectrum_free(sub);
  csfg_spectrum_free(bg);
  csfg_spectrum_free(s);
  const char* bad = "nonsense";
  csfg_spectrum* none = nullptr;
  EXPECT_NE(csfg_spectrum_parse(bad, std::strlen(bad), &none), CSFG_OK);
  EXPECT_EQ(none, nullptr);
}

TEST(CApi, Deconvolution) {
  const csfg_measured_width m{74e9, 4e9}, r{60e9, 4e9};
  csfg_measured_width out{};
  ASSERT_EQ(csfg_deconvolve_resolution(&m, &r, &out), CSFG_OK);
  EXPECT_NEAR(out.value / 1e9, 43.3, 0.05);
  const csfg_measured_width small{50e9, 1e9};
  EXPECT_EQ(csfg_deconvolve_resolution(&small, &r, &out), CSFG_ERR_DOMAIN);
}

TEST(CApi, ReproduceReportWithoutSweep) {
  csfg_report* rep = nullptr;
  ASSERT_EQ(csfg_reproduce_run(0, 1, &rep), CSFG_OK);
  const std::size_t n = csfg_report_size(rep);
  EXPECT_GT(n, 12u);
  bool seen[13] = {};
  for (std::size_t i = 0; i < n; ++i) {
    csfg_check_row row{};
    ASSERT_EQ(csfg_report_row(rep, i, &row), CSFG_OK);
    EXPECT_NE(row.name, nullptr);
    if (row.criterion >= 1 && row.criterion <= 12) seen[row.criterion] = true;
  }
  for (int c = 1; c <= 12; ++c) EXPECT_EQ(seen[c], c != 11) << c;
  csfg_check_row row{};
  EXPECT_EQ(csfg_report_row(rep, n, &row), CSFG_ERR_ARGUMENT);
  EXPECT_STRNE(csfg_criterion_title(4), "");
  csfg_report_free(rep);
}
