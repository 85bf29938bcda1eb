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

#include "config.hpp"

using chirpsfg::cli::ConfigError;
using chirpsfg::cli::Dimension;
using chirpsfg::cli::Json;
using chirpsfg::cli::parse_center;
using chirpsfg::cli::parse_quantity;
using chirpsfg::cli::parse_scenario;
using chirpsfg::cli::parse_series;

namespace {

Json reference() {
  return Json::parse(R"({
    "photon": {"wavelength": "811.11 nm", "fwhm": "1740 GHz", "chirp": "25.8e6 fs2"},
    "laser": {"wavelength": "787.62 nm", "fwhm": "4770 GHz", "chirp": "-25.8e6 fs2"}
  })");
}

}  // namespace

TEST(ConfigQuantity, UnitSuffixes) {
  EXPECT_DOUBLE_EQ(parse_quantity(Json("1740 GHz"), Dimension::Frequency, "f"), 1740e9);
  EXPECT_DOUBLE_EQ(parse_quantity(Json("25.8e6 fs2"), Dimension::Chirp, "a"), 25.8e6 * 1e-30);
  EXPECT_DOUBLE_EQ(parse_quantity(Json("25.8e6 fs^2"), Dimension::Chirp, "a"), 25.8e6 * 1e-30);
  EXPECT_DOUBLE_EQ(parse_quantity(Json("0.0258 ps2"), Dimension::Chirp, "a"), 0.0258e-24);
  EXPECT_DOUBLE_EQ(parse_quantity(Json("-15 ps"), Dimension::Time, "t"), -15e-12);
  EXPECT_DOUBLE_EQ(parse_quantity(Json("80MHz"), Dimension::Frequency, "r"), 80e6);
  EXPECT_DOUBLE_EQ(parse_quantity(Json("0.033 nm"), Dimension::Length, "l"), 0.033e-9);
  EXPECT_DOUBLE_EQ(parse_quantity(Json(2.5e-23), Dimension::Chirp, "a"), 2.5e-23);
}

TEST(ConfigQuantity, RejectsWrongOrMissingUnits) {
  EXPECT_THROW(parse_quantity(Json("1740 nm"), Dimension::Frequency, "f"), ConfigError);
  EXPECT_THROW(parse_quantity(Json("1740"), Dimension::Frequency, "f"), ConfigError);
  EXPECT_THROW(parse_quantity(Json("GHz"), Dimension::Frequency, "f"), ConfigError);
  EXPECT_THROW(parse_quantity(Json(true), Dimension::Frequency, "f"), ConfigError);
  EXPECT_THROW(parse_quantity(Json("inf GHz"), Dimension::Frequency, "f"), ConfigError);
}

TEST(ConfigQuantity, ErrorNamesTheField) {
  try {
    parse_quantity(Json("3 parsecs"), Dimension::Length, "laser.wavelength");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("laser.wavelength"), std::string::npos);
  }
}

TEST(ConfigCenter, FrequencyOrWavelength) {
  EXPECT_NEAR(parse_center(Json("811.11 nm"), "c") / 1e12, 369.60, 0.01);
  EXPECT_DOUBLE_EQ(parse_center(Json("369.6 THz"), "c"), 369.6e12);
  EXPECT_THROW(parse_center(Json("-1 THz"), "c"), ConfigError);
  EXPECT_THROW(parse_center(Json("5 ps"), "c"), ConfigError);
}

TEST(ConfigSeries, ArrayAndRange) {
  const auto a = parse_series(Json::parse(R"(["-1 ps", "0 ps", "2 ps"])"), Dimension::Time, "d");
  ASSERT_EQ(a.size(), 3u);
  EXPECT_DOUBLE_EQ(a[2], 2e-12);
  const auto r = parse_series(Json::parse(R"({"start": "-15 ps", "stop": "15 ps", "count": 7})"),
                              Dimension::Time, "d");
  ASSERT_EQ(r.size(), 7u);
  EXPECT_DOUBLE_EQ(r.front(), -15e-12);
  EXPECT_DOUBLE_EQ(r.back(), 15e-12);
  EXPECT_NEAR(r[3], 0.0, 1e-27);
  EXPECT_THROW(parse_series(Json::parse(R"({"start": "1 ps"})"), Dimension::Time, "d"),
               ConfigError);
}

TEST(ConfigScenario, ReferenceParses) {
  const auto s = parse_scenario(reference());
  ASSERT_TRUE(s.photon && s.laser);
  EXPECT_FALSE(s.jsa);
  EXPECT_DOUBLE_EQ(s.photon->fwhm, 1740e9);
  EXPECT_DOUBLE_EQ(s.laser->chirp, -25.8e6 * 1e-30);
  EXPECT_EQ(s.timing.n, 12);
  EXPECT_EQ(s.output.spectrum, "spectrum.csv");
}

TEST(ConfigScenario, WidthInWavelengthUnits) {
  auto doc = reference();
  doc["laser"]["fwhm"] = "9.86 nm";
  const auto s = parse_scenario(doc);
  EXPECT_NEAR(s.laser->fwhm / 1e9, 4766, 1.0);
}

TEST(ConfigScenario, ExactlyOnePhotonModel) {
  auto both = reference();
  both["jsa"] = Json::parse(R"({"center": "800 nm", "sigma": "1 THz", "sigma_c": "1 THz"})");
  EXPECT_THROW(parse_scenario(both), ConfigError);
  auto none = reference();
  none.erase("photon");
  EXPECT_THROW(parse_scenario(none), ConfigError);
}

TEST(ConfigScenario, ExactlyOneCenter) {
  auto doc = reference();
  doc["photon"]["frequency"] = "369.6 THz";
  EXPECT_THROW(parse_scenario(doc), ConfigError);
  doc["photon"].erase("frequency");
  doc["photon"].erase("wavelength");
  EXPECT_THROW(parse_scenario(doc), ConfigError);
}

TEST(ConfigScenario, UnknownKeysRejected) {
  auto doc = reference();
  doc["photon"]["chrip"] = "1 fs2";
  EXPECT_THROW(parse_scenario(doc), ConfigError);
  auto top = reference();
  top["extra"] = 1;
  EXPECT_THROW(parse_scenario(top), ConfigError);
}

TEST(ConfigScenario, SpecInvariantsCheckedAtLoad) {
  auto doc = reference();
  doc["photon"]["fwhm"] = "-5 GHz";
  EXPECT_THROW(parse_scenario(doc), ConfigError);
  auto jsa = Json::parse(R"({"jsa": {"center": "800 nm", "sigma": "1 THz", "sigma_c": "0 THz"}})");
  EXPECT_THROW(parse_scenario(jsa), ConfigError);
  auto out = reference();
  out["output"] = {{"summary", "../escape.json"}};
  EXPECT_THROW(parse_scenario(out), ConfigError);
  auto timing = reference();
  timing["timing"] = {{"n", -2}};
  EXPECT_THROW(parse_scenario(timing), ConfigError);
}

TEST(ConfigScenario, JsaModel) {
  const auto s = parse_scenario(Json::parse(R"({
    "jsa": {"center": "800 nm", "sigma": "740 GHz", "sigma_c": "2 THz",
            "chirp": "25.8e6 fs2", "idler": "800.5 nm"},
    "laser": {"frequency": "375 THz", "fwhm": "4770 GHz", "chirp": "-25.8e6 fs2"}})"));
  ASSERT_TRUE(s.jsa);
  EXPECT_DOUBLE_EQ(s.jsa->jsa.sigma_c, 2e12);
  ASSERT_TRUE(s.jsa->idler_frequency);
  EXPECT_LT(*s.jsa->idler_frequency, s.jsa->jsa.nu0);
}

TEST(ConfigScenario, EchoRoundTrips) {
  auto doc = reference();
  doc["photon"]["delay"] = "1.5 ps";
  doc["scan"] = Json::parse(R"({"mode": "delay", "start": "-3 ps", "stop": "3 ps", "count": 4})");
  doc["grid"] = {{"input_points", 4096}, {"output_points", 512}};
  doc["noise"] = {{"relative", 0.01}};
  doc["seed"] = 42;
  const auto s = parse_scenario(doc);
  const Json echo = s.echo();
  const auto again = parse_scenario(echo);
  EXPECT_EQ(again.echo(), echo);
  EXPECT_EQ(again.seed, 42u);
  EXPECT_DOUBLE_EQ(again.photon->delay, 1.5e-12);
  EXPECT_EQ(again.scan->values, s.scan->values);
}
