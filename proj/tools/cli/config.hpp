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

// Scenario configuration for the command-line tool.
//
// A scenario is one JSON document. Physical quantities are either plain
// numbers in SI units or strings with a unit suffix ("1740 GHz",
// "25.8e6 fs2", "811.11 nm"). See docs/config.md for the schema.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "chirpsfg/chirpsfg.h"

namespace chirpsfg::cli {

using Json = nlohmann::ordered_json;

/// Malformed or inconsistent configuration. Maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Dimension { Frequency, Time, Length, Chirp, Dimensionless };

/// Parses a number or a unit-suffixed string into SI units.
double parse_quantity(const Json& value, Dimension dim, const std::string& field);

/// Parses a center given as a frequency or a wavelength; returns Hz.
double parse_center(const Json& value, const std::string& field);

struct JsaModel {
  csfg_jsa jsa{};
  double chirp = 0.0;                     // s^2 applied to the signal photon
  std::optional<double> idler_frequency;  // Hz, for heralding
};

struct GridConfig {
  std::size_t input_points = 0;  // 0: library default
  std::size_t output_points = 0;
  double output_span_fwhms = 0.0;
  std::size_t photon_points = 0;  // exact sample counts; disable auto-refinement
  std::size_t laser_points = 0;
  std::size_t trace_points = 0;
};

struct ScanConfig {
  std::string mode;  // delay | reprate | chirp
  std::vector<double> values;
};

struct TimingConfig {
  double repetition_rate = 80e6;  // Hz
  int n = 12;
};

struct OutputConfig {
  std::string spectrum = "spectrum.csv";
  std::string summary = "summary.json";
};

struct Scenario {
  std::optional<csfg_pulse> photon;
  std::optional<JsaModel> jsa;
  std::optional<csfg_pulse> laser;
  std::vector<double> delays;  // s
  std::optional<ScanConfig> scan;
  GridConfig grid;
  TimingConfig timing;
  double noise_relative = 0.0;
  std::uint64_t seed = 1;
  OutputConfig output;

  /// Normalized copy of the configuration (SI numbers only). Loading the
  /// echo reproduces this scenario exactly.
  Json echo() const;
};

Scenario parse_scenario(const Json& doc);
Scenario load_scenario(const std::string& path);

/// Builds a set of evenly spaced values from {"start", "stop", "count"} or
/// takes an explicit array.
std::vector<double> parse_series(const Json& value, Dimension dim, const std::string& field);

}  // namespace chirpsfg::cli
