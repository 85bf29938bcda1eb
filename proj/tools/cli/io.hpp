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

#include <span>
#include <stdexcept>
#include <string>

#include "config.hpp"

namespace chirpsfg::cli {

/// Filesystem failure. Maps to exit code 2.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shortest decimal text that reads back to the same double.
std::string format_double(double v);

/// `frequency_hz,intensity` rows with LF endings. Intensity is rescaled to
/// unit peak.
std::string spectrum_csv(std::span<const double> freq, std::span<const double> intensity);

/// Writes through a temporary file in the same directory, then renames.
void write_atomic(const std::string& path, const std::string& content);

std::string read_text_file(const std::string& path);

/// Creates `dir` (and parents) if missing.
void ensure_directory(const std::string& dir);

std::string join_path(const std::string& dir, const std::string& name);

std::string dump_json(const Json& j);

}  // namespace chirpsfg::cli
