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

#include <stdexcept>
#include <string>

namespace chirpsfg {

/// Failure categories. The C API and the CLI map these onto status and exit
/// codes, so the numbering is part of the public contract.
enum class ErrorKind {
  Domain = 1,       // argument outside a formula's domain, invalid spec
  Grid = 2,         // sampling grid too narrow or too coarse
  Window = 3,       // output window clips the signal
  Measurement = 4,  // FWHM or peak extraction impossible
  Fit = 5,          // least-squares fit failed to converge
  Io = 6,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(ErrorKind::Domain, what) {}
};

class GridError : public Error {
 public:
  explicit GridError(const std::string& what) : Error(ErrorKind::Grid, what) {}
};

class WindowError : public Error {
 public:
  WindowError(const std::string& what, double clipped_fraction)
      : Error(ErrorKind::Window, what), clipped_fraction_(clipped_fraction) {}
  double clipped_fraction() const noexcept { return clipped_fraction_; }

 private:
  double clipped_fraction_;
};

class MeasurementError : public Error {
 public:
  explicit MeasurementError(const std::string& what)
      : Error(ErrorKind::Measurement, what) {}
};

class FitError : public Error {
 public:
  FitError(const std::string& what, double residual_norm)
      : Error(ErrorKind::Fit, what), residual_norm_(residual_norm) {}
  double residual_norm() const noexcept { return residual_norm_; }

 private:
  double residual_norm_;
};

const char* to_string(ErrorKind kind) noexcept;

}  // namespace chirpsfg
