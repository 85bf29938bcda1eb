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

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

#include "config.hpp"

namespace chirpsfg::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitAcceptance = 1,
  kExitValidation = 2,
  kExitNumerical = 3,
};

/// A failure carrying its exit code and a short machine-readable kind.
class CommandError : public std::runtime_error {
 public:
  CommandError(int code, std::string kind, const std::string& what)
      : std::runtime_error(what), code_(code), kind_(std::move(kind)) {}
  int code() const { return code_; }
  const std::string& kind() const { return kind_; }

 private:
  int code_;
  std::string kind_;
};

struct Globals {
  std::string config;
  std::string out = ".";
  std::optional<std::uint64_t> seed;
  std::size_t grid_points = 0;
  bool json = false;
};

struct ScanFlags {
  std::string mode;
  std::string start, stop;
  std::size_t count = 0;
};

struct PurityFlags {
  std::size_t quadrature_points = 0;  // 0: skip the numerical check
};

struct HeraldFlags {
  std::string idler;  // overrides jsa.idler
};

struct AnalyzeFitFlags {
  std::string input;
  std::string background;
  std::string resolution;
  std::string resolution_sigma;
};

struct DeconvolveFlags {
  std::string measured;
  std::string measured_sigma;
  std::string fit_sigma;
  std::string resolution;
  std::string resolution_sigma = "0 Hz";
};

struct ReproduceFlags {
  bool skip_sweep = false;
};

int cmd_upconvert(const Globals& g);
int cmd_scan(const Globals& g, const ScanFlags& f);
int cmd_entangled(const Globals& g);
int cmd_herald(const Globals& g, const HeraldFlags& f);
int cmd_purity(const Globals& g, const PurityFlags& f);
int cmd_analyze_fit(const Globals& g, const AnalyzeFitFlags& f);
int cmd_analyze_deconvolve(const Globals& g, const DeconvolveFlags& f);
int cmd_reproduce_paper(const Globals& g, const ReproduceFlags& f);

/// Runs `body`, converting every failure into its exit code and printing a
/// JSON error object on stderr.
int run_guarded(const std::string& command, const std::function<int()>& body);

}  // namespace chirpsfg::cli
