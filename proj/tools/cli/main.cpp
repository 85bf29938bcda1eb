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

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "chirpsfg/chirpsfg.h"
#include "commands.hpp"

using namespace chirpsfg::cli;

int main(int argc, char** argv) {
  CLI::App app{"Chirped sum-frequency generation of single photons: modeling and analysis"};
  app.set_version_flag("--version", std::string(csfg_version()));
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  std::uint64_t seed = 0;
  app.add_option("--config", g.config, "Scenario configuration (JSON)");
  app.add_option("--out", g.out, "Output directory")->capture_default_str();
  auto* seed_opt = app.add_option("--seed", seed, "Seed for noise injection");
  app.add_option("--grid-points", g.grid_points, "Minimum input grid points")
      ->check(CLI::Range(std::size_t{16}, std::size_t{1} << 24));
  app.add_flag("--json", g.json, "Print the summary JSON instead of human text");

  auto* upconvert = app.add_subcommand("upconvert", "Numeric and analytic SFG spectrum");

  ScanFlags scan_flags;
  auto* scan = app.add_subcommand("scan", "Delay, repetition-rate or chirp scan with a line fit");
  scan->add_option("mode", scan_flags.mode, "delay | reprate | chirp")
      ->check(CLI::IsMember({"delay", "reprate", "chirp"}));
  scan->add_option("--start", scan_flags.start, "First scan value with unit");
  scan->add_option("--stop", scan_flags.stop, "Last scan value with unit");
  scan->add_option("--count", scan_flags.count, "Number of scan points");

  auto* entangled = app.add_subcommand("entangled", "SFG of one photon of an entangled pair");

  HeraldFlags herald_flags;
  auto* herald = app.add_subcommand("herald", "SFG of a heralded photon");
  herald->add_option("--idler", herald_flags.idler, "Idler detection frequency or wavelength");

  PurityFlags purity_flags;
  auto* purity = app.add_subcommand("purity", "Purity before and after chirped SFG");
  purity->add_option("--quadrature", purity_flags.quadrature_points,
                     "Cross-check with an N-point quadrature");

  auto* analyze = app.add_subcommand("analyze", "Measured-spectrum analysis");
  analyze->require_subcommand(1);
  AnalyzeFitFlags fit_flags;
  auto* fit = analyze->add_subcommand("fit", "Gaussian fit of a measured spectrum CSV");
  fit->add_option("--input", fit_flags.input, "Spectrum CSV")->required();
  fit->add_option("--background", fit_flags.background, "Background CSV on the same axis");
  fit->add_option("--resolution", fit_flags.resolution, "Spectrometer resolution FWHM");
  fit->add_option("--resolution-sigma", fit_flags.resolution_sigma,
                  "Uncertainty of the resolution");
  DeconvolveFlags dec_flags;
  auto* dec = analyze->add_subcommand("deconvolve", "Remove a Gaussian instrument response");
  dec->add_option("--measured", dec_flags.measured, "Measured FWHM")->required();
  dec->add_option("--measured-sigma", dec_flags.measured_sigma, "Uncertainty of the measured FWHM");
  dec->add_option("--fit-sigma", dec_flags.fit_sigma,
                  "Fit uncertainty, combined with the resolution uncertainty");
  dec->add_option("--resolution", dec_flags.resolution, "Resolution FWHM")->required();
  dec->add_option("--resolution-sigma", dec_flags.resolution_sigma,
                  "Uncertainty of the resolution")
      ->capture_default_str();

  ReproduceFlags rep_flags;
  auto* reproduce =
      app.add_subcommand("reproduce-paper", "Reference checks against the published values");
  reproduce->add_flag("--skip-sweep", rep_flags.skip_sweep, "Skip the 125-point oracle sweep");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }
  if (*seed_opt) g.seed = seed;

  if (*upconvert) return run_guarded("upconvert", [&] { return cmd_upconvert(g); });
  if (*scan) return run_guarded("scan", [&] { return cmd_scan(g, scan_flags); });
  if (*entangled) return run_guarded("entangled", [&] { return cmd_entangled(g); });
  if (*herald) return run_guarded("herald", [&] { return cmd_herald(g, herald_flags); });
  if (*purity) return run_guarded("purity", [&] { return cmd_purity(g, purity_flags); });
  if (*fit) return run_guarded("analyze fit", [&] { return cmd_analyze_fit(g, fit_flags); });
  if (*dec) return run_guarded("analyze deconvolve", [&] { return cmd_analyze_deconvolve(g, dec_flags); });
  if (*reproduce)
    return run_guarded("reproduce-paper", [&] { return cmd_reproduce_paper(g, rep_flags); });
  return kExitValidation;
}
