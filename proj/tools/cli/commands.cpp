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

#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <vector>

#include "chirpsfg/chirpsfg.h"
#include "io.hpp"

namespace chirpsfg::cli {

namespace {

constexpr double kGHz = 1e9;
constexpr double kNm = 1e-9;
constexpr double kPs = 1e-12;
const double kFwhmPerSigma = 2.0 * std::sqrt(std::log(2.0));

struct FieldDeleter {
  void operator()(csfg_field* f) const { csfg_field_free(f); }
};
struct SpectrumDeleter {
  void operator()(csfg_spectrum* s) const { csfg_spectrum_free(s); }
};
struct ReportDeleter {
  void operator()(csfg_report* r) const { csfg_report_free(r); }
};
using Field = std::unique_ptr<csfg_field, FieldDeleter>;
using Spectrum = std::unique_ptr<csfg_spectrum, SpectrumDeleter>;
using Report = std::unique_ptr<csfg_report, ReportDeleter>;

std::string status_kind(csfg_status s) {
  switch (s) {
    case CSFG_ERR_DOMAIN: return "domain";
    case CSFG_ERR_GRID: return "grid";
    case CSFG_ERR_WINDOW: return "window";
    case CSFG_ERR_MEASUREMENT: return "measurement";
    case CSFG_ERR_FIT: return "fit";
    case CSFG_ERR_IO: return "io";
    case CSFG_ERR_ARGUMENT: return "argument";
    default: return "internal";
  }
}

int exit_code_for(csfg_status s) {
  switch (s) {
    case CSFG_ERR_DOMAIN:
    case CSFG_ERR_IO:
    case CSFG_ERR_ARGUMENT:
      return kExitValidation;
    default:
      return kExitNumerical;
  }
}

void check(csfg_status s) {
  if (s != CSFG_OK) throw CommandError(exit_code_for(s), status_kind(s), csfg_last_error_message());
}

double wavelength_of_hz(double nu) {
  double wl = 0.0;
  check(csfg_frequency_to_wavelength(nu, &wl));
  return wl;
}

[[noreturn]] void invalid(const std::string& msg) {
  throw CommandError(kExitValidation, "config", msg);
}

Scenario load(const Globals& g) {
  if (g.config.empty()) invalid("this command needs --config PATH");
  Scenario s = load_scenario(g.config);
  if (g.seed) s.seed = *g.seed;
  if (g.grid_points) s.grid.input_points = g.grid_points;
  return s;
}

csfg_grid_options grid_options(const Scenario& s) {
  csfg_grid_options o;
  csfg_grid_options_default(&o);
  if (s.grid.input_points) o.input_points = s.grid.input_points;
  if (s.grid.output_points) o.output_points = s.grid.output_points;
  if (s.grid.output_span_fwhms > 0.0) o.output_span_fwhms = s.grid.output_span_fwhms;
  return o;
}

// Grid of exactly `n` samples covering nu0 +/- 4 fwhm with nu0 on a sample.
csfg_grid explicit_grid(const csfg_pulse& p, std::size_t n) {
  if (n < 16 || n % 2 != 0) invalid("explicit grid point counts must be even and at least 16");
  const double step = 4.0 * p.fwhm / static_cast<double>(n / 2 - 1);
  return {p.nu0 - static_cast<double>(n / 2) * step, step, n};
}

struct Measured {
  std::vector<double> freq;
  std::vector<double> intensity;
  csfg_half_maximum hm{};
  csfg_grid grid{};
};

Measured measure(const csfg_field* f) {
  Measured m;
  check(csfg_field_grid(f, &m.grid));
  const std::size_t n = csfg_field_size(f);
  m.freq.resize(n);
  m.intensity.resize(n);
  for (std::size_t i = 0; i < n; ++i) m.freq[i] = m.grid.start + static_cast<double>(i) * m.grid.step;
  check(csfg_field_intensity(f, m.intensity.data(), n));
  check(csfg_half_maximum_measure(m.freq.data(), m.intensity.data(), n, &m.hm));
  return m;
}

// Upconverts on automatic grids, or on the explicit grids from the config.
Field upconvert(const Scenario& s, const csfg_pulse& photon, const csfg_pulse& laser,
                double* raw_peak) {
  const csfg_grid_options opts = grid_options(s);
  csfg_field* out = nullptr;
  if (s.grid.photon_points || s.grid.laser_points) {
    csfg_grid pg{}, lg{};
    if (s.grid.photon_points)
      pg = explicit_grid(photon, s.grid.photon_points);
    else
      check(csfg_adequate_grid(&photon, opts.input_points, &pg));
    if (s.grid.laser_points)
      lg = explicit_grid(laser, s.grid.laser_points);
    else
      check(csfg_adequate_grid(&laser, opts.input_points, &lg));
    csfg_field* pf = nullptr;
    csfg_field* lf = nullptr;
    check(csfg_field_synthesize(&photon, &pg, &pf));
    Field pfield(pf);
    check(csfg_field_synthesize(&laser, &lg, &lf));
    Field lfield(lf);
    csfg_grid og{};
    check(csfg_default_output_grid(&photon, &laser, &opts, &og));
    check(csfg_upconvert_fields(pfield.get(), lfield.get(), &og, &out, raw_peak));
  } else {
    check(csfg_upconvert(&photon, &laser, &opts, &out, raw_peak));
  }
  return Field(out);
}

// Adds zero-mean Gaussian noise of standard deviation `relative` (in units
// of the peak) to a unit-peak spectrum.
void add_noise(std::vector<double>& y, double relative, std::uint64_t seed) {
  if (relative <= 0.0) return;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise(0.0, relative);
  for (double& v : y) v += noise(rng);
}

Json delta(double numeric, double reference) {
  Json d;
  d["absolute"] = numeric - reference;
  d["relative"] = reference != 0.0 ? (numeric - reference) / reference : 0.0;
  return d;
}

Json report_json(const csfg_sfg_report& r) {
  Json j;
  j["center_frequency_hz"] = r.center_freq;
  j["center_wavelength_nm"] = r.center_wl / kNm;
  j["fwhm_hz"] = r.fwhm;
  j["fwhm_ghz"] = r.fwhm / kGHz;
  j["fwhm_compressed_hz"] = r.fwhm_compressed;
  j["fwhm_unchirped_hz"] = r.fwhm_unchirped;
  j["overlap"] = r.overlap;
  j["tuning_range_fwhm_hz"] = r.tuning_range_fwhm;
  j["compression_ratio"] = r.compression_ratio;
  j["large_chirp_metric"] = r.large_chirp_metric;
  return j;
}

Json grid_json(const csfg_grid& g) {
  return {{"start_hz", g.start}, {"step_hz", g.step}, {"count", g.count}};
}

Json pulse_json(const csfg_pulse& p) {
  return {{"frequency_hz", p.nu0}, {"fwhm_hz", p.fwhm}, {"chirp_s2", p.chirp}, {"delay_s", p.delay}};
}

std::vector<std::string> sfg_warnings(const csfg_pulse& photon, const csfg_pulse& laser,
                                      const csfg_sfg_report& r) {
  std::vector<std::string> w;
  if (photon.chirp != -laser.chirp)
    w.push_back("chirps are not balanced; the delay-shift prediction assumes A_L = -A_P");
  if (photon.chirp > 0.0 && r.large_chirp_metric < 100.0)
    w.push_back("A^2 dnu_P^4 is below 100; the compressed-bandwidth formula is not accurate");
  if (r.overlap < 0.01) w.push_back("overlap prefactor below 0.01; signal is weak");
  return w;
}

// Summary JSON skeleton shared by every command.
Json summary_head(const std::string& command, const Scenario* s) {
  Json j;
  j["schema_version"] = 1;
  j["command"] = command;
  if (s) j["config"] = s->echo();
  return j;
}

void emit(const Globals& g, const Json& summary, const std::string& summary_path,
          const std::string& human) {
  write_atomic(summary_path, dump_json(summary));
  if (g.json)
    std::cout << dump_json(summary);
  else
    std::cout << human;
}

std::string fmt(double v, int prec = 6) {
  std::ostringstream os;
  os.precision(prec);
  os << v;
  return os.str();
}

csfg_pulse require_photon(const Scenario& s) {
  if (!s.photon) invalid("this command needs a photon pulse; use entangled or herald for a jsa");
  return *s.photon;
}

csfg_pulse require_laser(const Scenario& s) {
  if (!s.laser) invalid("config has no laser");
  return *s.laser;
}

// Without chirp the delay carries no spectral information and the numeric
// model would only report a weaker copy of the zero-delay spectrum.
void validate_pair(const csfg_pulse& photon, const csfg_pulse& laser) {
  check(csfg_pulse_validate(&photon));
  check(csfg_pulse_validate(&laser));
  if (photon.chirp == 0.0 && laser.chirp == 0.0 && laser.delay != photon.delay)
    invalid("both pulses are unchirped, so a nonzero delay (laser.delay - photon.delay) has no "
            "spectral effect; set a chirp or remove the delay");
}

const JsaModel& require_jsa(const Scenario& s) {
  if (!s.jsa) invalid("this command needs a jsa photon model");
  return *s.jsa;
}

}  // namespace

int run_guarded(const std::string& command, const std::function<int()>& body) {
  int code = kExitOk;
  std::string kind, message;
  try {
    return body();
  } catch (const CommandError& e) {
    code = e.code();
    kind = e.kind();
    message = e.what();
  } catch (const ConfigError& e) {
    code = kExitValidation;
    kind = "config";
    message = e.what();
  } catch (const IoError& e) {
    code = kExitValidation;
    kind = "io";
    message = e.what();
  } catch (const std::exception& e) {
    code = kExitNumerical;
    kind = "internal";
    message = e.what();
  }
  Json err;
  err["error"] = {{"command", command}, {"kind", kind}, {"exit_code", code}, {"message", message}};
  std::cerr << err.dump() << "\n";
  return code;
}

int cmd_upconvert(const Globals& g) {
  const Scenario s = load(g);
  const csfg_pulse photon = require_photon(s);
  const csfg_pulse laser = require_laser(s);
  validate_pair(photon, laser);
  csfg_sfg_report rep{};
  check(csfg_predict(&photon, &laser, &rep));

  double raw_peak = 0.0;
  const Field field = upconvert(s, photon, laser, &raw_peak);
  Measured m = measure(field.get());
  double center_wl = 0.0;
  check(csfg_frequency_to_wavelength(m.hm.midpoint, &center_wl));
  add_noise(m.intensity, s.noise_relative, s.seed);

  ensure_directory(g.out);
  write_atomic(join_path(g.out, s.output.spectrum), spectrum_csv(m.freq, m.intensity));

  Json j = summary_head("upconvert", &s);
  j["fwhm_ghz"] = m.hm.width / kGHz;
  j["center_nm"] = center_wl / kNm;
  j["analytic"] = report_json(rep);
  Json num;
  num["center_frequency_hz"] = m.hm.midpoint;
  num["center_wavelength_nm"] = center_wl / kNm;
  num["fwhm_hz"] = m.hm.width;
  num["fwhm_ghz"] = m.hm.width / kGHz;
  num["raw_peak_intensity"] = raw_peak;
  num["output_grid"] = grid_json(m.grid);
  j["numeric"] = num;
  j["deltas"] = {{"fwhm_hz", delta(m.hm.width, rep.fwhm)},
                 {"center_frequency_hz", delta(m.hm.midpoint, rep.center_freq)}};
  j["warnings"] = sfg_warnings(photon, laser, rep);

  std::ostringstream h;
  h << "SFG center   " << fmt(center_wl / kNm, 8) << " nm (predicted "
    << fmt(rep.center_wl / kNm, 8) << " nm)\n"
    << "SFG FWHM     " << fmt(m.hm.width / kGHz) << " GHz (predicted " << fmt(rep.fwhm / kGHz)
    << " GHz, compressed limit " << fmt(rep.fwhm_compressed / kGHz) << " GHz)\n"
    << "compression  " << fmt(rep.compression_ratio, 4) << ":1, overlap " << fmt(rep.overlap, 4)
    << "\n";
  for (const auto& w : j["warnings"]) h << "warning: " << w.get<std::string>() << "\n";
  emit(g, j, join_path(g.out, s.output.summary), h.str());
  return kExitOk;
}

int cmd_scan(const Globals& g, const ScanFlags& f) {
  Scenario s = load(g);
  const csfg_pulse photon = require_photon(s);
  const csfg_pulse laser = require_laser(s);

  std::string mode = f.mode.empty() ? (s.scan ? s.scan->mode : std::string()) : f.mode;
  if (mode.empty()) invalid("scan needs a mode (delay, reprate or chirp)");
  Dimension dim = Dimension::Time;
  std::string xname, xunit;
  double xscale = 1.0;
  if (mode == "delay") {
    dim = Dimension::Time, xname = "delta_tau_s", xunit = "ps", xscale = kPs;
  } else if (mode == "reprate") {
    dim = Dimension::Frequency, xname = "detuning_hz", xunit = "kHz", xscale = 1e3;
  } else if (mode == "chirp") {
    dim = Dimension::Chirp, xname = "chirp_s2", xunit = "fs2", xscale = 1e-30;
  } else {
    invalid("scan mode must be delay, reprate or chirp");
  }

  std::vector<double> values;
  if (!f.start.empty() || !f.stop.empty() || f.count) {
    if (f.start.empty() || f.stop.empty() || !f.count)
      invalid("--start, --stop and --count go together");
    values = parse_series(Json{{"start", f.start}, {"stop", f.stop}, {"count", f.count}}, dim,
                          "scan range");
  } else if (s.scan && s.scan->mode == mode) {
    values = s.scan->values;
  } else if (mode == "delay" && !s.delays.empty()) {
    values = s.delays;
  }
  if (values.size() < 3) invalid("a scan needs at least 3 points");
  s.scan = ScanConfig{mode, values};

  const csfg_grid_options opts = grid_options(s);
  std::vector<double> fit_x, fit_y;
  std::string csv;
  Json extra;
  std::size_t failed = 0;

  if (mode == "delay" || mode == "reprate") {
    std::vector<double> delays(values.size());
    const double base = laser.delay - photon.delay;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (mode == "delay") {
        delays[i] = values[i];
      } else {
        // The detuned rate moves the arrival of the n-th later pulse.
        const double r0 = s.timing.repetition_rate;
        csfg_path_timing p0{0.0, 0.0, 0.0, s.timing.n, r0};
        csfg_path_timing p1{0.0, 0.0, 0.0, s.timing.n, r0 + values[i]};
        double t0 = 0.0, t1 = 0.0;
        check(csfg_timing_difference(&p0, &t0));
        check(csfg_timing_difference(&p1, &t1));
        delays[i] = base + (t1 - t0);
      }
    }
    std::vector<csfg_scan_row> rows(values.size());
    check(csfg_delay_scan(&photon, &laser, delays.data(), delays.size(), &opts, rows.data()));
    csv = xname + ",center_frequency_hz,center_wavelength_m,fwhm_hz,peak_intensity,ok\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& r = rows[i];
      csv += format_double(values[i]) + "," + format_double(r.center_freq) + "," +
             format_double(r.center_wl) + "," + format_double(r.fwhm) + "," +
             format_double(r.peak_intensity) + "," + (r.ok ? "1" : "0") + "\n";
      if (r.ok) {
        fit_x.push_back(values[i] / xscale);
        fit_y.push_back(r.center_wl / kNm);
      } else {
        ++failed;
      }
    }
    double lambda0 = 0.0, lin_slope = 0.0;
    check(csfg_center_wavelength(wavelength_of_hz(photon.nu0), wavelength_of_hz(laser.nu0),
                                 photon.chirp, base, &lambda0, &lin_slope));
    if (mode == "delay") {
      extra["analytic_slope"] = lin_slope / (kNm / kPs);
    } else {
      // Chain rule through d(delta_tau)/dR = -n / R^2.
      const double r0 = s.timing.repetition_rate;
      double sens = 0.0;
      check(csfg_reprate_sensitivity(lambda0, photon.chirp, r0, s.timing.n, &sens));
      extra["analytic_slope"] = -lin_slope * s.timing.n / (r0 * r0) / (kNm / 1e3);
      extra["reprate_sensitivity_nm_per_khz"] = sens / (kNm / 1e3);
    }
  } else {
    csv = xname + ",fwhm_hz,center_frequency_hz,fwhm_times_chirp\n";
    std::vector<double> products;
    for (double a : values) {
      csfg_pulse p = photon, l = laser;
      p.chirp = a;
      l.chirp = -a;
      double raw = 0.0;
      const Field fld = upconvert(s, p, l, &raw);
      const Measured m = measure(fld.get());
      csv += format_double(a) + "," + format_double(m.hm.width) + "," +
             format_double(m.hm.midpoint) + "," + format_double(m.hm.width * a) + "\n";
      fit_x.push_back(1.0 / a);
      fit_y.push_back(m.hm.width);
      products.push_back(m.hm.width * a);
    }
    double mean = 0.0;
    for (double v : products) mean += v;
    mean /= static_cast<double>(products.size());
    double spread = 0.0;
    for (double v : products) spread = std::max(spread, std::abs(v - mean) / mean);
    extra["fwhm_times_chirp_mean"] = mean;
    extra["fwhm_times_chirp_max_relative_deviation"] = spread;
    double compressed = 0.0;
    check(csfg_bandwidth_compressed(photon.fwhm, laser.fwhm, 1.0, &compressed));
    extra["analytic_slope"] = compressed;  // Hz s^2: the 1/A law coefficient
  }

  if (fit_x.size() < 3)
    throw CommandError(kExitNumerical, "measurement", "fewer than 3 scan points succeeded");
  csfg_line_fit fit{};
  check(csfg_fit_line(fit_x.data(), fit_y.data(), fit_x.size(), &fit));

  ensure_directory(g.out);
  write_atomic(join_path(g.out, "scan.csv"), csv);

  Json j = summary_head("scan", &s);
  j["mode"] = mode;
  const std::string slope_unit =
      mode == "delay" ? "nm/ps" : mode == "reprate" ? "nm/kHz" : "Hz s2";
  j["fit"] = {{"slope", fit.slope},
              {"slope_sigma", fit.slope_sigma},
              {"intercept", fit.intercept},
              {"intercept_sigma", fit.intercept_sigma},
              {"residual_rms", fit.residual_rms},
              {"slope_unit", slope_unit},
              {"points", fit_x.size()}};
  for (auto& [k, v] : extra.items()) j[k] = v;
  j["deltas"] = {{"slope", delta(fit.slope, extra["analytic_slope"].get<double>())}};
  j["failed_points"] = failed;
  j["warnings"] = Json::array();
  if (failed) j["warnings"].push_back(std::to_string(failed) + " scan points failed or fell outside the overlap range");

  std::ostringstream h;
  h << mode << " scan over " << values.size() << " points\n"
    << "fitted slope   " << fmt(fit.slope) << " +/- " << fmt(fit.slope_sigma, 3) << " "
    << slope_unit << "\n"
    << "analytic slope " << fmt(extra["analytic_slope"].get<double>()) << " " << slope_unit
    << "\n";
  if (mode == "chirp")
    h << "fwhm*A spread " << fmt(100.0 * extra["fwhm_times_chirp_max_relative_deviation"].get<double>(), 3)
      << " %\n";
  emit(g, j, join_path(g.out, s.output.summary), h.str());
  return kExitOk;
}

namespace {

double sigma_of_fwhm(double fwhm) { return fwhm / kFwhmPerSigma; }

Json purity_json(const csfg_purity_report& p) {
  return {{"purity_initial", p.purity_initial},
          {"purity_final", p.purity_final},
          {"purity_difference", p.purity_difference},
          {"renyi2_initial", p.renyi2_initial},
          {"renyi2_final", p.renyi2_final}};
}

// Accepts a frequency or, failing that, a wavelength width at `center_m`.
double parse_width(const std::string& text, const std::string& field, double center_m,
                   bool* was_length = nullptr) {
  try {
    const double v = parse_quantity(Json(text), Dimension::Frequency, field);
    if (was_length) *was_length = false;
    return v;
  } catch (const ConfigError&) {
  }
  const double m = parse_quantity(Json(text), Dimension::Length, field);
  if (was_length) *was_length = true;
  if (!(center_m > 0.0)) return m;
  double hz = 0.0;
  check(csfg_bandwidth_wl_to_freq(m, center_m, &hz));
  return hz;
}

}  // namespace

int cmd_entangled(const Globals& g) {
  Scenario s = load(g);
  const JsaModel& model = require_jsa(s);
  const csfg_pulse laser = require_laser(s);
  check(csfg_jsa_validate(&model.jsa));
  check(csfg_pulse_validate(&laser));
  if (g.grid_points) s.grid.trace_points = g.grid_points;
  const std::size_t points = s.grid.trace_points ? s.grid.trace_points : 256;
  const double span = s.grid.output_span_fwhms > 0.0 ? s.grid.output_span_fwhms : 8.0;

  csfg_grid grid{};
  check(csfg_traced_default_grid(&model.jsa, &laser, model.chirp, points, span, &grid));
  std::vector<double> freq(grid.count), intensity(grid.count);
  for (std::size_t i = 0; i < grid.count; ++i)
    freq[i] = grid.start + static_cast<double>(i) * grid.step;
  double conv = 0.0;
  check(csfg_traced_spectrum(&model.jsa, &laser, model.chirp, &grid, 1, intensity.data(), &conv));
  csfg_half_maximum hm{};
  check(csfg_half_maximum_measure(freq.data(), intensity.data(), freq.size(), &hm));

  const double sigma_l = sigma_of_fwhm(laser.fwhm);
  double analytic = 0.0, marginal = 0.0;
  check(csfg_entangled_sfg_bandwidth(model.jsa.sigma, model.jsa.sigma_c, sigma_l, model.chirp,
                                     &analytic));
  check(csfg_marginal_bandwidth(model.jsa.sigma, model.jsa.sigma_c, &marginal));
  csfg_purity_report pur{};
  check(csfg_purity_final(model.jsa.sigma, model.jsa.sigma_c, sigma_l, model.chirp, &pur));
  double center_wl = 0.0;
  check(csfg_frequency_to_wavelength(hm.midpoint, &center_wl));
  add_noise(intensity, s.noise_relative, s.seed);

  ensure_directory(g.out);
  write_atomic(join_path(g.out, s.output.spectrum), spectrum_csv(freq, intensity));

  Json j = summary_head("entangled", &s);
  j["fwhm_ghz"] = hm.width / kGHz;
  j["center_nm"] = center_wl / kNm;
  j["analytic"] = {{"fwhm_hz", analytic},
                   {"fwhm_ghz", analytic / kGHz},
                   {"marginal_fwhm_hz", marginal},
                   {"laser_sigma_hz", sigma_l}};
  j["numeric"] = {{"fwhm_hz", hm.width},
                  {"center_frequency_hz", hm.midpoint},
                  {"center_wavelength_nm", center_wl / kNm},
                  {"convergence_delta", conv},
                  {"output_grid", grid_json(grid)}};
  j["purity"] = purity_json(pur);
  j["deltas"] = {{"fwhm_hz", delta(hm.width, analytic)}};
  j["warnings"] = Json::array();
  if (laser.chirp != -model.chirp)
    j["warnings"].push_back("laser chirp is not the negative of the photon chirp");

  std::ostringstream h;
  h << "traced SFG FWHM " << fmt(hm.width / kGHz) << " GHz (closed form "
    << fmt(analytic / kGHz) << " GHz)\n"
    << "SFG center      " << fmt(center_wl / kNm, 8) << " nm\n"
    << "marginal FWHM   " << fmt(marginal / kGHz) << " GHz\n"
    << "purity          " << fmt(pur.purity_initial) << " -> " << fmt(pur.purity_final) << "\n";
  emit(g, j, join_path(g.out, s.output.summary), h.str());
  return kExitOk;
}

int cmd_herald(const Globals& g, const HeraldFlags& f) {
  const Scenario s = load(g);
  const JsaModel& model = require_jsa(s);
  const csfg_pulse laser = require_laser(s);
  check(csfg_jsa_validate(&model.jsa));
  double idler = 0.0;
  if (!f.idler.empty())
    idler = parse_center(Json(f.idler), "--idler");
  else if (model.idler_frequency)
    idler = *model.idler_frequency;
  else
    invalid("herald needs an idler frequency (jsa.idler or --idler)");

  csfg_pulse photon{};
  check(csfg_heralded_pulse(&model.jsa, idler, model.chirp, &photon));
  photon.delay = 0.0;
  validate_pair(photon, laser);
  csfg_sfg_report rep{};
  check(csfg_predict(&photon, &laser, &rep));
  double raw_peak = 0.0;
  const Field field = upconvert(s, photon, laser, &raw_peak);
  Measured m = measure(field.get());
  double center_wl = 0.0;
  check(csfg_frequency_to_wavelength(m.hm.midpoint, &center_wl));
  add_noise(m.intensity, s.noise_relative, s.seed);

  ensure_directory(g.out);
  write_atomic(join_path(g.out, s.output.spectrum), spectrum_csv(m.freq, m.intensity));

  Json j = summary_head("herald", &s);
  j["idler_frequency_hz"] = idler;
  j["heralded_photon"] = pulse_json(photon);
  j["fwhm_ghz"] = m.hm.width / kGHz;
  j["center_nm"] = center_wl / kNm;
  j["analytic"] = report_json(rep);
  j["numeric"] = {{"center_frequency_hz", m.hm.midpoint},
                  {"center_wavelength_nm", center_wl / kNm},
                  {"fwhm_hz", m.hm.width},
                  {"raw_peak_intensity", raw_peak},
                  {"output_grid", grid_json(m.grid)}};
  j["deltas"] = {{"fwhm_hz", delta(m.hm.width, rep.fwhm)},
                 {"center_frequency_hz", delta(m.hm.midpoint, rep.center_freq)}};
  j["warnings"] = sfg_warnings(photon, laser, rep);

  std::ostringstream h;
  h << "heralded photon " << fmt(photon.nu0 / 1e12, 8) << " THz, FWHM "
    << fmt(photon.fwhm / kGHz) << " GHz\n"
    << "SFG center      " << fmt(center_wl / kNm, 8) << " nm\n"
    << "SFG FWHM        " << fmt(m.hm.width / kGHz) << " GHz (predicted " << fmt(rep.fwhm / kGHz)
    << " GHz)\n";
  for (const auto& w : j["warnings"]) h << "warning: " << w.get<std::string>() << "\n";
  emit(g, j, join_path(g.out, s.output.summary), h.str());
  return kExitOk;
}

int cmd_purity(const Globals& g, const PurityFlags& f) {
  const Scenario s = load(g);
  const JsaModel& model = require_jsa(s);
  const csfg_pulse laser = require_laser(s);
  check(csfg_jsa_validate(&model.jsa));
  const double sigma_l = sigma_of_fwhm(laser.fwhm);
  csfg_purity_report pur{};
  check(csfg_purity_final(model.jsa.sigma, model.jsa.sigma_c, sigma_l, model.chirp, &pur));

  Json j = summary_head("purity", &s);
  j["purity"] = purity_json(pur);
  std::ostringstream h;
  h << "initial purity " << fmt(pur.purity_initial, 10) << "\n"
    << "final purity   " << fmt(pur.purity_final, 10) << "\n"
    << "difference     " << fmt(pur.purity_difference, 6) << "\n";
  if (f.quadrature_points) {
    double quad = 0.0;
    check(csfg_purity_quadrature(model.jsa.sigma, model.jsa.sigma_c, sigma_l, model.chirp,
                                 f.quadrature_points, &quad));
    j["quadrature"] = {{"points", f.quadrature_points}, {"purity_final", quad}};
    j["deltas"] = {{"purity_final", delta(quad, pur.purity_final)}};
    h << "quadrature     " << fmt(quad, 10) << " (" << f.quadrature_points << " points)\n";
  }
  j["warnings"] = Json::array();
  ensure_directory(g.out);
  emit(g, j, join_path(g.out, s.output.summary), h.str());
  return kExitOk;
}

int cmd_analyze_fit(const Globals& g, const AnalyzeFitFlags& f) {
  if (f.input.empty()) invalid("analyze fit needs --input PATH");
  const std::string text = read_text_file(f.input);
  csfg_spectrum* raw = nullptr;
  check(csfg_spectrum_parse(text.data(), text.size(), &raw));
  Spectrum spec(raw);
  double clamped = 0.0;
  if (!f.background.empty()) {
    const std::string bg_text = read_text_file(f.background);
    csfg_spectrum* bg = nullptr;
    check(csfg_spectrum_parse(bg_text.data(), bg_text.size(), &bg));
    Spectrum bgs(bg);
    csfg_spectrum* sub = nullptr;
    check(csfg_background_subtract(spec.get(), bgs.get(), &sub, &clamped));
    spec.reset(sub);
  }
  csfg_spectrum_fit fit{};
  check(csfg_fit_spectrum(spec.get(), &fit));

  Json j;
  j["schema_version"] = 1;
  j["command"] = "analyze fit";
  j["input"] = f.input;
  if (!f.background.empty()) {
    j["background"] = f.background;
    j["background_clamped_fraction"] = clamped;
  }
  j["fit"] = {{"center_frequency_hz", fit.fit.center},
              {"center_frequency_sigma_hz", fit.fit.center_sigma},
              {"fwhm_hz", fit.fit.fwhm},
              {"fwhm_sigma_hz", fit.fit.fwhm_sigma},
              {"amplitude", fit.fit.amplitude},
              {"offset", fit.fit.offset},
              {"center_wavelength_nm", fit.center_wl / kNm},
              {"fwhm_wavelength_nm", fit.fwhm_wl / kNm},
              {"fwhm_wavelength_sigma_nm", fit.fwhm_wl_sigma / kNm},
              {"iterations", fit.fit.iterations}};
  std::ostringstream h;
  h << "center " << fmt(fit.center_wl / kNm, 8) << " nm, FWHM " << fmt(fit.fit.fwhm / kGHz)
    << " +/- " << fmt(fit.fit.fwhm_sigma / kGHz, 3) << " GHz\n";
  j["warnings"] = Json::array();
  if (clamped > 0.0)
    j["warnings"].push_back("background subtraction clamped " + fmt(100.0 * clamped, 3) +
                            " % of samples to zero");

  if (!f.resolution.empty()) {
    const double res = parse_width(f.resolution, "--resolution", fit.center_wl);
    const double res_sigma =
        f.resolution_sigma.empty() ? 0.0
                                   : parse_width(f.resolution_sigma, "--resolution-sigma",
                                                 fit.center_wl);
    const csfg_measured_width measured{fit.fit.fwhm, fit.fit.fwhm_sigma};
    const csfg_measured_width resolution{res, res_sigma};
    csfg_measured_width out{};
    check(csfg_deconvolve_resolution(&measured, &resolution, &out));
    j["deconvolved"] = {{"fwhm_hz", out.value},
                        {"fwhm_sigma_hz", out.sigma},
                        {"fwhm_ghz", out.value / kGHz},
                        {"resolution_hz", res},
                        {"resolution_sigma_hz", res_sigma}};
    h << "deconvolved FWHM " << fmt(out.value / kGHz) << " +/- " << fmt(out.sigma / kGHz, 3)
      << " GHz\n";
  }
  for (const auto& w : j["warnings"]) h << "warning: " << w.get<std::string>() << "\n";
  ensure_directory(g.out);
  emit(g, j, join_path(g.out, "summary.json"), h.str());
  return kExitOk;
}

int cmd_analyze_deconvolve(const Globals& g, const DeconvolveFlags& f) {
  if (f.measured.empty() || f.resolution.empty())
    invalid("analyze deconvolve needs --measured and --resolution");
  if (!f.measured_sigma.empty() && !f.fit_sigma.empty())
    invalid("give either --measured-sigma or --fit-sigma, not both");
  const double m = parse_quantity(Json(f.measured), Dimension::Frequency, "--measured");
  const double r = parse_quantity(Json(f.resolution), Dimension::Frequency, "--resolution");
  const double rs =
      parse_quantity(Json(f.resolution_sigma), Dimension::Frequency, "--resolution-sigma");
  double ms = 0.0;
  if (!f.measured_sigma.empty()) {
    ms = parse_quantity(Json(f.measured_sigma), Dimension::Frequency, "--measured-sigma");
  } else if (!f.fit_sigma.empty()) {
    // A fit uncertainty alone understates the width error; fold in the
    // resolution uncertainty of the instrument that produced it.
    const double fs = parse_quantity(Json(f.fit_sigma), Dimension::Frequency, "--fit-sigma");
    check(csfg_combine_uncertainty(fs, rs, &ms));
  }
  const csfg_measured_width measured{m, ms};
  const csfg_measured_width resolution{r, rs};
  csfg_measured_width out{};
  check(csfg_deconvolve_resolution(&measured, &resolution, &out));

  Json j;
  j["schema_version"] = 1;
  j["command"] = "analyze deconvolve";
  j["measured"] = {{"fwhm_hz", m}, {"sigma_hz", ms}};
  j["resolution"] = {{"fwhm_hz", r}, {"sigma_hz", rs}};
  j["deconvolved"] = {{"fwhm_hz", out.value},
                      {"sigma_hz", out.sigma},
                      {"fwhm_ghz", out.value / kGHz},
                      {"sigma_ghz", out.sigma / kGHz}};
  j["warnings"] = Json::array();
  std::ostringstream h;
  h << "deconvolved FWHM " << fmt(out.value / kGHz) << " +/- " << fmt(out.sigma / kGHz, 3)
    << " GHz\n";
  ensure_directory(g.out);
  emit(g, j, join_path(g.out, "summary.json"), h.str());
  return kExitOk;
}

int cmd_reproduce_paper(const Globals& g, const ReproduceFlags& f) {
  const std::uint64_t seed = g.seed ? *g.seed : 1;
  csfg_report* raw = nullptr;
  check(csfg_reproduce_run(f.skip_sweep ? 0 : 1, seed, &raw));
  const Report report(raw);
  const std::size_t n = csfg_report_size(report.get());

  Json rows = Json::array();
  bool all_pass = true;
  std::ostringstream h;
  char line[512];
  std::snprintf(line, sizeof line, "%-3s %-64s %14s %14s %10s  %s\n", "#", "check", "reference",
                "computed", "tolerance", "result");
  h << line;
  for (std::size_t i = 0; i < n; ++i) {
    csfg_check_row r{};
    check(csfg_report_row(report.get(), i, &r));
    all_pass = all_pass && r.pass;
    const char* cmp = r.comparison == CSFG_CMP_WITHIN    ? "within"
                      : r.comparison == CSFG_CMP_AT_MOST ? "at_most"
                                                         : "at_least";
    Json row = {{"criterion", r.criterion},
                {"title", csfg_criterion_title(r.criterion)},
                {"name", r.name},
                {"unit", r.unit},
                {"reference", r.reference},
                {"computed", r.computed},
                {"tolerance", r.tolerance},
                {"comparison", cmp},
                {"pass", r.pass != 0}};
    if (r.note && *r.note) row["note"] = r.note;
    rows.push_back(row);
    const std::string crit = r.criterion ? std::to_string(r.criterion) : "-";
    std::string name = r.name;
    if (*r.unit) name += std::string(" [") + r.unit + "]";
    std::snprintf(line, sizeof line, "%-3s %-64.64s %14.6g %14.6g %10.3g  %s\n", crit.c_str(),
                  name.c_str(), r.reference, r.computed, r.tolerance, r.pass ? "PASS" : "FAIL");
    h << line;
  }
  h << (all_pass ? "all checks passed\n" : "some checks FAILED\n");

  Json j;
  j["schema_version"] = 1;
  j["command"] = "reproduce-paper";
  j["seed"] = seed;
  j["sweep"] = !f.skip_sweep;
  j["all_pass"] = all_pass;
  j["rows"] = rows;
  ensure_directory(g.out);
  emit(g, j, join_path(g.out, "reproduce.json"), h.str());
  return all_pass ? kExitOk : kExitAcceptance;
}

}  // namespace chirpsfg::cli
