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

#include "chirpsfg/chirpsfg.h"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <exception>
#include <limits>
#include <new>
#include <string>

#include "chirpsfg/entanglement.hpp"
#include "chirpsfg/error.hpp"
#include "chirpsfg/pulses.hpp"
#include "chirpsfg/quantities.hpp"
#include "chirpsfg/reproduce.hpp"
#include "chirpsfg/sfg_analytic.hpp"
#include "chirpsfg/sfg_numeric.hpp"
#include "chirpsfg/spectro_analysis.hpp"
#include "chirpsfg/timing_sync.hpp"
#include "parallel.hpp"

struct csfg_field {
  chirpsfg::pulses::SpectralAmplitude amp;
};

struct csfg_spectrum {
  chirpsfg::spectro::SampledSpectrum data;
};

struct csfg_report {
  std::vector<chirpsfg::reproduce::CheckRow> rows;
};

namespace {

namespace cs = chirpsfg;

thread_local std::string g_last_error;

csfg_status fail(csfg_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

csfg_status status_of(cs::ErrorKind k) {
  switch (k) {
    case cs::ErrorKind::Domain: return CSFG_ERR_DOMAIN;
    case cs::ErrorKind::Grid: return CSFG_ERR_GRID;
    case cs::ErrorKind::Window: return CSFG_ERR_WINDOW;
    case cs::ErrorKind::Measurement: return CSFG_ERR_MEASUREMENT;
    case cs::ErrorKind::Fit: return CSFG_ERR_FIT;
    case cs::ErrorKind::Io: return CSFG_ERR_IO;
  }
  return CSFG_ERR_INTERNAL;
}

// Runs `f`, translating exceptions into status codes.
template <typename F>
csfg_status guard(F&& f) {
  try {
    g_last_error.clear();
    f();
    return CSFG_OK;
  } catch (const cs::Error& e) {
    return fail(status_of(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(CSFG_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(CSFG_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(CSFG_ERR_INTERNAL, "unknown exception");
  }
}

template <typename... P>
bool any_null(P*... p) {
  return ((p == nullptr) || ...);
}

csfg_status null_arg() { return fail(CSFG_ERR_ARGUMENT, "null pointer argument"); }

cs::pulses::PulseSpec to_cpp(const csfg_pulse& p) { return {p.nu0, p.fwhm, p.chirp, p.delay}; }
csfg_pulse to_c(const cs::pulses::PulseSpec& p) { return {p.nu0, p.fwhm, p.chirp, p.delay}; }
cs::pulses::FrequencyGrid to_cpp(const csfg_grid& g) { return {g.start, g.step, g.count}; }
csfg_grid to_c(const cs::pulses::FrequencyGrid& g) { return {g.start, g.step, g.count}; }

cs::numeric::GridOptions to_cpp(const csfg_grid_options* o) {
  cs::numeric::GridOptions g;
  if (o) {
    g.input_points = o->input_points;
    g.output_points = o->output_points;
    g.output_span_fwhms = o->output_span_fwhms;
  }
  return g;
}

csfg_gaussian_fit to_c(const cs::pulses::GaussianFit& f) {
  return {f.center,       f.fwhm,       f.amplitude,       f.offset,        f.center_sigma,
          f.fwhm_sigma,   f.amplitude_sigma, f.offset_sigma, f.residual_norm, f.iterations};
}

std::span<const double> span_of(const double* p, size_t n) { return {p, n}; }

}  // namespace

extern "C" {

const char* csfg_version(void) { return "1.0.0"; }

const char* csfg_status_string(csfg_status s) {
  switch (s) {
    case CSFG_OK: return "ok";
    case CSFG_ERR_DOMAIN: return "domain error";
    case CSFG_ERR_GRID: return "grid error";
    case CSFG_ERR_WINDOW: return "window error";
    case CSFG_ERR_MEASUREMENT: return "measurement error";
    case CSFG_ERR_FIT: return "fit error";
    case CSFG_ERR_IO: return "i/o error";
    case CSFG_ERR_ARGUMENT: return "invalid argument";
    case CSFG_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* csfg_last_error_message(void) { return g_last_error.c_str(); }

unsigned csfg_max_threads(void) { return cs::detail::max_threads(); }

// ---- quantities

csfg_status csfg_wavelength_to_frequency(double wavelength, double* frequency) {
  if (any_null(frequency)) return null_arg();
  return guard([&] { *frequency = cs::quantities::wavelength_to_frequency(wavelength); });
}

csfg_status csfg_frequency_to_wavelength(double frequency, double* wavelength) {
  if (any_null(wavelength)) return null_arg();
  return guard([&] { *wavelength = cs::quantities::frequency_to_wavelength(frequency); });
}

csfg_status csfg_bandwidth_wl_to_freq(double width_m, double center_m, double* width_hz) {
  if (any_null(width_hz)) return null_arg();
  return guard([&] { *width_hz = cs::quantities::bandwidth_wl_to_freq(width_m, center_m); });
}

csfg_status csfg_bandwidth_freq_to_wl(double width_hz, double center_m, double* width_m) {
  if (any_null(width_m)) return null_arg();
  return guard([&] { *width_m = cs::quantities::bandwidth_freq_to_wl(width_hz, center_m); });
}

// ---- pulses

csfg_status csfg_pulse_validate(const csfg_pulse* pulse) {
  if (any_null(pulse)) return null_arg();
  return guard([&] { to_cpp(*pulse).validate(); });
}

csfg_status csfg_check_grid(const csfg_pulse* pulse, const csfg_grid* grid) {
  if (any_null(pulse, grid)) return null_arg();
  return guard([&] { cs::pulses::check_grid(to_cpp(*pulse), to_cpp(*grid)); });
}

csfg_status csfg_adequate_grid(const csfg_pulse* pulse, size_t min_points, csfg_grid* grid) {
  if (any_null(pulse, grid)) return null_arg();
  return guard([&] { *grid = to_c(cs::pulses::adequate_grid(to_cpp(*pulse), min_points)); });
}

csfg_status csfg_common_grids(const csfg_pulse* a, const csfg_pulse* b, size_t min_points,
                              csfg_grid* grid_a, csfg_grid* grid_b) {
  if (any_null(a, b, grid_a, grid_b)) return null_arg();
  return guard([&] {
    const auto [ga, gb] = cs::pulses::common_grids(to_cpp(*a), to_cpp(*b), min_points);
    *grid_a = to_c(ga);
    *grid_b = to_c(gb);
  });
}

csfg_status csfg_field_synthesize(const csfg_pulse* pulse, const csfg_grid* grid,
                                  csfg_field** field) {
  if (any_null(pulse, grid, field)) return null_arg();
  *field = nullptr;
  return guard([&] {
    *field = new csfg_field{cs::pulses::synthesize(to_cpp(*pulse), to_cpp(*grid))};
  });
}

csfg_status csfg_field_from_samples(const csfg_grid* grid, const double* re_im,
                                    csfg_field** field) {
  if (any_null(grid, re_im, field)) return null_arg();
  *field = nullptr;
  return guard([&] {
    std::vector<cs::pulses::Complex> v(grid->count);
    for (size_t i = 0; i < grid->count; ++i) v[i] = {re_im[2 * i], re_im[2 * i + 1]};
    *field = new csfg_field{cs::pulses::SpectralAmplitude(to_cpp(*grid), std::move(v))};
  });
}

void csfg_field_free(csfg_field* field) { delete field; }

csfg_status csfg_field_grid(const csfg_field* field, csfg_grid* grid) {
  if (any_null(field, grid)) return null_arg();
  *grid = to_c(field->amp.grid());
  return CSFG_OK;
}

size_t csfg_field_size(const csfg_field* field) { return field ? field->amp.size() : 0; }

csfg_status csfg_field_intensity(const csfg_field* field, double* out, size_t capacity) {
  if (any_null(field, out)) return null_arg();
  if (capacity < field->amp.size()) return fail(CSFG_ERR_ARGUMENT, "output buffer too small");
  return guard([&] {
    const auto v = field->amp.intensity();
    std::copy(v.begin(), v.end(), out);
  });
}

csfg_status csfg_field_samples(const csfg_field* field, double* re_im, size_t capacity) {
  if (any_null(field, re_im)) return null_arg();
  if (capacity < 2 * field->amp.size())
    return fail(CSFG_ERR_ARGUMENT, "output buffer too small");
  const auto v = field->amp.values();
  for (size_t i = 0; i < v.size(); ++i) {
    re_im[2 * i] = v[i].real();
    re_im[2 * i + 1] = v[i].imag();
  }
  return CSFG_OK;
}

csfg_status csfg_half_maximum_measure(const double* x, const double* y, size_t n,
                                      csfg_half_maximum* out) {
  if (any_null(x, y, out)) return null_arg();
  return guard([&] {
    const auto h = cs::pulses::half_maximum(span_of(x, n), span_of(y, n));
    *out = {h.left, h.right, h.width(), h.midpoint(), h.peak_index, h.peak_value};
  });
}

csfg_status csfg_fit_gaussian(const double* x, const double* y, size_t n,
                              csfg_gaussian_fit* out) {
  if (any_null(x, y, out)) return null_arg();
  return guard([&] { *out = to_c(cs::pulses::fit_gaussian(span_of(x, n), span_of(y, n))); });
}

// ---- closed forms

csfg_status csfg_predict(const csfg_pulse* photon, const csfg_pulse* laser,
                         csfg_sfg_report* out) {
  if (any_null(photon, laser, out)) return null_arg();
  return guard([&] {
    const auto r = cs::analytic::predict(to_cpp(*photon), to_cpp(*laser));
    *out = {r.center_freq,       r.center_wl, r.fwhm,
            r.fwhm_compressed,   r.fwhm_unchirped, r.overlap,
            r.tuning_range_fwhm, r.compression_ratio, r.large_chirp_metric};
  });
}

csfg_status csfg_bandwidth_general(double fwhm_photon, double fwhm_laser, double chirp_photon,
                                   double chirp_laser, double* fwhm) {
  if (any_null(fwhm)) return null_arg();
  return guard([&] {
    *fwhm = cs::analytic::bandwidth_general(fwhm_photon, fwhm_laser, chirp_photon, chirp_laser);
  });
}

csfg_status csfg_bandwidth_compressed(double fwhm_photon, double fwhm_laser, double chirp,
                                      double* fwhm) {
  if (any_null(fwhm)) return null_arg();
  return guard(
      [&] { *fwhm = cs::analytic::bandwidth_compressed(fwhm_photon, fwhm_laser, chirp); });
}

csfg_status csfg_center_wavelength(double lambda_photon, double lambda_laser, double chirp,
                                   double delta_tau, double* exact, double* linear_slope) {
  return guard([&] {
    const auto c =
        cs::analytic::center_wavelength(lambda_photon, lambda_laser, chirp, delta_tau);
    if (exact) *exact = c.exact;
    if (linear_slope) *linear_slope = c.linear_slope;
  });
}

csfg_status csfg_chirp_from_wavelength_slope(double lambda_photon, double lambda_laser,
                                             double slope, double* chirp) {
  if (any_null(chirp)) return null_arg();
  return guard([&] {
    *chirp = cs::analytic::chirp_from_wavelength_slope(lambda_photon, lambda_laser, slope);
  });
}

csfg_status csfg_half_overlap_delay(double chirp, double fwhm_photon, double fwhm_laser,
                                    double* delay) {
  if (any_null(delay)) return null_arg();
  return guard(
      [&] { *delay = cs::analytic::half_overlap_delay(chirp, fwhm_photon, fwhm_laser); });
}

csfg_status csfg_timebin_resolution(double measured_fwhm, double chirp, double tuning_range,
                                    double* min_separation, double* usable_range) {
  return guard([&] {
    const auto t = cs::analytic::timebin_resolution(measured_fwhm, chirp, tuning_range);
    if (min_separation) *min_separation = t.min_separation;
    if (usable_range) *usable_range = t.usable_range;
  });
}

csfg_status csfg_net_gain_threshold(double compression_ratio, double* efficiency) {
  if (any_null(efficiency)) return null_arg();
  return guard([&] { *efficiency = cs::analytic::net_gain_threshold(compression_ratio); });
}

// ---- numeric

void csfg_grid_options_default(csfg_grid_options* opts) {
  if (!opts) return;
  const cs::numeric::GridOptions g;
  *opts = {g.input_points, g.output_points, g.output_span_fwhms};
}

csfg_status csfg_default_output_grid(const csfg_pulse* photon, const csfg_pulse* laser,
                                     const csfg_grid_options* opts, csfg_grid* grid) {
  if (any_null(photon, laser, grid)) return null_arg();
  return guard([&] {
    *grid = to_c(
        cs::numeric::default_output_grid(to_cpp(*photon), to_cpp(*laser), to_cpp(opts)));
  });
}

csfg_status csfg_upconvert(const csfg_pulse* photon, const csfg_pulse* laser,
                           const csfg_grid_options* opts, csfg_field** result,
                           double* raw_peak) {
  if (any_null(photon, laser, result)) return null_arg();
  *result = nullptr;
  return guard([&] {
    auto r = cs::numeric::upconvert(to_cpp(*photon), to_cpp(*laser), to_cpp(opts));
    if (raw_peak) *raw_peak = r.raw_peak_intensity;
    *result = new csfg_field{std::move(r.spectrum)};
  });
}

csfg_status csfg_upconvert_fields(const csfg_field* photon, const csfg_field* laser,
                                  const csfg_grid* out_grid, csfg_field** result,
                                  double* raw_peak) {
  if (any_null(photon, laser, out_grid, result)) return null_arg();
  *result = nullptr;
  return guard([&] {
    auto r = cs::numeric::upconvert(photon->amp, laser->amp, to_cpp(*out_grid));
    if (raw_peak) *raw_peak = r.raw_peak_intensity;
    *result = new csfg_field{std::move(r.spectrum)};
  });
}

csfg_status csfg_delay_scan(const csfg_pulse* photon, const csfg_pulse* laser,
                            const double* delays, size_t n, const csfg_grid_options* opts,
                            csfg_scan_row* rows) {
  if (any_null(photon, laser) || (n > 0 && any_null(delays, rows))) return null_arg();
  return guard([&] {
    const auto r = cs::numeric::delay_scan(to_cpp(*photon), to_cpp(*laser),
                                           std::vector<double>(delays, delays + n), to_cpp(opts));
    for (size_t i = 0; i < n; ++i) {
      csfg_scan_row& o = rows[i];
      o.delta_tau = r[i].delta_tau;
      o.center_freq = r[i].center_freq;
      o.center_wl = r[i].center_wl;
      o.fwhm = r[i].fwhm;
      o.peak_intensity = r[i].peak_intensity;
      o.ok = r[i].ok ? 1 : 0;
      std::memset(o.error, 0, sizeof o.error);
      std::strncpy(o.error, r[i].error.c_str(), sizeof o.error - 1);
    }
  });
}

csfg_status csfg_product_check(const csfg_field* photon, const csfg_field* laser,
                               size_t max_points, double* max_deviation) {
  if (any_null(photon, laser, max_deviation)) return null_arg();
  return guard([&] {
    *max_deviation =
        cs::numeric::classical_product_check(photon->amp, laser->amp, max_points).max_deviation;
  });
}

// ---- entanglement

csfg_status csfg_jsa_validate(const csfg_jsa* jsa) {
  if (any_null(jsa)) return null_arg();
  return guard([&] { cs::entanglement::JsaSpec{jsa->nu0, jsa->sigma, jsa->sigma_c}.validate(); });
}

csfg_status csfg_marginal_bandwidth(double sigma, double sigma_c, double* fwhm) {
  if (any_null(fwhm)) return null_arg();
  return guard([&] { *fwhm = cs::entanglement::marginal_bandwidth(sigma, sigma_c); });
}

csfg_status csfg_entangled_sfg_bandwidth(double sigma, double sigma_c, double sigma_laser,
                                         double chirp, double* fwhm) {
  if (any_null(fwhm)) return null_arg();
  return guard([&] {
    *fwhm = cs::entanglement::entangled_sfg_bandwidth(sigma, sigma_c, sigma_laser, chirp);
  });
}

csfg_status csfg_heralded_effective_sigma(double sigma, double sigma_c, double* out) {
  if (any_null(out)) return null_arg();
  return guard([&] { *out = cs::entanglement::heralded_effective_sigma(sigma, sigma_c); });
}

csfg_status csfg_heralded_pulse(const csfg_jsa* jsa, double idler_frequency, double chirp,
                                csfg_pulse* out) {
  if (any_null(jsa, out)) return null_arg();
  return guard([&] {
    *out = to_c(cs::entanglement::heralded_pulse({jsa->nu0, jsa->sigma, jsa->sigma_c},
                                                 idler_frequency, chirp));
  });
}

csfg_status csfg_purity_initial(double sigma, double sigma_c, double* purity) {
  if (any_null(purity)) return null_arg();
  return guard([&] { *purity = cs::entanglement::purity_initial(sigma, sigma_c); });
}

csfg_status csfg_purity_final(double sigma, double sigma_c, double sigma_laser, double chirp,
                              csfg_purity_report* out) {
  if (any_null(out)) return null_arg();
  return guard([&] {
    const auto r = cs::entanglement::purity_final(sigma, sigma_c, sigma_laser, chirp);
    *out = {r.purity_initial, r.purity_final, r.purity_difference, r.renyi2_initial,
            r.renyi2_final};
  });
}

csfg_status csfg_purity_quadrature(double sigma, double sigma_c, double sigma_laser,
                                   double chirp, size_t points, double* purity) {
  if (any_null(purity)) return null_arg();
  return guard([&] {
    *purity = cs::entanglement::purity_quadrature(sigma, sigma_c, sigma_laser, chirp, points);
  });
}

csfg_status csfg_traced_default_grid(const csfg_jsa* jsa, const csfg_pulse* laser,
                                     double chirp_signal, size_t points, double span_fwhms,
                                     csfg_grid* grid) {
  if (any_null(jsa, laser, grid)) return null_arg();
  return guard([&] {
    *grid = to_c(cs::entanglement::default_traced_grid({jsa->nu0, jsa->sigma, jsa->sigma_c},
                                                       to_cpp(*laser), chirp_signal, points,
                                                       span_fwhms));
  });
}

csfg_status csfg_traced_spectrum(const csfg_jsa* jsa, const csfg_pulse* laser,
                                 double chirp_signal, const csfg_grid* grid,
                                 int check_convergence, double* out,
                                 double* convergence_delta) {
  if (any_null(jsa, laser, grid, out)) return null_arg();
  return guard([&] {
    cs::entanglement::TraceOptions o;
    o.check_convergence = check_convergence != 0;
    const auto r = cs::entanglement::traced_spectrum({jsa->nu0, jsa->sigma, jsa->sigma_c},
                                                     to_cpp(*laser), chirp_signal,
                                                     to_cpp(*grid), o);
    std::copy(r.intensity.begin(), r.intensity.end(), out);
    if (convergence_delta) *convergence_delta = r.convergence_delta;
  });
}

// ---- timing

csfg_status csfg_timing_difference(const csfg_path_timing* pt, double* dt) {
  if (any_null(pt, dt)) return null_arg();
  return guard([&] {
    *dt = cs::timing::timing_difference({pt->t1, pt->t1p, pt->t2, pt->n, pt->repetition_rate});
  });
}

csfg_status csfg_reprate_sensitivity(double wavelength, double chirp, double repetition_rate,
                                     int n, double* slope) {
  if (any_null(slope)) return null_arg();
  return guard([&] {
    *slope = cs::timing::reprate_sensitivity(wavelength, chirp, repetition_rate, n);
  });
}

csfg_status csfg_estimate_pulse_offset(double slope_delay, double slope_delay_sigma,
                                       double slope_reprate, double slope_reprate_sigma,
                                       double repetition_rate, double* n, double* n_sigma) {
  if (any_null(n)) return null_arg();
  return guard([&] {
    const auto m = cs::timing::estimate_pulse_offset({slope_delay, slope_delay_sigma},
                                                     {slope_reprate, slope_reprate_sigma},
                                                     repetition_rate);
    *n = m.value;
    if (n_sigma) *n_sigma = m.sigma;
  });
}

csfg_status csfg_jitter_tolerance(double linewidth, double wavelength, double chirp,
                                  double repetition_rate, int n, double* max_detuning,
                                  int* insensitive) {
  if (any_null(max_detuning)) return null_arg();
  return guard([&] {
    const auto j = cs::timing::jitter_tolerance(linewidth, wavelength, chirp, repetition_rate, n);
    *max_detuning = j.max_detuning;
    if (insensitive) *insensitive = j.insensitive ? 1 : 0;
  });
}

// ---- spectra

csfg_status csfg_deconvolve_resolution(const csfg_measured_width* measured,
                                       const csfg_measured_width* resolution,
                                       csfg_measured_width* out) {
  if (any_null(measured, resolution, out)) return null_arg();
  return guard([&] {
    const auto r = cs::spectro::deconvolve_resolution({measured->value, measured->sigma},
                                                      {resolution->value, resolution->sigma});
    *out = {r.value, r.sigma};
  });
}

csfg_status csfg_combine_uncertainty(double fit_sigma, double resolution_sigma, double* out) {
  if (any_null(out)) return null_arg();
  return guard([&] { *out = cs::spectro::combine_uncertainty(fit_sigma, resolution_sigma); });
}

csfg_status csfg_spectrum_parse(const char* text, size_t length, csfg_spectrum** out) {
  if (any_null(text, out)) return null_arg();
  *out = nullptr;
  return guard([&] {
    *out = new csfg_spectrum{cs::spectro::parse_spectrum_csv(std::string_view(text, length))};
  });
}

csfg_status csfg_spectrum_create(csfg_axis_unit unit, const double* x, const double* y,
                                 size_t n, csfg_spectrum** out) {
  if (any_null(out) || (n > 0 && any_null(x, y))) return null_arg();
  *out = nullptr;
  return guard([&] {
    cs::spectro::SampledSpectrum s;
    s.unit = unit == CSFG_AXIS_WAVELENGTH_NM ? cs::spectro::AxisUnit::WavelengthNm
                                             : cs::spectro::AxisUnit::FrequencyHz;
    s.x.assign(x, x + n);
    s.y.assign(y, y + n);
    *out = new csfg_spectrum{std::move(s)};
  });
}

void csfg_spectrum_free(csfg_spectrum* spectrum) { delete spectrum; }

size_t csfg_spectrum_size(const csfg_spectrum* spectrum) {
  return spectrum ? spectrum->data.x.size() : 0;
}

csfg_axis_unit csfg_spectrum_unit(const csfg_spectrum* spectrum) {
  return spectrum && spectrum->data.unit == cs::spectro::AxisUnit::WavelengthNm
             ? CSFG_AXIS_WAVELENGTH_NM
             : CSFG_AXIS_FREQUENCY_HZ;
}

csfg_status csfg_spectrum_data(const csfg_spectrum* spectrum, double* x, double* y,
                               size_t capacity) {
  if (any_null(spectrum)) return null_arg();
  const size_t n = spectrum->data.x.size();
  if (capacity < n) return fail(CSFG_ERR_ARGUMENT, "output buffer too small");
  if (x) std::copy(spectrum->data.x.begin(), spectrum->data.x.end(), x);
  if (y) std::copy(spectrum->data.y.begin(), spectrum->data.y.end(), y);
  return CSFG_OK;
}

csfg_status csfg_background_subtract(const csfg_spectrum* signal,
                                     const csfg_spectrum* background, csfg_spectrum** out,
                                     double* clamped_fraction) {
  if (any_null(signal, background, out)) return null_arg();
  *out = nullptr;
  return guard([&] {
    auto r = cs::spectro::background_subtract(signal->data, background->data);
    if (clamped_fraction) *clamped_fraction = r.clamped_fraction;
    *out = new csfg_spectrum{std::move(r.spectrum)};
  });
}

csfg_status csfg_fit_spectrum(const csfg_spectrum* spectrum, csfg_spectrum_fit* out) {
  if (any_null(spectrum, out)) return null_arg();
  return guard([&] {
    const auto r = cs::spectro::fit_spectrum(spectrum->data);
    *out = {to_c(r.fit), r.center_wl, r.fwhm_wl, r.fwhm_wl_sigma};
  });
}

csfg_status csfg_fit_line(const double* x, const double* y, size_t n, csfg_line_fit* out) {
  if (any_null(x, y, out)) return null_arg();
  return guard([&] {
    const auto r = cs::spectro::fit_line(std::vector<double>(x, x + n),
                                         std::vector<double>(y, y + n));
    *out = {r.slope, r.intercept, r.slope_sigma, r.intercept_sigma, r.residual_rms};
  });
}

// ---- reference checks

csfg_status csfg_reference_photon(csfg_pulse* out) {
  if (any_null(out)) return null_arg();
  *out = to_c(cs::reproduce::reference_photon());
  return CSFG_OK;
}

csfg_status csfg_reference_laser(csfg_pulse* out) {
  if (any_null(out)) return null_arg();
  *out = to_c(cs::reproduce::reference_laser());
  return CSFG_OK;
}

csfg_status csfg_reproduce_run(int include_sweep, uint64_t seed, csfg_report** out) {
  if (any_null(out)) return null_arg();
  *out = nullptr;
  return guard([&] {
    cs::reproduce::Options o;
    o.include_sweep = include_sweep != 0;
    o.seed = seed;
    *out = new csfg_report{cs::reproduce::run_checks(o)};
  });
}

void csfg_report_free(csfg_report* report) { delete report; }

size_t csfg_report_size(const csfg_report* report) { return report ? report->rows.size() : 0; }

csfg_status csfg_report_row(const csfg_report* report, size_t index, csfg_check_row* out) {
  if (any_null(report, out)) return null_arg();
  if (index >= report->rows.size()) return fail(CSFG_ERR_ARGUMENT, "row index out of range");
  const auto& r = report->rows[index];
  out->criterion = r.criterion;
  out->name = r.name.c_str();
  out->unit = r.unit.c_str();
  out->note = r.note.c_str();
  out->reference = r.reference;
  out->computed = r.computed;
  out->tolerance = r.tolerance;
  out->comparison = static_cast<csfg_comparison>(r.comparison);
  out->pass = r.pass ? 1 : 0;
  return CSFG_OK;
}

const char* csfg_criterion_title(int criterion) {
  thread_local std::string title;
  title = cs::reproduce::criterion_title(criterion);
  return title.c_str();
}

}  // extern "C"
