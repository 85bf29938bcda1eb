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

/*
 * chirpsfg C API.
 *
 * Every function returns a csfg_status; on failure a description is available
 * from csfg_last_error_message() on the calling thread until the next call.
 * Units are SI throughout: Hz, s, m, and s^2 for chirp parameters.
 *
 * Handles (csfg_field, csfg_spectrum, csfg_report) are opaque, immutable
 * once created, and must be released with the matching *_free function.
 */
#ifndef CHIRPSFG_CHIRPSFG_H_
#define CHIRPSFG_CHIRPSFG_H_

#include <stddef.h>
#include <stdint.h>

#if defined(CSFG_BUILDING_LIBRARY)
#define CSFG_API __attribute__((visibility("default")))
#else
#define CSFG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum csfg_status {
  CSFG_OK = 0,
  CSFG_ERR_DOMAIN = 1,      /* argument outside a formula's domain */
  CSFG_ERR_GRID = 2,        /* sampling grid too narrow or too coarse */
  CSFG_ERR_WINDOW = 3,      /* output window clips the signal */
  CSFG_ERR_MEASUREMENT = 4, /* FWHM or peak extraction impossible */
  CSFG_ERR_FIT = 5,         /* least-squares fit failed */
  CSFG_ERR_IO = 6,
  CSFG_ERR_ARGUMENT = 7,    /* null pointer or buffer too small */
  CSFG_ERR_INTERNAL = 8
} csfg_status;

CSFG_API const char* csfg_version(void);
CSFG_API const char* csfg_status_string(csfg_status status);
CSFG_API const char* csfg_last_error_message(void);
/* Worker count after CHIRPSFG_THREADS is applied. */
CSFG_API unsigned csfg_max_threads(void);

/* ---- quantities ------------------------------------------------------- */

CSFG_API csfg_status csfg_wavelength_to_frequency(double wavelength, double* frequency);
CSFG_API csfg_status csfg_frequency_to_wavelength(double frequency, double* wavelength);
CSFG_API csfg_status csfg_bandwidth_wl_to_freq(double width_m, double center_m, double* width_hz);
CSFG_API csfg_status csfg_bandwidth_freq_to_wl(double width_hz, double center_m, double* width_m);

/* ---- pulses ----------------------------------------------------------- */

typedef struct csfg_pulse {
  double nu0;   /* center frequency, Hz */
  double fwhm;  /* intensity FWHM, Hz */
  double chirp; /* quadratic phase coefficient, s^2 */
  double delay; /* group delay, s */
} csfg_pulse;

typedef struct csfg_grid {
  double start;
  double step;
  size_t count;
} csfg_grid;

typedef struct csfg_field csfg_field;

CSFG_API csfg_status csfg_pulse_validate(const csfg_pulse* pulse);
CSFG_API csfg_status csfg_check_grid(const csfg_pulse* pulse, const csfg_grid* grid);
CSFG_API csfg_status csfg_adequate_grid(const csfg_pulse* pulse, size_t min_points,
                                        csfg_grid* grid);
/* Grids sharing step and count, for sample-by-sample combination. */
CSFG_API csfg_status csfg_common_grids(const csfg_pulse* a, const csfg_pulse* b,
                                       size_t min_points, csfg_grid* grid_a, csfg_grid* grid_b);

CSFG_API csfg_status csfg_field_synthesize(const csfg_pulse* pulse, const csfg_grid* grid,
                                           csfg_field** field);
/* `re_im` holds 2 * grid->count doubles, real and imaginary parts interleaved. */
CSFG_API csfg_status csfg_field_from_samples(const csfg_grid* grid, const double* re_im,
                                             csfg_field** field);
CSFG_API void csfg_field_free(csfg_field* field);
CSFG_API csfg_status csfg_field_grid(const csfg_field* field, csfg_grid* grid);
CSFG_API size_t csfg_field_size(const csfg_field* field);
/* Unit-peak |E|^2 into `out`, which holds at least `capacity` doubles. */
CSFG_API csfg_status csfg_field_intensity(const csfg_field* field, double* out, size_t capacity);
CSFG_API csfg_status csfg_field_samples(const csfg_field* field, double* re_im, size_t capacity);

typedef struct csfg_half_maximum {
  double left;
  double right;
  double width;
  double midpoint;
  size_t peak_index;
  double peak_value;
} csfg_half_maximum;

CSFG_API csfg_status csfg_half_maximum_measure(const double* x, const double* y, size_t n,
                                               csfg_half_maximum* out);

typedef struct csfg_gaussian_fit {
  double center, fwhm, amplitude, offset;
  double center_sigma, fwhm_sigma, amplitude_sigma, offset_sigma;
  double residual_norm;
  int iterations;
} csfg_gaussian_fit;

CSFG_API csfg_status csfg_fit_gaussian(const double* x, const double* y, size_t n,
                                       csfg_gaussian_fit* out);

/* ---- closed-form predictions ------------------------------------------ */

typedef struct csfg_sfg_report {
  double center_freq;
  double center_wl;
  double fwhm;
  double fwhm_compressed;
  double fwhm_unchirped;
  double overlap;
  double tuning_range_fwhm;
  double compression_ratio;
  double large_chirp_metric;
} csfg_sfg_report;

CSFG_API csfg_status csfg_predict(const csfg_pulse* photon, const csfg_pulse* laser,
                                  csfg_sfg_report* out);
CSFG_API csfg_status csfg_bandwidth_general(double fwhm_photon, double fwhm_laser,
                                            double chirp_photon, double chirp_laser,
                                            double* fwhm);
CSFG_API csfg_status csfg_bandwidth_compressed(double fwhm_photon, double fwhm_laser,
                                               double chirp, double* fwhm);
CSFG_API csfg_status csfg_center_wavelength(double lambda_photon, double lambda_laser,
                                            double chirp, double delta_tau, double* exact,
                                            double* linear_slope);
CSFG_API csfg_status csfg_chirp_from_wavelength_slope(double lambda_photon, double lambda_laser,
                                                      double slope, double* chirp);
CSFG_API csfg_status csfg_half_overlap_delay(double chirp, double fwhm_photon, double fwhm_laser,
                                             double* delay);
CSFG_API csfg_status csfg_timebin_resolution(double measured_fwhm, double chirp,
                                             double tuning_range, double* min_separation,
                                             double* usable_range);
CSFG_API csfg_status csfg_net_gain_threshold(double compression_ratio, double* efficiency);

/* ---- numerical upconversion ------------------------------------------- */

typedef struct csfg_grid_options {
  size_t input_points;
  size_t output_points;
  double output_span_fwhms;
} csfg_grid_options;

CSFG_API void csfg_grid_options_default(csfg_grid_options* opts);
CSFG_API csfg_status csfg_default_output_grid(const csfg_pulse* photon, const csfg_pulse* laser,
                                              const csfg_grid_options* opts, csfg_grid* grid);
/* `opts` may be NULL for defaults. `raw_peak` may be NULL. */
CSFG_API csfg_status csfg_upconvert(const csfg_pulse* photon, const csfg_pulse* laser,
                                    const csfg_grid_options* opts, csfg_field** result,
                                    double* raw_peak);
CSFG_API csfg_status csfg_upconvert_fields(const csfg_field* photon, const csfg_field* laser,
                                           const csfg_grid* out_grid, csfg_field** result,
                                           double* raw_peak);

typedef struct csfg_scan_row {
  double delta_tau;
  double center_freq;
  double center_wl;
  double fwhm;
  double peak_intensity; /* relative to delta_tau = 0 */
  int ok;
  char error[160];
} csfg_scan_row;

CSFG_API csfg_status csfg_delay_scan(const csfg_pulse* photon, const csfg_pulse* laser,
                                     const double* delays, size_t n,
                                     const csfg_grid_options* opts, csfg_scan_row* rows);
CSFG_API csfg_status csfg_product_check(const csfg_field* photon, const csfg_field* laser,
                                        size_t max_points, double* max_deviation);

/* ---- entangled photons ------------------------------------------------ */

typedef struct csfg_jsa {
  double nu0;     /* degenerate center, Hz */
  double sigma;   /* amplitude RMS scale, Hz */
  double sigma_c; /* correlation scale, Hz */
} csfg_jsa;

typedef struct csfg_purity_report {
  double purity_initial;
  double purity_final;
  double purity_difference;
  double renyi2_initial;
  double renyi2_final;
} csfg_purity_report;

CSFG_API csfg_status csfg_jsa_validate(const csfg_jsa* jsa);
CSFG_API csfg_status csfg_marginal_bandwidth(double sigma, double sigma_c, double* fwhm);
CSFG_API csfg_status csfg_entangled_sfg_bandwidth(double sigma, double sigma_c,
                                                  double sigma_laser, double chirp, double* fwhm);
CSFG_API csfg_status csfg_heralded_effective_sigma(double sigma, double sigma_c, double* out);
CSFG_API csfg_status csfg_heralded_pulse(const csfg_jsa* jsa, double idler_frequency,
                                         double chirp, csfg_pulse* out);
CSFG_API csfg_status csfg_purity_initial(double sigma, double sigma_c, double* purity);
CSFG_API csfg_status csfg_purity_final(double sigma, double sigma_c, double sigma_laser,
                                       double chirp, csfg_purity_report* out);
CSFG_API csfg_status csfg_purity_quadrature(double sigma, double sigma_c, double sigma_laser,
                                            double chirp, size_t points, double* purity);
CSFG_API csfg_status csfg_traced_default_grid(const csfg_jsa* jsa, const csfg_pulse* laser,
                                              double chirp_signal, size_t points,
                                              double span_fwhms, csfg_grid* grid);
/* Unit-peak traced spectrum on `grid` into `out` (grid->count doubles).
 * `check_convergence` repeats the quadrature at doubled resolution. */
CSFG_API csfg_status csfg_traced_spectrum(const csfg_jsa* jsa, const csfg_pulse* laser,
                                          double chirp_signal, const csfg_grid* grid,
                                          int check_convergence, double* out,
                                          double* convergence_delta);

/* ---- timing chain ----------------------------------------------------- */

typedef struct csfg_path_timing {
  double t1, t1p, t2;
  int n;
  double repetition_rate;
} csfg_path_timing;

CSFG_API csfg_status csfg_timing_difference(const csfg_path_timing* pt, double* dt);
CSFG_API csfg_status csfg_reprate_sensitivity(double wavelength, double chirp,
                                              double repetition_rate, int n, double* slope);
CSFG_API csfg_status csfg_estimate_pulse_offset(double slope_delay, double slope_delay_sigma,
                                                double slope_reprate, double slope_reprate_sigma,
                                                double repetition_rate, double* n,
                                                double* n_sigma);
/* `insensitive` is set to 1 (and `max_detuning` to +inf) when n == 0. */
CSFG_API csfg_status csfg_jitter_tolerance(double linewidth, double wavelength, double chirp,
                                           double repetition_rate, int n, double* max_detuning,
                                           int* insensitive);

/* ---- measured spectra ------------------------------------------------- */

typedef struct csfg_measured_width {
  double value;
  double sigma;
} csfg_measured_width;

typedef enum csfg_axis_unit { CSFG_AXIS_WAVELENGTH_NM = 0, CSFG_AXIS_FREQUENCY_HZ = 1 } csfg_axis_unit;

typedef struct csfg_spectrum csfg_spectrum;

typedef struct csfg_spectrum_fit {
  csfg_gaussian_fit fit; /* frequency axis, Hz */
  double center_wl;
  double fwhm_wl;
  double fwhm_wl_sigma;
} csfg_spectrum_fit;

typedef struct csfg_line_fit {
  double slope, intercept, slope_sigma, intercept_sigma, residual_rms;
} csfg_line_fit;

CSFG_API csfg_status csfg_deconvolve_resolution(const csfg_measured_width* measured,
                                                const csfg_measured_width* resolution,
                                                csfg_measured_width* out);
CSFG_API csfg_status csfg_combine_uncertainty(double fit_sigma, double resolution_sigma,
                                              double* out);
CSFG_API csfg_status csfg_spectrum_parse(const char* text, size_t length, csfg_spectrum** out);
CSFG_API csfg_status csfg_spectrum_create(csfg_axis_unit unit, const double* x, const double* y,
                                          size_t n, csfg_spectrum** out);
CSFG_API void csfg_spectrum_free(csfg_spectrum* spectrum);
CSFG_API size_t csfg_spectrum_size(const csfg_spectrum* spectrum);
CSFG_API csfg_axis_unit csfg_spectrum_unit(const csfg_spectrum* spectrum);
/* Copies the axis and values; either output may be NULL to skip it. */
CSFG_API csfg_status csfg_spectrum_data(const csfg_spectrum* spectrum, double* x, double* y,
                                        size_t capacity);
CSFG_API csfg_status csfg_background_subtract(const csfg_spectrum* signal,
                                              const csfg_spectrum* background,
                                              csfg_spectrum** out, double* clamped_fraction);
CSFG_API csfg_status csfg_fit_spectrum(const csfg_spectrum* spectrum, csfg_spectrum_fit* out);
CSFG_API csfg_status csfg_fit_line(const double* x, const double* y, size_t n,
                                   csfg_line_fit* out);

/* ---- reference checks ------------------------------------------------- */

typedef enum csfg_comparison {
  CSFG_CMP_WITHIN = 0,
  CSFG_CMP_AT_MOST = 1,
  CSFG_CMP_AT_LEAST = 2
} csfg_comparison;

typedef struct csfg_check_row {
  int criterion;   /* 1..12; 0 for supporting rows */
  const char* name; /* owned by the report */
  const char* unit;
  const char* note;
  double reference;
  double computed;
  double tolerance;
  csfg_comparison comparison;
  int pass;
} csfg_check_row;

typedef struct csfg_report csfg_report;

CSFG_API csfg_status csfg_reference_photon(csfg_pulse* out);
CSFG_API csfg_status csfg_reference_laser(csfg_pulse* out);
CSFG_API csfg_status csfg_reproduce_run(int include_sweep, uint64_t seed, csfg_report** out);
CSFG_API void csfg_report_free(csfg_report* report);
CSFG_API size_t csfg_report_size(const csfg_report* report);
CSFG_API csfg_status csfg_report_row(const csfg_report* report, size_t index,
                                     csfg_check_row* out);
CSFG_API const char* csfg_criterion_title(int criterion);

#ifdef __cplusplus
}
#endif

#endif /* CHIRPSFG_CHIRPSFG_H_ */
