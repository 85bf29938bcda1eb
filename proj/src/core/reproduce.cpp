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

#include "chirpsfg/reproduce.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "chirpsfg/entanglement.hpp"
#include "chirpsfg/error.hpp"
#include "chirpsfg/quantities.hpp"
#include "chirpsfg/sfg_analytic.hpp"
#include "chirpsfg/sfg_numeric.hpp"
#include "chirpsfg/spectro_analysis.hpp"
#include "chirpsfg/timing_sync.hpp"

namespace chirpsfg::reproduce {

namespace {

using namespace quantities;
constexpr double kPi = std::numbers::pi;
constexpr double kGHz = 1e9;
constexpr double kNmPerPs = kNano / kPico;
constexpr double kNmPerKHz = kNano / 1e3;

class Table {
 public:
  void add(int criterion, std::string name, std::string unit, double reference, double computed,
           double tolerance, Comparison cmp = Comparison::Within, std::string note = {}) {
    CheckRow r;
    r.criterion = criterion;
    r.name = std::move(name);
    r.unit = std::move(unit);
    r.reference = reference;
    r.computed = computed;
    r.tolerance = tolerance;
    r.comparison = cmp;
    r.note = std::move(note);
    switch (cmp) {
      case Comparison::Within:
        r.pass = std::abs(computed - reference) <= tolerance;
        break;
      case Comparison::AtMost:
        r.pass = computed <= reference;
        break;
      case Comparison::AtLeast:
        r.pass = computed >= reference;
        break;
    }
    if (!std::isfinite(computed)) r.pass = false;
    rows_.push_back(std::move(r));
  }

  // Records a failed row when a computation throws.
  template <typename F>
  void guarded(int criterion, const std::string& name, F&& f) {
    try {
      f();
    } catch (const std::exception& e) {
      CheckRow r;
      r.criterion = criterion;
      r.name = name;
      r.computed = std::nan("");
      r.note = e.what();
      rows_.push_back(std::move(r));
    }
  }

  std::vector<CheckRow> take() { return std::move(rows_); }

 private:
  std::vector<CheckRow> rows_;
};

double rel_pct(double a, double b) { return 100.0 * std::abs(a - b) / std::abs(b); }

double measured_fwhm(const numeric::UpconversionResult& r) {
  return pulses::measure_fwhm(r.spectrum.frequencies(), r.spectrum.intensity());
}

void bandwidth_checks(Table& t) {
  t.guarded(1, "compressed bandwidth", [&] {
    const double f = analytic::bandwidth_compressed(kPhotonFwhm, kLaserFwhm, kChirp);
    t.add(1, "compressed bandwidth (formula)", "GHz", 32.9, f / kGHz, 0.1);
    const auto num = numeric::upconvert(reference_photon(), reference_laser());
    t.add(1, "numeric oracle vs formula", "%", 0.5, rel_pct(measured_fwhm(num), f),
          0.0, Comparison::AtMost);
    t.add(0, "large-chirp metric A^2 dnuP^4", "", 100.0,
          analytic::large_chirp_metric(kChirp, kPhotonFwhm), 0.0, Comparison::AtLeast,
          "the compressed-bandwidth limit needs this >> 1");
  });

  t.guarded(2, "compression ratio", [&] {
    const auto real = spectro::deconvolve_resolution({74 * kGHz, 4 * kGHz}, {60 * kGHz, 4 * kGHz});
    t.add(2, "compression ratio (deconvolved width)", "", 40.0,
          analytic::compression_ratio(kPhotonFwhm, real.value), 1.0);
    t.add(2, "compression ratio (rounded 43 GHz)", "", 40.0,
          std::round(analytic::compression_ratio(kPhotonFwhm, 43 * kGHz)), 0.0);
  });

  t.guarded(3, "unchirped broadening", [&] {
    const double ratio = analytic::bandwidth_general(kPhotonFwhm, kLaserFwhm, 0.0, 0.0) /
                         kPhotonFwhm;
    t.add(3, "unchirped broadening", "", 2.92, ratio, 0.005);
    t.add(3, "unchirped broadening vs factor of 3", "", 3.0, ratio, 0.1);
    pulses::PulseSpec p = reference_photon(), l = reference_laser();
    p.chirp = l.chirp = 0.0;
    const double num = measured_fwhm(numeric::upconvert(p, l)) / kPhotonFwhm;
    t.add(3, "unchirped broadening (numeric)", "", ratio, num, 0.005 * ratio);
  });
}

void tuning_checks(Table& t) {
  t.guarded(4, "delay slope", [&] {
    const double slope =
        analytic::center_wavelength(kPhotonWavelength, kLaserWavelength, kChirp, 0.0).linear_slope;
    const double s = slope / kNmPerPs;
    t.add(4, "delay slope (analytic)", "nm/ps", -0.0648, s, 0.01 * 0.0648);
    std::vector<double> delays;
    for (int k = -3; k <= 3; ++k) delays.push_back(5.0 * k * kPico);
    const auto rows = numeric::delay_scan(reference_photon(), reference_laser(), delays);
    std::vector<double> x, y;
    for (const auto& r : rows) {
      if (!r.ok) throw MeasurementError("delay scan row failed: " + r.error);
      x.push_back(r.delta_tau / kPico);
      y.push_back(r.center_wl / kNano);
    }
    const auto fit = spectro::fit_line(x, y);
    t.add(4, "delay slope (numeric scan)", "nm/ps", -0.0648, fit.slope, 0.01 * 0.0648);
    t.add(4, "measured -0.0640 nm/ps vs computed", "%", 2.0, rel_pct(-0.0640, s), 0.0,
          Comparison::AtMost);
    t.add(4, "measured -0.0641 nm/ps vs computed", "%", 2.0, rel_pct(-0.0641, s), 0.0,
          Comparison::AtMost);
  });

  t.guarded(5, "chirp extraction", [&] {
    const double a = analytic::chirp_from_wavelength_slope(kPhotonWavelength, kLaserWavelength,
                                                           -0.0641 * kNmPerPs);
    t.add(5, "chirp from -0.0641 nm/ps", "1e6 fs2", 26.2, a / (1e6 * kFs2), 0.2);
  });

  t.guarded(0, "supporting conversions", [&] {
    const auto cw = analytic::center_wavelength(kPhotonWavelength, kLaserWavelength, kChirp, 0.0);
    t.add(0, "SFG wavelength at zero delay", "nm", 399.7, cw.exact / kNano, 0.15);
    t.add(0, "laser width 9.86 nm at 787.62 nm", "GHz", 4770.0,
          bandwidth_wl_to_freq(9.86 * kNano, 787.62 * kNano) / kGHz, 20.0);
    t.add(0, "resolution 0.033 nm at 404 nm", "GHz", 60.0,
          bandwidth_wl_to_freq(0.033 * kNano, 404 * kNano) / kGHz, 4.0);
  });
}

void analysis_checks(Table& t) {
  t.guarded(6, "deconvolution", [&] {
    const auto a = spectro::deconvolve_resolution({74 * kGHz, 4 * kGHz}, {60 * kGHz, 4 * kGHz});
    t.add(6, "deconvolved width, single photons", "GHz", 43.0, a.value / kGHz, 0.5);
    t.add(6, "deconvolved uncertainty, single photons", "GHz", 9.0, a.sigma / kGHz, 0.5);
    const auto b = spectro::deconvolve_resolution({67 * kGHz, 4 * kGHz}, {60 * kGHz, 4 * kGHz});
    t.add(6, "deconvolved width, weak pulses", "GHz", 30.0, b.value / kGHz, 0.5);
    t.add(6, "deconvolved uncertainty, weak pulses", "GHz", 12.0, b.sigma / kGHz, 0.5);
  });

  t.guarded(7, "rep-rate sensitivity", [&] {
    const double chirp = 26.2e6 * kFs2;
    const double s =
        timing::reprate_sensitivity(400 * kNano, chirp, kRepetitionRate, kPulseOffset) / kNmPerKHz;
    t.add(7, "rep-rate sensitivity", "nm/kHz", 0.120, s, 0.0005);
    t.add(7, "rep-rate sensitivity vs measured 0.1188", "%", 1.5, rel_pct(s, 0.1188), 0.0,
          Comparison::AtMost);
    const auto n = timing::estimate_pulse_offset({-0.0641 * kNmPerPs, 0.0001 * kNmPerPs},
                                                 {0.1188 * kNmPerKHz, 0.0004 * kNmPerKHz},
                                                 kRepetitionRate);
    t.add(7, "pulse offset n", "", 11.9, n.value, 0.1);
    t.add(7, "pulse offset uncertainty", "", 0.1, n.sigma, 0.0, Comparison::AtMost);
  });

  t.guarded(8, "jitter thresholds", [&] {
    const double chirp = 26.2e6 * kFs2;
    const double lw = 0.04 * kNano;
    const auto j =
        timing::jitter_tolerance(lw, 400 * kNano, chirp, kRepetitionRate, kPulseOffset);
    t.add(8, "linewidth-equivalent detuning", "Hz", 330.0, j.max_detuning, 10.0,
          Comparison::Within, "the rounded 0.01 n nm/kHz rule gives 300 Hz");
    t.add(8, "detuning vs rounded 300 Hz", "%", 15.0, rel_pct(j.max_detuning, 300.0), 0.0,
          Comparison::AtMost);
    const double shift =
        10.0 * timing::reprate_sensitivity(400 * kNano, chirp, kRepetitionRate, kPulseOffset);
    t.add(8, "10 Hz detuning shift / linewidth", "%", 3.0, 100.0 * shift / lw, 0.0,
          Comparison::AtMost);
  });

  t.guarded(12, "time-bin figures", [&] {
    const double range = std::hypot(kPhotonFwhm, kLaserFwhm);
    const auto tb = analytic::timebin_resolution(kMeasuredFwhm, kChirp, range);
    t.add(12, "minimum time-bin separation", "ps", 0.6, tb.min_separation / kPico, 0.06);
    t.add(12, "usable delay range", "ps", 40.0, tb.usable_range / kPico, 4.0);
  });
}

void entanglement_checks(Table& t, const Options& opts) {
  const double sigma = fwhm_to_sigma(kPhotonFwhm);
  const double sigma_l = fwhm_to_sigma(kLaserFwhm);

  t.guarded(9, "entanglement limits", [&] {
    const double eq2 = analytic::bandwidth_compressed(kFwhmPerSigma * sigma, kLaserFwhm, kChirp);
    const double sep = entanglement::entangled_sfg_bandwidth(sigma, 1e3 * sigma, sigma_l, kChirp);
    t.add(9, "separable limit (sc/s = 1e3) vs compressed formula", "%", 0.1, rel_pct(sep, eq2),
          0.0, Comparison::AtMost);

    // Correlated limit: the chirp term scales as (A sigma sigma_c)^2, so the
    // ratio needed to reach the limit depends on A.
    auto correlated = [&](double ratio, double chirp, const std::string& label) {
      const double sc = ratio * sigma;
      const double lim = std::hypot(entanglement::marginal_bandwidth(sigma, sc), kLaserFwhm);
      const double w1 = entanglement::entangled_sfg_bandwidth(sigma, sc, sigma_l, chirp);
      const double w10 = entanglement::entangled_sfg_bandwidth(sigma, sc, sigma_l, 10.0 * chirp);
      t.add(9, "correlated limit vs sqrt(P^2+L^2), " + label, "%", 0.1, rel_pct(w1, lim), 0.0,
            Comparison::AtMost);
      t.add(9, "correlated limit A-invariance (10x A), " + label, "%", 0.1, rel_pct(w10, w1),
            0.0, Comparison::AtMost);
    };
    correlated(1e-3, 0.5e6 * kFs2, "sc/s = 1e-3, A = 0.5e6 fs2");
    correlated(1e-5, kChirp, "sc/s = 1e-5, A = 25.8e6 fs2");
  });

  t.guarded(10, "purity properties", [&] {
    std::mt19937_64 rng(opts.seed);
    std::uniform_real_distribution<double> log_width(std::log(0.1e12), std::log(10e12));
    std::uniform_real_distribution<double> log_chirp(std::log(1e5 * kFs2), std::log(1e8 * kFs2));
    double min_diff = 1.0, max_purity = 0.0, max_identity = 0.0;
    for (int i = 0; i < opts.purity_draws; ++i) {
      const double s = std::exp(log_width(rng));
      const double sc = std::exp(log_width(rng));
      const double sl = std::exp(log_width(rng));
      const double a = std::exp(log_chirp(rng));
      const auto r = entanglement::purity_final(s, sc, sl, a);
      min_diff = std::min(min_diff, r.purity_difference);
      max_purity = std::max(max_purity, r.purity_final);
      max_identity = std::max(
          max_identity, std::abs(r.purity_difference - (r.purity_final - r.purity_initial)));
    }
    t.add(10, "min purity increase over random draws", "", -1e-12, min_diff, 0.0,
          Comparison::AtLeast);
    t.add(10, "max final purity over random draws", "", 1.0 + 1e-12, max_purity, 0.0,
          Comparison::AtMost);
    t.add(10, "difference identity over random draws", "", 1e-12, max_identity, 0.0,
          Comparison::AtMost);

    const auto sep = entanglement::purity_final(sigma, 1e6 * sigma, sigma_l, kChirp);
    t.add(10, "separable initial purity (sc/s = 1e6)", "", 1.0, sep.purity_initial, 1e-4);
    t.add(10, "separable final purity (sc/s = 1e6)", "", 1.0, sep.purity_final, 1e-4);
    t.add(10, "entangled initial purity (sc/s = 1e-6)", "", 1e-5,
          entanglement::purity_initial(sigma, 1e-6 * sigma), 0.0, Comparison::AtMost);

    const double s = 1e12;
    const double closed = entanglement::purity_final(s, s, s, 0.0).purity_final;
    const double quad = entanglement::purity_quadrature(s, s, s, 0.0);
    t.add(10, "closed form vs quadrature (A = 0, s = sc = sL)", "", closed, quad, 1e-4);
  });
}

void sweep_checks(Table& t) {
  t.guarded(11, "oracle sweep", [&] {
    const auto pts = oracle_sweep();
    double worst_formula = 0.0, worst_delay = 0.0, worst_product = 0.0;
    for (const auto& p : pts) {
      worst_formula = std::max(worst_formula, rel_pct(p.fwhm_numeric, p.fwhm_formula));
      worst_delay = std::max(worst_delay, rel_pct(p.fwhm_delayed, p.fwhm_numeric));
      worst_product = std::max(worst_product, p.product_deviation);
    }
    t.add(11, "sweep points", "", 125.0, static_cast<double>(pts.size()), 0.0);
    t.add(11, "max numeric vs general formula", "%", 0.5, worst_formula, 0.0,
          Comparison::AtMost);
    t.add(11, "max bandwidth change under delay (overlap 0.01)", "%", 0.5, worst_delay, 0.0,
          Comparison::AtMost);
    t.add(11, "max convolution vs time-domain product", "", 1e-6, worst_product, 0.0,
          Comparison::AtMost);
  });
}

}  // namespace

pulses::PulseSpec reference_photon() {
  return {wavelength_to_frequency(kPhotonWavelength), kPhotonFwhm, kChirp, 0.0};
}

pulses::PulseSpec reference_laser() {
  return {wavelength_to_frequency(kLaserWavelength), kLaserFwhm, -kChirp, 0.0};
}

SweepPoint sweep_point(double fwhm_photon, double fwhm_laser, double chirp) {
  SweepPoint sp;
  sp.fwhm_photon = fwhm_photon;
  sp.fwhm_laser = fwhm_laser;
  sp.chirp = chirp;
  sp.fwhm_formula = analytic::bandwidth_general(fwhm_photon, fwhm_laser, chirp, -chirp);

  pulses::PulseSpec photon = reference_photon();
  pulses::PulseSpec laser = reference_laser();
  photon.fwhm = fwhm_photon;
  photon.chirp = chirp;
  laser.fwhm = fwhm_laser;
  laser.chirp = -chirp;

  numeric::GridOptions go;
  go.output_points = 512;
  const auto lg = pulses::adequate_grid(laser, 1024);
  const auto pg = pulses::adequate_grid(photon, 1024);
  const auto laser_field = pulses::synthesize(laser, lg);

  auto run = [&](const pulses::PulseSpec& p) {
    const auto out = numeric::default_output_grid(p, laser, go);
    return measured_fwhm(numeric::upconvert(pulses::synthesize(p, pg), laser_field, out));
  };
  sp.fwhm_numeric = run(photon);

  // Delay the photon so that delta_tau = tau_L - tau_P reaches overlap 0.01.
  const double dnu = std::sqrt(std::log(100.0) / (4.0 * std::numbers::ln2) *
                               (fwhm_photon * fwhm_photon + fwhm_laser * fwhm_laser));
  pulses::PulseSpec delayed = photon;
  delayed.delay = -chirp * dnu / kPi;
  sp.fwhm_delayed = run(delayed);

  const auto [cp, cl] = pulses::common_grids(photon, laser, 1024);
  sp.product_deviation = numeric::classical_product_check(pulses::synthesize(photon, cp),
                                                          pulses::synthesize(laser, cl), 128)
                             .max_deviation;
  return sp;
}

std::vector<SweepPoint> oracle_sweep() {
  const double photon[] = {1.0e12, 1.4e12, 1.74e12, 2.4e12, 3.0e12};
  const double laser[] = {1.74e12, 2.5e12, 3.5e12, 4.77e12, 6.0e12};
  const double metric[] = {1e2, 5.62e2, 3.16e3, 1.78e4, 1e5};
  std::vector<SweepPoint> out;
  for (double p : photon)
    for (double l : laser)
      for (double m : metric) out.push_back(sweep_point(p, l, std::sqrt(m) / (p * p)));
  return out;
}

std::vector<CheckRow> run_checks(const Options& opts) {
  Table t;
  bandwidth_checks(t);
  tuning_checks(t);
  analysis_checks(t);
  entanglement_checks(t, opts);
  if (opts.include_sweep) sweep_checks(t);
  auto rows = t.take();
  std::stable_sort(rows.begin(), rows.end(), [](const CheckRow& a, const CheckRow& b) {
    const int ka = a.criterion == 0 ? 100 : a.criterion;
    const int kb = b.criterion == 0 ? 100 : b.criterion;
    return ka < kb;
  });
  return rows;
}

std::string criterion_title(int criterion) {
  switch (criterion) {
    case 0: return "supporting conversions";
    case 1: return "predicted compressed bandwidth";
    case 2: return "compression ratio";
    case 3: return "unchirped broadening";
    case 4: return "delay-tuning slope";
    case 5: return "chirp extraction";
    case 6: return "resolution deconvolution";
    case 7: return "rep-rate sensitivity and pulse offset";
    case 8: return "jitter thresholds";
    case 9: return "entanglement limits";
    case 10: return "purity properties";
    case 11: return "oracle agreement sweep";
    case 12: return "time-bin figures";
    default: return "unknown";
  }
}

}  // namespace chirpsfg::reproduce
