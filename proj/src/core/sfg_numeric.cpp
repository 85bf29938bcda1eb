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

#include "chirpsfg/sfg_numeric.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <span>
#include <utility>

#include "chirpsfg/error.hpp"
#include "chirpsfg/quantities.hpp"
#include "chirpsfg/sfg_analytic.hpp"
#include "fourier.hpp"
#include "parallel.hpp"

namespace chirpsfg::numeric {

using pulses::Complex;
using pulses::FrequencyGrid;
using pulses::PulseSpec;
using pulses::SpectralAmplitude;

namespace {

constexpr double kPi = std::numbers::pi;

// Largest |d phase / d nu_photon| of the convolution integrand over the
// photon grid and the output window. The integrand phase is
// phi_P(x) + phi_L(y - x) with x = nu - nu0P, y = nu3 - nu0P - nu0L.
double max_integrand_phase_slope(const PulseSpec& p, const PulseSpec& l, const FrequencyGrid& pg,
                                 const FrequencyGrid& og) {
  const double xs[2] = {pg.start - p.nu0, pg.end() - p.nu0};
  const double ys[2] = {og.start - p.nu0 - l.nu0, og.end() - p.nu0 - l.nu0};
  double worst = 0.0;
  for (double x : xs)
    for (double y : ys) {
      const double d = 2.0 * kPi * (p.delay - l.delay) + 2.0 * (p.chirp + l.chirp) * x -
                       2.0 * l.chirp * y;
      worst = std::max(worst, std::abs(d));
    }
  return worst;
}

void check_integrand_sampling(const PulseSpec& p, const PulseSpec& l, const FrequencyGrid& pg,
                              const FrequencyGrid& og) {
  const double slope = max_integrand_phase_slope(p, l, pg, og);
  if (slope * pg.step >= kPi / 4.0) {
    std::ostringstream os;
    os << "convolution integrand undersampled: phase advances " << slope * pg.step
       << " rad per photon sample (limit pi/4); need photon step < " << kPi / (4.0 * slope)
       << " Hz";
    throw GridError(os.str());
  }
}

double edge_energy_fraction(const std::vector<Complex>& field) {
  const std::size_t n = field.size();
  const std::size_t band = std::max<std::size_t>(2, n / 32);
  double total = 0.0, edge = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double e = std::norm(field[j]);
    total += e;
    if (j < band || j + band >= n) edge += e;
  }
  return total > 0.0 ? edge / total : 1.0;
}

}  // namespace

UpconversionResult upconvert(const SpectralAmplitude& photon, const SpectralAmplitude& laser,
                             const FrequencyGrid& out_grid) {
  out_grid.validate();
  const FrequencyGrid& pg = photon.grid();
  const FrequencyGrid& lg = laser.grid();
  if (photon.source()) pulses::check_grid(*photon.source(), pg);
  if (laser.source()) pulses::check_grid(*laser.source(), lg);
  if (photon.source() && laser.source())
    check_integrand_sampling(*photon.source(), *laser.source(), pg, out_grid);

  const auto pv = photon.values();
  const auto lv = laser.values();
  const std::size_t np = pv.size();
  const std::size_t nl = lv.size();
  const double ratio = pg.step / lg.step;
  const double last_l = static_cast<double>(nl - 1);

  std::vector<Complex> out(out_grid.count);
  detail::parallel_for(out_grid.count, [&](std::size_t j) {
    // Laser sample position for photon index k: s_k = s0 - k * ratio.
    const double s0 = ((out_grid.at(j) - pg.start) - lg.start) / lg.step;
    // Photon indices whose partner lies inside the laser grid.
    const double k_lo_f = std::ceil((s0 - last_l) / ratio);
    const double k_hi_f = std::floor(s0 / ratio);
    const long k_lo = std::max<long>(0, static_cast<long>(k_lo_f));
    const long k_hi = std::min<long>(static_cast<long>(np) - 1, static_cast<long>(k_hi_f));
    Complex acc{};
    for (long k = k_lo; k <= k_hi; ++k) {
      const double s = s0 - static_cast<double>(k) * ratio;
      if (s < 0.0 || s > last_l) continue;
      auto i = static_cast<std::size_t>(s);
      if (i + 1 >= nl) i = nl - 2;
      const double t = s - static_cast<double>(i);
      const Complex lval = lv[i] + t * (lv[i + 1] - lv[i]);
      const double w = (k == 0 || k == static_cast<long>(np) - 1) ? 0.5 : 1.0;
      acc += w * pv[static_cast<std::size_t>(k)] * lval;
    }
    out[j] = acc * pg.step;
  });

  const double edge = edge_energy_fraction(out);
  if (edge > kMaxEdgeEnergyFraction) {
    std::ostringstream os;
    os << "output window clips the SFG spectrum: " << edge
       << " of the energy sits in the edge bands (limit " << kMaxEdgeEnergyFraction << ")";
    throw WindowError(os.str(), edge);
  }

  double peak = 0.0;
  for (const Complex& v : out) peak = std::max(peak, std::norm(v));
  if (!(peak > 0.0)) throw MeasurementError("upconverted field is identically zero");
  const double scale = 1.0 / std::sqrt(peak);
  for (Complex& v : out) v *= scale;
  return {SpectralAmplitude(out_grid, std::move(out)), peak, edge};
}

FrequencyGrid default_output_grid(const PulseSpec& photon, const PulseSpec& laser,
                                  const GridOptions& opts) {
  const auto report = analytic::predict(photon, laser);
  if (opts.output_points < pulses::kMinGridPoints)
    throw DomainError("output grid needs at least 16 points");
  if (!(opts.output_span_fwhms > 0.0)) throw DomainError("output span must be positive");
  const double span = opts.output_span_fwhms * report.fwhm;
  const double step = span / static_cast<double>(opts.output_points - 1);
  return {report.center_freq - 0.5 * span, step, opts.output_points};
}

UpconversionResult upconvert(const PulseSpec& photon, const PulseSpec& laser,
                             const GridOptions& opts) {
  const FrequencyGrid out_grid = default_output_grid(photon, laser, opts);
  const FrequencyGrid lg = pulses::adequate_grid(laser, opts.input_points);
  FrequencyGrid pg = pulses::adequate_grid(photon, opts.input_points);
  // Refine the photon grid until the combined integrand phase is resolved.
  for (int guard = 0; guard < 12; ++guard) {
    const double slope = max_integrand_phase_slope(photon, laser, pg, out_grid);
    if (slope * pg.step < kPi / 4.0) break;
    pg = pulses::adequate_grid(photon, pg.count * 2);
  }
  return upconvert(pulses::synthesize(photon, pg), pulses::synthesize(laser, lg), out_grid);
}

std::vector<ScanRow> delay_scan(const PulseSpec& photon, const PulseSpec& laser,
                                const std::vector<double>& delays, const GridOptions& opts) {
  std::vector<ScanRow> rows(delays.size());
  if (delays.empty()) return rows;
  photon.validate();
  laser.validate();

  auto run = [&](double delta_tau) {
    PulseSpec l = laser;
    l.delay = photon.delay + delta_tau;
    return upconvert(photon, l, opts);
  };

  double reference_peak = 0.0;
  {
    const auto zero = std::find(delays.begin(), delays.end(), 0.0);
    if (zero == delays.end()) reference_peak = run(0.0).raw_peak_intensity;
  }

  for (std::size_t i = 0; i < delays.size(); ++i) {
    ScanRow& row = rows[i];
    row.delta_tau = delays[i];
    try {
      const auto res = run(delays[i]);
      const auto f = res.spectrum.frequencies();
      const auto inten = res.spectrum.intensity();
      const auto hm = pulses::half_maximum(f, inten);
      row.center_freq = hm.midpoint();
      row.center_wl = quantities::frequency_to_wavelength(row.center_freq);
      row.fwhm = hm.width();
      row.peak_intensity = res.raw_peak_intensity;
      row.ok = true;
    } catch (const Error& e) {
      row.ok = false;
      row.error = std::string(to_string(e.kind())) + ": " + e.what();
    }
    if (delays[i] == 0.0 && row.ok && reference_peak == 0.0) reference_peak = row.peak_intensity;
  }

  for (ScanRow& row : rows) {
    if (!row.ok) continue;
    row.peak_intensity = reference_peak > 0.0 ? row.peak_intensity / reference_peak : 0.0;
    if (row.peak_intensity < 1e-4) {
      row.ok = false;
      row.error = "outside overlap range: peak below 1e-4 of the zero-delay peak";
    }
  }
  return rows;
}

namespace {

// First and last index whose amplitude exceeds `rel` times the peak.
std::pair<std::size_t, std::size_t> support(std::span<const Complex> v, double rel) {
  double peak = 0.0;
  for (const Complex& c : v) peak = std::max(peak, std::abs(c));
  const double cut = rel * peak;
  std::size_t lo = 0, hi = v.size() - 1;
  while (lo < hi && std::abs(v[lo]) <= cut) ++lo;
  while (hi > lo && std::abs(v[hi]) <= cut) --hi;
  return {lo, hi};
}


// Field on the time samples t_m = (m - N/2) / (N step) conjugate to the grid,
// scaled like the centered DFT of the samples. A field with a known Gaussian
// source is evaluated in closed form and truncated to the window, so a pulse
// that outlasts the window shows up as a mismatch instead of wrapping
// around. Other fields fall back to the DFT of their samples.
std::vector<Complex> time_field(const SpectralAmplitude& field) {
  const FrequencyGrid& g = field.grid();
  const std::size_t n = g.count;
  std::vector<Complex> e(field.values().begin(), field.values().end());
  if (!field.source()) {
    detail::centered_dft_inplace(e, -1);
    return e;
  }
  const PulseSpec& s = *field.source();
  // Offset of sample N/2 from the pulse center.
  const double c = g.start + static_cast<double>(n / 2) * g.step - s.nu0;
  // Integral of exp(-alpha x^2 + i beta x) over x is sqrt(pi / alpha) exp(-beta^2 / (4 alpha)).
  const Complex alpha(2.0 * std::numbers::ln2 / (s.fwhm * s.fwhm), -s.chirp);
  const Complex scale = std::sqrt(kPi / alpha) / g.step;
  const double t_step = 1.0 / (static_cast<double>(n) * g.step);
  for (std::size_t m = 0; m < n; ++m) {
    const double t = (static_cast<double>(m) - static_cast<double>(n / 2)) * t_step;
    const double beta = 2.0 * kPi * (s.delay - t);
    e[m] = scale * std::exp(-beta * beta / (4.0 * alpha) + Complex(0.0, 2.0 * kPi * c * t));
  }
  return e;
}
}  // namespace

ProductCheck classical_product_check(const SpectralAmplitude& photon,
                                     const SpectralAmplitude& laser, std::size_t max_points) {
  const FrequencyGrid& pg = photon.grid();
  const FrequencyGrid& lg = laser.grid();
  if (pg.count != lg.count || std::abs(pg.step - lg.step) > 1e-12 * pg.step)
    throw DomainError("product check needs a common step and count for both fields");
  const std::size_t n = pg.count;
  if (n % 4 != 0) throw DomainError("product check needs a sample count divisible by four");
  if (max_points < 16) throw DomainError("product check needs at least 16 comparison points");

  // Time-domain route: each field on the time window of the grid, multiplied
  // pointwise and transformed back.
  std::vector<Complex> ep = time_field(photon);
  const std::vector<Complex> el = time_field(laser);
  for (std::size_t i = 0; i < n; ++i) ep[i] *= el[i];
  detail::centered_dft_inplace(ep, +1);
  // Sample j of the product spectrum sits at offset j - N/2 from the sum of
  // the two center samples; the direct convolution index there is j + N/2.
  std::vector<double> circ(n);
  double circ_peak = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    circ[j] = std::norm(ep[j]);
    circ_peak = std::max(circ_peak, circ[j]);
  }
  if (!(circ_peak > 0.0)) throw MeasurementError("product route produced a zero field");

  // Direct route on the significant samples plus a uniform stride elsewhere.
  const std::size_t stride = std::max<std::size_t>(1, n / (max_points / 4));
  std::vector<std::size_t> idx;
  for (std::size_t j = 0; j < n; ++j)
    if (circ[j] > 1e-3 * circ_peak || j % stride == 0) idx.push_back(j);
  if (idx.size() > max_points) {
    std::vector<std::size_t> thinned;
    const std::size_t s = (idx.size() + max_points - 1) / max_points;
    for (std::size_t i = 0; i < idx.size(); i += s) thinned.push_back(idx[i]);
    idx.swap(thinned);
  }
  // Always include the product peak.
  const auto peak_j = static_cast<std::size_t>(
      std::max_element(circ.begin(), circ.end()) - circ.begin());
  if (!std::binary_search(idx.begin(), idx.end(), peak_j))
    idx.insert(std::upper_bound(idx.begin(), idx.end(), peak_j), peak_j);

  const auto pv = photon.values();
  const auto lv = laser.values();
  const auto [p_lo, p_hi] = support(pv, 1e-16);
  const auto [l_lo, l_hi] = support(lv, 1e-16);
  std::vector<double> direct(idx.size());
  detail::parallel_for(idx.size(), [&](std::size_t q) {
    const std::size_t sum = idx[q] + n / 2;  // k + m
    if (sum < p_lo + l_lo || sum > p_hi + l_hi) {
      direct[q] = 0.0;
      return;
    }
    const std::size_t k_lo = std::max(p_lo, sum > l_hi ? sum - l_hi : std::size_t{0});
    const std::size_t k_hi = std::min(p_hi, sum - l_lo);
    Complex acc{};
    for (std::size_t k = k_lo; k <= k_hi; ++k) acc += pv[k] * lv[sum - k];
    direct[q] = std::norm(acc);
  });

  double direct_peak = 0.0, circ_sel_peak = 0.0;
  for (std::size_t q = 0; q < idx.size(); ++q) {
    direct_peak = std::max(direct_peak, direct[q]);
    circ_sel_peak = std::max(circ_sel_peak, circ[idx[q]]);
  }
  ProductCheck out;
  out.compared_points = idx.size();
  if (!(direct_peak > 0.0)) {
    out.max_deviation = 1.0;
    return out;
  }
  for (std::size_t q = 0; q < idx.size(); ++q) {
    const double d = std::abs(direct[q] / direct_peak - circ[idx[q]] / circ_sel_peak);
    out.max_deviation = std::max(out.max_deviation, d);
  }
  return out;
}

}  // namespace chirpsfg::numeric
