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

#include "chirpsfg/spectro_analysis.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <sstream>

#include "chirpsfg/error.hpp"
#include "chirpsfg/quantities.hpp"

namespace chirpsfg::spectro {

namespace {

std::string_view trim(std::string_view s) {
  const auto not_space = [](char c) { return c != ' ' && c != '\t' && c != '\r'; };
  while (!s.empty() && !not_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && !not_space(s.back())) s.remove_suffix(1);
  return s;
}

double parse_number(std::string_view s, std::size_t line) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v))
    throw DomainError("line " + std::to_string(line) + ": not a number: '" + std::string(s) +
                      "'");
  return v;
}

}  // namespace

void MeasuredWidth::validate() const {
  if (!(value >= 0.0) || !std::isfinite(value)) throw DomainError("width must be non-negative");
  if (!(sigma >= 0.0) || !std::isfinite(sigma))
    throw DomainError("width uncertainty must be non-negative");
}

MeasuredWidth deconvolve_resolution(const MeasuredWidth& measured,
                                    const MeasuredWidth& resolution) {
  measured.validate();
  resolution.validate();
  if (resolution.value == 0.0) return measured;
  if (measured.value <= resolution.value) {
    std::ostringstream os;
    os << "non-physical deconvolution: measured width " << measured.value
       << " Hz does not exceed the instrument width " << resolution.value << " Hz";
    throw DomainError(os.str());
  }
  const double m = measured.value, r = resolution.value;
  MeasuredWidth out;
  out.value = std::sqrt((m - r) * (m + r));
  out.sigma = std::hypot(m * measured.sigma, r * resolution.sigma) / out.value;
  return out;
}

double combine_uncertainty(double fit_sigma, double resolution_sigma) {
  if (!(fit_sigma >= 0.0) || !(resolution_sigma >= 0.0))
    throw DomainError("uncertainties must be non-negative");
  return std::hypot(fit_sigma, resolution_sigma);
}

BackgroundResult background_subtract(const SampledSpectrum& signal,
                                     const SampledSpectrum& background) {
  if (signal.unit != background.unit || signal.x.size() != background.x.size() ||
      signal.y.size() != signal.x.size() || background.y.size() != background.x.size())
    throw DomainError("background grid does not match the signal grid");
  for (std::size_t i = 0; i < signal.x.size(); ++i) {
    const double a = signal.x[i], b = background.x[i];
    if (std::abs(a - b) > 1e-9 * std::max(std::abs(a), std::abs(b)))
      throw DomainError("background grid does not match the signal grid at sample " +
                        std::to_string(i));
  }
  BackgroundResult r;
  r.spectrum.unit = signal.unit;
  r.spectrum.x = signal.x;
  r.spectrum.y.resize(signal.y.size());
  std::size_t clamped = 0;
  for (std::size_t i = 0; i < signal.y.size(); ++i) {
    const double d = signal.y[i] - background.y[i];
    if (d <= 0.0) ++clamped;
    r.spectrum.y[i] = std::max(d, 0.0);
  }
  r.clamped_fraction =
      signal.y.empty() ? 0.0 : static_cast<double>(clamped) / static_cast<double>(signal.y.size());
  return r;
}

SampledSpectrum parse_spectrum_csv(std::string_view text) {
  SampledSpectrum s;
  bool have_header = false;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const auto comma = line.find(',');
    if (!have_header) {
      const std::string_view token = trim(line.substr(0, comma));
      if (token == "wavelength_nm")
        s.unit = AxisUnit::WavelengthNm;
      else if (token == "frequency_hz")
        s.unit = AxisUnit::FrequencyHz;
      else
        throw DomainError("spectrum header must start with wavelength_nm or frequency_hz, got '" +
                          std::string(token) + "'");
      have_header = true;
      continue;
    }
    if (comma == std::string_view::npos)
      throw DomainError("line " + std::to_string(line_no) + ": expected x,y");
    std::string_view rest = line.substr(comma + 1);
    if (rest.find(',') != std::string_view::npos)
      throw DomainError("line " + std::to_string(line_no) + ": expected two columns");
    s.x.push_back(parse_number(line.substr(0, comma), line_no));
    s.y.push_back(parse_number(rest, line_no));
  }
  if (!have_header) throw DomainError("spectrum file is empty");
  return s;
}

SampledSpectrum to_frequency_axis(const SampledSpectrum& s) {
  if (s.x.size() != s.y.size()) throw DomainError("x and y lengths differ");
  SampledSpectrum out;
  out.unit = AxisUnit::FrequencyHz;
  out.x = s.x;
  out.y = s.y;
  if (s.unit == AxisUnit::WavelengthNm)
    for (double& x : out.x) x = quantities::wavelength_to_frequency(x * quantities::kNano);
  std::vector<std::size_t> order(out.x.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return out.x[a] < out.x[b]; });
  SampledSpectrum sorted;
  sorted.unit = AxisUnit::FrequencyHz;
  for (std::size_t i : order) {
    sorted.x.push_back(out.x[i]);
    sorted.y.push_back(out.y[i]);
  }
  return sorted;
}

SpectrumFit fit_spectrum(const SampledSpectrum& s) {
  const SampledSpectrum f = to_frequency_axis(s);
  SpectrumFit r;
  r.fit = pulses::fit_gaussian(f.x, f.y);
  if (!(r.fit.center > 0.0) || !(r.fit.fwhm > 0.0))
    throw FitError("fit converged to a non-physical line", r.fit.residual_norm);
  r.center_wl = quantities::frequency_to_wavelength(r.fit.center);
  r.fwhm_wl = quantities::bandwidth_freq_to_wl(r.fit.fwhm, r.center_wl);
  r.fwhm_wl_sigma = r.fwhm_wl * r.fit.fwhm_sigma / r.fit.fwhm;
  return r;
}

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  if (n != y.size()) throw DomainError("x and y lengths differ");
  if (n < 3) throw DomainError("line fit needs at least three points");
  const double dn = static_cast<double>(n);
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / dn;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / dn;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (!(sxx > 0.0)) throw DomainError("line fit needs at least two distinct x values");
  LineFit r;
  r.slope = sxy / sxx;
  r.intercept = my - r.slope * mx;
  double ss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double e = y[i] - (r.intercept + r.slope * x[i]);
    ss += e * e;
  }
  const double s2 = ss / (dn - 2.0);
  r.slope_sigma = std::sqrt(s2 / sxx);
  r.intercept_sigma = std::sqrt(s2 * (1.0 / dn + mx * mx / sxx));
  r.residual_rms = std::sqrt(ss / dn);
  return r;
}

}  // namespace chirpsfg::spectro
