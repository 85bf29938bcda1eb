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

#include "chirpsfg/pulses.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "chirpsfg/error.hpp"
#include "fourier.hpp"

namespace chirpsfg::pulses {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLn2 = std::numbers::ln2;
constexpr std::size_t kMaxGridPoints = std::size_t{1} << 25;

std::string fmt_double(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

}  // namespace

void PulseSpec::validate() const {
  if (!(nu0 > 0.0) || !std::isfinite(nu0))
    throw DomainError("pulse center frequency must be positive, got " + fmt_double(nu0));
  if (!(fwhm > 0.0) || !std::isfinite(fwhm))
    throw DomainError("pulse FWHM must be positive, got " + fmt_double(fwhm));
  if (!std::isfinite(chirp)) throw DomainError("pulse chirp must be finite");
  if (!std::isfinite(delay)) throw DomainError("pulse delay must be finite");
}

void FrequencyGrid::validate() const {
  if (!(step > 0.0) || !std::isfinite(step))
    throw DomainError("grid step must be positive, got " + fmt_double(step));
  if (!std::isfinite(start)) throw DomainError("grid start must be finite");
  if (count < kMinGridPoints)
    throw DomainError("grid needs at least " + std::to_string(kMinGridPoints) + " points, got " +
                      std::to_string(count));
}

SpectralAmplitude::SpectralAmplitude(FrequencyGrid grid, std::vector<Complex> values,
                                     std::optional<PulseSpec> source)
    : grid_(grid), values_(std::move(values)), source_(source) {
  if (values_.size() != grid_.count)
    throw DomainError("spectral amplitude has " + std::to_string(values_.size()) +
                      " values for a grid of " + std::to_string(grid_.count));
}

std::vector<double> SpectralAmplitude::frequencies() const {
  std::vector<double> f(grid_.count);
  for (std::size_t k = 0; k < f.size(); ++k) f[k] = grid_.at(k);
  return f;
}

std::vector<double> SpectralAmplitude::intensity(bool normalize) const {
  std::vector<double> out(values_.size());
  double peak = 0.0;
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] = std::norm(values_[k]);
    peak = std::max(peak, out[k]);
  }
  if (normalize && peak > 0.0)
    for (double& v : out) v /= peak;
  return out;
}

double SpectralAmplitude::energy() const {
  double sum = 0.0;
  for (const Complex& v : values_) sum += std::norm(v);
  return sum * grid_.step;
}

double max_phase_step(double chirp, double half_span) {
  if (chirp == 0.0 || half_span <= 0.0) return std::numeric_limits<double>::infinity();
  return kPi / (8.0 * std::abs(chirp) * half_span);
}

void check_grid(const PulseSpec& spec, const FrequencyGrid& grid) {
  spec.validate();
  grid.validate();
  const double lo = spec.nu0 - kCoverageFwhms * spec.fwhm;
  const double hi = spec.nu0 + kCoverageFwhms * spec.fwhm;
  const double slack = 1e-9 * grid.step;
  if (grid.start > lo + slack || grid.end() < hi - slack) {
    std::ostringstream os;
    os << "grid [" << grid.start << ", " << grid.end() << "] Hz too narrow: must cover ["
       << lo << ", " << hi << "] Hz (nu0 +/- " << kCoverageFwhms << " FWHM)";
    throw GridError(os.str());
  }
  const double half_span = std::max(spec.nu0 - grid.start, grid.end() - spec.nu0);
  const double limit = max_phase_step(spec.chirp, half_span);
  if (!(grid.step < limit)) {
    std::ostringstream os;
    os << "grid step " << grid.step << " Hz too coarse for chirp " << spec.chirp
       << " s^2 over half-span " << half_span << " Hz: need step < " << limit << " Hz (at least "
       << static_cast<std::size_t>(std::ceil(2.0 * half_span / limit)) + 1 << " points)";
    throw GridError(os.str());
  }
}

FrequencyGrid adequate_grid(const PulseSpec& spec, std::size_t min_points, double step_margin) {
  spec.validate();
  if (!(step_margin >= 1.0)) throw DomainError("step margin must be >= 1");
  std::size_t n = detail::next_power_of_two(std::max(min_points, kMinGridPoints));
  for (; n <= kMaxGridPoints; n <<= 1) {
    // Upper edge at nu0 + 4 FWHM; the lower edge is one step further out.
    const double step = kCoverageFwhms * spec.fwhm / static_cast<double>(n / 2 - 1);
    const double half_span = static_cast<double>(n / 2) * step;
    if (step * step_margin < max_phase_step(spec.chirp, half_span))
      return {spec.nu0 - half_span, step, n};
  }
  throw GridError("no power-of-two grid up to " + std::to_string(kMaxGridPoints) +
                  " points resolves chirp " + fmt_double(spec.chirp) + " s^2");
}

std::pair<FrequencyGrid, FrequencyGrid> common_grids(const PulseSpec& a, const PulseSpec& b,
                                                     std::size_t min_points) {
  a.validate();
  b.validate();
  const double widest = std::max(a.fwhm, b.fwhm);
  const double steepest = std::max(std::abs(a.chirp), std::abs(b.chirp));
  std::size_t n = detail::next_power_of_two(std::max(min_points, kMinGridPoints));
  for (; n <= kMaxGridPoints; n <<= 1) {
    const double step = kCoverageFwhms * widest / static_cast<double>(n / 2 - 1);
    const double half_span = static_cast<double>(n / 2) * step;
    if (step < max_phase_step(steepest, half_span)) {
      return {FrequencyGrid{a.nu0 - half_span, step, n}, FrequencyGrid{b.nu0 - half_span, step, n}};
    }
  }
  throw GridError("no common power-of-two grid resolves both chirps");
}

SpectralAmplitude synthesize_unchecked(const PulseSpec& spec, const FrequencyGrid& grid) {
  spec.validate();
  grid.validate();
  const double inv_w2 = 2.0 * kLn2 / (spec.fwhm * spec.fwhm);
  const double offset0 = grid.start - spec.nu0;
  std::vector<Complex> values(grid.count);
  for (std::size_t k = 0; k < grid.count; ++k) {
    const double x = offset0 + static_cast<double>(k) * grid.step;
    const double phase = 2.0 * kPi * x * spec.delay + spec.chirp * x * x;
    values[k] = std::polar(std::exp(-inv_w2 * x * x), phase);
  }
  return SpectralAmplitude(grid, std::move(values), spec);
}

SpectralAmplitude synthesize(const PulseSpec& spec, const FrequencyGrid& grid) {
  check_grid(spec, grid);
  return synthesize_unchecked(spec, grid);
}

HalfMaximum half_maximum(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw MeasurementError("x and y lengths differ");
  if (y.size() < 3) throw MeasurementError("need at least three samples to locate a half maximum");
  const auto peak_it = std::max_element(y.begin(), y.end());
  const std::size_t p = static_cast<std::size_t>(peak_it - y.begin());
  const double peak = *peak_it;
  if (!(peak > 0.0)) throw MeasurementError("spectrum has no positive peak");
  if (p == 0 || p + 1 == y.size()) throw MeasurementError("peak lies on the boundary of the window");
  const double half = 0.5 * peak;

  auto interp = [&](std::size_t lo, std::size_t hi) {
    return x[lo] + (half - y[lo]) / (y[hi] - y[lo]) * (x[hi] - x[lo]);
  };

  HalfMaximum hm;
  hm.peak_index = p;
  hm.peak_value = peak;
  std::size_t j = p;
  while (j > 0 && y[j - 1] > half) --j;
  if (j == 0) throw MeasurementError("no half-maximum crossing below the peak");
  hm.left = interp(j - 1, j);
  j = p;
  while (j + 1 < y.size() && y[j + 1] > half) ++j;
  if (j + 1 == y.size()) throw MeasurementError("no half-maximum crossing above the peak");
  hm.right = interp(j + 1, j);
  return hm;
}

GaussianFit fit_gaussian(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  if (n != y.size()) throw DomainError("x and y lengths differ");
  if (n < 8) throw DomainError("Gaussian fit needs at least 8 samples, got " + std::to_string(n));
  for (double v : y)
    if (!std::isfinite(v)) throw DomainError("Gaussian fit needs finite samples");

  // Work in scaled coordinates: u = (x - x_mid) / x_scale, v = y / y_scale.
  const auto [xmin_it, xmax_it] = std::minmax_element(x.begin(), x.end());
  const double x_mid = 0.5 * (*xmin_it + *xmax_it);
  const double x_scale = 0.5 * (*xmax_it - *xmin_it);
  const auto [ymin_it, ymax_it] = std::minmax_element(y.begin(), y.end());
  const double y_scale = *ymax_it;
  if (!(x_scale > 0.0) || !(y_scale > 0.0) ||
      (*ymax_it - *ymin_it) <= 1e-12 * y_scale)
    throw FitError("degenerate data: constant samples have no Gaussian width", 0.0);

  Eigen::VectorXd u(n), v(n);
  for (std::size_t i = 0; i < n; ++i) {
    u[i] = (x[i] - x_mid) / x_scale;
    v[i] = y[i] / y_scale;
  }

  // Seeds from the background-subtracted centroid and variance.
  const double base = v.minCoeff();
  double wsum = 0.0, m1 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    wsum += v[i] - base;
    m1 += (v[i] - base) * u[i];
  }
  const double c0 = m1 / wsum;
  double m2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) m2 += (v[i] - base) * (u[i] - c0) * (u[i] - c0);
  const double sd = std::sqrt(m2 / wsum);

  const double k4 = 4.0 * kLn2;
  // p = (center, fwhm, amplitude, offset)
  Eigen::Vector4d p(c0, 2.0 * std::sqrt(2.0 * kLn2) * sd, v.maxCoeff() - base, base);

  auto residuals = [&](const Eigen::Vector4d& q, Eigen::VectorXd& r) {
    for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(n); ++i) {
      const double d = u[i] - q[0];
      r[i] = q[3] + q[2] * std::exp(-k4 * d * d / (q[1] * q[1])) - v[i];
    }
  };
  auto jacobian = [&](const Eigen::Vector4d& q, Eigen::MatrixXd& J) {
    for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(n); ++i) {
      const double d = u[i] - q[0];
      const double w2 = q[1] * q[1];
      const double g = std::exp(-k4 * d * d / w2);
      J(i, 0) = q[2] * g * 2.0 * k4 * d / w2;
      J(i, 1) = q[2] * g * 2.0 * k4 * d * d / (w2 * q[1]);
      J(i, 2) = g;
      J(i, 3) = 1.0;
    }
  };

  Eigen::VectorXd r(n), r_try(n);
  Eigen::MatrixXd J(n, 4);
  residuals(p, r);
  double cost = r.squaredNorm();
  double lambda = 1e-3;
  bool converged = false;
  int iter = 0;
  for (; iter < kFitMaxIterations && !converged; ++iter) {
    jacobian(p, J);
    const Eigen::Matrix4d JtJ = J.transpose() * J;
    const Eigen::Vector4d g = J.transpose() * r;
    bool accepted = false;
    while (!accepted) {
      Eigen::Matrix4d A = JtJ;
      A.diagonal() += lambda * JtJ.diagonal().cwiseMax(1e-12);
      const Eigen::Vector4d step = A.ldlt().solve(-g);
      const Eigen::Vector4d trial = p + step;
      residuals(trial, r_try);
      const double trial_cost = r_try.squaredNorm();
      if (std::isfinite(trial_cost) && trial_cost <= cost) {
        const double rel = step.norm() / (p.norm() + 1e-30);
        p = trial;
        r = r_try;
        cost = trial_cost;
        lambda = std::max(lambda / 10.0, 1e-15);
        accepted = true;
        if (rel < kFitTolerance || cost == 0.0) converged = true;
      } else {
        lambda *= 10.0;
        if (lambda > 1e16) {
          // No downhill step left: the current point is a minimum to within
          // machine precision.
          converged = true;
          break;
        }
      }
    }
  }

  const double residual_norm = std::sqrt(cost) * y_scale;
  if (!converged)
    throw FitError("Gaussian fit did not converge in " + std::to_string(kFitMaxIterations) +
                       " iterations",
                   residual_norm);
  if (!(std::abs(p[1]) > 1e-9) || !std::isfinite(p[1]) || !(p[2] > 0.0))
    throw FitError("Gaussian fit collapsed to a degenerate width or amplitude", residual_norm);

  jacobian(p, J);
  const Eigen::Matrix4d JtJ = J.transpose() * J;
  const double dof = static_cast<double>(n) - 4.0;
  const double s2 = dof > 0.0 ? cost / dof : 0.0;
  const Eigen::Matrix4d cov = s2 * JtJ.inverse();

  GaussianFit fit;
  fit.center = x_mid + p[0] * x_scale;
  fit.fwhm = std::abs(p[1]) * x_scale;
  fit.amplitude = p[2] * y_scale;
  fit.offset = p[3] * y_scale;
  fit.center_sigma = std::sqrt(std::max(0.0, cov(0, 0))) * x_scale;
  fit.fwhm_sigma = std::sqrt(std::max(0.0, cov(1, 1))) * x_scale;
  fit.amplitude_sigma = std::sqrt(std::max(0.0, cov(2, 2))) * y_scale;
  fit.offset_sigma = std::sqrt(std::max(0.0, cov(3, 3))) * y_scale;
  fit.residual_norm = residual_norm;
  fit.iterations = iter;
  return fit;
}

std::vector<double> TemporalEnvelope::times() const {
  std::vector<double> t(values.size());
  for (std::size_t n = 0; n < t.size(); ++n) t[n] = t_start + static_cast<double>(n) * dt;
  return t;
}

std::vector<double> TemporalEnvelope::intensity(bool normalize) const {
  std::vector<double> out(values.size());
  double peak = 0.0;
  for (std::size_t n = 0; n < out.size(); ++n) {
    out[n] = std::norm(values[n]);
    peak = std::max(peak, out[n]);
  }
  if (normalize && peak > 0.0)
    for (double& v : out) v /= peak;
  return out;
}

double TemporalEnvelope::energy() const {
  double sum = 0.0;
  for (const Complex& v : values) sum += std::norm(v);
  return sum * dt;
}

std::vector<double> TemporalEnvelope::instantaneous_frequency() const {
  const std::size_t n = values.size();
  std::vector<double> f(n, 0.0);
  if (n < 3) return f;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    // arg(e[i+1] conj(e[i-1])) is the unwrapped phase change over 2 dt.
    const double dphi = std::arg(values[i + 1] * std::conj(values[i - 1]));
    f[i] = -dphi / (2.0 * kPi * 2.0 * dt);
  }
  f[0] = f[1];
  f[n - 1] = f[n - 2];
  return f;
}

TemporalEnvelope time_envelope(const SpectralAmplitude& amp, std::size_t oversample) {
  if (!detail::is_power_of_two(oversample))
    throw DomainError("oversample factor must be a power of two");
  const FrequencyGrid& g = amp.grid();
  const std::size_t n_in = amp.size();
  const std::size_t n = detail::next_power_of_two(n_in) * oversample;

  // Zero-pad symmetrically so the input occupies the middle of the window.
  const std::size_t pad_lo = (n - n_in) / 2;
  std::vector<Complex> buf(n, Complex{});
  const auto src = amp.values();
  std::copy(src.begin(), src.end(), buf.begin() + static_cast<std::ptrdiff_t>(pad_lo));

  const double carrier = g.start + static_cast<double>(n / 2) * g.step -
                         static_cast<double>(pad_lo) * g.step;
  detail::centered_dft_inplace(buf, -1);

  TemporalEnvelope env;
  env.carrier = carrier;
  env.dt = 1.0 / (static_cast<double>(n) * g.step);
  env.t_start = -static_cast<double>(n / 2) * env.dt;
  for (Complex& v : buf) v *= g.step;
  env.values = std::move(buf);
  return env;
}

}  // namespace chirpsfg::pulses
