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

#include "chirpsfg/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include "chirpsfg/error.hpp"
#include "chirpsfg/quantities.hpp"
#include <Eigen/Dense>

#include "parallel.hpp"

namespace chirpsfg::entanglement {

namespace {

using Complex = std::complex<double>;
constexpr double kPi = std::numbers::pi;
constexpr std::size_t kMaxSignalPoints = std::size_t{1} << 16;

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v))
    throw DomainError(std::string(name) + " must be positive and finite");
}

double sigma_of(const pulses::PulseSpec& laser) { return laser.fwhm / quantities::kFwhmPerSigma; }

// Inner integral over the signal frequency at fixed idler offset and output
// offset. The integrand is exp(Q(xs)) with Q quadratic, so successive samples
// are generated by a two-term multiplicative recurrence.
struct InnerIntegrand {
  Complex a2, a1, a0;
};

struct TraceSetup {
  double s2, sc2, sl2;      // squared RMS scales
  double chirp_s, chirp_l;  // s^2
  double tau_l;             // s
  double rms;               // inner envelope amplitude RMS
};

InnerIntegrand integrand(const TraceSetup& t, double xi, double y) {
  InnerIntegrand q;
  q.a2 = Complex(-0.5 / t.s2 - 0.5 / t.sc2 - 0.5 / t.sl2, t.chirp_s + t.chirp_l);
  q.a1 = Complex(-xi / t.sc2 + y / t.sl2, -2.0 * t.chirp_l * y - 2.0 * kPi * t.tau_l);
  q.a0 = Complex(-0.5 * xi * xi / t.s2 - 0.5 * xi * xi / t.sc2 - 0.5 * y * y / t.sl2,
                 t.chirp_l * y * y + 2.0 * kPi * t.tau_l * y);
  return q;
}

double inner_center(const InnerIntegrand& q) { return -q.a1.real() / (2.0 * q.a2.real()); }

// sum_k w_k exp(Q(x0 + k h)) h
Complex inner_sum(const InnerIntegrand& q, double x0, double h, std::size_t n) {
  const auto Q = [&](double x) { return (q.a2 * x + q.a1) * x + q.a0; };
  Complex term = std::exp(Q(x0));
  Complex ratio = std::exp(q.a2 * (2.0 * x0 * h + h * h) + q.a1 * h);
  const Complex growth = std::exp(2.0 * q.a2 * h * h);
  Complex acc = 0.5 * term;
  for (std::size_t k = 1; k + 1 < n; ++k) {
    term *= ratio;
    ratio *= growth;
    acc += term;
  }
  term *= ratio;
  acc += 0.5 * term;
  return acc * h;
}

// Largest |d arg / d xs| of the inner integrand over its window.
double phase_slope(const TraceSetup& t, const pulses::FrequencyGrid& out, double nu_offset,
                   double xi_half) {
  const double ys[2] = {out.start - nu_offset, out.end() - nu_offset};
  double worst = 0.0;
  for (double y : ys)
    for (double xi : {-xi_half, xi_half}) {
      const InnerIntegrand q = integrand(t, xi, y);
      const double c = inner_center(q);
      for (double x : {c - 8.0 * t.rms, c + 8.0 * t.rms})
        worst = std::max(worst, std::abs(2.0 * q.a2.imag() * x + q.a1.imag()));
    }
  return worst;
}

std::vector<double> trace_once(const TraceSetup& t, const pulses::FrequencyGrid& out,
                               double nu_offset, double sigma, std::size_t nxi, std::size_t ns) {
  std::vector<double> s(out.count);
  detail::parallel_for(out.count, [&](std::size_t j) {
    const double y = out.at(j) - nu_offset;
    const double half = 6.0 * sigma + std::abs(y);
    const double hx = 2.0 * half / static_cast<double>(nxi - 1);
    const double hs = 16.0 * t.rms / static_cast<double>(ns - 1);
    double acc = 0.0;
    for (std::size_t i = 0; i < nxi; ++i) {
      const double xi = -half + static_cast<double>(i) * hx;
      const InnerIntegrand q = integrand(t, xi, y);
      const double x0 = inner_center(q) - 8.0 * t.rms;
      const double w = (i == 0 || i + 1 == nxi) ? 0.5 : 1.0;
      acc += w * std::norm(inner_sum(q, x0, hs, ns));
    }
    s[j] = acc * hx;
  });
  return s;
}

double normalize(std::vector<double>& v) {
  const double peak = *std::max_element(v.begin(), v.end());
  if (!(peak > 0.0)) throw MeasurementError("traced spectrum is identically zero");
  for (double& x : v) x /= peak;
  return peak;
}

}  // namespace

void JsaSpec::validate() const {
  require_positive(nu0, "JSA center frequency");
  require_positive(sigma, "JSA sigma");
  require_positive(sigma_c, "JSA sigma_c");
}

double marginal_bandwidth(double sigma, double sigma_c) {
  require_positive(sigma, "sigma");
  require_positive(sigma_c, "sigma_c");
  const double r2 = (sigma_c / sigma) * (sigma_c / sigma);
  return quantities::kFwhmPerSigma * sigma * std::sqrt((r2 + 1.0) / (r2 + 2.0));
}

double entangled_sfg_bandwidth(double sigma, double sigma_c, double sigma_laser, double chirp) {
  require_positive(sigma, "sigma");
  require_positive(sigma_c, "sigma_c");
  require_positive(sigma_laser, "sigma_L");
  // Units of sigma: s = 1.
  const double c2 = (sigma_c / sigma) * (sigma_c / sigma);
  const double l2 = (sigma_laser / sigma) * (sigma_laser / sigma);
  const double a = chirp * sigma * sigma;
  const double x = 1.0 + 2.0 * l2 + c2 * (1.0 + l2);
  const double num = (l2 + c2 * (1.0 + l2)) * x;
  const double den = 2.0 * l2 * (1.0 + 2.0 * a * a * c2 * x);
  return quantities::kFwhmPerSigma * sigma * std::sqrt(num / den);
}

double heralded_effective_sigma(double sigma, double sigma_c) {
  require_positive(sigma, "sigma");
  require_positive(sigma_c, "sigma_c");
  const double r = sigma_c / sigma;
  return sigma * r / std::sqrt(1.0 + r * r);
}

pulses::PulseSpec heralded_pulse(const JsaSpec& jsa, double idler_frequency, double chirp) {
  jsa.validate();
  require_positive(idler_frequency, "idler frequency");
  const double r2 = (jsa.sigma_c / jsa.sigma) * (jsa.sigma_c / jsa.sigma);
  const double xi = idler_frequency - jsa.nu0;
  pulses::PulseSpec p;
  p.nu0 = jsa.nu0 - xi / (1.0 + r2);
  p.fwhm = quantities::kFwhmPerSigma * heralded_effective_sigma(jsa.sigma, jsa.sigma_c);
  p.chirp = chirp;
  p.validate();
  return p;
}

double purity_initial(double sigma, double sigma_c) {
  require_positive(sigma, "sigma");
  require_positive(sigma_c, "sigma_c");
  const double r = sigma_c / sigma;
  return r * std::sqrt(2.0 + r * r) / (1.0 + r * r);
}

double purity_initial_expanded(double sigma, double sigma_c) {
  require_positive(sigma, "sigma");
  require_positive(sigma_c, "sigma_c");
  const double c2 = (sigma_c / sigma) * (sigma_c / sigma);
  const double q = 1.0 + c2;
  return std::sqrt(c2 * q * q * (2.0 + c2)) / (q * q);
}

PurityReport purity_final(double sigma, double sigma_c, double sigma_laser, double chirp) {
  require_positive(sigma, "sigma");
  require_positive(sigma_c, "sigma_c");
  require_positive(sigma_laser, "sigma_L");
  if (!std::isfinite(chirp)) throw DomainError("chirp must be finite");
  // Units of sigma: s = 1, so s^2 = s^4 = 1 below.
  const double c2 = (sigma_c / sigma) * (sigma_c / sigma);
  const double l2 = (sigma_laser / sigma) * (sigma_laser / sigma);
  const double a = chirp * sigma * sigma;
  const double a2 = a * a;
  const double t = 2.0 + c2;

  const double num = c2 * t + (1.0 + c2) * (t + 4.0 * a2 * c2) * l2 + 4.0 * a2 * c2 * t * l2 * l2;
  const double b = c2 * t + (1.0 + c2) * (t + 4.0 * a2 * c2) * l2 + 4.0 * a2 * c2 * t * l2 * l2;
  const double c = c2 * l2 + (1.0 + 4.0 * a2 * l2 * (c2 + l2)) +
                   (2.0 * l2 + c2 * (1.0 + 4.0 * a2 * l2 * l2));

  PurityReport r;
  r.purity_initial = purity_initial(sigma, sigma_c);
  r.purity_final = num / (std::sqrt(1.0 + c2) * std::sqrt(b) * std::sqrt(c));
  // P_f^2 - P_i^2 in closed form, divided by P_f + P_i.
  const double diff_sq = (t + 4.0 * a2 * c2) * l2 / ((1.0 + c2) * (1.0 + c2) * c);
  r.purity_difference = diff_sq / (r.purity_final + r.purity_initial);
  if (!std::isfinite(r.purity_final) || !std::isfinite(r.purity_difference))
    throw DomainError("purity evaluation overflowed for these parameters");
  r.renyi2_initial = -std::log(r.purity_initial);
  r.renyi2_final = -std::log(r.purity_final);
  return r;
}

TracedSpectrum traced_spectrum(const JsaSpec& jsa, const pulses::PulseSpec& laser,
                               double chirp_signal, const pulses::FrequencyGrid& out_grid,
                               const TraceOptions& opts) {
  jsa.validate();
  laser.validate();
  out_grid.validate();
  if (!std::isfinite(chirp_signal)) throw DomainError("signal chirp must be finite");
  if (opts.idler_points < 16 || opts.signal_points < 16)
    throw DomainError("quadrature needs at least 16 points per axis");

  TraceSetup t;
  t.s2 = jsa.sigma * jsa.sigma;
  t.sc2 = jsa.sigma_c * jsa.sigma_c;
  const double sl = sigma_of(laser);
  t.sl2 = sl * sl;
  t.chirp_s = chirp_signal;
  t.chirp_l = laser.chirp;
  t.tau_l = laser.delay;
  t.rms = 1.0 / std::sqrt(1.0 / t.s2 + 1.0 / t.sc2 + 1.0 / t.sl2);
  const double nu_offset = jsa.nu0 + laser.nu0;

  // Raise the signal-axis count until the integrand phase is resolved.
  const double y_extent = std::max(std::abs(out_grid.start - nu_offset),
                                   std::abs(out_grid.end() - nu_offset));
  const double slope = phase_slope(t, out_grid, nu_offset, 6.0 * jsa.sigma + y_extent);
  std::size_t ns = opts.signal_points;
  while (slope * 16.0 * t.rms / static_cast<double>(ns - 1) >= kPi / 4.0) {
    if (ns >= kMaxSignalPoints) {
      std::ostringstream os;
      os << "signal-axis quadrature cannot resolve the integrand phase (" << slope
         << " rad/Hz) within " << kMaxSignalPoints << " points";
      throw GridError(os.str());
    }
    ns *= 2;
  }

  TracedSpectrum out;
  out.grid = out_grid;
  out.intensity = trace_once(t, out_grid, nu_offset, jsa.sigma, opts.idler_points, ns);
  normalize(out.intensity);

  const std::size_t band = std::max<std::size_t>(2, out_grid.count / 32);
  double total = 0.0, edge = 0.0;
  for (std::size_t j = 0; j < out_grid.count; ++j) {
    total += out.intensity[j];
    if (j < band || j + band >= out_grid.count) edge += out.intensity[j];
  }
  out.edge_energy_fraction = edge / total;
  if (out.edge_energy_fraction > 1e-6) {
    std::ostringstream os;
    os << "output window clips the traced spectrum: " << out.edge_energy_fraction
       << " of the energy sits in the edge bands";
    throw WindowError(os.str(), out.edge_energy_fraction);
  }

  if (opts.check_convergence) {
    auto fine = trace_once(t, out_grid, nu_offset, jsa.sigma, 2 * opts.idler_points, 2 * ns);
    normalize(fine);
    for (std::size_t j = 0; j < fine.size(); ++j)
      out.convergence_delta =
          std::max(out.convergence_delta, std::abs(fine[j] - out.intensity[j]));
    if (out.convergence_delta > kMaxConvergenceDelta) {
      std::ostringstream os;
      os << "traced spectrum not converged: doubling the quadrature changed it by "
         << out.convergence_delta;
      throw GridError(os.str());
    }
  }
  return out;
}

double purity_quadrature(double sigma, double sigma_c, double sigma_laser, double chirp,
                         std::size_t points) {
  require_positive(sigma, "sigma");
  require_positive(sigma_c, "sigma_c");
  require_positive(sigma_laser, "sigma_L");
  if (!std::isfinite(chirp)) throw DomainError("chirp must be finite");
  if (points < 16) throw DomainError("purity quadrature needs at least 16 points per axis");

  TraceSetup t;
  t.s2 = sigma * sigma;
  t.sc2 = sigma_c * sigma_c;
  t.sl2 = sigma_laser * sigma_laser;
  t.chirp_s = chirp;
  t.chirp_l = -chirp;
  t.tau_l = 0.0;
  t.rms = 1.0 / std::sqrt(1.0 / t.s2 + 1.0 / t.sc2 + 1.0 / t.sl2);

  const double xi_half = 8.0 * sigma;
  // The chirp narrows the output well below the unchirped convolution width.
  const double y_half =
      std::min(10.0 * std::sqrt(t.s2 + t.sl2),
               6.0 * entangled_sfg_bandwidth(sigma, sigma_c, sigma_laser, chirp));
  const std::size_t n = points;
  const double hx = 2.0 * xi_half / static_cast<double>(n - 1);
  const double hy = 2.0 * y_half / static_cast<double>(n - 1);

  std::size_t ns = 256;
  const pulses::FrequencyGrid ygrid{-y_half, hy, n};
  const double slope = phase_slope(t, ygrid, 0.0, xi_half);
  while (slope * 16.0 * t.rms / static_cast<double>(ns - 1) >= kPi / 4.0) {
    if (ns >= kMaxSignalPoints) throw GridError("purity quadrature cannot resolve the phase");
    ns *= 2;
  }
  const double hs = 16.0 * t.rms / static_cast<double>(ns - 1);

  // G(xi, y): rows are idler samples, columns output samples.
  Eigen::MatrixXcd g(n, n);
  detail::parallel_for(n, [&](std::size_t col) {
    const double y = ygrid.at(col);
    for (std::size_t row = 0; row < n; ++row) {
      const double xi = -xi_half + static_cast<double>(row) * hx;
      const InnerIntegrand q = integrand(t, xi, y);
      g(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) =
          inner_sum(q, inner_center(q) - 8.0 * t.rms, hs, ns);
    }
  });
  // rho(y, y') = sum_xi G G* hx; purity = sum |rho|^2 hy^2 / (tr rho)^2.
  const Eigen::MatrixXcd rho = (g.adjoint() * g) * hx;
  const double trace = rho.diagonal().real().sum() * hy;
  return rho.squaredNorm() * hy * hy / (trace * trace);
}

pulses::FrequencyGrid default_traced_grid(const JsaSpec& jsa, const pulses::PulseSpec& laser,
                                          double chirp_signal, std::size_t points,
                                          double span_fwhms) {
  jsa.validate();
  laser.validate();
  if (points < pulses::kMinGridPoints) throw DomainError("output grid needs at least 16 points");
  if (!(span_fwhms > 0.0)) throw DomainError("output span must be positive");
  const double sl = sigma_of(laser);
  const double dp = marginal_bandwidth(jsa.sigma, jsa.sigma_c);
  const double unchirped = std::hypot(dp, laser.fwhm);
  const double width =
      std::min(unchirped, entangled_sfg_bandwidth(jsa.sigma, jsa.sigma_c, sl, chirp_signal));
  double center = jsa.nu0 + laser.nu0;
  if (laser.delay != 0.0) {
    if (chirp_signal == 0.0) throw DomainError("delay shift undefined for zero chirp");
    center += kPi * laser.delay / chirp_signal;
  }
  const double span = span_fwhms * width;
  return {center - 0.5 * span, span / static_cast<double>(points - 1), points};
}

}  // namespace chirpsfg::entanglement
