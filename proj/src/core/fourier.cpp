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

#include "fourier.hpp"

#include <fftw3.h>

#include <mutex>
#include <stdexcept>

namespace chirpsfg::detail {

namespace {
// FFTW's planner is not reentrant; execution of a finished plan is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

std::size_t next_power_of_two(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

void dft_inplace(std::vector<Complex>& data, int sign) {
  if (data.empty()) return;
  auto* buf = reinterpret_cast<fftw_complex*>(data.data());
  fftw_plan plan;
  {
    std::lock_guard lock(planner_mutex());
    plan = fftw_plan_dft_1d(static_cast<int>(data.size()), buf, buf,
                            sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  if (plan == nullptr) throw std::runtime_error("fftw planning failed");
  fftw_execute(plan);
  std::lock_guard lock(planner_mutex());
  fftw_destroy_plan(plan);
}

void centered_dft_inplace(std::vector<Complex>& data, int sign) {
  const std::size_t n = data.size();
  if (n % 4 != 0) throw std::invalid_argument("centered DFT needs a multiple of four samples");
  // exp(s 2 pi i (k - N/2)(m - N/2) / N) = exp(s 2 pi i k m / N) (-1)^k (-1)^m
  // when N/2 is even.
  for (std::size_t k = 1; k < n; k += 2) data[k] = -data[k];
  dft_inplace(data, sign);
  for (std::size_t m = 1; m < n; m += 2) data[m] = -data[m];
}

}  // namespace chirpsfg::detail
