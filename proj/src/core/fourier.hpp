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

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace chirpsfg::detail {

using Complex = std::complex<double>;

inline bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }
std::size_t next_power_of_two(std::size_t n);

/// Unnormalized DFT in place: X_m = sum_k x_k exp(sign * 2 pi i k m / N),
/// sign = -1 (forward) or +1 (backward).
void dft_inplace(std::vector<Complex>& data, int sign);

/// DFT with both index axes centered: sample k represents offset k - N/2.
/// N must be a multiple of four.
void centered_dft_inplace(std::vector<Complex>& data, int sign);

}  // namespace chirpsfg::detail
