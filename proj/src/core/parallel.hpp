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

#include <cstddef>
#include <functional>

namespace chirpsfg::detail {

/// Worker count: CHIRPSFG_THREADS if set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
unsigned max_threads();

/// Runs body(i) for i in [0, n). Indices are handed out in contiguous blocks,
/// so results written to slot i are independent of the thread count. The
/// first exception thrown by any body is rethrown after all workers join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace chirpsfg::detail
