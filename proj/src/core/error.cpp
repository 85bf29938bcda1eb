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

#include "chirpsfg/error.hpp"

namespace chirpsfg {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Grid: return "grid";
    case ErrorKind::Window: return "window";
    case ErrorKind::Measurement: return "measurement";
    case ErrorKind::Fit: return "fit";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

}  // namespace chirpsfg
