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

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <limits>
#include <vector>

#include "io.hpp"

namespace cli = chirpsfg::cli;
namespace fs = std::filesystem;

TEST(CliIo, ShortestRoundTripDoubles) {
  EXPECT_EQ(cli::format_double(0.1), "0.1");
  EXPECT_EQ(cli::format_double(1.0), "1");
  EXPECT_EQ(cli::format_double(750238480978307.8), "750238480978307.8");
  for (double v : {1.0 / 3.0, 2.58e-23, std::numeric_limits<double>::denorm_min(), -7e300}) {
    EXPECT_EQ(std::strtod(cli::format_double(v).c_str(), nullptr), v);
  }
}

TEST(CliIo, SpectrumCsvLayout) {
  const std::vector<double> f{1.0, 2.0, 3.0}, y{0.5, 2.0, 1.0};
  EXPECT_EQ(cli::spectrum_csv(f, y), "frequency_hz,intensity\n1,0.25\n2,1\n3,0.5\n");
  const std::vector<double> shorter{1.0};
  EXPECT_THROW(cli::spectrum_csv(f, shorter), cli::IoError);
}

TEST(CliIo, AtomicWriteReplacesAndLeavesNoTemp) {
  const fs::path dir = fs::temp_directory_path() / "chirpsfg_io_test";
  fs::remove_all(dir);
  cli::ensure_directory((dir / "a" / "b").string());
  const std::string path = cli::join_path((dir / "a" / "b").string(), "out.txt");
  cli::write_atomic(path, "first\n");
  cli::write_atomic(path, "second\n");
  EXPECT_EQ(cli::read_text_file(path), "second\n");
  std::size_t entries = 0;
  for (const auto& e : fs::directory_iterator(dir / "a" / "b")) {
    (void)e;
    ++entries;
  }
  EXPECT_EQ(entries, 1u);
  EXPECT_THROW(cli::read_text_file((dir / "missing").string()), cli::IoError);
  fs::remove_all(dir);
}

TEST(CliIo, JsonDumpEndsWithNewline) {
  const auto s = cli::dump_json(cli::Json{{"schema_version", 1}});
  EXPECT_EQ(s.back(), '\n');
  EXPECT_EQ(s, "{\n  \"schema_version\": 1\n}\n");
}
