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

// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "chirpsfg/chirpsfg.h"

namespace {

struct Tally {
  int rows = 0;
  int failed = 0;
  std::vector<std::string> details;
};

const char* relation(csfg_comparison c) {
  switch (c) {
    case CSFG_CMP_AT_MOST: return "<=";
    case CSFG_CMP_AT_LEAST: return ">=";
    default: return "within";
  }
}

std::string describe(const csfg_check_row& r) {
  char buf[256];
  if (r.comparison == CSFG_CMP_WITHIN)
    std::snprintf(buf, sizeof buf, "%s=%.6g %s vs %.6g +/- %.3g", r.name, r.computed, r.unit,
                  r.reference, r.tolerance);
  else
    std::snprintf(buf, sizeof buf, "%s=%.6g %s %s %.6g", r.name, r.computed, r.unit,
                  relation(r.comparison), r.reference);
  return buf;
}

}  // namespace

int main() {
  csfg_report* report = nullptr;
  const csfg_status st = csfg_reproduce_run(1, 1, &report);
  if (st != CSFG_OK) {
    std::printf("acceptance run failed: %s (%s)\n", csfg_status_string(st),
                csfg_last_error_message());
    return 1;
  }
  std::map<int, Tally> tallies;
  for (int c = 1; c <= 12; ++c) tallies[c];
  const std::size_t n = csfg_report_size(report);
  for (std::size_t i = 0; i < n; ++i) {
    csfg_check_row row{};
    if (csfg_report_row(report, i, &row) != CSFG_OK || row.criterion < 1 || row.criterion > 12)
      continue;
    Tally& t = tallies[row.criterion];
    ++t.rows;
    if (!row.pass) ++t.failed;
    t.details.push_back(describe(row) + (row.pass ? "" : " [fail]"));
  }
  csfg_report_free(report);

  int failures = 0;
  for (const auto& [c, t] : tallies) {
    const bool pass = t.rows > 0 && t.failed == 0;
    if (!pass) ++failures;
    std::string detail;
    for (const auto& d : t.details) detail += (detail.empty() ? "" : "; ") + d;
    if (t.rows == 0) detail = "no checks recorded";
    std::printf("criterion %2d: %s %s (%s)\n", c, pass ? "PASS" : "FAIL",
                csfg_criterion_title(c), detail.c_str());
  }
  std::printf("%d/12 criteria passed\n", 12 - failures);
  return failures == 0 ? 0 : 1;
}
