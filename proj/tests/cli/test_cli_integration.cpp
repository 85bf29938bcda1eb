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
#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace fs = std::filesystem;
using Json = nlohmann::json;

namespace {

struct Outcome {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / ("chirpsfg_cli_" + std::string(info->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  Outcome run(const std::string& args, const std::string& env = "") const {
    const fs::path out = dir_ / "stdout.txt", err = dir_ / "stderr.txt";
    const std::string cmd = env + " \"" CHIRPSFG_CLI_PATH "\" " + args + " >\"" + out.string() +
                            "\" 2>\"" + err.string() + "\"";
    const int status = std::system(cmd.c_str());
    Outcome r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
  }

  std::string config(const std::string& name) const {
    return std::string(CHIRPSFG_CONFIG_DIR) + "/" + name;
  }

  fs::path write_config(const std::string& name, const std::string& text) const {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p;
  }

  Json summary(const std::string& sub, const std::string& file = "summary.json") const {
    return Json::parse(slurp(dir_ / sub / file));
  }

  fs::path dir_;
};

const char* kReferenceWithNoise = R"({
  "photon": {"wavelength": "811.11 nm", "fwhm": "1740 GHz", "chirp": "25.8e6 fs2"},
  "laser": {"wavelength": "787.62 nm", "fwhm": "4770 GHz", "chirp": "-25.8e6 fs2"},
  "grid": {"output_points": 512},
  "noise": {"relative": 0.02},
  "seed": 5
})";

}  // namespace

TEST_F(CliTest, UpconvertReferenceScenario) {
  const Outcome r = run("upconvert --config " + config("reference_scenario.json") + " --out " +
                    (dir_ / "up").string());
  ASSERT_EQ(r.code, 0) << r.err;
  const Json s = summary("up");
  EXPECT_EQ(s["schema_version"], 1);
  EXPECT_NEAR(s["fwhm_ghz"].get<double>(), 32.9, 0.1);
  EXPECT_NEAR(s["center_nm"].get<double>(), 399.60, 0.05);
  EXPECT_TRUE(s.contains("config"));
  for (const char* k : {"fwhm_hz", "center_frequency_hz"}) {
    EXPECT_TRUE(s["deltas"][k].contains("absolute"));
    EXPECT_TRUE(s["deltas"][k].contains("relative"));
  }
  EXPECT_LT(std::abs(s["deltas"]["fwhm_hz"]["relative"].get<double>()), 0.005);

  const std::string csv = slurp(dir_ / "up" / "spectrum.csv");
  EXPECT_EQ(csv.rfind("frequency_hz,intensity\n", 0), 0u);
  EXPECT_EQ(csv.find('\r'), std::string::npos);
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);
  double peak = 0.0;
  std::size_t rows = 0;
  while (std::getline(lines, line)) {
    const auto comma = line.find(',');
    ASSERT_NE(comma, std::string::npos);
    peak = std::max(peak, std::stod(line.substr(comma + 1)));
    ++rows;
  }
  EXPECT_EQ(peak, 1.0);
  EXPECT_EQ(rows, 4096u);
  EXPECT_NE(r.out.find("GHz"), std::string::npos);
}

TEST_F(CliTest, UnchirpedDelayIsValidationError) {
  const Outcome r = run("upconvert --config " + config("unchirped_delay.json") + " --out " +
                    (dir_ / "x").string());
  EXPECT_EQ(r.code, 2);
  const Json e = Json::parse(r.err);
  EXPECT_NE(e["error"]["message"].get<std::string>().find("delay"), std::string::npos);
  EXPECT_EQ(e["error"]["exit_code"], 2);
  EXPECT_FALSE(fs::exists(dir_ / "x" / "summary.json"));
}

TEST_F(CliTest, CoarseGridIsNumericalGuard) {
  const Outcome r = run("upconvert --config " + config("coarse_grid.json") + " --out " +
                    (dir_ / "x").string());
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(Json::parse(r.err)["error"]["kind"], "grid");
}

TEST_F(CliTest, MissingOrBrokenConfigIsValidationError) {
  EXPECT_EQ(run("upconvert --config " + (dir_ / "nope.json").string()).code, 2);
  EXPECT_EQ(run("upconvert").code, 2);
  const auto bad = write_config("bad.json", "{ not json");
  EXPECT_EQ(run("upconvert --config " + bad.string()).code, 2);
  const auto unknown = write_config("unknown.json", R"({"photon": {"wavelength": "800 nm",
      "fwhm": "1 THz", "colour": "red"}, "laser": {"wavelength": "800 nm", "fwhm": "1 THz"}})");
  const Outcome r = run("upconvert --config " + unknown.string());
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("colour"), std::string::npos);
}

TEST_F(CliTest, BadFlagsAreValidationErrors) {
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("upconvert --grid-points 3 --config " + config("reference_scenario.json")).code,
            2);
  EXPECT_EQ(run("scan sideways --config " + config("delay_scan.json")).code, 2);
}

TEST_F(CliTest, JsonFlagPrintsOnlyTheSummary) {
  const Outcome r = run("--json upconvert --config " + config("reference_scenario.json") +
                    " --out " + (dir_ / "j").string());
  ASSERT_EQ(r.code, 0) << r.err;
  const Json printed = Json::parse(r.out);
  EXPECT_EQ(printed, summary("j"));
}

TEST_F(CliTest, OutputsAreDeterministic) {
  const auto cfg = write_config("noisy.json", kReferenceWithNoise);
  const std::string a = (dir_ / "a").string(), b = (dir_ / "b").string();
  ASSERT_EQ(run("upconvert --config " + cfg.string() + " --out " + a).code, 0);
  ASSERT_EQ(run("upconvert --config " + cfg.string() + " --out " + b,
                "CHIRPSFG_THREADS=1")
                .code,
            0);
  EXPECT_EQ(slurp(dir_ / "a" / "spectrum.csv"), slurp(dir_ / "b" / "spectrum.csv"));
  EXPECT_EQ(slurp(dir_ / "a" / "summary.json"), slurp(dir_ / "b" / "summary.json"));
}

TEST_F(CliTest, SeedChangesNoiseOnly) {
  const auto cfg = write_config("noisy.json", kReferenceWithNoise);
  ASSERT_EQ(run("upconvert --config " + cfg.string() + " --out " + (dir_ / "a").string()).code,
            0);
  ASSERT_EQ(run("upconvert --seed 6 --config " + cfg.string() + " --out " +
                (dir_ / "b").string())
                .code,
            0);
  EXPECT_NE(slurp(dir_ / "a" / "spectrum.csv"), slurp(dir_ / "b" / "spectrum.csv"));
  EXPECT_EQ(summary("b")["config"]["seed"], 6);
  EXPECT_EQ(summary("a")["fwhm_ghz"], summary("b")["fwhm_ghz"]);
}

TEST_F(CliTest, ConfigEchoReproducesSummary) {
  const auto cfg = write_config("noisy.json", kReferenceWithNoise);
  ASSERT_EQ(run("upconvert --config " + cfg.string() + " --out " + (dir_ / "a").string()).code,
            0);
  const auto echo = write_config("echo.json", summary("a")["config"].dump());
  ASSERT_EQ(run("upconvert --config " + echo.string() + " --out " + (dir_ / "b").string()).code,
            0);
  EXPECT_EQ(slurp(dir_ / "a" / "summary.json"), slurp(dir_ / "b" / "summary.json"));
  EXPECT_EQ(slurp(dir_ / "a" / "spectrum.csv"), slurp(dir_ / "b" / "spectrum.csv"));
}

TEST_F(CliTest, DelayScanSlope) {
  const Outcome r = run("scan --config " + config("delay_scan.json") + " --out " +
                    (dir_ / "s").string());
  ASSERT_EQ(r.code, 0) << r.err;
  const Json s = summary("s");
  EXPECT_EQ(s["mode"], "delay");
  EXPECT_NEAR(s["fit"]["slope"].get<double>() / -0.0648, 1.0, 0.01);
  EXPECT_GT(s["fit"]["slope_sigma"].get<double>(), 0.0);
  const std::string csv = slurp(dir_ / "s" / "scan.csv");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 8);
}

TEST_F(CliTest, RepRateScanSlope) {
  const Outcome r = run("scan --config " + config("reprate_scan.json") + " --out " +
                    (dir_ / "s").string());
  ASSERT_EQ(r.code, 0) << r.err;
  const Json s = summary("s");
  EXPECT_NEAR(s["fit"]["slope"].get<double>(), 0.120, 0.0015);
  EXPECT_NEAR(s["reprate_sensitivity_nm_per_khz"].get<double>(), 0.120, 0.0005);
}

TEST_F(CliTest, ChirpScanFollowsInverseLaw) {
  const Outcome r = run("scan --config " + config("chirp_scan.json") + " --out " +
                    (dir_ / "s").string());
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_LT(summary("s")["fwhm_times_chirp_max_relative_deviation"].get<double>(), 0.005);
}

TEST_F(CliTest, ScanRangeFlagsAndMinimumPoints) {
  const std::string base = "scan delay --config " + config("reference_scenario.json") +
                           " --out " + (dir_ / "s").string();
  EXPECT_EQ(run(base + " --start -2ps --stop 2ps --count 2").code, 2);
  EXPECT_EQ(run(base).code, 2);
  const Outcome ok = run(base + " --start -2ps --stop 2ps --count 3");
  EXPECT_EQ(ok.code, 0) << ok.err;
  EXPECT_EQ(summary("s")["fit"]["points"], 3);
}

TEST_F(CliTest, EntangledHeraldAndPurity) {
  const std::string cfg = config("entangled.json");
  const Outcome e = run("entangled --config " + cfg + " --out " + (dir_ / "e").string());
  ASSERT_EQ(e.code, 0) << e.err;
  const Json es = summary("e");
  EXPECT_LT(std::abs(es["deltas"]["fwhm_hz"]["relative"].get<double>()), 0.01);
  EXPECT_GE(es["purity"]["purity_difference"].get<double>(), 0.0);

  const Outcome h = run("herald --config " + cfg + " --out " + (dir_ / "h").string());
  ASSERT_EQ(h.code, 0) << h.err;
  EXPECT_LT(std::abs(summary("h")["deltas"]["fwhm_hz"]["relative"].get<double>()), 0.005);

  const Outcome p = run("purity --quadrature 64 --config " + cfg + " --out " + (dir_ / "p").string());
  ASSERT_EQ(p.code, 0) << p.err;
  EXPECT_LT(std::abs(summary("p")["deltas"]["purity_final"]["absolute"].get<double>()), 1e-4);

  EXPECT_EQ(run("purity --config " + config("reference_scenario.json")).code, 2);
}

TEST_F(CliTest, AnalyzeDeconvolve) {
  const Outcome r = run("analyze deconvolve --measured '74 GHz' --measured-sigma '4 GHz' "
                    "--resolution '60 GHz' --resolution-sigma '4 GHz' --out " +
                    (dir_ / "d").string());
  ASSERT_EQ(r.code, 0) << r.err;
  const Json s = summary("d");
  EXPECT_NEAR(s["deconvolved"]["fwhm_ghz"].get<double>(), 43, 0.5);
  EXPECT_NEAR(s["deconvolved"]["sigma_ghz"].get<double>(), 9, 0.5);
  const Outcome fit = run("analyze deconvolve --measured '74 GHz' --fit-sigma '1 GHz' "
                      "--resolution '60 GHz' --resolution-sigma '4 GHz' --out " +
                      (dir_ / "f").string());
  ASSERT_EQ(fit.code, 0) << fit.err;
  EXPECT_NEAR(summary("f")["measured"]["sigma_hz"].get<double>() / 1e9, 4.12, 0.005);
  EXPECT_EQ(run("analyze deconvolve --measured '50 GHz' --resolution '60 GHz'").code, 2);
}

TEST_F(CliTest, AnalyzeFit) {
  std::ostringstream csv;
  csv << "wavelength_nm,counts\n";
  for (int i = 0; i <= 200; ++i) {
    const double x = 399.0 + 0.007 * i;
    const double u = (x - 399.7) / 0.0395;
    csv << x << "," << 1000 * std::exp(-4 * std::log(2.0) * u * u) + 5 << "\n";
  }
  const auto input = write_config("spectrum.csv", csv.str());
  const Outcome r = run("analyze fit --input " + input.string() + " --resolution '0.032 nm' --out " +
                    (dir_ / "a").string());
  ASSERT_EQ(r.code, 0) << r.err;
  const Json s = summary("a");
  EXPECT_NEAR(s["fit"]["center_wavelength_nm"].get<double>(), 399.7, 1e-3);
  EXPECT_NEAR(s["fit"]["fwhm_wavelength_nm"].get<double>(), 0.0395, 2e-4);
  EXPECT_LT(s["deconvolved"]["fwhm_hz"].get<double>(), s["fit"]["fwhm_hz"].get<double>());
  EXPECT_EQ(run("analyze fit --input " + (dir_ / "missing.csv").string()).code, 2);
}

TEST_F(CliTest, ReproduceWithoutSweep) {
  const Outcome r = run("reproduce-paper --skip-sweep --out " + (dir_ / "r").string());
  ASSERT_EQ(r.code, 0) << r.out << r.err;
  const Json s = summary("r", "reproduce.json");
  EXPECT_TRUE(s["all_pass"].get<bool>());
  EXPECT_EQ(s["schema_version"], 1);
  EXPECT_GT(s["rows"].size(), 12u);
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
}
