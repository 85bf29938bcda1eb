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

#include "config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

namespace chirpsfg::cli {

namespace {

struct Unit {
  const char* name;
  double scale;
};

// Longest names first so that "fs2" is not read as "fs".
constexpr Unit kFrequencyUnits[] = {{"PHz", 1e15}, {"THz", 1e12}, {"GHz", 1e9},
                                    {"MHz", 1e6},  {"kHz", 1e3},  {"Hz", 1.0}};
constexpr Unit kTimeUnits[] = {{"ms", 1e-3}, {"us", 1e-6},  {"ns", 1e-9},
                               {"ps", 1e-12}, {"fs", 1e-15}, {"s", 1.0}};
constexpr Unit kLengthUnits[] = {{"mm", 1e-3}, {"um", 1e-6}, {"nm", 1e-9},
                                 {"pm", 1e-12}, {"m", 1.0}};
constexpr Unit kChirpUnits[] = {{"fs^2", 1e-30}, {"ps^2", 1e-24}, {"fs2", 1e-30},
                                {"ps2", 1e-24},  {"s^2", 1.0},    {"s2", 1.0}};

template <std::size_t N>
std::optional<double> lookup(const Unit (&table)[N], std::string_view u) {
  for (const Unit& e : table)
    if (u == e.name) return e.scale;
  return std::nullopt;
}

std::optional<double> unit_scale(Dimension dim, std::string_view u) {
  switch (dim) {
    case Dimension::Frequency: return lookup(kFrequencyUnits, u);
    case Dimension::Time: return lookup(kTimeUnits, u);
    case Dimension::Length: return lookup(kLengthUnits, u);
    case Dimension::Chirp: return lookup(kChirpUnits, u);
    case Dimension::Dimensionless: return u.empty() ? std::optional<double>(1.0) : std::nullopt;
  }
  return std::nullopt;
}

const char* dimension_name(Dimension dim) {
  switch (dim) {
    case Dimension::Frequency: return "frequency (Hz, kHz, MHz, GHz, THz)";
    case Dimension::Time: return "time (s, ms, us, ns, ps, fs)";
    case Dimension::Length: return "length (m, mm, um, nm, pm)";
    case Dimension::Chirp: return "chirp (s2, ps2, fs2)";
    case Dimension::Dimensionless: return "dimensionless";
  }
  return "";
}

// Splits "25.8e6 fs2" into 25.8e6 and "fs2".
std::pair<double, std::string> split_quantity(const std::string& text, const std::string& field) {
  std::string_view s = text;
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc())
    throw ConfigError(field + ": cannot read a number from '" + text + "'");
  std::string_view unit(ptr, static_cast<std::size_t>(s.data() + s.size() - ptr));
  while (!unit.empty() && unit.front() == ' ') unit.remove_prefix(1);
  while (!unit.empty() && unit.back() == ' ') unit.remove_suffix(1);
  return {v, std::string(unit)};
}

void check_keys(const Json& obj, const std::string& where, std::set<std::string> allowed) {
  if (!obj.is_object()) throw ConfigError(where + " must be a JSON object");
  for (const auto& [k, v] : obj.items())
    if (!allowed.count(k)) throw ConfigError(where + ": unknown key '" + k + "'");
}

std::size_t parse_count(const Json& v, const std::string& field) {
  if (!v.is_number_integer() || v.get<long long>() < 0)
    throw ConfigError(field + " must be a non-negative integer");
  return static_cast<std::size_t>(v.get<long long>());
}

double wavelength_of(double nu) {
  double wl = 0.0;
  if (csfg_frequency_to_wavelength(nu, &wl) != CSFG_OK)
    throw ConfigError(csfg_last_error_message());
  return wl;
}

// A spectral width in frequency units, or in length units relative to the
// center frequency `nu0`.
double parse_width(const Json& v, double nu0, const std::string& field) {
  if (v.is_string()) {
    const auto [num, unit] = split_quantity(v.get<std::string>(), field);
    if (unit_scale(Dimension::Length, unit)) {
      const double width_m = parse_quantity(v, Dimension::Length, field);
      double hz = 0.0;
      if (csfg_bandwidth_wl_to_freq(width_m, wavelength_of(nu0), &hz) != CSFG_OK)
        throw ConfigError(field + ": " + csfg_last_error_message());
      return hz;
    }
  }
  return parse_quantity(v, Dimension::Frequency, field);
}

csfg_pulse parse_pulse(const Json& obj, const std::string& where) {
  check_keys(obj, where, {"center", "frequency", "wavelength", "fwhm", "chirp", "delay"});
  csfg_pulse p{};
  const int centers = static_cast<int>(obj.contains("center")) +
                      static_cast<int>(obj.contains("frequency")) +
                      static_cast<int>(obj.contains("wavelength"));
  if (centers != 1)
    throw ConfigError(where + ": give exactly one of center, frequency, wavelength");
  if (obj.contains("center")) p.nu0 = parse_center(obj["center"], where + ".center");
  if (obj.contains("frequency"))
    p.nu0 = parse_quantity(obj["frequency"], Dimension::Frequency, where + ".frequency");
  if (obj.contains("wavelength")) {
    const double wl = parse_quantity(obj["wavelength"], Dimension::Length, where + ".wavelength");
    if (csfg_wavelength_to_frequency(wl, &p.nu0) != CSFG_OK)
      throw ConfigError(where + ".wavelength: " + csfg_last_error_message());
  }
  if (!obj.contains("fwhm")) throw ConfigError(where + ": missing fwhm");
  p.fwhm = parse_width(obj["fwhm"], p.nu0, where + ".fwhm");
  if (obj.contains("chirp")) p.chirp = parse_quantity(obj["chirp"], Dimension::Chirp, where + ".chirp");
  if (obj.contains("delay")) p.delay = parse_quantity(obj["delay"], Dimension::Time, where + ".delay");
  if (csfg_pulse_validate(&p) != CSFG_OK)
    throw ConfigError(where + ": " + csfg_last_error_message());
  return p;
}

JsaModel parse_jsa(const Json& obj) {
  check_keys(obj, "jsa", {"center", "sigma", "sigma_c", "chirp", "idler"});
  JsaModel m;
  if (!obj.contains("center") || !obj.contains("sigma") || !obj.contains("sigma_c"))
    throw ConfigError("jsa: center, sigma and sigma_c are required");
  m.jsa.nu0 = parse_center(obj["center"], "jsa.center");
  m.jsa.sigma = parse_quantity(obj["sigma"], Dimension::Frequency, "jsa.sigma");
  m.jsa.sigma_c = parse_quantity(obj["sigma_c"], Dimension::Frequency, "jsa.sigma_c");
  if (obj.contains("chirp")) m.chirp = parse_quantity(obj["chirp"], Dimension::Chirp, "jsa.chirp");
  if (obj.contains("idler")) m.idler_frequency = parse_center(obj["idler"], "jsa.idler");
  if (csfg_jsa_validate(&m.jsa) != CSFG_OK)
    throw ConfigError(std::string("jsa: ") + csfg_last_error_message());
  return m;
}

Json pulse_echo(const csfg_pulse& p) {
  Json j;
  j["frequency"] = p.nu0;
  j["fwhm"] = p.fwhm;
  j["chirp"] = p.chirp;
  j["delay"] = p.delay;
  return j;
}

}  // namespace

double parse_quantity(const Json& value, Dimension dim, const std::string& field) {
  double v = 0.0;
  if (value.is_number()) {
    v = value.get<double>();
  } else if (value.is_string()) {
    const auto [num, unit] = split_quantity(value.get<std::string>(), field);
    const auto scale = unit_scale(dim, unit);
    if (!scale)
      throw ConfigError(field + ": unit '" + unit + "' is not a " + dimension_name(dim) +
                        " unit");
    v = num * *scale;
  } else {
    throw ConfigError(field + " must be a number or a string with a unit");
  }
  if (!std::isfinite(v)) throw ConfigError(field + " must be finite");
  return v;
}

double parse_center(const Json& value, const std::string& field) {
  if (value.is_string()) {
    const auto [num, unit] = split_quantity(value.get<std::string>(), field);
    if (unit_scale(Dimension::Length, unit)) {
      double nu = 0.0;
      if (csfg_wavelength_to_frequency(parse_quantity(value, Dimension::Length, field), &nu) !=
          CSFG_OK)
        throw ConfigError(field + ": " + csfg_last_error_message());
      return nu;
    }
    if (unit.empty()) throw ConfigError(field + ": a center needs a frequency or length unit");
  }
  const double nu = parse_quantity(value, Dimension::Frequency, field);
  if (!(nu > 0.0)) throw ConfigError(field + " must be positive");
  return nu;
}

std::vector<double> parse_series(const Json& value, Dimension dim, const std::string& field) {
  std::vector<double> out;
  if (value.is_array()) {
    for (std::size_t i = 0; i < value.size(); ++i)
      out.push_back(parse_quantity(value[i], dim, field + "[" + std::to_string(i) + "]"));
    return out;
  }
  check_keys(value, field, {"start", "stop", "count"});
  if (!value.contains("start") || !value.contains("stop") || !value.contains("count"))
    throw ConfigError(field + ": a range needs start, stop and count");
  const double a = parse_quantity(value["start"], dim, field + ".start");
  const double b = parse_quantity(value["stop"], dim, field + ".stop");
  const std::size_t n = parse_count(value["count"], field + ".count");
  if (n == 0) return out;
  if (n == 1) return {a};
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1));
  return out;
}

Scenario parse_scenario(const Json& doc) {
  check_keys(doc, "config", {"photon", "jsa", "laser", "delays", "scan", "grid", "timing",
                             "noise", "seed", "output"});
  Scenario s;
  if (doc.contains("photon") == doc.contains("jsa"))
    throw ConfigError("config: give exactly one photon model, either photon or jsa");
  if (doc.contains("photon")) s.photon = parse_pulse(doc["photon"], "photon");
  if (doc.contains("jsa")) s.jsa = parse_jsa(doc["jsa"]);
  if (doc.contains("laser")) s.laser = parse_pulse(doc["laser"], "laser");
  if (doc.contains("delays")) s.delays = parse_series(doc["delays"], Dimension::Time, "delays");

  if (doc.contains("scan")) {
    const Json& sc = doc["scan"];
    check_keys(sc, "scan", {"mode", "values", "start", "stop", "count"});
    ScanConfig cfg;
    if (!sc.contains("mode") || !sc["mode"].is_string())
      throw ConfigError("scan: mode must be one of delay, reprate, chirp");
    cfg.mode = sc["mode"].get<std::string>();
    Dimension dim;
    if (cfg.mode == "delay")
      dim = Dimension::Time;
    else if (cfg.mode == "reprate")
      dim = Dimension::Frequency;
    else if (cfg.mode == "chirp")
      dim = Dimension::Chirp;
    else
      throw ConfigError("scan: mode must be one of delay, reprate, chirp");
    if (sc.contains("values")) {
      cfg.values = parse_series(sc["values"], dim, "scan.values");
    } else {
      Json range;
      for (const char* k : {"start", "stop", "count"})
        if (sc.contains(k)) range[k] = sc[k];
      cfg.values = parse_series(range, dim, "scan");
    }
    s.scan = std::move(cfg);
  }

  if (doc.contains("grid")) {
    const Json& g = doc["grid"];
    check_keys(g, "grid", {"input_points", "output_points", "output_span_fwhms",
                           "photon_points", "laser_points", "trace_points"});
    if (g.contains("input_points")) s.grid.input_points = parse_count(g["input_points"], "grid.input_points");
    if (g.contains("output_points")) s.grid.output_points = parse_count(g["output_points"], "grid.output_points");
    if (g.contains("output_span_fwhms"))
      s.grid.output_span_fwhms =
          parse_quantity(g["output_span_fwhms"], Dimension::Dimensionless, "grid.output_span_fwhms");
    if (g.contains("photon_points")) s.grid.photon_points = parse_count(g["photon_points"], "grid.photon_points");
    if (g.contains("laser_points")) s.grid.laser_points = parse_count(g["laser_points"], "grid.laser_points");
    if (g.contains("trace_points")) s.grid.trace_points = parse_count(g["trace_points"], "grid.trace_points");
  }

  if (doc.contains("timing")) {
    const Json& t = doc["timing"];
    check_keys(t, "timing", {"repetition_rate", "n"});
    if (t.contains("repetition_rate"))
      s.timing.repetition_rate =
          parse_quantity(t["repetition_rate"], Dimension::Frequency, "timing.repetition_rate");
    if (t.contains("n")) {
      if (!t["n"].is_number_integer() || t["n"].get<long long>() < 0)
        throw ConfigError("timing.n must be a non-negative integer");
      s.timing.n = t["n"].get<int>();
    }
    if (!(s.timing.repetition_rate > 0.0))
      throw ConfigError("timing.repetition_rate must be positive");
  }

  if (doc.contains("noise")) {
    const Json& nz = doc["noise"];
    check_keys(nz, "noise", {"relative"});
    if (nz.contains("relative"))
      s.noise_relative = parse_quantity(nz["relative"], Dimension::Dimensionless, "noise.relative");
    if (s.noise_relative < 0.0) throw ConfigError("noise.relative must be non-negative");
  }

  if (doc.contains("seed")) {
    const Json& seed = doc["seed"];
    if (!seed.is_number_unsigned() &&
        !(seed.is_number_integer() && seed.get<std::int64_t>() >= 0))
      throw ConfigError("seed must be a non-negative integer");
    s.seed = doc["seed"].get<std::uint64_t>();
  }

  if (doc.contains("output")) {
    const Json& o = doc["output"];
    check_keys(o, "output", {"spectrum", "summary"});
    for (const char* k : {"spectrum", "summary"}) {
      if (!o.contains(k)) continue;
      if (!o[k].is_string() || o[k].get<std::string>().empty() ||
          o[k].get<std::string>().find('/') != std::string::npos)
        throw ConfigError(std::string("output.") + k + " must be a plain file name");
    }
    if (o.contains("spectrum")) s.output.spectrum = o["spectrum"].get<std::string>();
    if (o.contains("summary")) s.output.summary = o["summary"].get<std::string>();
  }
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  Json doc;
  try {
    doc = Json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("config file '" + path + "' is not valid JSON: " + e.what());
  }
  return parse_scenario(doc);
}

Json Scenario::echo() const {
  Json j;
  if (photon) j["photon"] = pulse_echo(*photon);
  if (jsa) {
    Json m;
    m["center"] = jsa->jsa.nu0;
    m["sigma"] = jsa->jsa.sigma;
    m["sigma_c"] = jsa->jsa.sigma_c;
    m["chirp"] = jsa->chirp;
    if (jsa->idler_frequency) m["idler"] = *jsa->idler_frequency;
    j["jsa"] = m;
  }
  if (laser) j["laser"] = pulse_echo(*laser);
  if (!delays.empty()) j["delays"] = delays;
  if (scan) {
    Json sc;
    sc["mode"] = scan->mode;
    sc["values"] = scan->values;
    j["scan"] = sc;
  }
  Json g = Json::object();
  if (grid.input_points) g["input_points"] = grid.input_points;
  if (grid.output_points) g["output_points"] = grid.output_points;
  if (grid.output_span_fwhms > 0.0) g["output_span_fwhms"] = grid.output_span_fwhms;
  if (grid.photon_points) g["photon_points"] = grid.photon_points;
  if (grid.laser_points) g["laser_points"] = grid.laser_points;
  if (grid.trace_points) g["trace_points"] = grid.trace_points;
  if (!g.empty()) j["grid"] = g;
  j["timing"] = {{"repetition_rate", timing.repetition_rate}, {"n", timing.n}};
  if (noise_relative > 0.0) j["noise"] = {{"relative", noise_relative}};
  j["seed"] = seed;
  j["output"] = {{"spectrum", output.spectrum}, {"summary", output.summary}};
  return j;
}

}  // namespace chirpsfg::cli
