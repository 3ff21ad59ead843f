// SPDX-License-Identifier: Apache-2.0
//
// iabsim: uplink power control for two-hop integrated access and backhaul networks
// Copyright (C) 2026 The iabsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "iabsim/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "iabsim/errors.hpp"
#include "iabsim/format.hpp"

namespace iabsim {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) {
    return {};
  }
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) {
      break;
    }
    start = pos + 1;
  }
  return out;
}

std::string fmt(double v) { return format_double(v); }

double parse_double(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  double v = 0.0;
  const auto r = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || r.ec != std::errc() || r.ptr != t.data() + t.size() || !std::isfinite(v)) {
    throw ValidationError(key, "expected a number, got '" + text + "'");
  }
  return v;
}

long long parse_int(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  long long v = 0;
  const auto r = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || r.ec != std::errc() || r.ptr != t.data() + t.size()) {
    throw ValidationError(key, "expected an integer, got '" + text + "'");
  }
  return v;
}

int parse_int32(const std::string& key, const std::string& text) {
  const long long v = parse_int(key, text);
  if (v < -2147483647LL || v > 2147483647LL) {
    throw ValidationError(key, "integer out of range");
  }
  return static_cast<int>(v);
}

bool parse_bool(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  if (t == "true" || t == "1" || t == "on" || t == "yes") return true;
  if (t == "false" || t == "0" || t == "off" || t == "no") return false;
  throw ValidationError(key, "expected true/false, got '" + text + "'");
}

Range parse_range(const std::string& key, const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) {
    throw ValidationError(key, "expected 'lo, hi', got '" + text + "'");
  }
  Range r{parse_double(key, parts[0]), parse_double(key, parts[1])};
  if (r.lo > r.hi) {
    throw ValidationError(key, "lower bound exceeds upper bound");
  }
  return r;
}

std::vector<double> parse_list(const std::string& key, const std::string& text) {
  std::vector<double> out;
  if (trim(text).empty()) {
    return out;
  }
  for (const auto& p : split(text, ',')) {
    out.push_back(parse_double(key, p));
  }
  return out;
}

std::vector<Position> parse_positions(const std::string& key, const std::string& text) {
  std::vector<Position> out;
  if (trim(text).empty()) {
    return out;
  }
  for (const auto& p : split(text, ',')) {
    const auto xy = split(p, ':');
    if (xy.size() != 2) {
      throw ValidationError(key, "expected 'x:y' pairs, got '" + p + "'");
    }
    out.push_back({parse_double(key, xy[0]), parse_double(key, xy[1])});
  }
  return out;
}

std::string fmt(const Range& r) { return fmt(r.lo) + ", " + fmt(r.hi); }

std::string fmt(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    s += (i ? ", " : "") + fmt(v[i]);
  }
  return s;
}

std::string fmt(const std::vector<Position>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    s += (i ? ", " : "") + fmt(v[i].x) + ":" + fmt(v[i].y);
  }
  return s;
}

std::string fmt_bool(bool b) { return b ? "true" : "false"; }

UeCountMode parse_ue_count_mode(std::string_view text) {
  const std::string t = trim(text);
  if (t == "fixed") return UeCountMode::Fixed;
  if (t == "poisson") return UeCountMode::Poisson;
  throw ValidationError("ue_count_mode", "expected fixed|poisson, got '" + t + "'");
}

struct Key {
  const char* name;
  std::function<std::string(const ScenarioConfig&)> get;
  std::function<void(ScenarioConfig&, const std::string&)> set;
};

#define IABSIM_DOUBLE(k, field)                                             \
  Key {                                                                     \
    k, [](const ScenarioConfig& c) { return fmt(c.field); },                \
        [](ScenarioConfig& c, const std::string& v) { c.field = parse_double(k, v); } \
  }
#define IABSIM_INT(k, field)                                                \
  Key {                                                                     \
    k, [](const ScenarioConfig& c) { return std::to_string(c.field); },     \
        [](ScenarioConfig& c, const std::string& v) { c.field = parse_int32(k, v); } \
  }
#define IABSIM_BOOL(k, field)                                               \
  Key {                                                                     \
    k, [](const ScenarioConfig& c) { return fmt_bool(c.field); },           \
        [](ScenarioConfig& c, const std::string& v) { c.field = parse_bool(k, v); } \
  }
#define IABSIM_RANGE(k, field)                                              \
  Key {                                                                     \
    k, [](const ScenarioConfig& c) { return fmt(c.field); },                \
        [](ScenarioConfig& c, const std::string& v) { c.field = parse_range(k, v); } \
  }
#define IABSIM_LIST(k, field)                                               \
  Key {                                                                     \
    k, [](const ScenarioConfig& c) { return fmt(c.field); },                \
        [](ScenarioConfig& c, const std::string& v) { c.field = parse_list(k, v); } \
  }

const std::vector<Key>& keys() {
  static const std::vector<Key> table = {
      IABSIM_DOUBLE("fc_ghz", carrier_ghz),
      IABSIM_DOUBLE("bw_mhz", bandwidth_mhz),
      IABSIM_DOUBLE("scs_khz", scs_khz),
      IABSIM_INT("rb_min", rb_min),
      IABSIM_INT("rb_max", rb_max),
      IABSIM_DOUBLE("cell_radius_m", cell_radius_m),
      IABSIM_DOUBLE("alpha", pathloss_exponent),
      IABSIM_DOUBLE("shadow_db", shadowing_std_db),
      IABSIM_DOUBLE("nf_db", noise_figure_db),
      IABSIM_DOUBLE("thermal_noise_dbm_hz", thermal_noise_dbm_hz),
      IABSIM_DOUBLE("donor_height", donor_height_m),
      IABSIM_RANGE("iab_heights", iab_height_m),
      IABSIM_DOUBLE("ue_height", ue_height_m),
      IABSIM_DOUBLE("eff_antenna_height", eff_antenna_height_m),
      IABSIM_DOUBLE("ref_distance_m", ref_distance_m),
      IABSIM_DOUBLE("speed_of_light", speed_of_light_m_s),
      IABSIM_RANGE("ue_eirp_range", ue_eirp_dbm),
      IABSIM_RANGE("iab_eirp_range", iab_eirp_dbm),
      IABSIM_DOUBLE("rx_gain_db", rx_gain_db),
      IABSIM_RANGE("rain_range", rain_rate_mm_h),
      IABSIM_DOUBLE("rain_k", rain_k),
      IABSIM_DOUBLE("rain_gamma", rain_gamma),
      Key{"rain_table", [](const ScenarioConfig& c) { return c.rain_table_path; },
          [](ScenarioConfig& c, const std::string& v) { c.rain_table_path = trim(v); }},
      IABSIM_DOUBLE("min_rate_bps", min_rate_bps),
      IABSIM_BOOL("pathloss_literal", pathloss_literal),
      IABSIM_BOOL("shadowing", shadowing_enabled),
      IABSIM_BOOL("fading", fading_enabled),
      IABSIM_BOOL("rain", rain_enabled),
      IABSIM_INT("num_cells", num_cells),
      IABSIM_INT("num_ues", num_ues),
      Key{"ue_count_mode", [](const ScenarioConfig& c) { return to_string(c.ue_count_mode); },
          [](ScenarioConfig& c, const std::string& v) { c.ue_count_mode = parse_ue_count_mode(v); }},
      Key{"ue_positions", [](const ScenarioConfig& c) { return fmt(c.ue_positions); },
          [](ScenarioConfig& c, const std::string& v) {
            c.ue_positions = parse_positions("ue_positions", v);
          }},
      IABSIM_INT("num_iab_per_cell", num_iab_per_cell),
      IABSIM_DOUBLE("inter_donor_distance_m", inter_donor_distance_m),
      IABSIM_DOUBLE("iab_ring_fraction", iab_ring_fraction),
      IABSIM_DOUBLE("iab_orientation_deg", iab_orientation_deg),
      IABSIM_INT("rbs_per_ue", rbs_per_ue),
      IABSIM_INT("access_rb_pool", access_rb_pool),
      Key{"slot_mode", [](const ScenarioConfig& c) { return to_string(c.slot_mode); },
          [](ScenarioConfig& c, const std::string& v) { c.slot_mode = parse_slot_mode(v); }},
      IABSIM_INT("ga_iterations", ga.iterations),
      IABSIM_INT("ga_population", ga.population),
      IABSIM_INT("ga_neighborhood", ga.neighborhood),
      IABSIM_DOUBLE("ga_mutation_step_db", ga.mutation_step_db),
      IABSIM_DOUBLE("ga_mutation_prob", ga.mutation_prob),
      IABSIM_DOUBLE("ga_quantum_db", ga.quantum_db),
      IABSIM_INT("trials", trials),
      Key{"seed", [](const ScenarioConfig& c) { return std::to_string(c.seed); },
          [](ScenarioConfig& c, const std::string& v) {
            const long long s = parse_int("seed", v);
            if (s < 0) throw ValidationError("seed", "must be >= 0");
            c.seed = static_cast<std::uint64_t>(s);
          }},
      Key{"power_policy", [](const ScenarioConfig& c) { return to_string(c.power_policy); },
          [](ScenarioConfig& c, const std::string& v) { c.power_policy = parse_power_policy(v); }},
      IABSIM_INT("threads", threads),
      IABSIM_LIST("sweep_ues", sweep_ues),
      IABSIM_LIST("sweep_rbs_per_ue", sweep_rbs_per_ue),
      IABSIM_LIST("sweep_backoff_db", sweep_backoff_db),
      IABSIM_LIST("sweep_min_rate_bps", sweep_min_rate_bps),
      IABSIM_LIST("trace_seeds", trace_seeds),
  };
  return table;
}

#undef IABSIM_DOUBLE
#undef IABSIM_INT
#undef IABSIM_BOOL
#undef IABSIM_RANGE
#undef IABSIM_LIST

void require(bool ok, const char* key, const std::string& message) {
  if (!ok) {
    throw ValidationError(key, message);
  }
}

bool is_integral(double v) { return std::floor(v) == v; }

}  // namespace

std::string to_string(SlotMode mode) {
  return mode == SlotMode::Separated ? "separated" : "simultaneous";
}

std::string to_string(PowerPolicyKind policy) {
  switch (policy) {
    case PowerPolicyKind::Max:
      return "max";
    case PowerPolicyKind::Random:
      return "random";
    case PowerPolicyKind::Ga:
      return "ga";
  }
  return "ga";
}

std::string to_string(UeCountMode mode) {
  return mode == UeCountMode::Fixed ? "fixed" : "poisson";
}

SlotMode parse_slot_mode(std::string_view text) {
  const std::string t = trim(text);
  if (t == "separated" || t == "sep") return SlotMode::Separated;
  if (t == "simultaneous" || t == "sim") return SlotMode::Simultaneous;
  throw ValidationError("slot_mode", "expected separated|simultaneous, got '" + t + "'");
}

PowerPolicyKind parse_power_policy(std::string_view text) {
  const std::string t = trim(text);
  if (t == "max") return PowerPolicyKind::Max;
  if (t == "random") return PowerPolicyKind::Random;
  if (t == "ga") return PowerPolicyKind::Ga;
  throw ValidationError("power_policy", "expected max|random|ga, got '" + t + "'");
}

void apply_config_value(ScenarioConfig& cfg, const std::string& key, const std::string& value) {
  const std::string k = trim(key);
  for (const auto& entry : keys()) {
    if (k == entry.name) {
      entry.set(cfg, value);
      return;
    }
  }
  throw ValidationError(k, "unknown configuration key");
}

ScenarioConfig parse_config_text(std::string_view text, ScenarioConfig base) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) {
      line.erase(hash);
    }
    const std::string body = trim(line);
    if (body.empty()) {
      continue;
    }
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw ValidationError(body, "line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    apply_config_value(base, body.substr(0, eq), body.substr(eq + 1));
  }
  return base;
}

ScenarioConfig load_config(const std::string& path,
                           const std::vector<std::pair<std::string, std::string>>& overrides) {
  ScenarioConfig cfg;
  if (!path.empty()) {
    std::ifstream in(path);
    if (!in) {
      throw ValidationError("config", "cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    cfg = parse_config_text(ss.str(), cfg);
  }
  for (const auto& [k, v] : overrides) {
    apply_config_value(cfg, k, v);
  }
  cfg.validate();
  return cfg;
}

std::string to_config_text(const ScenarioConfig& cfg) {
  std::string out;
  for (const auto& entry : keys()) {
    out += entry.name;
    out += " = ";
    out += entry.get(cfg);
    out += '\n';
  }
  return out;
}

ScenarioConfig config_from_csv_header(const std::string& csv_path) {
  std::ifstream in(csv_path);
  if (!in) {
    throw ValidationError("csv", "cannot open '" + csv_path + "'");
  }
  ScenarioConfig cfg;
  std::string line;
  bool any = false;
  while (std::getline(in, line) && line.rfind('#', 0) == 0) {
    const std::string body = trim(std::string_view(line).substr(1));
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      continue;
    }
    const std::string key = trim(body.substr(0, eq));
    if (key == "experiment" || key == "version") {
      continue;
    }
    apply_config_value(cfg, key, body.substr(eq + 1));
    any = true;
  }
  if (!any) {
    throw ValidationError("csv", "'" + csv_path + "' carries no configuration header");
  }
  cfg.validate();
  return cfg;
}

void ScenarioConfig::validate() const {
  require(carrier_ghz > 0.0, "fc_ghz", "must be > 0");
  require(bandwidth_mhz > 0.0, "bw_mhz", "must be > 0");
  require(scs_khz > 0.0, "scs_khz", "must be > 0");
  require(rb_min >= 1, "rb_min", "must be >= 1");
  require(rb_max >= rb_min, "rb_max", "must be >= rb_min");
  require(rb_max * rb_bandwidth_hz() <= bandwidth_mhz * 1e6 + 1e-6, "rb_max",
          "rb_max resource blocks exceed the carrier bandwidth");
  require(cell_radius_m > 0.0, "cell_radius_m", "must be > 0");
  require(pathloss_exponent >= 2.0, "alpha", "must be >= 2");
  require(shadowing_std_db >= 0.0, "shadow_db", "must be >= 0");
  require(donor_height_m > 0.0, "donor_height", "must be > 0");
  require(iab_height_m.lo > 0.0, "iab_heights", "must be > 0");
  require(ue_height_m > 0.0, "ue_height", "must be > 0");
  require(eff_antenna_height_m > 0.0, "eff_antenna_height", "must be > 0");
  require(ref_distance_m > 0.0, "ref_distance_m", "must be > 0");
  require(speed_of_light_m_s > 0.0, "speed_of_light", "must be > 0");
  require(rain_rate_mm_h.lo >= 0.0, "rain_range", "must be >= 0");
  require(rain_k >= 0.0, "rain_k", "must be >= 0 (0 selects the table)");
  require(rain_gamma >= 0.0 && rain_gamma < 2.0, "rain_gamma", "must lie in [0, 2)");
  require(min_rate_bps > 0.0, "min_rate_bps", "must be > 0");
  require(num_cells == 1 || num_cells == 2, "num_cells", "must be 1 or 2");
  require(num_ues >= 0, "num_ues", "must be >= 0");
  require(num_iab_per_cell >= 0, "num_iab_per_cell", "must be >= 0");
  require(inter_donor_distance_m >= 0.0, "inter_donor_distance_m", "must be >= 0");
  require(iab_ring_fraction > 0.0 && iab_ring_fraction <= 1.0, "iab_ring_fraction",
          "must lie in (0, 1]");
  require(rbs_per_ue >= 1, "rbs_per_ue", "must be >= 1");
  require(rbs_per_ue <= rb_max, "rbs_per_ue", "must not exceed rb_max");
  require(access_rb_pool >= 0 && access_rb_pool <= rb_max, "access_rb_pool",
          "must lie in [0, rb_max]");
  require(effective_access_rb_pool() >= rbs_per_ue, "access_rb_pool",
          "must hold at least one UE allocation");
  require(trials >= 1, "trials", "must be >= 1");
  require(threads >= 0, "threads", "must be >= 0");
  ga.validate();
  for (double v : sweep_ues) {
    require(v >= 0.0 && is_integral(v), "sweep_ues", "entries must be non-negative integers");
  }
  for (double v : sweep_rbs_per_ue) {
    require(v >= 1.0 && is_integral(v) && v <= rb_max, "sweep_rbs_per_ue",
            "entries must be integers in [1, rb_max]");
  }
  for (double v : sweep_min_rate_bps) {
    require(v > 0.0, "sweep_min_rate_bps", "entries must be > 0");
  }
  for (double v : trace_seeds) {
    require(v >= 0.0 && is_integral(v), "trace_seeds", "entries must be non-negative integers");
  }
}

}  // namespace iabsim
