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

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "iabsim/ga.hpp"
#include "iabsim/types.hpp"

namespace iabsim {

enum class UeCountMode { Fixed, Poisson };
enum class PowerPolicyKind { Max, Random, Ga };

/// Every tunable of a run. Defaults are the 28 GHz urban-macro reference
/// deployment; see `to_config_text` for the key names used in config files.
struct ScenarioConfig {
  // Radio
  double carrier_ghz = 28.0;
  double bandwidth_mhz = 400.0;
  double scs_khz = 120.0;
  int rb_min = 24;
  int rb_max = 270;
  double cell_radius_m = 200.0;
  double pathloss_exponent = 4.0;
  double shadowing_std_db = 4.0;
  double noise_figure_db = 5.0;
  double thermal_noise_dbm_hz = -174.0;
  double donor_height_m = 25.0;
  Range iab_height_m{21.0, 24.0};
  double ue_height_m = 1.5;
  double eff_antenna_height_m = 1.0;
  double ref_distance_m = 1.0;
  double speed_of_light_m_s = 3.0e8;
  Range ue_eirp_dbm{23.0, 43.0};
  Range iab_eirp_dbm{35.0, 53.0};
  double rx_gain_db = 25.0;
  Range rain_rate_mm_h{15.0, 20.0};
  double rain_k = 0.0;      // 0: interpolate from the coefficient table
  double rain_gamma = 0.0;  // 0: interpolate from the coefficient table
  std::string rain_table_path;
  double min_rate_bps = 64000.0;
  bool pathloss_literal = false;
  bool shadowing_enabled = true;
  bool fading_enabled = true;
  bool rain_enabled = true;

  // Topology
  int num_cells = 1;
  int num_ues = 19;
  UeCountMode ue_count_mode = UeCountMode::Fixed;
  std::vector<Position> ue_positions;  // non-empty: frozen UE placement
  int num_iab_per_cell = 4;
  double inter_donor_distance_m = 0.0;  // 0: 2 * cell radius (tangent cells)
  double iab_ring_fraction = 0.5;
  double iab_orientation_deg = 0.0;

  // Scheduling
  int rbs_per_ue = 2;
  // RBs scheduled per slot; access blocks wrap (co-channel reuse) past it.
  int access_rb_pool = 0;  // 0: max(rb_min, rbs_per_ue)
  SlotMode slot_mode = SlotMode::Separated;

  // Optimizer and Monte-Carlo driver
  GaParams ga;
  int trials = 200;
  std::uint64_t seed = 1;
  PowerPolicyKind power_policy = PowerPolicyKind::Ga;
  int threads = 0;  // 0: hardware concurrency

  // Experiment sweeps
  std::vector<double> sweep_ues{0, 5, 10, 15, 20, 25, 30, 35, 40};
  std::vector<double> sweep_rbs_per_ue{2, 4};
  std::vector<double> sweep_backoff_db{0, 10, 20, 30, 40, 50, 55, 60, 65, 70, 75, 80};
  std::vector<double> sweep_min_rate_bps{64000, 1000000};
  std::vector<double> trace_seeds{1, 2, 3, 4, 5};

  double rb_bandwidth_hz() const { return 12.0 * scs_khz * 1e3; }
  double donor_spacing_m() const {
    return inter_donor_distance_m > 0.0 ? inter_donor_distance_m : 2.0 * cell_radius_m;
  }
  int effective_access_rb_pool() const {
    if (access_rb_pool > 0) {
      return access_rb_pool;
    }
    return rbs_per_ue > rb_min ? rbs_per_ue : rb_min;
  }

  /// Throws ValidationError naming the first offending key.
  void validate() const;
};

/// Loads `defaults <- file <- overrides` (increasing precedence). An empty
/// path skips the file. Override keys use the same names as the file.
ScenarioConfig load_config(const std::string& path,
                           const std::vector<std::pair<std::string, std::string>>& overrides = {});

/// Parses `key = value` lines (`#` starts a comment) on top of `base`.
ScenarioConfig parse_config_text(std::string_view text, ScenarioConfig base = {});

/// Applies one `key = value` assignment; throws ValidationError on an
/// unknown key or unparsable value.
void apply_config_value(ScenarioConfig& cfg, const std::string& key, const std::string& value);

/// Canonical `key = value` rendering of every field, one per line, fixed order.
/// Feeding this back through `parse_config_text` yields an identical config.
std::string to_config_text(const ScenarioConfig& cfg);

/// Recovers the config echoed into a CSV header (`# key = value` lines).
ScenarioConfig config_from_csv_header(const std::string& csv_path);

std::string to_string(SlotMode mode);
std::string to_string(PowerPolicyKind policy);
std::string to_string(UeCountMode mode);
SlotMode parse_slot_mode(std::string_view text);
PowerPolicyKind parse_power_policy(std::string_view text);

}  // namespace iabsim
