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

#include <string>
#include <string_view>
#include <vector>

#include "iabsim/config.hpp"

namespace iabsim {

enum class ExperimentKind { GaTrace, CoverageVsUes, CoverageVsSinr, Intercell, PowerCdf };

struct ExperimentSpec {
  ExperimentKind kind = ExperimentKind::CoverageVsUes;
  std::string output_path;  // empty: caller handles the text
};

std::string to_string(ExperimentKind kind);
ExperimentKind parse_experiment(std::string_view name);
const std::vector<ExperimentKind>& all_experiments();

/// Column names of an experiment's CSV, in order (ga-trace depends on trace_seeds).
std::vector<std::string> experiment_columns(ExperimentKind kind, const ScenarioConfig& config);

/// Runs the experiment and returns the complete CSV text: `# key = value`
/// header lines (experiment name and fully resolved config), the column line,
/// then rows in a fixed order. The text depends only on (kind, config).
///
/// ga-trace        one column of best coverage per entry of trace_seeds
/// coverage-vs-ues sweep_rbs_per_ue x sweep_ues, all three policies
/// coverage-vs-sinr both slot modes x {ga, max} x sweep_backoff_db
/// intercell       sweep_ues for 1 and 2 cells, ga and max policies
/// power-cdf       per-node EIRP under power_policy for each sweep_min_rate_bps
std::string run_experiment(ExperimentKind kind, const ScenarioConfig& config);

/// Runs the experiment and writes it to spec.output_path. The file appears
/// atomically: on any failure no partial output is left behind.
void run_experiment(const ExperimentSpec& spec, const ScenarioConfig& config);

/// Header block shared by every experiment CSV.
std::string csv_header(ExperimentKind kind, const ScenarioConfig& config);

/// Writes `text` to `path` through a temporary sibling and a rename.
void write_file_atomically(const std::string& path, const std::string& text);

}  // namespace iabsim
