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

// iabsim: run the experiment sweeps and summarize their CSV output.
//
//   iabsim run coverage-vs-ues --trials 200 --out fig3.csv
//   iabsim run ga-trace --set ga_iterations=100 --out trace.csv
//   iabsim summarize fig3.csv
//
// Exit codes: 0 success, 1 invalid input, 2 runtime failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "iabsim/config.hpp"
#include "iabsim/errors.hpp"
#include "iabsim/experiment.hpp"
#include "iabsim/summary.hpp"

namespace {

struct RunOptions {
  std::string experiment;
  std::string config_path;
  std::string from_header;
  std::string out;
  std::vector<std::string> sets;
  std::vector<std::pair<std::string, std::string>> flags;
  bool print_config = false;
};

std::pair<std::string, std::string> split_assignment(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos) {
    throw iabsim::ValidationError(text, "--set expects key=value");
  }
  return {text.substr(0, eq), text.substr(eq + 1)};
}

// Registers a CLI flag that becomes a `key = value` override.
void add_override(CLI::App& app, RunOptions& opts, const std::string& flag,
                  const std::string& key, const std::string& help) {
  app.add_option_function<std::string>(
      flag, [&opts, key](const std::string& v) { opts.flags.emplace_back(key, v); }, help);
}

int run(const RunOptions& opts) {
  const iabsim::ExperimentKind kind = iabsim::parse_experiment(opts.experiment);

  iabsim::ScenarioConfig cfg;
  if (!opts.from_header.empty()) {
    cfg = iabsim::config_from_csv_header(opts.from_header);
  }
  if (!opts.config_path.empty()) {
    cfg = iabsim::parse_config_text(
        [&] {
          std::ifstream in(opts.config_path);
          if (!in) {
            throw iabsim::ValidationError("config", "cannot open '" + opts.config_path + "'");
          }
          std::ostringstream ss;
          ss << in.rdbuf();
          return ss.str();
        }(),
        cfg);
  }
  for (const auto& [k, v] : opts.flags) {
    iabsim::apply_config_value(cfg, k, v);
  }
  for (const auto& s : opts.sets) {
    const auto [k, v] = split_assignment(s);
    iabsim::apply_config_value(cfg, k, v);
  }
  cfg.validate();

  if (opts.print_config) {
    std::cout << iabsim::to_config_text(cfg);
    return 0;
  }
  if (opts.out.empty() || opts.out == "-") {
    std::cout << iabsim::run_experiment(kind, cfg);
  } else {
    iabsim::run_experiment(iabsim::ExperimentSpec{kind, opts.out}, cfg);
    std::cerr << "wrote " << opts.out << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monte-Carlo simulator of two-hop IAB uplink coverage with GA power control"};
  app.require_subcommand(1);

  RunOptions opts;
  CLI::App* run_cmd = app.add_subcommand("run", "Run one experiment and write its CSV");
  run_cmd->add_option("experiment", opts.experiment,
                      "ga-trace | coverage-vs-ues | coverage-vs-sinr | intercell | power-cdf")
      ->required();
  run_cmd->add_option("--config", opts.config_path, "key = value config file");
  run_cmd->add_option("--from-header", opts.from_header,
                      "Start from the config echoed in an earlier CSV's header");
  run_cmd->add_option("--out,-o", opts.out, "Output CSV path ('-' or omitted: stdout)");
  add_override(*run_cmd, opts, "--seed", "seed", "Master seed");
  add_override(*run_cmd, opts, "--trials", "trials", "Monte-Carlo trials per point");
  add_override(*run_cmd, opts, "--ues", "num_ues", "UEs per cell");
  add_override(*run_cmd, opts, "--rbs-per-ue", "rbs_per_ue", "Resource blocks per UE");
  add_override(*run_cmd, opts, "--slot-mode", "slot_mode", "separated | simultaneous");
  add_override(*run_cmd, opts, "--cells", "num_cells", "1 | 2");
  add_override(*run_cmd, opts, "--policy", "power_policy", "power-cdf policy: max | random | ga");
  add_override(*run_cmd, opts, "--threads", "threads", "Worker threads (0: all cores)");
  run_cmd->add_option("--set", opts.sets, "Override any config key (key=value), repeatable");
  run_cmd->add_flag("--print-config", opts.print_config,
                    "Print the resolved config and exit without running");

  std::string csv_path;
  double target = 0.7;
  CLI::App* sum_cmd = app.add_subcommand("summarize", "Print headline numbers of a CSV");
  sum_cmd->add_option("csv", csv_path, "CSV written by 'run'")->required();
  sum_cmd->add_option("--target", target, "Coverage level for crossings")
      ->check(CLI::Range(0.0, 1.0));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*run_cmd) {
      return run(opts);
    }
    std::cout << iabsim::summarize_csv(iabsim::read_csv(csv_path), target);
    return 0;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
