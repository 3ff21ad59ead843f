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

#include "iabsim/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "iabsim/coverage.hpp"
#include "iabsim/errors.hpp"
#include "iabsim/format.hpp"
#include "iabsim/policy.hpp"

namespace iabsim {

namespace {

using Row = std::vector<std::string>;

std::string join(const Row& row) {
  std::string s;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) s += ',';
    s += row[i];
  }
  return s + '\n';
}

std::string num(double v) { return format_double(v); }

int as_int(double v) { return static_cast<int>(std::llround(v)); }

double mean_coverage(const ScenarioConfig& cfg, PowerPolicyKind policy) {
  return monte_carlo_coverage(cfg, make_policy(policy, cfg), cfg.trials, cfg.seed).mean;
}

double median(std::vector<double> v) {
  if (v.empty()) {
    return std::nan("");
  }
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

std::string ga_trace(const ScenarioConfig& cfg) {
  const ChannelParams base = channel_params_for(cfg);
  const ServiceRequirement req{cfg.min_rate_bps};
  std::vector<std::vector<double>> traces(cfg.trace_seeds.size());
  parallel_for(traces.size(), cfg.threads, [&](std::size_t i) {
    const auto seed = static_cast<std::uint64_t>(std::llround(cfg.trace_seeds[i]));
    const TrialInstance inst = make_trial(cfg, base, seed, 0);
    const CoverageEvaluator evaluator(inst, req);
    GaParams p = cfg.ga;
    p.seed = ga_seed_for_trial(seed, 0);
    traces[i] = optimize(
        inst.layout, [&](const PowerVector& v) { return evaluator.coverage(v); }, p).trace;
  });
  std::string out;
  for (int it = 0; it < cfg.ga.iterations; ++it) {
    Row row{std::to_string(it + 1)};
    for (const auto& t : traces) {
      row.push_back(num(t[static_cast<std::size_t>(it)]));
    }
    out += join(row);
  }
  return out;
}

std::string coverage_vs_ues(const ScenarioConfig& config) {
  std::string out;
  for (double rbs : config.sweep_rbs_per_ue) {
    for (double e : config.sweep_ues) {
      ScenarioConfig cfg = config;
      cfg.rbs_per_ue = as_int(rbs);
      cfg.num_ues = as_int(e);
      out += join({std::to_string(cfg.rbs_per_ue), std::to_string(cfg.num_ues),
                   num(mean_coverage(cfg, PowerPolicyKind::Ga)),
                   num(mean_coverage(cfg, PowerPolicyKind::Max)),
                   num(mean_coverage(cfg, PowerPolicyKind::Random))});
    }
  }
  return out;
}

std::string intercell(const ScenarioConfig& config) {
  std::string out;
  for (double e : config.sweep_ues) {
    ScenarioConfig one = config;
    one.num_ues = as_int(e);
    one.num_cells = 1;
    ScenarioConfig two = one;
    two.num_cells = 2;
    out += join({std::to_string(one.num_ues), num(mean_coverage(one, PowerPolicyKind::Ga)),
                 num(mean_coverage(two, PowerPolicyKind::Ga)),
                 num(mean_coverage(one, PowerPolicyKind::Max)),
                 num(mean_coverage(two, PowerPolicyKind::Max))});
  }
  return out;
}

// Both modes share each trial's power vector, chosen under the simultaneous
// plan at zero back-off, so the rows differ only in slot separation. The
// sweep then lowers every EIRP by the same amount, ignoring the role ranges.
std::string coverage_vs_sinr(const ScenarioConfig& config) {
  const std::size_t points = config.sweep_backoff_db.size();
  const auto trials = static_cast<std::size_t>(config.trials);
  const SlotMode modes[] = {SlotMode::Separated, SlotMode::Simultaneous};
  const PowerPolicyKind kinds[] = {PowerPolicyKind::Ga, PowerPolicyKind::Max};

  ScenarioConfig cfg = config;
  cfg.slot_mode = SlotMode::Simultaneous;
  cfg.validate();
  const ChannelParams base = channel_params_for(cfg);
  const ServiceRequirement req{cfg.min_rate_bps};

  // [mode][kind][trial][point]
  std::vector<double> cov(2 * 2 * trials * points, 0.0);
  std::vector<std::vector<double>> sinrs(2 * 2 * trials * points);
  auto slot = [&](std::size_t m, std::size_t k, std::size_t t, std::size_t p) {
    return ((m * 2 + k) * trials + t) * points + p;
  };

  parallel_for(trials, cfg.threads, [&](std::size_t t) {
    TrialInstance sim = make_trial(cfg, base, cfg.seed, t);
    TrialInstance sep = sim;
    sep.plan = plan_slots(sep.assoc, sep.alloc, SlotMode::Separated);
    const CoverageEvaluator sim_eval(sim, req);
    const CoverageEvaluator sep_eval(sep, req);
    for (std::size_t k = 0; k < 2; ++k) {
      const PowerVector powers = make_policy(kinds[k], cfg)(sim, sim_eval, cfg.seed, t);
      for (std::size_t m = 0; m < 2; ++m) {
        const CoverageEvaluator& ev = modes[m] == SlotMode::Separated ? sep_eval : sim_eval;
        for (std::size_t p = 0; p < points; ++p) {
          const CoverageResult r = ev.evaluate(powers, cfg.sweep_backoff_db[p]);
          cov[slot(m, k, t, p)] = r.coverage_probability;
          auto& out = sinrs[slot(m, k, t, p)];
          for (const auto& [ue, g] : r.access_sinr) {
            out.push_back(10.0 * std::log10(g));
          }
        }
      }
    }
  });

  std::string out;
  for (std::size_t m = 0; m < 2; ++m) {
    for (std::size_t k = 0; k < 2; ++k) {
      for (std::size_t p = 0; p < points; ++p) {
        double sum = 0.0;
        std::vector<double> all;
        for (std::size_t t = 0; t < trials; ++t) {
          sum += cov[slot(m, k, t, p)];
          const auto& v = sinrs[slot(m, k, t, p)];
          all.insert(all.end(), v.begin(), v.end());
        }
        out += join({to_string(modes[m]), to_string(kinds[k]), num(cfg.sweep_backoff_db[p]),
                     num(median(std::move(all))), num(sum / static_cast<double>(trials))});
      }
    }
  }
  return out;
}

std::string role_name(NodeRole role) {
  switch (role) {
    case NodeRole::Donor:
      return "donor";
    case NodeRole::IabNode:
      return "iab";
    case NodeRole::Ue:
      return "ue";
  }
  return "ue";
}

std::string power_cdf(const ScenarioConfig& config) {
  std::string out;
  for (double rate : config.sweep_min_rate_bps) {
    ScenarioConfig cfg = config;
    cfg.min_rate_bps = rate;
    std::vector<std::string> per_trial(static_cast<std::size_t>(cfg.trials));
    const TrialObserver observer = [&](std::size_t t, const TrialInstance& inst,
                                       const PowerVector& powers, const CoverageResult&) {
      std::string rows;
      for (std::size_t g = 0; g < inst.layout.size(); ++g) {
        const int id = inst.layout.node_id(g);
        const NetworkNode& node = inst.topology.node(id);
        const int server = node.role == NodeRole::Ue ? inst.assoc.ue_to_bs.at(id)
                                                     : inst.assoc.iab_to_donor.at(id);
        rows += join({num(rate), std::to_string(t), std::to_string(id), role_name(node.role),
                      std::to_string(server), num(powers[g])});
      }
      per_trial[t] = std::move(rows);
    };
    monte_carlo_coverage(cfg, make_policy(cfg.power_policy, cfg), cfg.trials, cfg.seed,
                         observer);
    for (const auto& rows : per_trial) {
      out += rows;
    }
  }
  return out;
}

}  // namespace

std::string to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::GaTrace:
      return "ga-trace";
    case ExperimentKind::CoverageVsUes:
      return "coverage-vs-ues";
    case ExperimentKind::CoverageVsSinr:
      return "coverage-vs-sinr";
    case ExperimentKind::Intercell:
      return "intercell";
    case ExperimentKind::PowerCdf:
      return "power-cdf";
  }
  return "coverage-vs-ues";
}

const std::vector<ExperimentKind>& all_experiments() {
  static const std::vector<ExperimentKind> kinds = {
      ExperimentKind::GaTrace, ExperimentKind::CoverageVsUes, ExperimentKind::CoverageVsSinr,
      ExperimentKind::Intercell, ExperimentKind::PowerCdf};
  return kinds;
}

ExperimentKind parse_experiment(std::string_view name) {
  for (ExperimentKind k : all_experiments()) {
    if (to_string(k) == name) {
      return k;
    }
  }
  throw ValidationError("experiment", "unknown experiment '" + std::string(name) +
                                          "' (ga-trace, coverage-vs-ues, coverage-vs-sinr, "
                                          "intercell, power-cdf)");
}

std::vector<std::string> experiment_columns(ExperimentKind kind, const ScenarioConfig& config) {
  switch (kind) {
    case ExperimentKind::GaTrace: {
      std::vector<std::string> cols{"iteration"};
      for (double s : config.trace_seeds) {
        cols.push_back("best_coverage_seed" + std::to_string(std::llround(s)));
      }
      return cols;
    }
    case ExperimentKind::CoverageVsUes:
      return {"rbs_per_ue", "num_ues", "coverage_optimized", "coverage_max_power",
              "coverage_random_power"};
    case ExperimentKind::CoverageVsSinr:
      return {"slot_mode", "policy", "backoff_db", "median_access_sinr_db", "coverage"};
    case ExperimentKind::Intercell:
      return {"num_ues", "coverage_1cell_optimized", "coverage_2cell_optimized",
              "coverage_1cell_max_power", "coverage_2cell_max_power"};
    case ExperimentKind::PowerCdf:
      return {"min_rate_bps", "trial", "node_id", "role", "serving_bs", "eirp_dbm"};
  }
  return {};
}

std::string csv_header(ExperimentKind kind, const ScenarioConfig& config) {
  std::string out = "# experiment = " + to_string(kind) + "\n";
  std::istringstream lines(to_config_text(config));
  std::string line;
  while (std::getline(lines, line)) {
    // Worker count never changes results; leaving it out keeps files byte-identical.
    if (line.rfind("threads =", 0) == 0) {
      continue;
    }
    out += "# " + line + "\n";
  }
  return out;
}

std::string run_experiment(ExperimentKind kind, const ScenarioConfig& config) {
  config.validate();
  std::string body;
  switch (kind) {
    case ExperimentKind::GaTrace:
      body = ga_trace(config);
      break;
    case ExperimentKind::CoverageVsUes:
      body = coverage_vs_ues(config);
      break;
    case ExperimentKind::CoverageVsSinr:
      body = coverage_vs_sinr(config);
      break;
    case ExperimentKind::Intercell:
      body = intercell(config);
      break;
    case ExperimentKind::PowerCdf:
      body = power_cdf(config);
      break;
  }
  return csv_header(kind, config) + join(experiment_columns(kind, config)) + body;
}

void write_file_atomically(const std::string& path, const std::string& text) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".partial";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw std::runtime_error("cannot write '" + tmp.string() + "'");
    }
    out << text;
    out.flush();
    if (!out) {
      out.close();
      std::error_code ec;
      fs::remove(tmp, ec);
      throw std::runtime_error("write to '" + tmp.string() + "' failed");
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw std::runtime_error("cannot move output into place at '" + path + "'");
  }
}

void run_experiment(const ExperimentSpec& spec, const ScenarioConfig& config) {
  if (spec.output_path.empty()) {
    throw ValidationError("out", "an output path is required");
  }
  // Nothing touches the destination until the whole CSV exists in memory.
  const std::string text = run_experiment(spec.kind, config);
  write_file_atomically(spec.output_path, text);
}

}  // namespace iabsim
