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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "iabsim/channel.hpp"
#include "iabsim/power.hpp"
#include "iabsim/scheduler.hpp"
#include "iabsim/topology.hpp"

namespace iabsim {

struct ScenarioConfig;

enum class UeStatus { Covered, AccessFail, BackhaulFail };

struct ServiceRequirement {
  double min_rate_bps = 64000.0;

  void validate() const;
};

struct CoverageResult {
  std::map<int, UeStatus> per_ue;
  std::map<int, double> access_sinr;    // linear, per UE
  std::map<int, double> backhaul_sinr;  // linear, per active IAB node
  double coverage_probability = 1.0;    // vacuously 1 without UEs
};

/// Everything fixed for one Monte-Carlo trial: geometry, sampled channel,
/// association, RB allocation and slot plan.
struct TrialInstance {
  Topology topology;
  ChannelRealization realization;
  Association assoc;
  RbAllocation alloc;
  SlotPlan plan;
  GeneLayout layout;
};

/// Reference evaluation built directly on `interference_at` and `sinr`.
/// A UE is covered when its access SINR meets min_sinr(R, BW_access) and, if
/// relayed, its server's backhaul SINR meets min_sinr(n * R, BW_backhaul)
/// with n the number of UEs behind that IAB node. A failing backhaul marks
/// every child BackhaulFail. `backoff_db` is subtracted from every EIRP.
/// Throws std::out_of_range when the realization lacks a needed link.
CoverageResult evaluate_trial(const Topology& topology, const Association& assoc,
                              const RbAllocation& alloc, const SlotPlan& plan,
                              const GeneLayout& layout, const PowerVector& powers,
                              const ChannelRealization& realization,
                              const ServiceRequirement& req, double backoff_db = 0.0);

CoverageResult evaluate_trial(const TrialInstance& trial, const PowerVector& powers,
                              const ServiceRequirement& req, double backoff_db = 0.0);

/// Precomputes linear gains, RB overlaps, noise and SINR thresholds of one
/// trial so repeated evaluations (the optimizer's inner loop) cost O(links x
/// interferers) multiply-adds. Agrees with `evaluate_trial`.
class CoverageEvaluator {
 public:
  CoverageEvaluator(const TrialInstance& trial, const ServiceRequirement& req);

  double coverage(const PowerVector& powers, double backoff_db = 0.0) const;
  CoverageResult evaluate(const PowerVector& powers, double backoff_db = 0.0) const;

  std::size_t ue_count() const { return access_.size(); }

 private:
  struct Term {
    std::size_t gene;
    double gain;  // overlap fraction * linear channel gain incl. receive gain
  };
  struct Link {
    int tx_id;
    int rx_id;
    std::size_t tx_gene;
    double gain;
    double noise_mw;
    double gamma_min;
    std::vector<Term> interferers;
    int backhaul_index;  // access links: index into backhaul_ of the server, or -1
  };

  double link_sinr(const Link& link, const std::vector<double>& p_mw) const;
  void powers_mw(const PowerVector& powers, double backoff_db, std::vector<double>& out) const;

  std::vector<Link> access_;
  std::vector<Link> backhaul_;
  std::size_t genes_ = 0;
};

/// Fresh trial: topology, rain rate, shadowing and fading come from streams
/// derived from (seed, trial), so a trial is reproducible in isolation.
TrialInstance make_trial(const ScenarioConfig& config, const ChannelParams& base_params,
                         std::uint64_t seed, std::uint64_t trial);

/// Channel parameters for a config, loading the rain table only when k or
/// gamma are not overridden.
ChannelParams channel_params_for(const ScenarioConfig& config);

using PowerPolicy = std::function<PowerVector(const TrialInstance& trial,
                                              const CoverageEvaluator& evaluator,
                                              std::uint64_t seed, std::uint64_t trial_index)>;

/// Called once per trial, possibly from several threads at once (never twice
/// for the same trial index).
using TrialObserver =
    std::function<void(std::size_t trial_index, const TrialInstance& trial,
                       const PowerVector& powers, const CoverageResult& result)>;

struct MonteCarloResult {
  double mean = 0.0;
  double std_error = 0.0;
  std::vector<double> per_trial;
};

/// Runs `trials` independent trials (rebuilding topology, association,
/// allocation and channel each time), applies the policy and averages
/// coverage. Results do not depend on `config.threads`.
MonteCarloResult monte_carlo_coverage(const ScenarioConfig& config, const PowerPolicy& policy,
                                      int trials, std::uint64_t seed,
                                      const TrialObserver& observer = {});

/// Runs body(i) for i in [0, count) on up to `threads` workers (0: hardware
/// concurrency). The first exception is rethrown after all workers stop.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& body);

}  // namespace iabsim
