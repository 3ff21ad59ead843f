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

#include "iabsim/policy.hpp"

namespace iabsim {

PowerPolicy max_power_policy() {
  return [](const TrialInstance& trial, const CoverageEvaluator&, std::uint64_t, std::uint64_t) {
    return max_power(trial.layout);
  };
}

PowerPolicy random_power_policy() {
  return [](const TrialInstance& trial, const CoverageEvaluator&, std::uint64_t seed,
            std::uint64_t trial_index) {
    RngStream rng = RngStream::derive(seed, trial_index, StreamPurpose::RandomPower);
    PowerVector p;
    for (std::size_t g = 0; g < trial.layout.size(); ++g) {
      p.eirp_dbm.push_back(rng.uniform(trial.layout.range(g).lo, trial.layout.range(g).hi));
    }
    return p;
  };
}

std::uint64_t ga_seed_for_trial(std::uint64_t seed, std::uint64_t trial) {
  return RngStream::derive(seed, trial, StreamPurpose::GeneticAlgorithm).next_u64();
}

PowerPolicy ga_power_policy(const GaParams& params) {
  params.validate();
  return [params](const TrialInstance& trial, const CoverageEvaluator& evaluator, std::uint64_t seed,
                  std::uint64_t trial_index) {
    GaParams p = params;
    p.seed = ga_seed_for_trial(seed, trial_index);
    const GaResult r = optimize(
        trial.layout, [&](const PowerVector& v) { return evaluator.coverage(v); }, p);
    return r.queen;
  };
}

PowerPolicy make_policy(PowerPolicyKind kind, const ScenarioConfig& config) {
  switch (kind) {
    case PowerPolicyKind::Max:
      return max_power_policy();
    case PowerPolicyKind::Random:
      return random_power_policy();
    case PowerPolicyKind::Ga:
      return ga_power_policy(config.ga);
  }
  return max_power_policy();
}

}  // namespace iabsim
