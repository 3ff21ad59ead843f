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

#include "iabsim/config.hpp"
#include "iabsim/coverage.hpp"
#include "iabsim/ga.hpp"

namespace iabsim {

/// Every node at the top of its EIRP range.
PowerPolicy max_power_policy();

/// Every gene uniform within its range, drawn from the trial's RandomPower stream.
PowerPolicy random_power_policy();

/// Per-trial elitist search against the trial's frozen realization. The search
/// seed is derived from (seed, trial), so trials stay independent.
PowerPolicy ga_power_policy(const GaParams& params);

PowerPolicy make_policy(PowerPolicyKind kind, const ScenarioConfig& config);

/// Seed of the search run for `trial` under the run seed `seed`.
std::uint64_t ga_seed_for_trial(std::uint64_t seed, std::uint64_t trial);

}  // namespace iabsim
