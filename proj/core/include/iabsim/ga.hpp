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
#include <vector>

#include "iabsim/power.hpp"
#include "iabsim/rng.hpp"

namespace iabsim {

/// Hyperparameters of the elitist power-control search.
struct GaParams {
  int iterations = 200;          // N
  int population = 20;           // K
  int neighborhood = 10;         // S: mutants generated around the queen
  double mutation_step_db = 3.0;
  double mutation_prob = 0.15;
  double quantum_db = 0.0;       // > 0 restricts genes to a grid anchored at each range minimum
  std::uint64_t seed = 1;

  /// V = K - S - 1 fresh random candidates per generation.
  int immigrants() const { return population - neighborhood - 1; }

  /// Throws ValidationError when the invariants S < K, V >= 0, N >= 1, K >= 2,
  /// step > 0 and prob in (0, 1] do not hold.
  void validate() const;
};

using FitnessFn = std::function<double(const PowerVector&)>;

struct GaResult {
  PowerVector queen;
  double queen_fitness = 0.0;
  double queen_power_mw = 0.0;
  std::vector<double> trace;  // queen fitness after each of the N iterations
  std::size_t evaluations = 0;
};

/// K vectors with every gene uniform within its role range.
std::vector<PowerVector> init_population(const GaParams& params, const GeneLayout& layout,
                                         RngStream& rng);

/// Perturbs each gene with probability `mutation_prob` by a uniform step in
/// [-step, +step], clamped to the gene's range. When no gene was selected one
/// gene is forced to move, so the result always differs from the queen unless
/// every range is degenerate.
PowerVector mutate_around_queen(const PowerVector& queen, const GeneLayout& layout,
                                const GaParams& params, RngStream& rng);

/// Snaps a value onto the `quantum_db` grid of `range` (no-op when quantum <= 0).
double snap_to_grid(double value, const Range& range, double quantum_db);

/// Elitist search. Evaluates the initial K candidates, then for N iterations
/// rebuilds the population as queen + S mutants + V immigrants and evaluates
/// all K of them, so fitness is called exactly K * (N + 1) times. The queen is
/// the best candidate by (fitness desc, total linear power asc, index asc).
/// Throws std::logic_error if re-evaluating the queen yields a different
/// fitness, since the search requires a deterministic landscape.
GaResult optimize(const GeneLayout& layout, const FitnessFn& fitness, const GaParams& params);

}  // namespace iabsim
