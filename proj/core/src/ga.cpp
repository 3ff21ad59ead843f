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

#include "iabsim/ga.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "iabsim/errors.hpp"

namespace iabsim {

void GaParams::validate() const {
  if (iterations < 1) throw ValidationError("ga_iterations", "N must be >= 1");
  if (population < 2) throw ValidationError("ga_population", "K must be >= 2");
  if (neighborhood < 0 || neighborhood >= population) {
    throw ValidationError("ga_neighborhood", "S must satisfy 0 <= S < K");
  }
  if (immigrants() < 0) throw ValidationError("ga_neighborhood", "V = K - S - 1 must be >= 0");
  if (!(mutation_step_db > 0.0)) throw ValidationError("ga_mutation_step_db", "must be > 0");
  if (!(mutation_prob > 0.0 && mutation_prob <= 1.0)) {
    throw ValidationError("ga_mutation_prob", "must lie in (0, 1]");
  }
  if (quantum_db < 0.0) throw ValidationError("ga_quantum_db", "must be >= 0");
}

double snap_to_grid(double value, const Range& range, double quantum_db) {
  if (quantum_db <= 0.0) {
    return range.clamp(value);
  }
  const double top_steps = std::floor(range.width() / quantum_db + 1e-9);
  double steps = std::round((value - range.lo) / quantum_db);
  steps = std::clamp(steps, 0.0, top_steps);
  return range.lo + steps * quantum_db;
}

namespace {

double random_gene(const Range& range, double quantum_db, RngStream& rng) {
  if (quantum_db <= 0.0) {
    return rng.uniform(range.lo, range.hi);
  }
  const auto top_steps = static_cast<std::uint64_t>(std::floor(range.width() / quantum_db + 1e-9));
  const std::uint64_t k = std::uniform_int_distribution<std::uint64_t>(0, top_steps)(rng.engine());
  return range.lo + static_cast<double>(k) * quantum_db;
}

PowerVector random_vector(const GeneLayout& layout, double quantum_db, RngStream& rng) {
  PowerVector v;
  v.eirp_dbm.reserve(layout.size());
  for (std::size_t g = 0; g < layout.size(); ++g) {
    v.eirp_dbm.push_back(random_gene(layout.range(g), quantum_db, rng));
  }
  return v;
}

double perturb(double gene, const Range& range, const GaParams& params, RngStream& rng, bool must_change) {
  double step = rng.uniform(-params.mutation_step_db, params.mutation_step_db);
  if (must_change && params.quantum_db > 0.0 && std::abs(step) < params.quantum_db) {
    step = step < 0.0 ? -params.quantum_db : params.quantum_db;
  }
  double out = snap_to_grid(gene + step, range, params.quantum_db);
  if (must_change && out == gene) {
    // pinned against a bound: move the other way instead
    out = snap_to_grid(gene - step, range, params.quantum_db);
  }
  return out;
}

struct Scored {
  double fitness;
  double power_mw;
};

// (fitness desc, power asc); equal keys keep the earlier index.
bool better(const Scored& a, const Scored& b) {
  if (a.fitness != b.fitness) {
    return a.fitness > b.fitness;
  }
  return a.power_mw < b.power_mw;
}

}  // namespace

std::vector<PowerVector> init_population(const GaParams& params, const GeneLayout& layout,
                                         RngStream& rng) {
  std::vector<PowerVector> pop;
  pop.reserve(static_cast<std::size_t>(params.population));
  for (int i = 0; i < params.population; ++i) {
    pop.push_back(random_vector(layout, params.quantum_db, rng));
  }
  return pop;
}

PowerVector mutate_around_queen(const PowerVector& queen, const GeneLayout& layout,
                                const GaParams& params, RngStream& rng) {
  PowerVector child = queen;
  bool any = false;
  for (std::size_t g = 0; g < layout.size(); ++g) {
    if (rng.bernoulli(params.mutation_prob)) {
      child[g] = perturb(queen[g], layout.range(g), params, rng, false);
      any = true;
    }
  }
  if (!any && !layout.empty()) {
    const auto g = std::uniform_int_distribution<std::size_t>(0, layout.size() - 1)(rng.engine());
    child[g] = perturb(queen[g], layout.range(g), params, rng, true);
  }
  return child;
}

GaResult optimize(const GeneLayout& layout, const FitnessFn& fitness, const GaParams& params) {
  params.validate();
  const auto k = static_cast<std::size_t>(params.population);
  const auto s = static_cast<std::size_t>(params.neighborhood);

  GaResult result;
  result.trace.reserve(static_cast<std::size_t>(params.iterations));

  // Each generation draws from its own stream so candidate generation does not
  // depend on how (or in what order) fitness evaluations are scheduled.
  RngStream init_rng = RngStream::derive(params.seed, 0, StreamPurpose::GeneticAlgorithm, 0);
  std::vector<PowerVector> population = init_population(params, layout, init_rng);
  std::vector<Scored> scores(k);

  auto evaluate_all = [&] {
    for (std::size_t i = 0; i < k; ++i) {
      scores[i] = {fitness(population[i]), total_power_mw(population[i])};
    }
    result.evaluations += k;
    std::size_t best = 0;
    for (std::size_t i = 1; i < k; ++i) {
      if (better(scores[i], scores[best])) {
        best = i;
      }
    }
    return best;
  };

  std::size_t best = evaluate_all();
  for (int iter = 1; iter <= params.iterations; ++iter) {
    PowerVector queen = population[best];
    const Scored queen_score = scores[best];

    RngStream gen_rng = RngStream::derive(params.seed, static_cast<std::uint64_t>(iter),
                                          StreamPurpose::GeneticAlgorithm, 0);
    std::vector<PowerVector> next;
    next.reserve(k);
    next.push_back(queen);
    for (std::size_t i = 0; i < s; ++i) {
      next.push_back(mutate_around_queen(queen, layout, params, gen_rng));
    }
    while (next.size() < k) {
      next.push_back(random_vector(layout, params.quantum_db, gen_rng));
    }
    population = std::move(next);

    best = evaluate_all();
    if (scores[0].fitness != queen_score.fitness) {
      throw std::logic_error("fitness is not deterministic: the queen re-evaluated differently");
    }
    result.trace.push_back(scores[best].fitness);
  }

  result.queen = population[best];
  result.queen_fitness = scores[best].fitness;
  result.queen_power_mw = scores[best].power_mw;
  return result;
}

}  // namespace iabsim
