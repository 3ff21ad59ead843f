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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "iabsim/config.hpp"
#include "iabsim/coverage.hpp"
#include "iabsim/errors.hpp"
#include "iabsim/ga.hpp"

using namespace iabsim;

namespace {

GeneLayout reference_layout(int ues = 19, int iabs = 4) {
  std::vector<int> ids;
  std::vector<NodeRole> roles;
  std::vector<Range> ranges;
  for (int i = 0; i < iabs; ++i) {
    ids.push_back(1 + i);
    roles.push_back(NodeRole::IabNode);
    ranges.push_back({35, 53});
  }
  for (int i = 0; i < ues; ++i) {
    ids.push_back(1 + iabs + i);
    roles.push_back(NodeRole::Ue);
    ranges.push_back({23, 43});
  }
  return GeneLayout(ids, roles, ranges);
}

}  // namespace

TEST(GaParams, Validation) {
  GaParams p;
  EXPECT_NO_THROW(p.validate());
  EXPECT_EQ(p.immigrants(), 9);
  auto expect_key = [](GaParams q, const char* key) {
    try {
      q.validate();
      ADD_FAILURE() << "accepted invalid " << key;
    } catch (const ValidationError& e) {
      EXPECT_EQ(e.key(), key);
    }
  };
  GaParams q = p;
  q.neighborhood = 20;
  expect_key(q, "ga_neighborhood");
  q = p;
  q.iterations = 0;
  expect_key(q, "ga_iterations");
  q = p;
  q.population = 1;
  q.neighborhood = 0;
  expect_key(q, "ga_population");
  q = p;
  q.mutation_step_db = 0;
  expect_key(q, "ga_mutation_step_db");
  q = p;
  q.mutation_prob = 1.5;
  expect_key(q, "ga_mutation_prob");
}

TEST(GaInit, ShapeAndBounds) {
  const GeneLayout layout = reference_layout();
  GaParams p;
  RngStream rng(1);
  const auto pop = init_population(p, layout, rng);
  ASSERT_EQ(pop.size(), 20u);
  for (const auto& v : pop) {
    EXPECT_EQ(v.size(), 23u);
  }
  RngStream again(1);
  const auto pop2 = init_population(p, layout, again);
  for (std::size_t i = 0; i < pop.size(); ++i) {
    EXPECT_EQ(pop[i].eirp_dbm, pop2[i].eirp_dbm);
  }
  RngStream many(2);
  for (int i = 0; i < 500; ++i) {
    for (const auto& v : init_population(p, layout, many)) {
      ASSERT_TRUE(within_bounds(v, layout));
    }
  }
}

TEST(GaMutation, ForcedSingleGene) {
  const GeneLayout layout = reference_layout();
  GaParams p;
  p.mutation_prob = 1e-12;
  RngStream rng(3);
  PowerVector queen;
  for (std::size_t g = 0; g < layout.size(); ++g) queen.eirp_dbm.push_back(layout.range(g).lo);
  for (int i = 0; i < 1000; ++i) {
    const PowerVector child = mutate_around_queen(queen, layout, p, rng);
    int changed = 0;
    for (std::size_t g = 0; g < child.size(); ++g) changed += child[g] != queen[g];
    ASSERT_EQ(changed, 1);
  }
}

TEST(GaMutation, BoundedStepAndClamping) {
  const GeneLayout layout = reference_layout();
  GaParams p;
  RngStream rng(4);
  RngStream init(5);
  const auto pop = init_population(p, layout, init);
  double max_delta = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const PowerVector& queen = pop[static_cast<std::size_t>(i) % pop.size()];
    const PowerVector child = mutate_around_queen(queen, layout, p, rng);
    ASSERT_TRUE(within_bounds(child, layout));
    for (std::size_t g = 0; g < child.size(); ++g) {
      max_delta = std::max(max_delta, std::abs(child[g] - queen[g]));
    }
  }
  EXPECT_LE(max_delta, p.mutation_step_db);
  EXPECT_GT(max_delta, 0.9 * p.mutation_step_db);
}

TEST(GaMutation, GridModeStaysOnGrid) {
  const GeneLayout layout = reference_layout(1, 1);
  GaParams p;
  p.quantum_db = 1.0;
  RngStream rng(6);
  RngStream init(7);
  for (const auto& v : init_population(p, layout, init)) {
    for (std::size_t g = 0; g < v.size(); ++g) {
      EXPECT_EQ(v[g], std::round(v[g]));
    }
  }
  PowerVector q{{53.0, 23.0}};
  for (int i = 0; i < 1000; ++i) {
    const PowerVector c = mutate_around_queen(q, layout, p, rng);
    ASSERT_TRUE(within_bounds(c, layout));
    for (std::size_t g = 0; g < c.size(); ++g) ASSERT_EQ(c[g], std::round(c[g]));
  }
  EXPECT_EQ(snap_to_grid(40.6, {35, 53}, 1.0), 41.0);
  EXPECT_EQ(snap_to_grid(99.0, {35, 53}, 1.0), 53.0);
  EXPECT_EQ(snap_to_grid(38.2, {35, 53}, 0.0), 38.2);
}

TEST(GaOptimize, FlatLandscape) {
  const GeneLayout layout = reference_layout();
  GaParams p;
  p.iterations = 50;
  std::vector<PowerVector> seen;
  const GaResult r = optimize(
      layout,
      [&](const PowerVector& v) {
        seen.push_back(v);
        return 1.0;
      },
      p);
  EXPECT_EQ(r.queen_fitness, 1.0);
  ASSERT_EQ(r.trace.size(), 50u);
  for (double t : r.trace) EXPECT_EQ(t, 1.0);
  // Flat fitness leaves only the power tie-break: the queen is the cheapest candidate seen.
  double cheapest = 1e300;
  for (const auto& v : seen) cheapest = std::min(cheapest, total_power_mw(v));
  EXPECT_EQ(r.queen_power_mw, cheapest);
  EXPECT_EQ(total_power_mw(r.queen), cheapest);
}

TEST(GaOptimize, GenerationComposition) {
  const GeneLayout layout = reference_layout(5, 2);
  GaParams p;
  p.iterations = 30;
  std::vector<PowerVector> seen;
  const GaResult r = optimize(
      layout,
      [&](const PowerVector& v) {
        seen.push_back(v);
        return -std::abs(v[0] - 44.0) - std::abs(v[3] - 30.0);
      },
      p);
  const std::size_t k = 20;
  ASSERT_EQ(r.evaluations, k * 31);
  ASSERT_EQ(seen.size(), k * 31);
  auto fitness = [](const PowerVector& v) { return -std::abs(v[0] - 44.0) - std::abs(v[3] - 30.0); };
  for (std::size_t gen = 1; gen <= 30; ++gen) {
    // Best of the previous generation (ties to lower power, then lower index).
    std::size_t best = (gen - 1) * k;
    for (std::size_t i = best + 1; i < gen * k; ++i) {
      const double fi = fitness(seen[i]);
      const double fb = fitness(seen[best]);
      if (fi > fb || (fi == fb && total_power_mw(seen[i]) < total_power_mw(seen[best]))) best = i;
    }
    const PowerVector& queen = seen[best];
    EXPECT_EQ(seen[gen * k].eirp_dbm, queen.eirp_dbm);
    for (std::size_t m = 1; m <= 10; ++m) {
      const PowerVector& mutant = seen[gen * k + m];
      for (std::size_t g = 0; g < mutant.size(); ++g) {
        ASSERT_LE(std::abs(mutant[g] - queen[g]), p.mutation_step_db + 1e-12);
      }
    }
  }
  for (const auto& v : seen) ASSERT_TRUE(within_bounds(v, layout));
  for (std::size_t i = 1; i < r.trace.size(); ++i) ASSERT_GE(r.trace[i], r.trace[i - 1]);
}

TEST(GaOptimize, Deterministic) {
  const GeneLayout layout = reference_layout(6, 2);
  GaParams p;
  p.iterations = 40;
  p.seed = 99;
  auto f = [](const PowerVector& v) { return std::sin(v[0]) + std::cos(v[5] / 3.0); };
  const GaResult a = optimize(layout, f, p);
  const GaResult b = optimize(layout, f, p);
  EXPECT_EQ(a.queen.eirp_dbm, b.queen.eirp_dbm);
  EXPECT_EQ(a.trace, b.trace);
  p.seed = 100;
  EXPECT_NE(optimize(layout, f, p).queen.eirp_dbm, a.queen.eirp_dbm);
}

TEST(GaOptimize, NonDeterministicFitnessIsCaught) {
  const GeneLayout layout = reference_layout(2, 1);
  GaParams p;
  p.iterations = 5;
  int calls = 0;
  EXPECT_THROW(optimize(layout, [&](const PowerVector&) { return static_cast<double>(++calls); }, p),
               std::logic_error);
}

namespace {

// One donor-served UE with no IAB nodes, averaged over fading draws: more
// power can only help.
struct SingleUe {
  std::vector<TrialInstance> trials;
  std::vector<CoverageEvaluator> evaluators;

  explicit SingleUe(int n) {
    ScenarioConfig cfg;
    cfg.num_iab_per_cell = 0;
    cfg.num_ues = 1;
    cfg.ue_positions = {{190.0, 0.0}};
    cfg.min_rate_bps = 6e7;  // needs about 63 dB SINR on 2 RBs
    const ChannelParams base = channel_params_for(cfg);
    for (int t = 0; t < n; ++t) trials.push_back(make_trial(cfg, base, 5, static_cast<std::uint64_t>(t)));
    for (const auto& t : trials) evaluators.emplace_back(t, ServiceRequirement{cfg.min_rate_bps});
  }

  double operator()(const PowerVector& p) const {
    double s = 0.0;
    for (const auto& e : evaluators) s += e.coverage(p);
    return s / static_cast<double>(evaluators.size());
  }
};

}  // namespace

TEST(GaOptimize, SingleUeFindsTheSweepOptimum) {
  const SingleUe fit(200);
  const GeneLayout& layout = fit.trials.front().layout;
  ASSERT_EQ(layout.size(), 1u);
  // Oracle: 0.1 dB sweep; the lowest power reaching the best fitness.
  double best_f = -1.0;
  double best_p = 0.0;
  for (int i = 0; i <= 200; ++i) {
    const double dbm = 23.0 + 0.1 * i;
    const double f = fit(PowerVector{{dbm}});
    if (f > best_f) {
      best_f = f;
      best_p = dbm;
    }
  }
  ASSERT_GT(best_p, 40.0) << "instance should favour high power";
  GaParams p;
  const GaResult r = optimize(layout, std::cref(fit), p);
  EXPECT_GE(r.queen_fitness, best_f);
  EXPECT_LE(std::abs(r.queen[0] - 43.0), p.mutation_step_db);
}

TEST(GaOptimize, TwoGeneGridMatchesExhaustiveSearch) {
  ScenarioConfig cfg;
  cfg.num_iab_per_cell = 1;
  cfg.num_ues = 1;
  cfg.ue_positions = {{140.0, 30.0}};
  cfg.slot_mode = SlotMode::Simultaneous;
  cfg.min_rate_bps = 4e7;
  const ChannelParams base = channel_params_for(cfg);
  std::vector<TrialInstance> trials;
  for (int t = 0; t < 64; ++t) trials.push_back(make_trial(cfg, base, 8, static_cast<std::uint64_t>(t)));
  std::vector<CoverageEvaluator> evs;
  for (const auto& t : trials) evs.emplace_back(t, ServiceRequirement{cfg.min_rate_bps});
  auto fitness = [&](const PowerVector& p) {
    double s = 0.0;
    for (const auto& e : evs) s += e.coverage(p);
    return s / 64.0;
  };
  const GeneLayout& layout = trials.front().layout;
  ASSERT_EQ(layout.size(), 2u);
  double grid_best = -1.0;
  for (double a = layout.range(0).lo; a <= layout.range(0).hi; a += 1.0) {
    for (double b = layout.range(1).lo; b <= layout.range(1).hi; b += 1.0) {
      grid_best = std::max(grid_best, fitness(PowerVector{{a, b}}));
    }
  }
  GaParams p;
  p.iterations = 500;
  p.quantum_db = 1.0;
  const GaResult r = optimize(layout, fitness, p);
  EXPECT_GE(r.queen_fitness, grid_best - 0.01);
  EXPECT_LE(r.queen_fitness, grid_best);
}
