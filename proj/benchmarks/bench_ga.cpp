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

#include <benchmark/benchmark.h>

#include "iabsim/config.hpp"
#include "iabsim/coverage.hpp"
#include "iabsim/ga.hpp"

using namespace iabsim;

namespace {

// One full 200-iteration search on a single frozen trial.
void BM_GaOptimizeTrial(benchmark::State& state) {
  ScenarioConfig cfg;
  cfg.num_ues = static_cast<int>(state.range(0));
  cfg.min_rate_bps = 1e6;
  const TrialInstance inst = make_trial(cfg, channel_params_for(cfg), 1, 0);
  const CoverageEvaluator ev(inst, {cfg.min_rate_bps});
  GaParams p;
  std::size_t evals = 0;
  for (auto _ : state) {
    const GaResult r = optimize(inst.layout, [&](const PowerVector& v) { return ev.coverage(v); }, p);
    evals += r.evaluations;
    benchmark::DoNotOptimize(r.queen_fitness);
  }
  state.counters["evals/s"] = benchmark::Counter(static_cast<double>(evals), benchmark::Counter::kIsRate);
}
BENCHMARK(BM_GaOptimizeTrial)->Arg(19)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_Mutation(benchmark::State& state) {
  ScenarioConfig cfg;
  const TrialInstance inst = make_trial(cfg, channel_params_for(cfg), 1, 0);
  const GaParams p;
  RngStream rng(3);
  const PowerVector queen = max_power(inst.layout);
  for (auto _ : state) benchmark::DoNotOptimize(mutate_around_queen(queen, inst.layout, p, rng));
}
BENCHMARK(BM_Mutation);

}  // namespace
