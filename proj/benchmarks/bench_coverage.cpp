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

using namespace iabsim;

namespace {

TrialInstance instance(int ues, SlotMode mode) {
  ScenarioConfig cfg;
  cfg.num_ues = ues;
  cfg.slot_mode = mode;
  return make_trial(cfg, channel_params_for(cfg), 1, 0);
}

void BM_EvaluatorCoverage(benchmark::State& state) {
  const TrialInstance inst = instance(static_cast<int>(state.range(0)), SlotMode::Separated);
  const CoverageEvaluator ev(inst, {1e6});
  const PowerVector p = max_power(inst.layout);
  for (auto _ : state) benchmark::DoNotOptimize(ev.coverage(p));
}
BENCHMARK(BM_EvaluatorCoverage)->Arg(5)->Arg(19)->Arg(50);

void BM_ReferenceEvaluate(benchmark::State& state) {
  const TrialInstance inst = instance(static_cast<int>(state.range(0)), SlotMode::Separated);
  const PowerVector p = max_power(inst.layout);
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_trial(inst, p, {1e6}));
}
BENCHMARK(BM_ReferenceEvaluate)->Arg(5)->Arg(19)->Arg(50);

void BM_MakeTrial(benchmark::State& state) {
  ScenarioConfig cfg;
  cfg.num_ues = static_cast<int>(state.range(0));
  const ChannelParams base = channel_params_for(cfg);
  std::uint64_t t = 0;
  for (auto _ : state) benchmark::DoNotOptimize(make_trial(cfg, base, 1, t++));
}
BENCHMARK(BM_MakeTrial)->Arg(19)->Arg(50);

}  // namespace
