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

#include <cstdint>
#include <random>

namespace iabsim {

/// Tags that separate the random streams used within one Monte-Carlo trial.
/// Values are part of the reproducibility contract; never renumber them.
enum class StreamPurpose : std::uint64_t {
  UePlacement = 1,
  Shadowing = 2,
  Fading = 3,
  Rain = 4,
  RandomPower = 5,
  GeneticAlgorithm = 6,
};

/// A 64-bit Mersenne Twister seeded from a splitmix64 hash of
/// (seed, trial, purpose, sub). Streams derived from different keys are
/// independent for all practical purposes, so trials can run in any order
/// (or concurrently) and still draw exactly the same numbers.
class RngStream {
 public:
  explicit RngStream(std::uint64_t state);

  static RngStream derive(std::uint64_t seed, std::uint64_t trial, StreamPurpose purpose,
                          std::uint64_t sub = 0);

  double uniform(double lo, double hi);
  double normal(double mean, double stddev);
  double exponential(double mean);
  std::uint64_t poisson(double mean);
  bool bernoulli(double p);
  std::uint64_t next_u64() { return engine_(); }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace iabsim
