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

#include "iabsim/rng.hpp"

namespace iabsim {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

RngStream::RngStream(std::uint64_t state) : engine_(state) {}

RngStream RngStream::derive(std::uint64_t seed, std::uint64_t trial, StreamPurpose purpose,
                            std::uint64_t sub) {
  std::uint64_t h = splitmix64(seed);
  h = splitmix64(h ^ trial);
  h = splitmix64(h ^ static_cast<std::uint64_t>(purpose));
  h = splitmix64(h ^ sub);
  return RngStream(h);
}

double RngStream::uniform(double lo, double hi) {
  if (lo == hi) {
    return lo;
  }
  return std::uniform_real_distribution<double>(lo, hi)(engine_);
}

double RngStream::normal(double mean, double stddev) {
  if (stddev == 0.0) {
    return mean;
  }
  return std::normal_distribution<double>(mean, stddev)(engine_);
}

double RngStream::exponential(double mean) {
  return std::exponential_distribution<double>(1.0 / mean)(engine_);
}

std::uint64_t RngStream::poisson(double mean) {
  if (mean <= 0.0) {
    return 0;
  }
  return std::poisson_distribution<std::uint64_t>(mean)(engine_);
}

bool RngStream::bernoulli(double p) {
  return std::bernoulli_distribution(p)(engine_);
}

}  // namespace iabsim
