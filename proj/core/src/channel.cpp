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

#include "iabsim/channel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "iabsim/config.hpp"
#include "iabsim/errors.hpp"
#include "iabsim/rain_table.hpp"
#include "iabsim/topology.hpp"

namespace iabsim {

// ---- RbSet ------------------------------------------------------------------

RbSet::RbSet(std::initializer_list<int> rbs) : RbSet(std::vector<int>(rbs)) {}

RbSet::RbSet(std::vector<int> rbs) : rbs_(std::move(rbs)) {
  std::sort(rbs_.begin(), rbs_.end());
  rbs_.erase(std::unique(rbs_.begin(), rbs_.end()), rbs_.end());
}

std::size_t RbSet::overlap(const RbSet& other) const {
  std::size_t n = 0;
  auto a = rbs_.begin();
  auto b = other.rbs_.begin();
  while (a != rbs_.end() && b != other.rbs_.end()) {
    if (*a < *b) {
      ++a;
    } else if (*b < *a) {
      ++b;
    } else {
      ++n;
      ++a;
      ++b;
    }
  }
  return n;
}

RbSet RbSet::united(const RbSet& other) const {
  std::vector<int> out;
  out.reserve(rbs_.size() + other.rbs_.size());
  std::set_union(rbs_.begin(), rbs_.end(), other.rbs_.begin(), other.rbs_.end(),
                 std::back_inserter(out));
  RbSet r;
  r.rbs_ = std::move(out);
  return r;
}

double overlap_fraction(const RbSet& interferer, const RbSet& victim) {
  if (victim.empty()) {
    return 0.0;
  }
  return static_cast<double>(interferer.overlap(victim)) / static_cast<double>(victim.size());
}

// ---- Parameters ---------------------------------------------------------------

void ChannelParams::validate() const {
  if (!(carrier_ghz > 0.0)) throw ValidationError("fc_ghz", "carrier frequency must be > 0");
  if (!(pathloss_exponent >= 2.0)) throw ValidationError("alpha", "pathloss exponent must be >= 2");
  if (!(shadowing_std_db >= 0.0)) throw ValidationError("shadow_db", "must be >= 0");
  if (!(rain_rate_mm_h >= 0.0)) throw ValidationError("rain_range", "rain rate must be >= 0");
  if (!(rain_k > 0.0)) throw ValidationError("rain_k", "must be > 0");
  if (!(rain_gamma > 0.0 && rain_gamma < 2.0)) {
    throw ValidationError("rain_gamma", "must lie in (0, 2)");
  }
  if (!(speed_of_light_m_s > 0.0)) throw ValidationError("speed_of_light", "must be > 0");
  if (!(ref_distance_m > 0.0)) throw ValidationError("ref_distance_m", "must be > 0");
}

ChannelParams ChannelParams::from_config(const ScenarioConfig& config, const RainTable* table) {
  ChannelParams p;
  p.carrier_ghz = config.carrier_ghz;
  p.pathloss_exponent = config.pathloss_exponent;
  p.shadowing_std_db = config.shadowing_std_db;
  p.rx_gain_db = config.rx_gain_db;
  p.noise_figure_db = config.noise_figure_db;
  p.thermal_noise_dbm_hz = config.thermal_noise_dbm_hz;
  p.eff_bs_height_m = config.eff_antenna_height_m;
  p.eff_ue_height_m = config.eff_antenna_height_m;
  p.speed_of_light_m_s = config.speed_of_light_m_s;
  p.ref_distance_m = config.ref_distance_m;
  p.pathloss_literal = config.pathloss_literal;
  p.shadowing_enabled = config.shadowing_enabled;
  p.fading_enabled = config.fading_enabled;

  RainCoefficients tabulated;
  if (config.rain_k <= 0.0 || config.rain_gamma <= 0.0) {
    if (table == nullptr) {
      throw std::invalid_argument("rain coefficients not overridden and no table supplied");
    }
    tabulated = table->at(config.carrier_ghz);
  }
  p.rain_k = config.rain_k > 0.0 ? config.rain_k : tabulated.k;
  p.rain_gamma = config.rain_gamma > 0.0 ? config.rain_gamma : tabulated.gamma;
  p.validate();
  return p;
}

double NoiseModel::power_dbm() const {
  return thermal_dbm_per_hz + 10.0 * std::log10(bandwidth_hz) + noise_figure_db;
}

double NoiseModel::power_mw() const { return dbm_to_mw(power_dbm()); }

double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

// ---- Link budget --------------------------------------------------------------

double breakpoint_distance(const ChannelParams& params) {
  const double fc_hz = params.carrier_ghz * 1e9;
  return 4.0 * params.eff_bs_height_m * params.eff_ue_height_m * fc_hz / params.speed_of_light_m_s;
}

double pathloss_uma(double d3d_m, double h_bs_m, double h_ue_m, const ChannelParams& params) {
  if (!(d3d_m > 0.0)) {
    throw std::invalid_argument("pathloss_uma: distance must be positive, got " +
                                std::to_string(d3d_m));
  }
  const double d = std::max(d3d_m, params.ref_distance_m);
  const double d_bp = breakpoint_distance(params);
  const double dh = h_bs_m - h_ue_m;
  const double correction = d_bp * d_bp + dh * dh;
  const double correction_db =
      params.pathloss_literal ? 10.0 * correction : 10.0 * std::log10(correction);
  return 32.4 + 10.0 * params.pathloss_exponent * std::log10(d) +
         20.0 * std::log10(params.carrier_ghz) - correction_db;
}

double rain_attenuation(double rain_rate_mm_h, double path_km, const ChannelParams& params) {
  if (rain_rate_mm_h <= 0.0 || path_km <= 0.0) {
    return 0.0;
  }
  return params.rain_k * std::pow(rain_rate_mm_h, params.rain_gamma) * path_km;
}

double sample_shadowing(RngStream& rng, double std_db) { return rng.normal(0.0, std_db); }

double sample_fading(RngStream& rng) {
  // g ~ Exp(1) is strictly positive with probability one; guard the log anyway.
  const double g = std::max(rng.exponential(1.0), 1e-300);
  return -10.0 * std::log10(g);
}

double received_power(double eirp_dbm, const LinkSample& link, const ChannelParams& params) {
  return eirp_dbm + params.rx_gain_db - link.pathloss_db - link.shadowing_db - link.rain_db -
         link.fading_db;
}

// ---- Realization ----------------------------------------------------------------

ChannelRealization::ChannelRealization(std::size_t node_count, ChannelParams params)
    : n_(node_count),
      params_(params),
      links_(node_count * node_count),
      present_(node_count * node_count, 0) {}

std::size_t ChannelRealization::index(int tx_id, int rx_id) const {
  if (tx_id < 0 || rx_id < 0 || static_cast<std::size_t>(tx_id) >= n_ ||
      static_cast<std::size_t>(rx_id) >= n_) {
    throw std::out_of_range("link (" + std::to_string(tx_id) + " -> " + std::to_string(rx_id) +
                            ") outside realization");
  }
  return static_cast<std::size_t>(tx_id) * n_ + static_cast<std::size_t>(rx_id);
}

void ChannelRealization::set(const LinkSample& sample) {
  const std::size_t i = index(sample.tx_id, sample.rx_id);
  links_[i] = sample;
  present_[i] = 1;
}

bool ChannelRealization::has(int tx_id, int rx_id) const {
  if (tx_id < 0 || rx_id < 0 || static_cast<std::size_t>(tx_id) >= n_ ||
      static_cast<std::size_t>(rx_id) >= n_) {
    return false;
  }
  return present_[static_cast<std::size_t>(tx_id) * n_ + static_cast<std::size_t>(rx_id)] != 0;
}

const LinkSample& ChannelRealization::link(int tx_id, int rx_id) const {
  const std::size_t i = index(tx_id, rx_id);
  if (present_[i] == 0) {
    throw std::out_of_range("link (" + std::to_string(tx_id) + " -> " + std::to_string(rx_id) +
                            ") missing from realization");
  }
  return links_[i];
}

ChannelRealization sample_realization(const Topology& topology, const ChannelParams& params,
                                      RngStream& shadowing_rng, RngStream& fading_rng) {
  ChannelRealization real(topology.nodes.size(), params);
  for (const auto& tx : topology.nodes) {
    if (tx.role == NodeRole::Donor) {
      continue;
    }
    for (const auto& rx : topology.nodes) {
      if (rx.role == NodeRole::Ue || rx.id == tx.id) {
        continue;
      }
      LinkSample s;
      s.tx_id = tx.id;
      s.rx_id = rx.id;
      s.d3d_m = std::max(distance_3d(tx, rx), params.ref_distance_m);
      s.pathloss_db = pathloss_uma(s.d3d_m, rx.height_m, tx.height_m, params);
      // Draw even when disabled so enabling one effect never shifts the other's stream.
      const double shadow = sample_shadowing(shadowing_rng, params.shadowing_std_db);
      const double fade = sample_fading(fading_rng);
      s.shadowing_db = params.shadowing_enabled ? shadow : 0.0;
      s.fading_db = params.fading_enabled ? fade : 0.0;
      s.rain_db = rain_attenuation(params.rain_rate_mm_h, s.d3d_m / 1000.0, params);
      real.set(s);
    }
  }
  return real;
}

double interference_at(int victim_rx_id, const RbSet& victim_rbs,
                       std::span<const CoSlotTransmitter> co_slot,
                       const ChannelRealization& realization) {
  double total_mw = 0.0;
  for (const auto& tx : co_slot) {
    if (tx.tx_id == victim_rx_id) {
      continue;
    }
    const double frac = overlap_fraction(tx.rbs, victim_rbs);
    if (frac == 0.0) {
      continue;
    }
    const LinkSample& link = realization.link(tx.tx_id, victim_rx_id);
    total_mw += frac * dbm_to_mw(received_power(tx.eirp_dbm, link, realization.params()));
  }
  return total_mw;
}

double sinr(double rx_power_dbm, double interference_mw, const NoiseModel& noise) {
  return dbm_to_mw(rx_power_dbm) / (interference_mw + noise.power_mw());
}

double achievable_rate(double gamma, double bandwidth_hz) {
  return bandwidth_hz * std::log2(1.0 + gamma);
}

double min_sinr(double rate_bps, double bandwidth_hz) {
  return std::exp2(rate_bps / bandwidth_hz) - 1.0;
}

}  // namespace iabsim
