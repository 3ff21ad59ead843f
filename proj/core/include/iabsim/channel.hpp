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

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "iabsim/rb_set.hpp"
#include "iabsim/rng.hpp"

namespace iabsim {

struct ScenarioConfig;
struct Topology;
class RainTable;

/// Link-budget constants. Heights are effective antenna heights for the
/// breakpoint distance; physical node heights come from the topology.
struct ChannelParams {
  double carrier_ghz = 28.0;
  double pathloss_exponent = 4.0;
  double shadowing_std_db = 4.0;
  double rain_rate_mm_h = 0.0;
  double rain_k = 0.2051;
  double rain_gamma = 0.9679;
  double rx_gain_db = 25.0;
  double noise_figure_db = 5.0;
  double thermal_noise_dbm_hz = -174.0;
  double eff_bs_height_m = 1.0;
  double eff_ue_height_m = 1.0;
  double speed_of_light_m_s = 3.0e8;
  double ref_distance_m = 1.0;
  bool pathloss_literal = false;
  bool shadowing_enabled = true;
  bool fading_enabled = true;

  /// Throws ValidationError on fc <= 0, alpha < 2, sigma < 0, R < 0, k <= 0
  /// or gamma outside (0, 2).
  void validate() const;

  /// Rain k/gamma come from the config overrides when set, else from `table`
  /// at the carrier frequency (`table` may be null only when both are set).
  /// The rain rate is left at zero; it is drawn per trial.
  static ChannelParams from_config(const ScenarioConfig& config, const RainTable* table);
};

/// Losses of one directed link in one Monte-Carlo trial (all dB).
struct LinkSample {
  int tx_id = -1;
  int rx_id = -1;
  double d3d_m = 0.0;
  double pathloss_db = 0.0;
  double shadowing_db = 0.0;
  double fading_db = 0.0;
  double rain_db = 0.0;

  double total_loss_db() const { return pathloss_db + shadowing_db + rain_db + fading_db; }
  /// Pathloss plus shadowing: the slow component used for association.
  double long_term_loss_db() const { return pathloss_db + shadowing_db; }
};

struct NoiseModel {
  double thermal_dbm_per_hz = -174.0;
  double bandwidth_hz = 0.0;
  double noise_figure_db = 0.0;

  double power_dbm() const;
  double power_mw() const;
};

double linear_to_db(double linear);

double breakpoint_distance(const ChannelParams& params);

/// Urban-macro pathloss, 10*alpha*log10(d) slope with the breakpoint/height
/// correction term. Distances below the reference distance are clamped to it;
/// non-positive distances throw std::invalid_argument. `pathloss_literal`
/// evaluates the correction term without its logarithm.
double pathloss_uma(double d3d_m, double h_bs_m, double h_ue_m, const ChannelParams& params);

/// k * R^gamma * path_km.
double rain_attenuation(double rain_rate_mm_h, double path_km, const ChannelParams& params);

/// Zero-mean normal with the given standard deviation (dB).
double sample_shadowing(RngStream& rng, double std_db);
/// -10 log10(g) with g ~ Exp(1), i.e. Rayleigh envelope fading as a dB loss.
double sample_fading(RngStream& rng);

/// EIRP + G_r - L - sigma - Y_R - phi.
double received_power(double eirp_dbm, const LinkSample& link, const ChannelParams& params);

/// All sampled links of one trial, indexed by (tx id, rx id).
class ChannelRealization {
 public:
  ChannelRealization() = default;
  ChannelRealization(std::size_t node_count, ChannelParams params);

  void set(const LinkSample& sample);
  bool has(int tx_id, int rx_id) const;
  /// Throws std::out_of_range when the link was never sampled.
  const LinkSample& link(int tx_id, int rx_id) const;

  const ChannelParams& params() const { return params_; }
  std::size_t node_count() const { return n_; }

 private:
  std::size_t index(int tx_id, int rx_id) const;

  std::size_t n_ = 0;
  ChannelParams params_;
  std::vector<LinkSample> links_;
  std::vector<unsigned char> present_;
};

/// Samples every link from a transmitter (UE or IAB node) to a receiver (donor
/// or IAB node), skipping a node's link to itself. `params.rain_rate_mm_h`
/// must already hold the trial's rain rate.
ChannelRealization sample_realization(const Topology& topology, const ChannelParams& params,
                                      RngStream& shadowing_rng, RngStream& fading_rng);

struct CoSlotTransmitter {
  int tx_id = -1;
  double eirp_dbm = 0.0;
  RbSet rbs;
};

/// Sum over transmitters of overlap_fraction * received power, in linear mW.
/// A transmitter located at the victim receiver itself (an IAB node's own MT)
/// is skipped; the caller excludes the victim's own transmitter.
double interference_at(int victim_rx_id, const RbSet& victim_rbs,
                       std::span<const CoSlotTransmitter> co_slot,
                       const ChannelRealization& realization);

/// Linear SINR: P_r / (I + N).
double sinr(double rx_power_dbm, double interference_mw, const NoiseModel& noise);

/// Shannon rate BW * log2(1 + gamma) in bit/s.
double achievable_rate(double gamma, double bandwidth_hz);

/// 2^(R/BW) - 1, the inverse of `achievable_rate`.
double min_sinr(double rate_bps, double bandwidth_hz);

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double dbm_to_mw(double dbm) { return std::pow(10.0, dbm / 10.0); }

}  // namespace iabsim
