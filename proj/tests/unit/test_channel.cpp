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

#include <cmath>
#include <vector>

#include "iabsim/channel.hpp"
#include "iabsim/rain_table.hpp"
#include "iabsim/topology.hpp"
#include "oracles.hpp"

using namespace iabsim;
namespace orc = iabsim::oracle;

TEST(Channel, BreakpointDistance) {
  ChannelParams p;
  EXPECT_LE(orc::rel_err(breakpoint_distance(p), 4.0 * 28e9 / 3e8), 1e-12);
  EXPECT_NEAR(breakpoint_distance(p), 373.333, 1e-3);
  ChannelParams p2 = p;
  p2.carrier_ghz = 56.0;
  EXPECT_DOUBLE_EQ(breakpoint_distance(p2), 2.0 * breakpoint_distance(p));
  p2.eff_bs_height_m = 0.0;
  EXPECT_EQ(breakpoint_distance(p2), 0.0);
}

TEST(Channel, PathlossHandValue) {
  ChannelParams p;
  const double got = pathloss_uma(100.0, 25.0, 1.5, p);
  EXPECT_LE(orc::rel_err(got, orc::uma_db(100.0, 28.0, 4.0, 25.0, 1.5)), 1e-9);
  EXPECT_NEAR(got, 89.88, 0.01);
  EXPECT_NEAR(pathloss_uma(1000.0, 25.0, 1.5, p) - got, 40.0, 1e-9);
  EXPECT_EQ(pathloss_uma(100.0, 25.0, 1.5, p), got);
}

TEST(Channel, PathlossClampsAndRejects) {
  ChannelParams p;
  EXPECT_EQ(pathloss_uma(0.3, 25.0, 1.5, p), pathloss_uma(1.0, 25.0, 1.5, p));
  EXPECT_THROW(pathloss_uma(0.0, 25.0, 1.5, p), std::invalid_argument);
  EXPECT_THROW(pathloss_uma(-5.0, 25.0, 1.5, p), std::invalid_argument);
}

TEST(Channel, PathlossLiteralFlagDropsTheLog) {
  ChannelParams p;
  p.pathloss_literal = true;
  const double bp = 4.0 * 28e9 / 3e8;
  const double want = 32.4 + 80.0 + 20.0 * std::log10(28.0) - 10.0 * (bp * bp + 23.5 * 23.5);
  EXPECT_LE(orc::rel_err(pathloss_uma(100.0, 25.0, 1.5, p), want), 1e-9);
}

TEST(Channel, PathlossStrictlyIncreasing) {
  ChannelParams p;
  double prev = pathloss_uma(1.0, 25.0, 1.5, p);
  for (double d = 1.5; d < 10000.0; d *= 1.1) {
    const double l = pathloss_uma(d, 25.0, 1.5, p);
    ASSERT_GT(l, prev);
    ASSERT_TRUE(std::isfinite(l));
    prev = l;
  }
}

TEST(Channel, RainAttenuation) {
  ChannelParams p;
  const RainTable table = RainTable::load(RainTable::default_path());
  const RainCoefficients c = table.at(28.0);
  p.rain_k = c.k;
  p.rain_gamma = c.gamma;
  // Table entries against the closed form of the recommendation.
  EXPECT_NEAR(c.k, orc::p838_k_h(28.0), 5e-4 * c.k);
  EXPECT_NEAR(c.gamma, orc::p838_alpha_h(28.0), 5e-5);
  const double got = rain_attenuation(20.0, 0.2, p);
  EXPECT_LE(orc::rel_err(got, c.k * std::pow(20.0, c.gamma) * 0.2), 1e-9);
  const double closed = orc::p838_k_h(28.0) * std::pow(20.0, orc::p838_alpha_h(28.0)) * 0.2;
  EXPECT_LE(orc::rel_err(got, closed), 1e-3);
  EXPECT_EQ(rain_attenuation(0.0, 0.2, p), 0.0);
  EXPECT_DOUBLE_EQ(rain_attenuation(20.0, 0.4, p), 2.0 * got);
  EXPECT_LE(rain_attenuation(15.0, 0.2, p), got);
}

TEST(Channel, ShadowingStatistics) {
  RngStream rng(21);
  const int n = 100000;
  double s = 0.0;
  double ss = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = sample_shadowing(rng, 4.0);
    s += x;
    ss += x * x;
  }
  const double mean = s / n;
  const double sd = std::sqrt(ss / n - mean * mean);
  EXPECT_NEAR(mean, 0.0, 0.05);
  EXPECT_NEAR(sd, 4.0, 0.05);
}

TEST(Channel, FadingMeanGainIsOne) {
  RngStream rng(22);
  const int n = 100000;
  double g = 0.0;
  for (int i = 0; i < n; ++i) {
    g += std::pow(10.0, -sample_fading(rng) / 10.0);
  }
  EXPECT_NEAR(g / n, 1.0, 0.01);
}

TEST(Channel, SamplingIsReproducible) {
  RngStream a(5);
  RngStream b(5);
  for (int i = 0; i < 50; ++i) {
    ASSERT_EQ(sample_fading(a), sample_fading(b));
    ASSERT_EQ(sample_shadowing(a, 4.0), sample_shadowing(b, 4.0));
  }
}

TEST(Channel, ReceivedPowerDecomposition) {
  ChannelParams p;
  LinkSample s;
  s.pathloss_db = orc::uma_db(100.0, 28.0, 4.0, 25.0, 1.5);
  EXPECT_LE(orc::rel_err(received_power(43.0, s, p), 43.0 + 25.0 - s.pathloss_db), 1e-9);
  EXPECT_NEAR(received_power(43.0, s, p), -21.88, 0.01);
  ChannelParams bare = p;
  bare.rx_gain_db = 0.0;
  EXPECT_EQ(received_power(17.0, LinkSample{}, bare), 17.0);
  EXPECT_DOUBLE_EQ(received_power(46.0, s, p) - received_power(43.0, s, p), 3.0);

  RngStream rng(3);
  for (int i = 0; i < 1000; ++i) {
    LinkSample t;
    t.pathloss_db = rng.uniform(60, 140);
    t.shadowing_db = rng.normal(0, 4);
    t.fading_db = sample_fading(rng);
    t.rain_db = rng.uniform(0, 2);
    const double eirp = rng.uniform(23, 53);
    const double want =
        eirp + p.rx_gain_db - t.pathloss_db - t.shadowing_db - t.rain_db - t.fading_db;
    ASSERT_NEAR(received_power(eirp, t, p), want, 1e-9);
  }
}

TEST(Channel, NoiseFloor) {
  const NoiseModel n{-174.0, 2.88e6, 5.0};
  EXPECT_LE(orc::rel_err(n.power_dbm(), orc::noise_dbm(2.88e6, 5.0)), 1e-9);
  EXPECT_NEAR(n.power_dbm(), -104.41, 0.01);
}

TEST(Channel, SinrIdentities) {
  const NoiseModel n{-174.0, 2.88e6, 5.0};
  EXPECT_NEAR(sinr(n.power_dbm(), 0.0, n), 1.0, 1e-12);
  EXPECT_NEAR(sinr(n.power_dbm(), n.power_mw(), n), 0.5, 1e-12);
  const double got = sinr(-80.0, 1e-10, n);
  EXPECT_LE(orc::rel_err(got, orc::mw(-80.0) / (1e-10 + orc::mw(orc::noise_dbm(2.88e6, 5.0)))),
            1e-9);
}

TEST(Channel, RateAndThreshold) {
  EXPECT_DOUBLE_EQ(achievable_rate(1.0, 400e6), 400e6);
  EXPECT_NEAR(achievable_rate(15.0, 5.76e6), 23.04e6, 1e-6);
  EXPECT_EQ(achievable_rate(0.0, 1e6), 0.0);
  EXPECT_DOUBLE_EQ(min_sinr(2.88e6, 2.88e6), 1.0);
  const double g = min_sinr(64000.0, 2.88e6);
  EXPECT_LE(orc::rel_err(g, std::pow(2.0, 64000.0 / 2.88e6) - 1.0), 1e-9);
  EXPECT_NEAR(g, 0.01552, 1e-5);
  EXPECT_NEAR(10.0 * std::log10(g), -18.1, 0.05);
}

TEST(Channel, RateThresholdRoundTrip) {
  RngStream rng(17);
  for (int i = 0; i < 1000; ++i) {
    const double gamma = rng.uniform(1e-6, 100.0);
    const double bw = rng.uniform(1.44e6, 400e6);
    ASSERT_LE(orc::rel_err(min_sinr(achievable_rate(gamma, bw), bw), gamma), 1e-12);
  }
}

TEST(Channel, RateIncreasingInSinr) {
  double prev = achievable_rate(0.0, 2.88e6);
  for (double g = 0.01; g < 1e6; g *= 1.5) {
    const double r = achievable_rate(g, 2.88e6);
    ASSERT_GT(r, prev);
    prev = r;
  }
}

namespace {

ChannelRealization three_node_realization() {
  ChannelRealization real(3, ChannelParams{});
  for (int tx : {1, 2}) {
    LinkSample s;
    s.tx_id = tx;
    s.rx_id = 0;
    s.pathloss_db = 90.0 + 10.0 * tx;
    real.set(s);
  }
  return real;
}

}  // namespace

TEST(Interference, EmptyAndUnitConversion) {
  const auto real = three_node_realization();
  EXPECT_EQ(interference_at(0, RbSet{0, 1}, {}, real), 0.0);
  // 25 dBm EIRP + 25 dB gain - 140 dB loss arrives at -90 dBm.
  ChannelRealization r(2, ChannelParams{});
  LinkSample s;
  s.tx_id = 1;
  s.rx_id = 0;
  s.pathloss_db = 140.0;
  r.set(s);
  const std::vector<CoSlotTransmitter> one{{1, 25.0, RbSet{0, 1}}};
  EXPECT_LE(orc::rel_err(interference_at(0, RbSet{0, 1}, one, r), 1e-9), 1e-12);
}

TEST(Interference, FractionalOverlapAndAdditivity) {
  const auto real = three_node_realization();
  const CoSlotTransmitter a{1, 30.0, RbSet{0, 1}};
  const CoSlotTransmitter b{2, 40.0, RbSet{1, 2, 3}};
  const RbSet victim{0, 1, 2, 3};
  const std::vector<CoSlotTransmitter> only_a{a};
  const std::vector<CoSlotTransmitter> only_b{b};
  const std::vector<CoSlotTransmitter> both{a, b};
  const double ia = interference_at(0, victim, only_a, real);
  const double ib = interference_at(0, victim, only_b, real);
  EXPECT_LE(orc::rel_err(ia, 0.5 * orc::mw(30.0 + 25.0 - 100.0)), 1e-12);
  EXPECT_LE(orc::rel_err(ib, 0.75 * orc::mw(40.0 + 25.0 - 110.0)), 1e-12);
  EXPECT_LE(orc::rel_err(interference_at(0, victim, both, real), ia + ib), 1e-12);
  const std::vector<CoSlotTransmitter> twice{a, a};
  EXPECT_DOUBLE_EQ(interference_at(0, victim, twice, real), 2.0 * ia);
  const std::vector<CoSlotTransmitter> disjoint{{1, 30.0, RbSet{7, 8}}};
  EXPECT_EQ(interference_at(0, victim, disjoint, real), 0.0);
}

TEST(Interference, MissingLinkIsAnError) {
  ChannelRealization real(3, ChannelParams{});
  const std::vector<CoSlotTransmitter> tx{{1, 30.0, RbSet{0}}};
  EXPECT_THROW(interference_at(0, RbSet{0}, tx, real), std::out_of_range);
}

TEST(Realization, CoversEveryUplinkPairWithFiniteLosses) {
  ScenarioConfig cfg;
  cfg.num_cells = 2;
  cfg.num_ues = 10;
  RngStream placement(1);
  const Topology topo = build_topology(cfg, placement);
  ChannelParams p;
  p.rain_rate_mm_h = 20.0;
  RngStream sh(2);
  RngStream fa(3);
  const auto real = sample_realization(topo, p, sh, fa);
  for (const auto& tx : topo.nodes) {
    for (const auto& rx : topo.nodes) {
      const bool wanted = tx.role != NodeRole::Donor && rx.role != NodeRole::Ue && tx.id != rx.id;
      ASSERT_EQ(real.has(tx.id, rx.id), wanted);
      if (wanted) {
        const auto& l = real.link(tx.id, rx.id);
        ASSERT_TRUE(std::isfinite(l.total_loss_db()));
        ASSERT_GE(l.pathloss_db, 0.0);
        ASSERT_GE(l.rain_db, 0.0);
        ASSERT_LE(orc::rel_err(l.pathloss_db, orc::uma_db(distance_3d(tx, rx), 28.0, 4.0,
                                                          rx.height_m, tx.height_m)),
                  1e-9);
      }
    }
  }
}
