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
#include <numbers>

#include "iabsim/config.hpp"
#include "iabsim/errors.hpp"
#include "iabsim/topology.hpp"

using namespace iabsim;

namespace {

ScenarioConfig cfg_with(int ues, int cells = 1) {
  ScenarioConfig c;
  c.num_ues = ues;
  c.num_cells = cells;
  return c;
}

}  // namespace

TEST(Topology, NoUesGivesEmptyList) {
  RngStream rng(1);
  EXPECT_TRUE(sample_ues(cfg_with(0), 0, rng).empty());
}

TEST(Topology, MeanRadiusOfUniformDisk) {
  RngStream rng(11);
  const auto ues = sample_ues(cfg_with(1000), 0, rng);
  ASSERT_EQ(ues.size(), 1000u);
  double sum = 0.0;
  for (const auto& u : ues) {
    sum += std::hypot(u.position.x, u.position.y);
    EXPECT_EQ(u.height_m, 1.5);
    EXPECT_EQ(u.role, NodeRole::Ue);
  }
  EXPECT_NEAR(sum / 1000.0, 2.0 * 200.0 / 3.0, 3.0);
}

TEST(Topology, SquaredRadiusIsUniformKs) {
  RngStream rng(12);
  const auto ues = sample_ues(cfg_with(20000), 0, rng);
  std::vector<double> u;
  for (const auto& n : ues) {
    const double r = std::hypot(n.position.x, n.position.y);
    ASSERT_LE(r, 200.0);
    u.push_back((r / 200.0) * (r / 200.0));
  }
  std::sort(u.begin(), u.end());
  double d = 0.0;
  const double n = static_cast<double>(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    d = std::max({d, (i + 1) / n - u[i], u[i] - i / n});
  }
  EXPECT_LT(d, 0.02);
}

TEST(Topology, UePlacementIsReproducible) {
  RngStream a = RngStream::derive(4, 0, StreamPurpose::UePlacement);
  RngStream b = RngStream::derive(4, 0, StreamPurpose::UePlacement);
  EXPECT_EQ(sample_ues(cfg_with(19), 0, a), sample_ues(cfg_with(19), 0, b));
}

TEST(Topology, IabRingPlacement) {
  ScenarioConfig c;
  EXPECT_TRUE(place_iab_nodes([] {
                ScenarioConfig z;
                z.num_iab_per_cell = 0;
                return z;
              }(), 0)
                  .empty());
  const auto iabs = place_iab_nodes(c, 0, 1);
  ASSERT_EQ(iabs.size(), 4u);
  const double expect_x[] = {100, 0, -100, 0};
  const double expect_y[] = {0, 100, 0, -100};
  const double expect_h[] = {21, 22, 23, 24};
  for (int i = 0; i < 4; ++i) {
    EXPECT_NEAR(iabs[i].position.x, expect_x[i], 1e-9);
    EXPECT_NEAR(iabs[i].position.y, expect_y[i], 1e-9);
    EXPECT_DOUBLE_EQ(iabs[i].height_m, expect_h[i]);
    EXPECT_EQ(iabs[i].id, i + 1);
    EXPECT_EQ(iabs[i].role, NodeRole::IabNode);
  }
}

TEST(Topology, SingleCellDonorAtOrigin) {
  RngStream rng(1);
  const Topology t = build_topology(cfg_with(5), rng);
  ASSERT_EQ(t.cells.size(), 1u);
  const auto& d = t.node(t.cells[0].donor_id);
  EXPECT_EQ(d.role, NodeRole::Donor);
  EXPECT_EQ(d.position, (Position{0.0, 0.0}));
  EXPECT_EQ(d.height_m, 25.0);
}

TEST(Topology, TwoCellsAreTangent) {
  RngStream rng(1);
  const Topology t = build_topology(cfg_with(10, 2), rng);
  EXPECT_EQ(t.nodes.size(), 2u + 8u + 20u);
  EXPECT_EQ(t.count(NodeRole::Donor), 2u);
  EXPECT_EQ(t.count(NodeRole::IabNode), 8u);
  EXPECT_EQ(t.count(NodeRole::Ue), 20u);
  const auto& d0 = t.node(t.cells[0].donor_id);
  const auto& d1 = t.node(t.cells[1].donor_id);
  EXPECT_DOUBLE_EQ(distance_2d(d0.position, d1.position), 400.0);
  EXPECT_DOUBLE_EQ(d0.position.y, d1.position.y);
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    EXPECT_EQ(t.nodes[i].id, static_cast<int>(i));
  }
  for (int c = 0; c < 2; ++c) {
    const auto& donor = t.node(t.cells[static_cast<std::size_t>(c)].donor_id);
    for (int id : t.ids_in_cell(c, NodeRole::Ue)) {
      EXPECT_LE(distance_2d(t.node(id).position, donor.position), 200.0 + 1e-9);
    }
  }
}

TEST(Topology, RejectsThreeCells) {
  RngStream rng(1);
  try {
    build_topology(cfg_with(1, 3), rng);
    FAIL() << "expected a validation error";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.key(), "num_cells");
  }
}

TEST(Topology, IdenticalSeedIdenticalTopology) {
  RngStream a(99);
  RngStream b(99);
  EXPECT_EQ(build_topology(cfg_with(19, 2), a), build_topology(cfg_with(19, 2), b));
}

TEST(Topology, PoissonCountMode) {
  ScenarioConfig c = cfg_with(19);
  c.ue_count_mode = UeCountMode::Poisson;
  double total = 0.0;
  for (std::uint64_t t = 0; t < 400; ++t) {
    RngStream rng = RngStream::derive(3, t, StreamPurpose::UePlacement);
    total += static_cast<double>(build_topology(c, rng).count(NodeRole::Ue));
  }
  EXPECT_NEAR(total / 400.0, 19.0, 1.0);
}

TEST(Topology, FrozenPositionsJoinNearestDonor) {
  ScenarioConfig c = cfg_with(2, 2);
  c.ue_positions = {{10.0, 0.0}, {390.0, 5.0}};
  RngStream rng(1);
  const Topology t = build_topology(c, rng);
  ASSERT_EQ(t.count(NodeRole::Ue), 2u);
  EXPECT_EQ(t.ids_in_cell(0, NodeRole::Ue).size(), 1u);
  EXPECT_EQ(t.ids_in_cell(1, NodeRole::Ue).size(), 1u);
}

TEST(Distance, HandValues) {
  NetworkNode a{0, NodeRole::Donor, 0, {0, 0}, 25.0};
  NetworkNode b{1, NodeRole::Ue, 0, {100, 0}, 1.5};
  NetworkNode c{2, NodeRole::Ue, 0, {0, 0}, 1.5};
  EXPECT_NEAR(distance_3d(a, b), std::sqrt(100.0 * 100.0 + 23.5 * 23.5), 1e-12);
  EXPECT_NEAR(distance_3d(a, b), 102.724, 1e-3);
  EXPECT_DOUBLE_EQ(distance_3d(a, c), 23.5);
  EXPECT_EQ(distance_3d(c, c), 0.0);
}

TEST(Distance, SymmetricAndTriangle) {
  RngStream rng(8);
  auto random_node = [&] {
    return NetworkNode{0, NodeRole::Ue, 0, {rng.uniform(-500, 500), rng.uniform(-500, 500)},
                       rng.uniform(0, 30)};
  };
  for (int i = 0; i < 1000; ++i) {
    const auto a = random_node();
    const auto b = random_node();
    const auto c = random_node();
    ASSERT_EQ(distance_3d(a, b), distance_3d(b, a));
    ASSERT_LE(distance_3d(a, c), distance_3d(a, b) + distance_3d(b, c) + 1e-9);
  }
}
