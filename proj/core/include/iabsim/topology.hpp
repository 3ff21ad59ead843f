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

#include <vector>

#include "iabsim/rng.hpp"
#include "iabsim/types.hpp"

namespace iabsim {

struct ScenarioConfig;

struct NetworkNode {
  int id = 0;
  NodeRole role = NodeRole::Ue;
  int cell_id = 0;
  Position position;
  double height_m = 0.0;

  friend bool operator==(const NetworkNode&, const NetworkNode&) = default;
};

struct Cell {
  int donor_id = 0;
  double radius_m = 0.0;

  friend bool operator==(const Cell&, const Cell&) = default;
};

/// Node ids are dense: `nodes[i].id == i`. Infrastructure comes first
/// (per cell: donor, then its IAB nodes), followed by the UEs of every cell.
struct Topology {
  std::vector<NetworkNode> nodes;
  std::vector<Cell> cells;

  const NetworkNode& node(int id) const { return nodes.at(static_cast<std::size_t>(id)); }
  std::vector<int> ids_with_role(NodeRole role) const;
  std::vector<int> ids_in_cell(int cell_id, NodeRole role) const;
  std::size_t count(NodeRole role) const;

  friend bool operator==(const Topology&, const Topology&) = default;
};

/// Horizontal position of the donor of `cell_id`: cells sit on the x axis,
/// `donor_spacing_m()` apart, cell 0 at the origin.
Position donor_position(const ScenarioConfig& config, int cell_id);

/// UEs uniform i.i.d. in the disk of the cell (the finite Poisson process
/// conditioned on its count). In Poisson count mode the count is itself drawn
/// with mean `num_ues`. Returned ids start at `first_id`.
std::vector<NetworkNode> sample_ues(const ScenarioConfig& config, int cell_id, RngStream& rng,
                                    int first_id = 0);

/// M IAB nodes on a ring of radius `iab_ring_fraction * r` around the donor,
/// equally spaced in angle starting at the orientation offset, with heights
/// linearly spaced over the configured range.
std::vector<NetworkNode> place_iab_nodes(const ScenarioConfig& config, int cell_id,
                                         int first_id = 0);

/// Full topology for one trial. Frozen `ue_positions` in the config replace
/// the random pattern; each frozen UE joins the cell of its nearest donor.
Topology build_topology(const ScenarioConfig& config, RngStream& rng);

double distance_2d(const Position& a, const Position& b);
double distance_3d(const NetworkNode& a, const NetworkNode& b);

}  // namespace iabsim
