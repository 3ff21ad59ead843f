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

#include "iabsim/topology.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "iabsim/config.hpp"
#include "iabsim/errors.hpp"

namespace iabsim {

std::vector<int> Topology::ids_with_role(NodeRole role) const {
  std::vector<int> ids;
  for (const auto& n : nodes) {
    if (n.role == role) {
      ids.push_back(n.id);
    }
  }
  return ids;
}

std::vector<int> Topology::ids_in_cell(int cell_id, NodeRole role) const {
  std::vector<int> ids;
  for (const auto& n : nodes) {
    if (n.role == role && n.cell_id == cell_id) {
      ids.push_back(n.id);
    }
  }
  return ids;
}

std::size_t Topology::count(NodeRole role) const {
  std::size_t c = 0;
  for (const auto& n : nodes) {
    c += n.role == role ? 1 : 0;
  }
  return c;
}

Position donor_position(const ScenarioConfig& config, int cell_id) {
  return {config.donor_spacing_m() * cell_id, 0.0};
}

std::vector<NetworkNode> sample_ues(const ScenarioConfig& config, int cell_id, RngStream& rng,
                                    int first_id) {
  std::size_t count = static_cast<std::size_t>(config.num_ues);
  if (config.ue_count_mode == UeCountMode::Poisson) {
    count = static_cast<std::size_t>(rng.poisson(config.num_ues));
  }
  const Position center = donor_position(config, cell_id);
  const double r = config.cell_radius_m;

  std::vector<NetworkNode> ues;
  ues.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    // sqrt of a uniform radius fraction gives uniform density over the disk area
    const double rho = r * std::sqrt(rng.uniform(0.0, 1.0));
    const double theta = rng.uniform(0.0, 2.0 * std::numbers::pi);
    NetworkNode ue;
    ue.id = first_id + static_cast<int>(i);
    ue.role = NodeRole::Ue;
    ue.cell_id = cell_id;
    ue.position = {center.x + rho * std::cos(theta), center.y + rho * std::sin(theta)};
    ue.height_m = config.ue_height_m;
    ues.push_back(ue);
  }
  return ues;
}

std::vector<NetworkNode> place_iab_nodes(const ScenarioConfig& config, int cell_id, int first_id) {
  const int m = config.num_iab_per_cell;
  const Position center = donor_position(config, cell_id);
  const double ring = config.iab_ring_fraction * config.cell_radius_m;
  const double offset = config.iab_orientation_deg * std::numbers::pi / 180.0;

  std::vector<NetworkNode> nodes;
  nodes.reserve(static_cast<std::size_t>(std::max(m, 0)));
  for (int i = 0; i < m; ++i) {
    const double angle = offset + 2.0 * std::numbers::pi * i / m;
    NetworkNode n;
    n.id = first_id + i;
    n.role = NodeRole::IabNode;
    n.cell_id = cell_id;
    // Snap the trigonometric round-off so quarter turns land exactly on the axes.
    double dx = ring * std::cos(angle);
    double dy = ring * std::sin(angle);
    if (std::abs(dx) < 1e-9 * ring) dx = 0.0;
    if (std::abs(dy) < 1e-9 * ring) dy = 0.0;
    n.position = {center.x + dx, center.y + dy};
    n.height_m = m == 1 ? config.iab_height_m.lo
                        : config.iab_height_m.lo + config.iab_height_m.width() * i / (m - 1);
    nodes.push_back(n);
  }
  return nodes;
}

Topology build_topology(const ScenarioConfig& config, RngStream& rng) {
  if (config.num_cells != 1 && config.num_cells != 2) {
    throw ValidationError("num_cells", "must be 1 or 2, got " + std::to_string(config.num_cells));
  }
  Topology topo;
  for (int c = 0; c < config.num_cells; ++c) {
    NetworkNode donor;
    donor.id = static_cast<int>(topo.nodes.size());
    donor.role = NodeRole::Donor;
    donor.cell_id = c;
    donor.position = donor_position(config, c);
    donor.height_m = config.donor_height_m;
    topo.nodes.push_back(donor);
    topo.cells.push_back({donor.id, config.cell_radius_m});
    for (auto& n : place_iab_nodes(config, c, static_cast<int>(topo.nodes.size()))) {
      topo.nodes.push_back(n);
    }
  }

  if (!config.ue_positions.empty()) {
    for (const auto& p : config.ue_positions) {
      int best_cell = 0;
      double best = distance_2d(p, donor_position(config, 0));
      for (int c = 1; c < config.num_cells; ++c) {
        const double d = distance_2d(p, donor_position(config, c));
        if (d < best) {
          best = d;
          best_cell = c;
        }
      }
      NetworkNode ue;
      ue.id = static_cast<int>(topo.nodes.size());
      ue.role = NodeRole::Ue;
      ue.cell_id = best_cell;
      ue.position = p;
      ue.height_m = config.ue_height_m;
      topo.nodes.push_back(ue);
    }
    return topo;
  }

  for (int c = 0; c < config.num_cells; ++c) {
    for (auto& ue : sample_ues(config, c, rng, static_cast<int>(topo.nodes.size()))) {
      topo.nodes.push_back(ue);
    }
  }
  return topo;
}

double distance_2d(const Position& a, const Position& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

double distance_3d(const NetworkNode& a, const NetworkNode& b) {
  const double dx = a.position.x - b.position.x;
  const double dy = a.position.y - b.position.y;
  const double dh = a.height_m - b.height_m;
  return std::sqrt(dx * dx + dy * dy + dh * dh);
}

}  // namespace iabsim
