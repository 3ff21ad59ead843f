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

#include "iabsim/power.hpp"

#include <stdexcept>

#include "iabsim/channel.hpp"
#include "iabsim/topology.hpp"

namespace iabsim {

GeneLayout::GeneLayout(std::vector<int> node_ids, std::vector<NodeRole> roles,
                       std::vector<Range> ranges)
    : node_ids_(std::move(node_ids)), roles_(std::move(roles)), ranges_(std::move(ranges)) {
  if (node_ids_.size() != roles_.size() || node_ids_.size() != ranges_.size()) {
    throw std::invalid_argument("GeneLayout: mismatched lengths");
  }
  int max_id = -1;
  for (int id : node_ids_) {
    if (id < 0) {
      throw std::invalid_argument("GeneLayout: negative node id");
    }
    max_id = std::max(max_id, id);
  }
  gene_by_id_.assign(static_cast<std::size_t>(max_id + 1), -1);
  for (std::size_t g = 0; g < node_ids_.size(); ++g) {
    gene_by_id_[static_cast<std::size_t>(node_ids_[g])] = static_cast<int>(g);
  }
}

GeneLayout GeneLayout::for_topology(const Topology& topology, Range ue_eirp_dbm,
                                    Range iab_eirp_dbm) {
  std::vector<int> ids;
  std::vector<NodeRole> roles;
  std::vector<Range> ranges;
  for (const auto& n : topology.nodes) {
    if (n.role == NodeRole::Donor) {
      continue;
    }
    ids.push_back(n.id);
    roles.push_back(n.role);
    ranges.push_back(n.role == NodeRole::Ue ? ue_eirp_dbm : iab_eirp_dbm);
  }
  return GeneLayout(std::move(ids), std::move(roles), std::move(ranges));
}

int GeneLayout::gene_of(int node_id) const {
  if (node_id < 0 || static_cast<std::size_t>(node_id) >= gene_by_id_.size()) {
    return -1;
  }
  return gene_by_id_[static_cast<std::size_t>(node_id)];
}

PowerVector max_power(const GeneLayout& layout) {
  PowerVector p;
  p.eirp_dbm.reserve(layout.size());
  for (std::size_t g = 0; g < layout.size(); ++g) {
    p.eirp_dbm.push_back(layout.range(g).hi);
  }
  return p;
}

bool within_bounds(const PowerVector& powers, const GeneLayout& layout) {
  if (powers.size() != layout.size()) {
    return false;
  }
  for (std::size_t g = 0; g < layout.size(); ++g) {
    if (!layout.range(g).contains(powers[g])) {
      return false;
    }
  }
  return true;
}

double total_power_mw(const PowerVector& powers) {
  double sum = 0.0;
  for (double dbm : powers.eirp_dbm) {
    sum += dbm_to_mw(dbm);
  }
  return sum;
}

}  // namespace iabsim
