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

#include <cstddef>
#include <span>
#include <vector>

#include "iabsim/types.hpp"

namespace iabsim {

struct Topology;

/// Maps chromosome positions to transmitting nodes: one gene per UE and per
/// IAB node, in ascending node id order, each with its role's EIRP range.
class GeneLayout {
 public:
  GeneLayout() = default;
  GeneLayout(std::vector<int> node_ids, std::vector<NodeRole> roles, std::vector<Range> ranges);

  static GeneLayout for_topology(const Topology& topology, Range ue_eirp_dbm, Range iab_eirp_dbm);

  std::size_t size() const { return node_ids_.size(); }
  bool empty() const { return node_ids_.empty(); }
  int node_id(std::size_t gene) const { return node_ids_[gene]; }
  NodeRole role(std::size_t gene) const { return roles_[gene]; }
  const Range& range(std::size_t gene) const { return ranges_[gene]; }
  std::span<const int> node_ids() const { return node_ids_; }

  /// Gene index of a node id, or -1 when the node carries no gene (donors).
  int gene_of(int node_id) const;

 private:
  std::vector<int> node_ids_;
  std::vector<NodeRole> roles_;
  std::vector<Range> ranges_;
  std::vector<int> gene_by_id_;
};

/// One power assignment: an EIRP in dBm per gene of a GeneLayout.
struct PowerVector {
  std::vector<double> eirp_dbm;

  std::size_t size() const { return eirp_dbm.size(); }
  double operator[](std::size_t i) const { return eirp_dbm[i]; }
  double& operator[](std::size_t i) { return eirp_dbm[i]; }

  friend bool operator==(const PowerVector&, const PowerVector&) = default;
};

/// Every gene at the top of its range.
PowerVector max_power(const GeneLayout& layout);

/// True when every gene lies within its role range.
bool within_bounds(const PowerVector& powers, const GeneLayout& layout);

/// Sum of transmit powers in linear milliwatts.
double total_power_mw(const PowerVector& powers);

}  // namespace iabsim
