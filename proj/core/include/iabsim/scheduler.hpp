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

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "iabsim/rb_set.hpp"
#include "iabsim/types.hpp"

namespace iabsim {

struct Topology;
class ChannelRealization;

/// Two-hop association: each UE has exactly one same-cell server (donor or
/// IAB node); each IAB node is backhauled by its own cell's donor.
struct Association {
  std::map<int, int> ue_to_bs;
  std::map<int, int> iab_to_donor;

  /// UEs served by `bs_id`, ascending.
  std::vector<int> children_of(int bs_id) const;
};

/// Long-term (pathloss + shadowing) loss in dB from a UE to a candidate server.
using LongTermLossFn = std::function<double(int ue_id, int bs_id)>;

/// Minimum long-term loss wins; ties go to the lowest node id.
Association associate(const Topology& topology, const LongTermLossFn& long_term_loss);

/// Same rule using the pathloss and shadowing of a sampled realization.
Association associate(const Topology& topology, const ChannelRealization& realization);

struct RbGrid {
  int rbs_per_ue = 2;
  int rb_max = 270;       // grid size; rbs_per_ue may not exceed it
  int access_pool = 24;  // per-cell access RBs the packing cycles through
  double rb_bandwidth_hz = 1.44e6;
};

struct RbAllocation {
  std::map<int, RbSet> access;    // UE id -> RBs of its access link
  std::map<int, RbSet> backhaul;  // IAB node id -> RBs of its MT uplink (empty: MT idle)
  RbGrid grid;
  std::vector<std::string> warnings;

  double bandwidth_hz(const RbSet& rbs) const {
    return static_cast<double>(rbs.size()) * grid.rb_bandwidth_hz;
  }
};

/// Per cell, UEs (ascending id) receive consecutive blocks of `rbs_per_ue`
/// RBs from index 0 upward; a block that would cross the end of the access
/// pool restarts at index 0, so co-channel reuse begins once the pool is
/// exhausted. All cells share the same grid. A backhaul link carries the union
/// of its children's RBs. Throws ValidationError if rbs_per_ue exceeds the grid.
RbAllocation allocate_rbs(const Topology& topology, const Association& assoc, const RbGrid& grid);

enum class LinkKind { Access, Backhaul };

struct Transmission {
  int tx_id = -1;
  int rx_id = -1;
  LinkKind kind = LinkKind::Access;
};

struct Slot {
  std::vector<Transmission> transmissions;
};

/// Separated: slot 0 carries every UE access uplink, slot 1 every active
/// IAB-MT backhaul uplink. Simultaneous: a single slot with both. The other
/// transmitters of a slot form the interferer set of each of its links.
struct SlotPlan {
  SlotMode mode = SlotMode::Separated;
  std::vector<Slot> slots;

  std::size_t transmitter_count() const;
};

SlotPlan plan_slots(const Association& assoc, const RbAllocation& alloc, SlotMode mode);

}  // namespace iabsim
