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

#include "iabsim/scheduler.hpp"

#include <limits>

#include "iabsim/channel.hpp"
#include "iabsim/errors.hpp"
#include "iabsim/topology.hpp"

namespace iabsim {

std::vector<int> Association::children_of(int bs_id) const {
  std::vector<int> kids;
  for (const auto& [ue, bs] : ue_to_bs) {
    if (bs == bs_id) {
      kids.push_back(ue);
    }
  }
  return kids;
}

Association associate(const Topology& topology, const LongTermLossFn& long_term_loss) {
  Association assoc;
  for (const auto& node : topology.nodes) {
    if (node.role == NodeRole::IabNode) {
      assoc.iab_to_donor[node.id] = topology.cells.at(static_cast<std::size_t>(node.cell_id)).donor_id;
    }
  }
  for (const auto& ue : topology.nodes) {
    if (ue.role != NodeRole::Ue) {
      continue;
    }
    int best_bs = -1;
    double best_loss = std::numeric_limits<double>::infinity();
    // nodes are id-ordered, so strict < keeps the lowest id on ties
    for (const auto& bs : topology.nodes) {
      if (bs.role == NodeRole::Ue || bs.cell_id != ue.cell_id) {
        continue;
      }
      const double loss = long_term_loss(ue.id, bs.id);
      if (loss < best_loss) {
        best_loss = loss;
        best_bs = bs.id;
      }
    }
    if (best_bs < 0) {
      throw std::logic_error("UE " + std::to_string(ue.id) + " has no candidate server");
    }
    assoc.ue_to_bs[ue.id] = best_bs;
  }
  return assoc;
}

Association associate(const Topology& topology, const ChannelRealization& realization) {
  return associate(topology, [&](int ue, int bs) {
    return realization.link(ue, bs).long_term_loss_db();
  });
}

RbAllocation allocate_rbs(const Topology& topology, const Association& assoc, const RbGrid& grid) {
  if (grid.rbs_per_ue < 1) {
    throw ValidationError("rbs_per_ue", "must be >= 1");
  }
  if (grid.rbs_per_ue > grid.rb_max) {
    throw ValidationError("rbs_per_ue", "exceeds the " + std::to_string(grid.rb_max) + "-RB grid");
  }
  if (grid.access_pool < grid.rbs_per_ue || grid.access_pool > grid.rb_max) {
    throw ValidationError("access_rb_pool", "must lie in [rbs_per_ue, rb_max]");
  }

  RbAllocation alloc;
  alloc.grid = grid;
  if (grid.rbs_per_ue != 2 && grid.rbs_per_ue != 4) {
    alloc.warnings.push_back("rbs_per_ue = " + std::to_string(grid.rbs_per_ue) +
                             " is outside the reference {2, 4}");
  }

  for (std::size_t c = 0; c < topology.cells.size(); ++c) {
    int next = 0;
    for (int ue : topology.ids_in_cell(static_cast<int>(c), NodeRole::Ue)) {
      if (next + grid.rbs_per_ue > grid.access_pool) {
        next = 0;
      }
      std::vector<int> block(static_cast<std::size_t>(grid.rbs_per_ue));
      for (int k = 0; k < grid.rbs_per_ue; ++k) {
        block[static_cast<std::size_t>(k)] = next + k;
      }
      next += grid.rbs_per_ue;
      alloc.access.emplace(ue, RbSet(std::move(block)));
    }
  }

  for (const auto& [iab, donor] : assoc.iab_to_donor) {
    (void)donor;
    RbSet rbs;
    for (int ue : assoc.children_of(iab)) {
      rbs = rbs.united(alloc.access.at(ue));
    }
    alloc.backhaul.emplace(iab, std::move(rbs));
  }
  return alloc;
}

std::size_t SlotPlan::transmitter_count() const {
  std::size_t n = 0;
  for (const auto& s : slots) {
    n += s.transmissions.size();
  }
  return n;
}

SlotPlan plan_slots(const Association& assoc, const RbAllocation& alloc, SlotMode mode) {
  Slot access;
  for (const auto& [ue, bs] : assoc.ue_to_bs) {
    access.transmissions.push_back({ue, bs, LinkKind::Access});
  }
  Slot backhaul;
  for (const auto& [iab, donor] : assoc.iab_to_donor) {
    if (!alloc.backhaul.at(iab).empty()) {
      backhaul.transmissions.push_back({iab, donor, LinkKind::Backhaul});
    }
  }

  SlotPlan plan;
  plan.mode = mode;
  if (mode == SlotMode::Separated) {
    plan.slots.push_back(std::move(access));
    plan.slots.push_back(std::move(backhaul));
  } else {
    for (const auto& t : backhaul.transmissions) {
      access.transmissions.push_back(t);
    }
    plan.slots.push_back(std::move(access));
  }
  return plan;
}

}  // namespace iabsim
