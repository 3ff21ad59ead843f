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
#include <initializer_list>
#include <vector>

namespace iabsim {

/// Sorted, duplicate-free set of resource-block indices.
class RbSet {
 public:
  RbSet() = default;
  RbSet(std::initializer_list<int> rbs);
  explicit RbSet(std::vector<int> rbs);

  std::size_t size() const { return rbs_.size(); }
  bool empty() const { return rbs_.empty(); }
  const std::vector<int>& indices() const { return rbs_; }

  std::size_t overlap(const RbSet& other) const;
  RbSet united(const RbSet& other) const;

  friend bool operator==(const RbSet&, const RbSet&) = default;

 private:
  std::vector<int> rbs_;
};

/// |a ∩ victim| / |victim|; zero for an empty victim set.
double overlap_fraction(const RbSet& interferer, const RbSet& victim);

}  // namespace iabsim
