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

#include <filesystem>
#include <istream>
#include <vector>

namespace iabsim {

/// Power-law rain coefficients: specific attenuation = k * R^gamma dB/km.
struct RainCoefficients {
  double k = 0.0;
  double gamma = 0.0;
};

/// Frequency-dependent rain coefficients for horizontal polarization, read
/// from a whitespace-separated text table (freq_GHz k_H gamma_H; `#` comments).
/// Between rows, log(k) and gamma are interpolated linearly in log(frequency).
class RainTable {
 public:
  struct Row {
    double freq_ghz;
    double k;
    double gamma;
  };

  explicit RainTable(std::vector<Row> rows);

  static RainTable parse(std::istream& in);
  static RainTable load(const std::filesystem::path& path);

  /// Finds the shipped table: $IABSIM_DATA_DIR, the source tree, then the
  /// install prefix. Throws std::runtime_error when none exists.
  static std::filesystem::path default_path();

  /// Throws std::out_of_range outside the tabulated frequency span.
  RainCoefficients at(double freq_ghz) const;

  const std::vector<Row>& rows() const { return rows_; }

 private:
  std::vector<Row> rows_;
};

}  // namespace iabsim
