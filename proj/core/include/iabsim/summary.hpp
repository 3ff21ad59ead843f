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

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace iabsim {

/// A CSV produced by `run_experiment`: `#` header entries, column names and
/// raw cell text.
struct CsvTable {
  std::map<std::string, std::string> header;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  std::size_t column(const std::string& name) const;  // throws if absent
  std::vector<double> numbers(const std::string& name) const;
};

CsvTable parse_csv(const std::string& text);
CsvTable read_csv(const std::string& path);

/// Where y(x) first falls below `target`, by linear interpolation between
/// sweep points. `censored` marks curves that never fall below the target
/// (value = last x) or start below it (value = first x).
struct Crossing {
  double value = 0.0;
  bool censored = false;
};
std::optional<Crossing> falling_crossing(const std::vector<double>& x,
                                         const std::vector<double>& y, double target);

/// x at which an increasing y(x) first reaches `target`.
std::optional<Crossing> rising_crossing(const std::vector<double>& x,
                                        const std::vector<double>& y, double target);

/// Interquartile range with linear interpolation between order statistics.
double interquartile_range(std::vector<double> v);
double quantile(std::vector<double> v, double q);

/// Headline comparisons of one experiment CSV as human-readable text.
std::string summarize_csv(const CsvTable& table, double target = 0.7);

}  // namespace iabsim
