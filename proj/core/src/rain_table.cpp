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

#include "iabsim/rain_table.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace iabsim {

RainTable::RainTable(std::vector<Row> rows) : rows_(std::move(rows)) {
  if (rows_.size() < 2) {
    throw std::invalid_argument("rain table needs at least two rows");
  }
  for (std::size_t i = 1; i < rows_.size(); ++i) {
    if (!(rows_[i].freq_ghz > rows_[i - 1].freq_ghz)) {
      throw std::invalid_argument("rain table frequencies must be strictly increasing");
    }
  }
  for (const auto& r : rows_) {
    if (!(r.freq_ghz > 0.0) || !(r.k > 0.0)) {
      throw std::invalid_argument("rain table entries must have positive frequency and k");
    }
  }
}

RainTable RainTable::parse(std::istream& in) {
  std::vector<Row> rows;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream ls(line);
    Row r{};
    if (!(ls >> r.freq_ghz)) {
      continue;  // blank or comment-only
    }
    if (!(ls >> r.k >> r.gamma)) {
      throw std::runtime_error("rain table line " + std::to_string(line_no) +
                               ": expected 'freq_GHz k_H gamma_H'");
    }
    rows.push_back(r);
  }
  return RainTable(std::move(rows));
}

RainTable RainTable::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open rain table " + path.string());
  }
  return parse(in);
}

std::filesystem::path RainTable::default_path() {
  constexpr const char* kFile = "itu_r_p838_3.txt";
  std::vector<std::filesystem::path> candidates;
  if (const char* env = std::getenv("IABSIM_DATA_DIR"); env != nullptr && *env != '\0') {
    candidates.emplace_back(std::filesystem::path(env) / kFile);
  }
#ifdef IABSIM_SOURCE_DATA_DIR
  candidates.emplace_back(std::filesystem::path(IABSIM_SOURCE_DATA_DIR) / kFile);
#endif
#ifdef IABSIM_INSTALL_DATA_DIR
  candidates.emplace_back(std::filesystem::path(IABSIM_INSTALL_DATA_DIR) / kFile);
#endif
  for (const auto& c : candidates) {
    if (std::filesystem::exists(c)) {
      return c;
    }
  }
  throw std::runtime_error("rain coefficient table not found; set IABSIM_DATA_DIR or rain_table");
}

RainCoefficients RainTable::at(double freq_ghz) const {
  if (freq_ghz < rows_.front().freq_ghz || freq_ghz > rows_.back().freq_ghz) {
    throw std::out_of_range("frequency " + std::to_string(freq_ghz) +
                            " GHz outside rain table span");
  }
  const auto hi = std::lower_bound(rows_.begin(), rows_.end(), freq_ghz,
                                   [](const Row& r, double f) { return r.freq_ghz < f; });
  if (hi->freq_ghz == freq_ghz) {
    return {hi->k, hi->gamma};
  }
  const auto lo = std::prev(hi);
  const double t = (std::log10(freq_ghz) - std::log10(lo->freq_ghz)) /
                   (std::log10(hi->freq_ghz) - std::log10(lo->freq_ghz));
  const double log_k = std::log10(lo->k) + t * (std::log10(hi->k) - std::log10(lo->k));
  return {std::pow(10.0, log_k), lo->gamma + t * (hi->gamma - lo->gamma)};
}

}  // namespace iabsim
