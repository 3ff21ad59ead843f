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

#include "iabsim/summary.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>
#include <stdexcept>

#include "iabsim/errors.hpp"

namespace iabsim {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) {
    return {};
  }
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

std::vector<std::string> split_commas(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    out.push_back(trim(cell));
  }
  if (!line.empty() && line.back() == ',') {
    out.emplace_back();
  }
  return out;
}

double to_number(const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw ValidationError("csv", "malformed CSV: '" + text + "' is not a number");
  }
  return v;
}

std::string fixed(double v, int digits = 3) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

std::string describe(const std::optional<Crossing>& c, const std::string& unit) {
  if (!c) {
    return "n/a";
  }
  std::string s = fixed(c->value, 2) + unit;
  if (c->censored) {
    s += " (censored at sweep edge)";
  }
  return s;
}

struct Series {
  std::vector<double> x;
  std::vector<double> y;
};

Series select(const CsvTable& t, const std::string& xcol, const std::string& ycol,
              const std::string& filter_col = {}, const std::string& filter_val = {}) {
  const std::size_t xi = t.column(xcol);
  const std::size_t yi = t.column(ycol);
  const std::size_t fi = filter_col.empty() ? 0 : t.column(filter_col);
  Series s;
  for (const auto& row : t.rows) {
    if (!filter_col.empty() && row[fi] != filter_val) {
      continue;
    }
    s.x.push_back(to_number(row[xi]));
    s.y.push_back(to_number(row[yi]));
  }
  return s;
}

std::string summarize_coverage_vs_ues(const CsvTable& t, double target) {
  std::ostringstream os;
  std::vector<std::string> rbs_values;
  for (const auto& row : t.rows) {
    const std::string& v = row[t.column("rbs_per_ue")];
    if (std::find(rbs_values.begin(), rbs_values.end(), v) == rbs_values.end()) {
      rbs_values.push_back(v);
    }
  }
  for (const auto& rbs : rbs_values) {
    os << "rbs_per_ue = " << rbs << ": UEs supported at " << fixed(target * 100, 0)
       << "% coverage\n";
    std::optional<Crossing> ga;
    std::optional<Crossing> best_baseline;
    for (const char* col : {"coverage_optimized", "coverage_max_power", "coverage_random_power"}) {
      const Series s = select(t, "num_ues", col, "rbs_per_ue", rbs);
      const auto c = falling_crossing(s.x, s.y, target);
      os << "  " << col << ": " << describe(c, " UEs") << "\n";
      if (std::string(col) == "coverage_optimized") {
        ga = c;
      } else if (c && (!best_baseline || c->value > best_baseline->value)) {
        best_baseline = c;
      }
    }
    if (ga && best_baseline && best_baseline->value > 0.0) {
      os << "  gain over best baseline: " << fixed(ga->value / best_baseline->value, 2) << "x ("
         << fixed(ga->value - best_baseline->value, 2) << " UEs)\n";
    } else {
      os << "  gain over best baseline: n/a\n";
    }
  }
  return os.str();
}

std::string summarize_coverage_vs_sinr(const CsvTable& t, double target) {
  std::ostringstream os;
  for (const char* policy : {"ga", "max"}) {
    std::map<std::string, std::optional<Crossing>> at;
    for (const char* mode : {"separated", "simultaneous"}) {
      Series s;
      const std::size_t pi = t.column("policy");
      const std::size_t mi = t.column("slot_mode");
      for (const auto& row : t.rows) {
        if (row[pi] == policy && row[mi] == mode) {
          s.x.push_back(to_number(row[t.column("median_access_sinr_db")]));
          s.y.push_back(to_number(row[t.column("coverage")]));
        }
      }
      if (s.x.empty()) {
        continue;
      }
      // sort by SINR so coverage rises along x
      std::vector<std::size_t> order(s.x.size());
      for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
      std::sort(order.begin(), order.end(), [&](auto a, auto b) { return s.x[a] < s.x[b]; });
      Series sorted;
      for (auto i : order) {
        sorted.x.push_back(s.x[i]);
        sorted.y.push_back(s.y[i]);
      }
      at[mode] = rising_crossing(sorted.x, sorted.y, target);
      os << "policy " << policy << ", " << mode << ": median access SINR at "
         << fixed(target * 100, 0) << "% coverage = " << describe(at[mode], " dB") << "\n";
    }
    if (at["separated"] && at["simultaneous"]) {
      os << "policy " << policy << ": SINR gap (simultaneous - separated) = "
         << fixed(at["simultaneous"]->value - at["separated"]->value, 2) << " dB\n";
    }
  }
  return os.str();
}

std::string summarize_intercell(const CsvTable& t) {
  std::ostringstream os;
  for (const char* which : {"optimized", "max_power"}) {
    const Series one = select(t, "num_ues", std::string("coverage_1cell_") + which);
    const Series two = select(t, "num_ues", std::string("coverage_2cell_") + which);
    double worst = 0.0;
    double at = 0.0;
    for (std::size_t i = 0; i < one.y.size(); ++i) {
      const double d = std::abs(one.y[i] - two.y[i]);
      if (d > worst) {
        worst = d;
        at = one.x[i];
      }
    }
    os << which << ": max |coverage(1 cell) - coverage(2 cells)| = " << fixed(worst, 4);
    if (worst > 0.0) {
      os << " at " << fixed(at, 0) << " UEs";
    }
    os << "\n";
  }
  return os.str();
}

std::string summarize_power_cdf(const CsvTable& t) {
  std::ostringstream os;
  std::map<double, std::map<std::string, std::vector<double>>> by_rate;
  const std::size_t ri = t.column("min_rate_bps");
  const std::size_t oi = t.column("role");
  const std::size_t ei = t.column("eirp_dbm");
  for (const auto& row : t.rows) {
    by_rate[to_number(row[ri])][row[oi]].push_back(to_number(row[ei]));
  }
  for (auto& [rate, roles] : by_rate) {
    os << "min_rate_bps = " << fixed(rate, 0) << ":";
    for (auto& [role, values] : roles) {
      os << " " << role << " IQR = " << fixed(interquartile_range(values), 2) << " dB (median "
         << fixed(quantile(values, 0.5), 2) << " dBm, n = " << values.size() << ")";
    }
    os << "\n";
  }
  return os.str();
}

std::string summarize_ga_trace(const CsvTable& t) {
  std::ostringstream os;
  for (std::size_t c = 1; c < t.columns.size(); ++c) {
    const Series s = select(t, "iteration", t.columns[c]);
    bool monotone = true;
    std::size_t settle = 0;
    for (std::size_t i = 0; i < s.y.size(); ++i) {
      if (i > 0 && s.y[i] < s.y[i - 1]) monotone = false;
      if (s.y[i] != s.y.back()) settle = i + 1;
    }
    os << t.columns[c] << ": final " << fixed(s.y.empty() ? 0.0 : s.y.back(), 4)
       << ", reached at iteration " << (settle < s.x.size() ? s.x[settle] : 0.0)
       << (monotone ? ", non-decreasing" : ", NOT monotone") << "\n";
  }
  return os.str();
}

}  // namespace

std::size_t CsvTable::column(const std::string& name) const {
  const auto it = std::find(columns.begin(), columns.end(), name);
  if (it == columns.end()) {
    throw ValidationError("csv", "malformed CSV: missing column '" + name + "'");
  }
  return static_cast<std::size_t>(it - columns.begin());
}

std::vector<double> CsvTable::numbers(const std::string& name) const {
  const std::size_t i = column(name);
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    out.push_back(to_number(row[i]));
  }
  return out;
}

CsvTable parse_csv(const std::string& text) {
  CsvTable t;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      const auto eq = line.find('=');
      if (eq != std::string::npos) {
        t.header[trim(line.substr(1, eq - 1))] = trim(line.substr(eq + 1));
      }
      continue;
    }
    auto cells = split_commas(line);
    if (t.columns.empty()) {
      t.columns = std::move(cells);
      continue;
    }
    if (cells.size() != t.columns.size()) {
      throw ValidationError("csv", "malformed CSV: row has " + std::to_string(cells.size()) +
                               " cells, expected " + std::to_string(t.columns.size()));
    }
    t.rows.push_back(std::move(cells));
  }
  if (t.columns.empty()) {
    throw ValidationError("csv", "malformed CSV: no column line");
  }
  return t;
}

CsvTable read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ValidationError("csv", "cannot open '" + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_csv(ss.str());
}

std::optional<Crossing> falling_crossing(const std::vector<double>& x,
                                         const std::vector<double>& y, double target) {
  if (x.empty() || x.size() != y.size()) {
    return std::nullopt;
  }
  if (y[0] < target) {
    return Crossing{x[0], true};
  }
  for (std::size_t i = 1; i < x.size(); ++i) {
    if (y[i] < target) {
      const double f = (y[i - 1] - target) / (y[i - 1] - y[i]);
      return Crossing{x[i - 1] + f * (x[i] - x[i - 1]), false};
    }
  }
  return Crossing{x.back(), true};
}

std::optional<Crossing> rising_crossing(const std::vector<double>& x,
                                        const std::vector<double>& y, double target) {
  if (x.empty() || x.size() != y.size()) {
    return std::nullopt;
  }
  if (y[0] >= target) {
    return Crossing{x[0], true};
  }
  for (std::size_t i = 1; i < x.size(); ++i) {
    if (y[i] >= target) {
      const double f = (target - y[i - 1]) / (y[i] - y[i - 1]);
      return Crossing{x[i - 1] + f * (x[i] - x[i - 1]), false};
    }
  }
  return Crossing{x.back(), true};
}

double quantile(std::vector<double> v, double q) {
  if (v.empty()) {
    return std::nan("");
  }
  std::sort(v.begin(), v.end());
  const double pos = q * static_cast<double>(v.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, v.size() - 1);
  return v[lo] + (pos - static_cast<double>(lo)) * (v[hi] - v[lo]);
}

double interquartile_range(std::vector<double> v) {
  return quantile(v, 0.75) - quantile(v, 0.25);
}

std::string summarize_csv(const CsvTable& table, double target) {
  const auto it = table.header.find("experiment");
  if (it == table.header.end()) {
    throw ValidationError("csv", "malformed CSV: no '# experiment = ...' header line");
  }
  const std::string& name = it->second;
  std::string report = "experiment: " + name + "\n";
  if (name == "ga-trace") return report + summarize_ga_trace(table);
  if (name == "coverage-vs-ues") return report + summarize_coverage_vs_ues(table, target);
  if (name == "coverage-vs-sinr") return report + summarize_coverage_vs_sinr(table, target);
  if (name == "intercell") return report + summarize_intercell(table);
  if (name == "power-cdf") return report + summarize_power_cdf(table);
  throw ValidationError("csv", "malformed CSV: unknown experiment '" + name + "'");
}

}  // namespace iabsim
