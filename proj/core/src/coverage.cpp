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

#include "iabsim/coverage.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "iabsim/config.hpp"
#include "iabsim/errors.hpp"
#include "iabsim/rain_table.hpp"

namespace iabsim {

void ServiceRequirement::validate() const {
  if (!(min_rate_bps > 0.0)) {
    throw ValidationError("min_rate_bps", "must be > 0");
  }
}

namespace {

double eirp_of(const GeneLayout& layout, const PowerVector& powers, int node_id) {
  const int g = layout.gene_of(node_id);
  if (g < 0) {
    throw std::out_of_range("node " + std::to_string(node_id) + " has no power gene");
  }
  return powers[static_cast<std::size_t>(g)];
}

const RbSet& rbs_of(const RbAllocation& alloc, const Transmission& t) {
  return t.kind == LinkKind::Access ? alloc.access.at(t.tx_id) : alloc.backhaul.at(t.tx_id);
}

const Slot& slot_containing(const SlotPlan& plan, int tx_id) {
  for (const auto& s : plan.slots) {
    for (const auto& t : s.transmissions) {
      if (t.tx_id == tx_id) {
        return s;
      }
    }
  }
  throw std::out_of_range("transmitter " + std::to_string(tx_id) + " not scheduled");
}

}  // namespace

CoverageResult evaluate_trial(const Topology& topology, const Association& assoc,
                              const RbAllocation& alloc, const SlotPlan& plan,
                              const GeneLayout& layout, const PowerVector& powers,
                              const ChannelRealization& realization,
                              const ServiceRequirement& req, double backoff_db) {
  (void)topology;
  req.validate();
  const ChannelParams& params = realization.params();

  auto link_sinr = [&](const Transmission& t) {
    const Slot& slot = slot_containing(plan, t.tx_id);
    std::vector<CoSlotTransmitter> others;
    for (const auto& o : slot.transmissions) {
      if (o.tx_id != t.tx_id) {
        others.push_back({o.tx_id, eirp_of(layout, powers, o.tx_id) - backoff_db, rbs_of(alloc, o)});
      }
    }
    const RbSet& rbs = rbs_of(alloc, t);
    const double interference = interference_at(t.rx_id, rbs, others, realization);
    const double pr = received_power(eirp_of(layout, powers, t.tx_id) - backoff_db,
                                     realization.link(t.tx_id, t.rx_id), params);
    const NoiseModel noise{params.thermal_noise_dbm_hz, alloc.bandwidth_hz(rbs),
                           params.noise_figure_db};
    return sinr(pr, interference, noise);
  };

  CoverageResult result;
  std::map<int, bool> backhaul_ok;
  for (const auto& slot : plan.slots) {
    for (const auto& t : slot.transmissions) {
      if (t.kind != LinkKind::Backhaul) {
        continue;
      }
      const double gamma = link_sinr(t);
      const auto children = assoc.children_of(t.tx_id);
      const double rate = req.min_rate_bps * static_cast<double>(children.size());
      result.backhaul_sinr[t.tx_id] = gamma;
      backhaul_ok[t.tx_id] = gamma >= min_sinr(rate, alloc.bandwidth_hz(alloc.backhaul.at(t.tx_id)));
    }
  }

  std::size_t covered = 0;
  for (const auto& [ue, bs] : assoc.ue_to_bs) {
    const Transmission t{ue, bs, LinkKind::Access};
    const double gamma = link_sinr(t);
    result.access_sinr[ue] = gamma;
    const bool access_ok = gamma >= min_sinr(req.min_rate_bps, alloc.bandwidth_hz(alloc.access.at(ue)));
    UeStatus status = access_ok ? UeStatus::Covered : UeStatus::AccessFail;
    if (const auto it = backhaul_ok.find(bs); it != backhaul_ok.end() && !it->second) {
      status = UeStatus::BackhaulFail;
    }
    covered += status == UeStatus::Covered ? 1 : 0;
    result.per_ue[ue] = status;
  }
  result.coverage_probability =
      assoc.ue_to_bs.empty() ? 1.0
                             : static_cast<double>(covered) / static_cast<double>(assoc.ue_to_bs.size());
  return result;
}

CoverageResult evaluate_trial(const TrialInstance& trial, const PowerVector& powers,
                              const ServiceRequirement& req, double backoff_db) {
  return evaluate_trial(trial.topology, trial.assoc, trial.alloc, trial.plan, trial.layout, powers,
                        trial.realization, req, backoff_db);
}

// ---- CoverageEvaluator --------------------------------------------------------------

CoverageEvaluator::CoverageEvaluator(const TrialInstance& trial, const ServiceRequirement& req)
    : genes_(trial.layout.size()) {
  req.validate();
  const ChannelParams& params = trial.realization.params();
  const auto gain_of = [&](int tx, int rx) {
    const LinkSample& s = trial.realization.link(tx, rx);
    return db_to_linear(params.rx_gain_db - s.total_loss_db());
  };
  const auto gene_of = [&](int node) {
    const int g = trial.layout.gene_of(node);
    if (g < 0) {
      throw std::out_of_range("node " + std::to_string(node) + " has no power gene");
    }
    return static_cast<std::size_t>(g);
  };

  std::map<int, int> backhaul_index;
  for (const auto& slot : trial.plan.slots) {
    for (const auto& t : slot.transmissions) {
      const RbSet& rbs = rbs_of(trial.alloc, t);
      Link link;
      link.tx_id = t.tx_id;
      link.rx_id = t.rx_id;
      link.tx_gene = gene_of(t.tx_id);
      link.gain = gain_of(t.tx_id, t.rx_id);
      const double bw = trial.alloc.bandwidth_hz(rbs);
      link.noise_mw = NoiseModel{params.thermal_noise_dbm_hz, bw, params.noise_figure_db}.power_mw();
      link.backhaul_index = -1;
      for (const auto& o : slot.transmissions) {
        if (o.tx_id == t.tx_id || o.tx_id == t.rx_id) {
          continue;
        }
        const double frac = overlap_fraction(rbs_of(trial.alloc, o), rbs);
        if (frac > 0.0) {
          link.interferers.push_back({gene_of(o.tx_id), frac * gain_of(o.tx_id, t.rx_id)});
        }
      }
      if (t.kind == LinkKind::Backhaul) {
        const double n = static_cast<double>(trial.assoc.children_of(t.tx_id).size());
        link.gamma_min = min_sinr(n * req.min_rate_bps, bw);
        backhaul_index[t.tx_id] = static_cast<int>(backhaul_.size());
        backhaul_.push_back(std::move(link));
      } else {
        link.gamma_min = min_sinr(req.min_rate_bps, bw);
        access_.push_back(std::move(link));
      }
    }
  }
  std::sort(access_.begin(), access_.end(), [](const Link& a, const Link& b) { return a.tx_id < b.tx_id; });
  for (auto& a : access_) {
    if (const auto it = backhaul_index.find(a.rx_id); it != backhaul_index.end()) {
      a.backhaul_index = it->second;
    }
  }
}

void CoverageEvaluator::powers_mw(const PowerVector& powers, double backoff_db,
                                  std::vector<double>& out) const {
  if (powers.size() != genes_) {
    throw std::invalid_argument("power vector has " + std::to_string(powers.size()) +
                                " genes, expected " + std::to_string(genes_));
  }
  out.resize(genes_);
  for (std::size_t g = 0; g < genes_; ++g) {
    out[g] = dbm_to_mw(powers[g] - backoff_db);
  }
}

double CoverageEvaluator::link_sinr(const Link& link, const std::vector<double>& p_mw) const {
  double interference = 0.0;
  for (const auto& term : link.interferers) {
    interference += p_mw[term.gene] * term.gain;
  }
  return p_mw[link.tx_gene] * link.gain / (interference + link.noise_mw);
}

double CoverageEvaluator::coverage(const PowerVector& powers, double backoff_db) const {
  if (access_.empty()) {
    return 1.0;
  }
  thread_local std::vector<double> p_mw;
  thread_local std::vector<unsigned char> backhaul_ok;
  powers_mw(powers, backoff_db, p_mw);
  backhaul_ok.assign(backhaul_.size(), 0);
  for (std::size_t b = 0; b < backhaul_.size(); ++b) {
    backhaul_ok[b] = link_sinr(backhaul_[b], p_mw) >= backhaul_[b].gamma_min ? 1 : 0;
  }
  std::size_t covered = 0;
  for (const auto& a : access_) {
    if (a.backhaul_index >= 0 && backhaul_ok[static_cast<std::size_t>(a.backhaul_index)] == 0) {
      continue;
    }
    covered += link_sinr(a, p_mw) >= a.gamma_min ? 1 : 0;
  }
  return static_cast<double>(covered) / static_cast<double>(access_.size());
}

CoverageResult CoverageEvaluator::evaluate(const PowerVector& powers, double backoff_db) const {
  std::vector<double> p_mw;
  powers_mw(powers, backoff_db, p_mw);
  CoverageResult result;
  std::vector<bool> ok(backhaul_.size());
  for (std::size_t b = 0; b < backhaul_.size(); ++b) {
    const double gamma = link_sinr(backhaul_[b], p_mw);
    result.backhaul_sinr[backhaul_[b].tx_id] = gamma;
    ok[b] = gamma >= backhaul_[b].gamma_min;
  }
  std::size_t covered = 0;
  for (const auto& a : access_) {
    const double gamma = link_sinr(a, p_mw);
    result.access_sinr[a.tx_id] = gamma;
    UeStatus status = gamma >= a.gamma_min ? UeStatus::Covered : UeStatus::AccessFail;
    if (a.backhaul_index >= 0 && !ok[static_cast<std::size_t>(a.backhaul_index)]) {
      status = UeStatus::BackhaulFail;
    }
    covered += status == UeStatus::Covered ? 1 : 0;
    result.per_ue[a.tx_id] = status;
  }
  result.coverage_probability =
      access_.empty() ? 1.0 : static_cast<double>(covered) / static_cast<double>(access_.size());
  return result;
}

// ---- Monte-Carlo ---------------------------------------------------------------------

ChannelParams channel_params_for(const ScenarioConfig& config) {
  if (config.rain_k > 0.0 && config.rain_gamma > 0.0) {
    return ChannelParams::from_config(config, nullptr);
  }
  const auto path = config.rain_table_path.empty() ? RainTable::default_path()
                                                   : std::filesystem::path(config.rain_table_path);
  const RainTable table = RainTable::load(path);
  return ChannelParams::from_config(config, &table);
}

TrialInstance make_trial(const ScenarioConfig& config, const ChannelParams& base_params,
                         std::uint64_t seed, std::uint64_t trial) {
  TrialInstance inst;
  RngStream placement = RngStream::derive(seed, trial, StreamPurpose::UePlacement);
  inst.topology = build_topology(config, placement);

  ChannelParams params = base_params;
  RngStream rain = RngStream::derive(seed, trial, StreamPurpose::Rain);
  const double rate = rain.uniform(config.rain_rate_mm_h.lo, config.rain_rate_mm_h.hi);
  params.rain_rate_mm_h = config.rain_enabled ? rate : 0.0;

  RngStream shadowing = RngStream::derive(seed, trial, StreamPurpose::Shadowing);
  RngStream fading = RngStream::derive(seed, trial, StreamPurpose::Fading);
  inst.realization = sample_realization(inst.topology, params, shadowing, fading);

  inst.assoc = associate(inst.topology, inst.realization);
  RbGrid grid;
  grid.rbs_per_ue = config.rbs_per_ue;
  grid.rb_max = config.rb_max;
  grid.access_pool = config.effective_access_rb_pool();
  grid.rb_bandwidth_hz = config.rb_bandwidth_hz();
  inst.alloc = allocate_rbs(inst.topology, inst.assoc, grid);
  inst.plan = plan_slots(inst.assoc, inst.alloc, config.slot_mode);
  inst.layout = GeneLayout::for_topology(inst.topology, config.ue_eirp_dbm, config.iab_eirp_dbm);
  return inst;
}

void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& body) {
  std::size_t workers = threads > 0 ? static_cast<std::size_t>(threads)
                                    : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) {
      body(i);
    }
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) {
            failure = std::current_exception();
          }
          next = count;
        }
      }
    });
  }
  for (auto& t : pool) {
    t.join();
  }
  if (failure) {
    std::rethrow_exception(failure);
  }
}

MonteCarloResult monte_carlo_coverage(const ScenarioConfig& config, const PowerPolicy& policy,
                                      int trials, std::uint64_t seed,
                                      const TrialObserver& observer) {
  if (trials < 1) {
    throw ValidationError("trials", "must be >= 1");
  }
  config.validate();
  const ChannelParams base = channel_params_for(config);
  const ServiceRequirement req{config.min_rate_bps};

  MonteCarloResult mc;
  mc.per_trial.assign(static_cast<std::size_t>(trials), 0.0);
  parallel_for(static_cast<std::size_t>(trials), config.threads, [&](std::size_t i) {
    const TrialInstance inst = make_trial(config, base, seed, i);
    const CoverageEvaluator evaluator(inst, req);
    const PowerVector powers = policy(inst, evaluator, seed, i);
    const CoverageResult result = evaluator.evaluate(powers);
    mc.per_trial[i] = result.coverage_probability;
    if (observer) {
      observer(i, inst, powers, result);
    }
  });

  double sum = 0.0;
  for (double v : mc.per_trial) {
    sum += v;
  }
  mc.mean = sum / trials;
  if (trials > 1) {
    double ss = 0.0;
    for (double v : mc.per_trial) {
      ss += (v - mc.mean) * (v - mc.mean);
    }
    mc.std_error = std::sqrt(ss / (trials - 1) / trials);
  }
  return mc;
}

}  // namespace iabsim
