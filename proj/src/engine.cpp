// Copyright 2026 The mapcsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mapc/engine.hpp"

#include <fmt/core.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "mapc/stats.hpp"

namespace mapc {

namespace {

constexpr std::uint64_t kDeploymentStream = 1;
constexpr std::uint64_t kTrafficStream = 2;

std::string join(const std::vector<std::size_t>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) {
      out += ' ';
    }
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace

void SimulationConfig::validate() const {
  scenario.validate();
  timing.validate();
  traffic.validate();
  if (maxGroupSize < 1) {
    throw ConfigError("grouping: K must be >= 1");
  }
  if (std::isnan(gammaDb)) {
    throw ConfigError("grouping: gamma must be a number");
  }
  arrivalProbability();
}

double SimulationConfig::arrivalProbability() const {
  return arrival_probability(traffic.perStaLoadBps, traffic.burstSize, traffic.packetBytes,
                             timing.periodSec());
}

double arrival_probability(double loadBps, int burstSize, int packetBytes, double periodSec) {
  if (!(loadBps >= 0.0) || burstSize < 1 || packetBytes < 1 || !(periodSec > 0.0)) {
    throw ConfigError("arrival probability needs load >= 0 and positive burst, size and period");
  }
  const double burstBits = static_cast<double>(burstSize) * packetBytes * 8.0;
  const double p = loadBps * periodSec / burstBits;
  if (p > 1.0) {
    throw ConfigError(fmt::format(
        "offered load {:.3f} Mbps per station needs p = {:.4f} > 1: more than one burst per "
        "period",
        loadBps / 1e6, p));
  }
  return p;
}

Buffers::Buffers(const Deployment& deployment)
    : perStation_(deployment.numStations()),
      apOf_(deployment.association()),
      stationsOf_(deployment.numAps()),
      perAp_(deployment.numAps(), 0) {
  for (ApId ap = 0; ap < deployment.numAps(); ++ap) {
    const auto stations = deployment.stationsOf(ap);
    stationsOf_[ap].assign(stations.begin(), stations.end());
  }
}

void Buffers::push(double arrivalTime, StationId destStation, int sizeBytes) {
  perStation_.at(destStation).push_back({nextSeq_++, arrivalTime, destStation, sizeBytes, {}});
  ++perAp_[apOf_[destStation]];
  ++total_;
}

std::optional<double> Buffers::oldestArrival(ApId ap) const {
  const Packet* oldest = nullptr;
  for (StationId sta : stationsOf_.at(ap)) {
    const auto& q = perStation_[sta];
    if (!q.empty() && (oldest == nullptr || q.front().seq < oldest->seq)) {
      oldest = &q.front();
    }
  }
  if (oldest == nullptr) {
    return std::nullopt;
  }
  return oldest->arrivalTime;
}

BufferSummary Buffers::summary(double now) const {
  BufferSummary s;
  s.now = now;
  s.perAp.reserve(perAp_.size());
  for (ApId ap = 0; ap < perAp_.size(); ++ap) {
    s.perAp.push_back({perAp_[ap], oldestArrival(ap)});
  }
  return s;
}

std::vector<Packet> Buffers::pop(StationId sta, std::size_t n) {
  auto& q = perStation_.at(sta);
  if (n > q.size()) {
    throw DomainError(fmt::format("cannot pop {} packets from station {} holding {}", n, sta,
                                  q.size()));
  }
  std::vector<Packet> out(q.begin(), q.begin() + static_cast<std::ptrdiff_t>(n));
  q.erase(q.begin(), q.begin() + static_cast<std::ptrdiff_t>(n));
  perAp_[apOf_[sta]] -= n;
  total_ -= n;
  return out;
}

std::size_t step_arrivals(Buffers& buffers, const Deployment& deployment,
                          const TrafficConfig& traffic, double arrivalProb, Rng& rng,
                          double now) {
  std::size_t added = 0;
  for (StationId sta = 0; sta < deployment.numStations(); ++sta) {
    if (!rng.bernoulli(arrivalProb)) {
      continue;
    }
    for (int i = 0; i < traffic.burstSize; ++i) {
      buffers.push(now, sta, traffic.packetBytes);
    }
    added += static_cast<std::size_t>(traffic.burstSize);
  }
  return added;
}

std::size_t SlotPlan::packets() const {
  std::size_t n = 0;
  for (const ApSlotPlan& ap : perAp) {
    n += ap.packets;
  }
  return n;
}

SlotPlan plan_slot(std::span<const ApId> group, const Buffers& buffers,
                   const ChannelView& channel, const TimingConfig& timing, double budgetUs) {
  SlotPlan plan;
  plan.members.assign(group.begin(), group.end());
  const double dataBudgetUs = budgetUs - timing.slotFixedCostUs() - timing.phyPreambleUs;

  struct Cursor {
    StationId station;
    int mcs;
    double usPerBit;
    const std::deque<Packet>* queue;
    std::size_t next;
  };

  for (ApId ap : group) {
    ApSlotPlan apPlan;
    apPlan.ap = ap;
    if (dataBudgetUs > 0.0 && buffers.count(ap) > 0) {
      std::vector<Cursor> cursors;
      for (StationId sta : channel.deployment.stationsOf(ap)) {
        const auto& q = buffers.queue(sta);
        if (q.empty()) {
          continue;
        }
        const double sinr = station_sinr_db(ap, sta, group, channel.rssi, channel.noiseDbm);
        const auto mcs = select_mcs(sinr, channel.mcsTable);
        if (!mcs) {
          continue;
        }
        const double rate = data_rate_bps(*mcs, channel.mcsTable, timing);
        cursors.push_back({sta, *mcs, 1e6 / rate, &q, 0});
      }

      double usedUs = 0.0;
      for (;;) {
        // Oldest remaining packet among reachable stations.
        Cursor* pick = nullptr;
        for (Cursor& c : cursors) {
          if (c.next < c.queue->size() &&
              (pick == nullptr || (*c.queue)[c.next].seq < (*pick->queue)[pick->next].seq)) {
            pick = &c;
          }
        }
        if (pick == nullptr) {
          break;
        }
        const Packet& p = (*pick->queue)[pick->next];
        const double airtimeUs = p.sizeBytes * 8.0 * pick->usPerBit;
        if (usedUs + airtimeUs > dataBudgetUs) {
          break;
        }
        usedUs += airtimeUs;
        ++pick->next;
        ++apPlan.packets;
        if (!apPlan.segments.empty() && apPlan.segments.back().station == pick->station) {
          ++apPlan.segments.back().packets;
          apPlan.segments.back().airtimeUs += airtimeUs;
        } else {
          apPlan.segments.push_back({pick->station, pick->mcs, 1, airtimeUs});
        }
      }
      if (apPlan.packets > 0) {
        apPlan.airtimeUs = timing.phyPreambleUs + usedUs;
      }
    }
    plan.durationUs = std::max(plan.durationUs, apPlan.airtimeUs);
    plan.perAp.push_back(std::move(apPlan));
  }
  return plan;
}

TxopRecord run_txop(Buffers& buffers, const ChannelView& channel, SchedulerKind kind,
                    const GroupSet& groups, const TimingConfig& timing, double now,
                    std::vector<Packet>& delivered) {
  TxopRecord record;
  record.startTime = now;
  if (buffers.empty() && !timing.handshakeWhenIdle) {
    return record;
  }

  const double capUs = timing.txopMaxUs();
  record.handshakeUs = timing.handshakeUs();
  double consumedUs = record.handshakeUs;

  while (!buffers.empty() && consumedUs < capUs) {
    const double decisionTime = now + consumedUs * 1e-6;
    const auto selected = select_group(kind, groups, buffers.summary(decisionTime));
    if (!selected) {
      break;
    }
    const SlotPlan plan = plan_slot(*selected, buffers, channel, timing, capUs - consumedUs);
    if (plan.empty()) {
      break;
    }

    SlotRecord slot;
    slot.members = plan.members;
    slot.overheadUs = timing.slotFixedCostUs();
    slot.durationUs = plan.durationUs;
    consumedUs += slot.overheadUs + slot.durationUs;
    const double slotEnd = now + consumedUs * 1e-6;

    for (const ApSlotPlan& apPlan : plan.perAp) {
      slot.packetsPerMember.push_back(apPlan.packets);
      for (const StationSegment& seg : apPlan.segments) {
        for (Packet& p : buffers.pop(seg.station, seg.packets)) {
          p.deliveryTime = slotEnd;
          delivered.push_back(p);
        }
      }
    }
    record.slots.push_back(std::move(slot));
  }
  record.totalDurationUs = consumedUs;
  return record;
}

double MetricsReport::delayPercentile(double q) const {
  if (delaysSec.empty()) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  return percentile_sorted(delaysSec, q);
}

double MetricsReport::meanOccupancy() const {
  if (occupancy.empty()) {
    return 0.0;
  }
  return std::accumulate(occupancy.begin(), occupancy.end(), 0.0) /
         static_cast<double>(occupancy.size());
}

Network build_network(const SimulationConfig& config, std::uint64_t seed) {
  config.validate();
  Rng rng(derive_seed(seed, kDeploymentStream));
  Deployment deployment = generate_grid_deployment(config.scenario, rng);
  RssiMatrix rssi = build_rssi_matrix(deployment, config.scenario);
  GroupSet groups = build_all_groups(rssi, deployment, config.grouping());
  return {std::move(deployment), std::move(rssi), std::move(groups)};
}

MetricsReport run_simulation(const SimulationConfig& config, std::uint64_t seed,
                             const RunOptions& options) {
  return run_simulation(config, build_network(config, seed), seed, options);
}

MetricsReport run_simulation(const SimulationConfig& config, const Network& network,
                             std::uint64_t seed, const RunOptions& options) {
  config.validate();
  const TimingConfig& timing = config.timing;
  const double p = config.arrivalProbability();
  const double periodSec = timing.periodSec();
  const double capUs = timing.txopMaxUs();

  Buffers buffers(network.deployment);
  Rng rng(derive_seed(seed, kTrafficStream));
  const ChannelView channel{network.deployment, network.rssi, config.mcsTable,
                            config.scenario.noiseDbm};

  MetricsReport report;
  report.occupancy.reserve(timing.numTxops);
  std::vector<Packet> delivered;
  double deliveredBits = 0.0;
  double delaySum = 0.0;

  for (std::uint64_t n = 0; n < timing.numTxops; ++n) {
    const double now = static_cast<double>(n) * periodSec;
    report.packetsArrived +=
        step_arrivals(buffers, network.deployment, config.traffic, p, rng, now);

    delivered.clear();
    TxopRecord txop =
        run_txop(buffers, channel, config.scheduler, network.groups, timing, now, delivered);

    for (const Packet& pkt : delivered) {
      const double delay = *pkt.deliveryTime - pkt.arrivalTime;
      report.delaysSec.push_back(delay);
      delaySum += delay;
      deliveredBits += pkt.sizeBytes * 8.0;
    }
    report.packetsDelivered += delivered.size();
    if (options.keepPackets) {
      report.deliveredPackets.insert(report.deliveredPackets.end(), delivered.begin(),
                                     delivered.end());
    }
    report.occupancy.push_back(txop.totalDurationUs / capUs);
    if (options.keepTrace) {
      report.trace.push_back(std::move(txop));
    }
  }

  report.packetsRemaining = buffers.total();
  report.throughputBps = deliveredBits / (static_cast<double>(timing.numTxops) * periodSec);
  report.meanDelaySec = report.delaysSec.empty()
                            ? std::numeric_limits<double>::quiet_NaN()
                            : delaySum / static_cast<double>(report.delaysSec.size());
  std::sort(report.delaysSec.begin(), report.delaysSec.end());
  return report;
}

std::string trace_to_csv(const std::vector<TxopRecord>& trace, double txopMaxUs) {
  std::string out =
      "txop,start_s,handshake_us,total_duration_us,occupancy,slot,members,slot_overhead_us,"
      "slot_duration_us,packets\n";
  for (std::size_t t = 0; t < trace.size(); ++t) {
    const TxopRecord& r = trace[t];
    const auto prefix = fmt::format("{},{:.6f},{:.3f},{:.3f},{:.6f}", t, r.startTime,
                                    r.handshakeUs, r.totalDurationUs,
                                    r.totalDurationUs / txopMaxUs);
    if (r.slots.empty()) {
      out += prefix + ",,,,,\n";
      continue;
    }
    for (std::size_t s = 0; s < r.slots.size(); ++s) {
      const SlotRecord& slot = r.slots[s];
      std::vector<std::size_t> members(slot.members.begin(), slot.members.end());
      out += fmt::format("{},{},{},{:.3f},{:.3f},{}\n", prefix, s, join(members),
                         slot.overheadUs, slot.durationUs, join(slot.packetsPerMember));
    }
  }
  return out;
}

}  // namespace mapc
