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

#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mapc/channel.hpp"
#include "mapc/config.hpp"
#include "mapc/deployment.hpp"
#include "mapc/grouping.hpp"
#include "mapc/mcs.hpp"
#include "mapc/random.hpp"
#include "mapc/scheduler.hpp"

namespace mapc {

/// Everything needed to run one simulation apart from the seed.
struct SimulationConfig {
  ScenarioConfig scenario;
  TimingConfig timing;
  TrafficConfig traffic;
  McsTable mcsTable = McsTable::default_11ax();
  double gammaDb = 20.0;
  int maxGroupSize = 3;
  SchedulerKind scheduler = SchedulerKind::NumPkSingle;

  /// Throws ConfigError, including when the load exceeds one burst per period.
  void validate() const;

  GroupingParams grouping() const { return {gammaDb, maxGroupSize, scenario.noiseDbm}; }
  double arrivalProbability() const;
};

/// Per-period burst probability p = load T / (burst L 8). Throws ConfigError
/// when p > 1 or an input is not positive (the load may be zero).
double arrival_probability(double loadBps, int burstSize, int packetBytes, double periodSec);

struct Packet {
  std::uint64_t seq = 0;  // global arrival order
  double arrivalTime = 0.0;
  StationId destStation = 0;
  int sizeBytes = 1500;
  std::optional<double> deliveryTime;
};

/// Per-AP transmit buffers, stored as one FIFO per destination station so an
/// AP can skip stations it cannot currently reach. Infinite capacity.
class Buffers {
 public:
  explicit Buffers(const Deployment& deployment);

  /// Appends a packet for `destStation`; assigns its sequence number.
  void push(double arrivalTime, StationId destStation, int sizeBytes);

  std::size_t count(ApId ap) const { return perAp_.at(ap); }
  std::size_t total() const { return total_; }
  bool empty() const { return total_ == 0; }
  std::optional<double> oldestArrival(ApId ap) const;
  BufferSummary summary(double now) const;

  const std::deque<Packet>& queue(StationId sta) const { return perStation_.at(sta); }

  /// Removes the first `n` packets queued for `sta`.
  std::vector<Packet> pop(StationId sta, std::size_t n);

 private:
  std::vector<std::deque<Packet>> perStation_;
  std::vector<ApId> apOf_;
  std::vector<std::vector<StationId>> stationsOf_;
  std::vector<std::size_t> perAp_;
  std::size_t total_ = 0;
  std::uint64_t nextSeq_ = 0;
};

/// Each station independently receives `burstSize` packets stamped `now`
/// with probability p. Returns the number of packets appended.
std::size_t step_arrivals(Buffers& buffers, const Deployment& deployment,
                          const TrafficConfig& traffic, double arrivalProb, Rng& rng,
                          double now);

/// Read-only radio state the controller uses to pick MCSs.
struct ChannelView {
  const Deployment& deployment;
  const RssiMatrix& rssi;
  const McsTable& mcsTable;
  double noiseDbm;
};

/// Consecutive packets to one station in one A-MPDU.
struct StationSegment {
  StationId station = 0;
  int mcs = 0;
  std::size_t packets = 0;
  double airtimeUs = 0.0;
};

struct ApSlotPlan {
  ApId ap = 0;
  std::vector<StationSegment> segments;
  std::size_t packets = 0;
  double airtimeUs = 0.0;  // preamble + segments; 0 if the AP stays silent
};

struct SlotPlan {
  std::vector<ApId> members;
  std::vector<ApSlotPlan> perAp;  // parallel to members
  double durationUs = 0.0;        // data part, MAP-TF and guard excluded

  std::size_t packets() const;
  bool empty() const { return packets() == 0; }
};

/// Fills one coordinated slot for `group`. Every member drains its buffer in
/// arrival order at the MCS its stations get with the whole group active;
/// stations without a usable MCS are skipped. An AP stops at the first packet
/// that would push MAP-TF + Te + overhead + its airtime past `budgetUs`. The
/// slot lasts as long as its longest member. An empty plan means nothing fits.
SlotPlan plan_slot(std::span<const ApId> group, const Buffers& buffers,
                   const ChannelView& channel, const TimingConfig& timing, double budgetUs);

struct SlotRecord {
  std::vector<ApId> members;
  double overheadUs = 0.0;  // MAP-TF + Te + fixed overhead
  double durationUs = 0.0;  // data part
  std::vector<std::size_t> packetsPerMember;
};

struct TxopRecord {
  double startTime = 0.0;  // seconds
  double handshakeUs = 0.0;
  std::vector<SlotRecord> slots;
  double totalDurationUs = 0.0;  // handshake + all slot overheads and durations
};

/// One shared TXOP starting at `now`: MAP-RTS/CTS handshake, then slots until
/// the scheduler has nothing to send, a slot comes back empty, or the budget
/// runs out. Delivered packets (stamped with their slot's end) are appended
/// to `delivered`. No TXOP happens when every buffer is empty, unless
/// timing.handshakeWhenIdle is set.
TxopRecord run_txop(Buffers& buffers, const ChannelView& channel, SchedulerKind kind,
                    const GroupSet& groups, const TimingConfig& timing, double now,
                    std::vector<Packet>& delivered);

struct MetricsReport {
  double throughputBps = 0.0;
  double meanDelaySec = 0.0;  // NaN without delivered packets
  std::vector<double> delaysSec;  // ascending
  std::vector<double> occupancy;  // one per TXOP period, totalDuration / txopMax
  std::uint64_t packetsArrived = 0;
  std::uint64_t packetsDelivered = 0;
  std::uint64_t packetsRemaining = 0;
  std::vector<TxopRecord> trace;          // only with RunOptions::keepTrace
  std::vector<Packet> deliveredPackets;   // only with RunOptions::keepPackets

  /// NaN without delivered packets.
  double delayPercentile(double q) const;
  double meanOccupancy() const;
};

struct RunOptions {
  bool keepTrace = false;
  bool keepPackets = false;
};

/// Deployment, RSSI matrix and groups of one simulated WLAN.
struct Network {
  Deployment deployment;
  RssiMatrix rssi;
  GroupSet groups;
};

/// Draws the deployment for `seed` and runs group formation on it.
Network build_network(const SimulationConfig& config, std::uint64_t seed);

/// Runs numTxops periods: arrivals at nT, then one TXOP.
MetricsReport run_simulation(const SimulationConfig& config, std::uint64_t seed,
                             const RunOptions& options = {});

/// Same, on an already built network.
MetricsReport run_simulation(const SimulationConfig& config, const Network& network,
                             std::uint64_t seed, const RunOptions& options = {});

/// One row per slot (a TXOP without slots gets one row with empty slot fields).
std::string trace_to_csv(const std::vector<TxopRecord>& trace, double txopMaxUs);

}  // namespace mapc
