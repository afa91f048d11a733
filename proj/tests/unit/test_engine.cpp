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

#include <doctest.h>

#include <cmath>
#include <map>
#include <vector>

#include "mapc/engine.hpp"
#include "oracles.hpp"

using namespace mapc;

namespace {

// One AP at the origin with stations placed at the given distances on the
// x axis, plus optional far-away extra APs with one station each.
Deployment line(std::vector<double> dists, std::size_t extraAps = 0, double gap = 100.0) {
  std::vector<Point> aps{{0, 0}};
  std::vector<Point> stations;
  std::vector<ApId> assoc;
  for (double d : dists) {
    stations.push_back({d, 0});
    assoc.push_back(0);
  }
  for (std::size_t i = 1; i <= extraAps; ++i) {
    const double x = gap * static_cast<double>(i);
    aps.push_back({x, 0});
    stations.push_back({x + dists.front(), 0});
    assoc.push_back(i);
  }
  return Deployment(aps, stations, assoc, 0);
}

// Independent MCS and per-packet airtime for a given SINR.
double airtime_us(double sinrDb, int bytes = 1500) {
  const double thresholds[] = {2, 5, 8, 11, 15, 18, 20, 22, 26, 28, 30};
  const double bits[] = {117, 234, 351, 468, 702, 936, 1053, 1170, 1404, 1560, 1755};
  int m = -1;
  for (int i = 0; i < 11; ++i) {
    if (sinrDb >= thresholds[i]) m = i;
  }
  REQUIRE(m >= 0);
  return bytes * 8.0 / bits[m] * 13.6;
}

SimulationConfig small_config() {
  SimulationConfig c;
  c.timing.numTxops = 400;
  return c;
}

}  // namespace

TEST_CASE("arrival probability: formula and boundaries") {
  CHECK(arrival_probability(1e6, 10, 1500, 5e-3) == doctest::Approx(1.0 / 24.0));
  CHECK(arrival_probability(6e6, 10, 1500, 5e-3) == doctest::Approx(0.25));
  CHECK(arrival_probability(24e6, 10, 1500, 5e-3) == doctest::Approx(1.0));
  CHECK(arrival_probability(0.0, 10, 1500, 5e-3) == 0.0);
  CHECK_THROWS_AS(arrival_probability(24.1e6, 10, 1500, 5e-3), ConfigError);
  SimulationConfig c;
  c.traffic.perStaLoadBps = 25e6;
  CHECK_THROWS_AS(c.validate(), ConfigError);
}

TEST_CASE("arrivals: p = 0 and p = 1") {
  ScenarioConfig cfg;
  Rng drng(1);
  const Deployment d = generate_grid_deployment(cfg, drng);
  TrafficConfig traffic;
  Buffers b(d);
  Rng rng(2);
  CHECK(step_arrivals(b, d, traffic, 0.0, rng, 0.0) == 0);
  CHECK(b.empty());
  CHECK(step_arrivals(b, d, traffic, 1.0, rng, 0.015) == 270);
  CHECK(b.total() == 270);
  for (StationId s = 0; s < 27; ++s) {
    REQUIRE(b.queue(s).size() == 10);
    for (const Packet& p : b.queue(s)) {
      CHECK(p.arrivalTime == 0.015);
      CHECK(p.destStation == s);
      CHECK(p.sizeBytes == 1500);
    }
  }
  for (ApId a = 0; a < 9; ++a) {
    CHECK(b.count(a) == 30);
    CHECK(b.oldestArrival(a) == 0.015);
  }
}

TEST_CASE("arrivals: empirical frequency at p = 0.25") {
  const Deployment d = line({3.0});
  TrafficConfig traffic;
  Buffers b(d);
  Rng rng(derive_seed(11, 2));
  std::size_t bursts = 0;
  for (int n = 0; n < 100000; ++n) {
    bursts += step_arrivals(b, d, traffic, 0.25, rng, 0.0) / 10;
  }
  CHECK(std::abs(static_cast<double>(bursts) / 1e5 - 0.25) / 0.25 < 0.01);
}

TEST_CASE("buffers: summary invariants and FIFO pops") {
  const Deployment d = line({2.0, 4.0});
  Buffers b(d);
  auto s = b.summary(1.0);
  CHECK(s.perAp[0].packetCount == 0);
  CHECK_FALSE(s.perAp[0].oldestArrival.has_value());
  b.push(0.1, 1, 1500);
  b.push(0.2, 0, 1500);
  b.push(0.3, 1, 1500);
  s = b.summary(1.0);
  CHECK(s.perAp[0].packetCount == 3);
  CHECK(s.perAp[0].oldestArrival == 0.1);
  const auto popped = b.pop(1, 2);
  REQUIRE(popped.size() == 2);
  CHECK(popped[0].seq < popped[1].seq);
  CHECK(popped[0].arrivalTime == 0.1);
  CHECK(b.total() == 1);
  CHECK(b.oldestArrival(0) == 0.2);
}

TEST_CASE("plan slot: five packets at MCS 7") {
  // Place the station so its SNR lands inside the MCS 7 band [22, 26).
  ScenarioConfig cfg;
  double lo = 1.0, hi = 200.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (cfg.txPowerDbm - oracle::path_loss(mid, 5.0, 3, 10) - cfg.noiseDbm > 24.0 ? lo : hi) = mid;
  }
  const Deployment d = line({lo});
  const RssiMatrix m = build_rssi_matrix(d, cfg);
  const McsTable table = McsTable::default_11ax();
  const ChannelView ch{d, m, table, cfg.noiseDbm};
  Buffers b(d);
  for (int i = 0; i < 5; ++i) b.push(0.0, 0, 1500);
  const TimingConfig timing;
  const std::vector<ApId> g{0};
  const SlotPlan plan = plan_slot(g, b, ch, timing, 3000.0);
  REQUIRE(plan.perAp.size() == 1);
  REQUIRE(plan.perAp[0].segments.size() == 1);
  CHECK(plan.perAp[0].segments[0].mcs == 7);
  CHECK(plan.perAp[0].packets == 5);
  CHECK(plan.perAp[0].segments[0].airtimeUs / 5 == doctest::Approx(139.4871794871795));
  CHECK(plan.durationUs == doctest::Approx(741.4358974358975));
}

TEST_CASE("plan slot: nothing fits a tiny budget") {
  ScenarioConfig cfg;
  double lo = 1.0, hi = 300.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (cfg.txPowerDbm - oracle::path_loss(mid, 5.0, 3, 10) - cfg.noiseDbm > 3.0 ? lo : hi) = mid;
  }
  const Deployment d = line({lo});
  const RssiMatrix m = build_rssi_matrix(d, cfg);
  const McsTable table = McsTable::default_11ax();
  const ChannelView ch{d, m, table, cfg.noiseDbm};
  Buffers b(d);
  b.push(0.0, 0, 1500);
  const TimingConfig timing;
  const std::vector<ApId> g{0};
  const SlotPlan tiny = plan_slot(g, b, ch, timing, 200.0);
  CHECK(tiny.empty());
  CHECK(tiny.durationUs == 0.0);
  const SlotPlan fits = plan_slot(g, b, ch, timing, 3000.0);
  REQUIRE(fits.perAp[0].segments.size() == 1);
  CHECK(fits.perAp[0].segments[0].mcs == 0);
  CHECK(fits.perAp[0].segments[0].airtimeUs == doctest::Approx(1394.871794871795));
}

TEST_CASE("plan slot: two APs, the slot lasts as long as the busier one") {
  ScenarioConfig cfg;
  const Deployment d = line({2.0}, 1, 200.0);
  const RssiMatrix m = build_rssi_matrix(d, cfg);
  const McsTable table = McsTable::default_11ax();
  const ChannelView ch{d, m, table, cfg.noiseDbm};
  Buffers b(d);
  for (int i = 0; i < 3; ++i) b.push(0.0, 0, 1500);
  b.push(0.0, 1, 1500);
  const TimingConfig timing;
  const std::vector<ApId> g{0, 1};
  const SlotPlan plan = plan_slot(g, b, ch, timing, 3000.0);
  REQUIRE(plan.perAp.size() == 2);
  CHECK(plan.perAp[0].segments[0].mcs == plan.perAp[1].segments[0].mcs);
  CHECK(plan.durationUs == doctest::Approx(plan.perAp[0].airtimeUs));
  CHECK(plan.perAp[1].airtimeUs < plan.durationUs);
  const double t = airtime_us(oracle::sinr(0, 0, {0, 1}, m, cfg.noiseDbm));
  CHECK(plan.durationUs == doctest::Approx(44.0 + 3 * t));
}

TEST_CASE("plan slot: stations without an MCS are skipped, FIFO across stations") {
  ScenarioConfig cfg;
  const Deployment d = line({3.0, 5000.0, 6.0});
  const RssiMatrix m = build_rssi_matrix(d, cfg);
  const McsTable table = McsTable::default_11ax();
  const ChannelView ch{d, m, table, cfg.noiseDbm};
  Buffers b(d);
  b.push(0.0, 2, 1500);
  b.push(0.0, 1, 1500);
  b.push(0.0, 0, 1500);
  b.push(0.0, 2, 1500);
  const TimingConfig timing;
  const std::vector<ApId> g{0};
  const SlotPlan plan = plan_slot(g, b, ch, timing, 3000.0);
  REQUIRE(plan.perAp[0].segments.size() == 3);
  CHECK(plan.perAp[0].segments[0].station == 2);
  CHECK(plan.perAp[0].segments[1].station == 0);
  CHECK(plan.perAp[0].segments[2].station == 2);
  CHECK(plan.perAp[0].packets == 3);
}

TEST_CASE("run txop: empty buffers cost nothing unless configured") {
  ScenarioConfig cfg;
  const Deployment d = line({3.0});
  const RssiMatrix m = build_rssi_matrix(d, cfg);
  const McsTable table = McsTable::default_11ax();
  const ChannelView ch{d, m, table, cfg.noiseDbm};
  const GroupSet gs({{0, {0}}}, 1);
  Buffers b(d);
  std::vector<Packet> out;
  TimingConfig timing;
  const TxopRecord r = run_txop(b, ch, SchedulerKind::NumPkSingle, gs, timing, 0.0, out);
  CHECK(r.totalDurationUs == 0.0);
  CHECK(r.slots.empty());
  timing.handshakeWhenIdle = true;
  const TxopRecord h = run_txop(b, ch, SchedulerKind::NumPkSingle, gs, timing, 0.0, out);
  CHECK(h.totalDurationUs == doctest::Approx(160.0));
  CHECK(h.slots.empty());
}

TEST_CASE("run txop: single backlogged AP in one slot, closed-form delay") {
  ScenarioConfig cfg;
  const Deployment d = line({3.0});
  const RssiMatrix m = build_rssi_matrix(d, cfg);
  const McsTable table = McsTable::default_11ax();
  const ChannelView ch{d, m, table, cfg.noiseDbm};
  const GroupSet gs({{0, {0}}}, 1);
  Buffers b(d);
  const double now = 0.5;
  for (int i = 0; i < 10; ++i) b.push(now, 0, 1500);
  std::vector<Packet> out;
  const TimingConfig timing;
  const TxopRecord r = run_txop(b, ch, SchedulerKind::CTdmaNumPk, gs, timing, now, out);
  REQUIRE(r.slots.size() == 1);
  const double t = airtime_us(oracle::sinr(0, 0, {0}, m, cfg.noiseDbm));
  const double end = 160 + 76 + 9 + 44 + 10 * t;
  CHECK(r.totalDurationUs == doctest::Approx(end));
  REQUIRE(out.size() == 10);
  for (const Packet& p : out) {
    CHECK((*p.deliveryTime - p.arrivalTime) * 1e6 == doctest::Approx(end));
    CHECK(*p.deliveryTime - p.arrivalTime < timing.periodSec());
  }
  CHECK(b.empty());
}

TEST_CASE("run txop: saturated buffers fill the TXOP without exceeding it") {
  ScenarioConfig cfg;
  Rng rng(4);
  const Deployment d = generate_grid_deployment(cfg, rng);
  const RssiMatrix m = build_rssi_matrix(d, cfg);
  const McsTable table = McsTable::default_11ax();
  const ChannelView ch{d, m, table, cfg.noiseDbm};
  const GroupSet gs = build_all_groups(m, d, {20, 3, cfg.noiseDbm});
  const TimingConfig timing;
  for (SchedulerKind k : kAllSchedulers) {
    Buffers b(d);
    for (int i = 0; i < 40; ++i) {
      for (StationId s = 0; s < d.numStations(); ++s) b.push(0.0, s, 1500);
    }
    std::vector<Packet> out;
    const TxopRecord r = run_txop(b, ch, k, gs, timing, 0.0, out);
    CHECK(r.totalDurationUs <= timing.txopMaxUs());
    // Within one MCS-0 packet plus slot overhead of the cap.
    CHECK(timing.txopMaxUs() - r.totalDurationUs < timing.slotFixedCostUs() + 44 + 1394.9);
    double sum = r.handshakeUs;
    std::size_t pk = 0;
    for (const SlotRecord& s : r.slots) {
      sum += s.overheadUs + s.durationUs;
      for (std::size_t n : s.packetsPerMember) pk += n;
    }
    CHECK(sum == doctest::Approx(r.totalDurationUs));
    CHECK(pk == out.size());
  }
}

TEST_CASE("simulation: zero load") {
  SimulationConfig c = small_config();
  c.traffic.perStaLoadBps = 0.0;
  const MetricsReport r = run_simulation(c, 1);
  CHECK(r.throughputBps == 0.0);
  CHECK(r.delaysSec.empty());
  CHECK(std::isnan(r.meanDelaySec));
  CHECK(std::isnan(r.delayPercentile(0.95)));
  CHECK(r.occupancy.size() == 400);
  for (double o : r.occupancy) CHECK(o == 0.0);
}

TEST_CASE("simulation: conservation, budget, FIFO and determinism for every scheduler") {
  for (double load : {2e6, 8e6}) {
    for (SchedulerKind k : kAllSchedulers) {
      SimulationConfig c = small_config();
      c.traffic.perStaLoadBps = load;
      c.scheduler = k;
      const MetricsReport r = run_simulation(c, 7, {true, true});
      CHECK(r.packetsArrived == r.packetsDelivered + r.packetsRemaining);
      CHECK(r.delaysSec.size() == r.packetsDelivered);
      for (double o : r.occupancy) {
        CHECK(o >= 0.0);
        CHECK(o <= 1.0);
      }
      for (const TxopRecord& t : r.trace) {
        CHECK(t.totalDurationUs <= c.timing.txopMaxUs());
      }
      // FIFO per AP and handshake lower bound.
      const Network net = build_network(c, 7);
      std::map<ApId, std::uint64_t> lastSeq;
      for (const Packet& p : r.deliveredPackets) {
        CHECK(*p.deliveryTime >= p.arrivalTime + c.timing.handshakeUs() * 1e-6);
        const ApId ap = net.deployment.apOf(p.destStation);
        if (lastSeq.count(ap)) {
          CHECK(p.seq > lastSeq[ap]);
        }
        lastSeq[ap] = p.seq;
      }
      const MetricsReport again = run_simulation(c, 7);
      CHECK(again.throughputBps == r.throughputBps);
      CHECK(again.delaysSec == r.delaysSec);
      CHECK(again.occupancy == r.occupancy);
    }
  }
}

TEST_CASE("simulation: steady per-burst delay with one AP and one station") {
  SimulationConfig c = small_config();
  c.scenario.gridRows = c.scenario.gridCols = 1;
  c.scenario.stationsPerSubarea = 1;
  c.traffic.perStaLoadBps = 24e6;  // p = 1
  c.scheduler = SchedulerKind::CTdmaNumPk;
  const Network net = build_network(c, 5);
  const double t = airtime_us(oracle::sinr(0, 0, {0}, net.rssi, c.scenario.noiseDbm));
  REQUIRE(10 * t + 44 + 85 + 160 <= 3000.0);
  const MetricsReport r = run_simulation(c, net, 5);
  const double expected = (160 + 76 + 9 + 44 + 10 * t) * 1e-6;
  REQUIRE(r.packetsDelivered == 4000);
  CHECK(r.packetsRemaining == 0);
  CHECK(r.delaysSec.front() == doctest::Approx(expected));
  CHECK(r.delaysSec.back() == doctest::Approx(expected));
  CHECK(r.throughputBps == doctest::Approx(24e6));
}

TEST_CASE("simulation: spatial reuse carries more traffic than c-TDMA under saturation") {
  SimulationConfig c;
  c.timing.numTxops = 2000;
  c.scheduler = SchedulerKind::NumPkSingle;
  const MetricsReport sr = run_simulation(c, 3);
  c.scheduler = SchedulerKind::CTdmaNumPk;
  const MetricsReport td = run_simulation(c, 3);
  CHECK(sr.throughputBps > td.throughputBps);
}

TEST_CASE("trace csv: one line per slot plus header") {
  SimulationConfig c = small_config();
  c.timing.numTxops = 20;
  const MetricsReport r = run_simulation(c, 2, {true, false});
  std::size_t slots = 0, idle = 0;
  for (const auto& t : r.trace) {
    slots += t.slots.size();
    idle += t.slots.empty() ? 1 : 0;
  }
  const std::string csv = trace_to_csv(r.trace, c.timing.txopMaxUs());
  CHECK(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')) == 1 + slots + idle);
}
