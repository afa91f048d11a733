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

namespace mapc {

/// Deployment geometry and radio constants of the enterprise scenario.
struct ScenarioConfig {
  int gridRows = 3;
  int gridCols = 3;
  double subareaSide = 10.0;  // meters
  int stationsPerSubarea = 3;
  double carrierFreqGHz = 5.0;
  double txPowerDbm = 23.0;
  int wallCount = 3;
  double breakpointMeters = 10.0;
  double noiseDbm = -94.0;
  // Reserved: no carrier sensing happens inside a protected TXOP.
  double ccaDbm = -82.0;

  /// Throws ConfigError on the first violated invariant.
  void validate() const;

  int numSubareas() const { return gridRows * gridCols; }
};

/// Durations of the periodic coordinated transmission. Microseconds unless
/// the field name says otherwise.
struct TimingConfig {
  double periodMs = 5.0;
  double txopMaxMs = 3.0;
  double mapRtsUs = 80.0;
  double mapCtsUs = 62.0;
  // Reserved: MAP-RTS is never lost in the modelled TXOPs.
  double ctsTimeoutUs = 41.0;
  double mapTfUs = 76.0;
  double teUs = 9.0;
  double ofdmSymbolUs = 12.8;
  double guardIntervalUs = 0.8;
  double phyPreambleUs = 44.0;
  // Fixed per-slot cost on top of MAP-TF + Te (e.g. block-ack airtime).
  double slotOverheadUs = 0.0;
  std::uint64_t numTxops = 10000;
  // When set, the RTS/CTS handshake is charged even if every buffer is empty.
  bool handshakeWhenIdle = false;

  void validate() const;

  double periodSec() const { return periodMs * 1e-3; }
  double txopMaxUs() const { return txopMaxMs * 1e3; }
  double handshakeUs() const { return mapRtsUs + teUs + mapCtsUs + teUs; }
  double slotFixedCostUs() const { return mapTfUs + teUs + slotOverheadUs; }
};

/// Bursty downlink traffic: every period each station independently receives
/// a burst of `burstSize` packets with a probability set by the offered load.
struct TrafficConfig {
  double perStaLoadBps = 8e6;
  int burstSize = 10;
  int packetBytes = 1500;

  void validate() const;
};

}  // namespace mapc
