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

#include "mapc/config.hpp"

#include <cmath>

#include "mapc/types.hpp"

namespace mapc {

namespace {

void require(bool ok, const char* what) {
  if (!ok) {
    throw ConfigError(what);
  }
}

bool positive(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

void ScenarioConfig::validate() const {
  require(gridRows >= 1 && gridCols >= 1, "scenario: grid must have at least one subarea");
  require(positive(subareaSide), "scenario: subarea side must be > 0");
  require(stationsPerSubarea >= 1, "scenario: stations per subarea must be >= 1");
  require(positive(carrierFreqGHz), "scenario: carrier frequency must be > 0");
  require(wallCount >= 0, "scenario: wall count must be >= 0");
  require(positive(breakpointMeters), "scenario: breakpoint distance must be > 0");
  require(std::isfinite(txPowerDbm), "scenario: tx power must be finite");
  require(std::isfinite(noiseDbm), "scenario: noise power must be finite");
}

void TimingConfig::validate() const {
  for (double v : {periodMs, txopMaxMs, mapRtsUs, mapCtsUs, ctsTimeoutUs, mapTfUs, teUs,
                   ofdmSymbolUs, guardIntervalUs, phyPreambleUs}) {
    require(positive(v), "timing: all durations must be > 0");
  }
  require(std::isfinite(slotOverheadUs) && slotOverheadUs >= 0.0,
          "timing: slot overhead must be >= 0");
  require(txopMaxMs < periodMs, "timing: TXOP maximum must be shorter than the period");
  require(numTxops >= 1, "timing: at least one TXOP must be simulated");
}

void TrafficConfig::validate() const {
  require(std::isfinite(perStaLoadBps) && perStaLoadBps >= 0.0,
          "traffic: per-station load must be >= 0");
  require(burstSize >= 1, "traffic: burst size must be >= 1");
  require(packetBytes >= 1, "traffic: packet size must be >= 1 byte");
}

}  // namespace mapc
