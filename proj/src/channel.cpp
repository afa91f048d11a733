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

#include "mapc/channel.hpp"

#include <fmt/core.h>

#include <algorithm>
#include <cmath>

namespace mapc {

double path_loss_db(double distanceM, double carrierGHz, int walls, double breakpointM) {
  if (!(distanceM > 0.0)) {
    throw DomainError(fmt::format("path loss needs a positive distance, got {}", distanceM));
  }
  const double nearTerm = 20.0 * std::log10(std::min(distanceM, breakpointM) * carrierGHz / 2.4);
  const double farTerm = distanceM > breakpointM ? 35.0 * std::log10(distanceM / breakpointM) : 0.0;
  return 40.05 + nearTerm + farTerm + 7.0 * walls;
}

std::size_t RssiMatrix::index(ApId ap, StationId sta) const {
  if (ap >= numAps_ || sta >= numStations_) {
    throw DomainError(fmt::format("RSSI index ({}, {}) outside {}x{} matrix", ap, sta, numAps_,
                                  numStations_));
  }
  return ap * numStations_ + sta;
}

std::string RssiMatrix::to_csv() const {
  std::string out;
  for (ApId ap = 0; ap < numAps_; ++ap) {
    for (StationId sta = 0; sta < numStations_; ++sta) {
      if (sta > 0) {
        out += ',';
      }
      out += fmt::format("{:.6f}", at(ap, sta));
    }
    out += '\n';
  }
  return out;
}

RssiMatrix build_rssi_matrix(const Deployment& deployment, const ScenarioConfig& config) {
  RssiMatrix rssi(deployment.numAps(), deployment.numStations());
  for (ApId ap = 0; ap < deployment.numAps(); ++ap) {
    for (StationId sta = 0; sta < deployment.numStations(); ++sta) {
      const double d = distance(deployment.apPositions()[ap], deployment.stationPositions()[sta]);
      rssi.at(ap, sta) = config.txPowerDbm - path_loss_db(d, config.carrierFreqGHz,
                                                          config.wallCount,
                                                          config.breakpointMeters);
    }
  }
  return rssi;
}

double station_sinr_db(ApId ap, StationId sta, std::span<const ApId> group,
                       const RssiMatrix& rssi, double noiseDbm) {
  double interferenceMw = dbm_to_mw(noiseDbm);
  for (ApId other : group) {
    if (other != ap) {
      interferenceMw += dbm_to_mw(rssi.at(other, sta));
    }
  }
  return rssi.at(ap, sta) - mw_to_dbm(interferenceMw);
}

bool group_feasible(std::span<const ApId> group, const RssiMatrix& rssi,
                    const Deployment& deployment, double noiseDbm, double gammaDb) {
  for (ApId ap : group) {
    for (StationId sta : deployment.stationsOf(ap)) {
      if (station_sinr_db(ap, sta, group, rssi, noiseDbm) < gammaDb) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace mapc
