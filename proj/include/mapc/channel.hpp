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

#include <span>
#include <string>
#include <vector>

#include "mapc/config.hpp"
#include "mapc/deployment.hpp"
#include "mapc/types.hpp"

namespace mapc {

/// TGax enterprise path loss in dB:
///   40.05 + 20 log10(min(d, bp) fc / 2.4) + 35 log10(d / bp) [d > bp] + 7 walls
/// Throws DomainError when d <= 0.
double path_loss_db(double distanceM, double carrierGHz, int walls, double breakpointM);

inline double dbm_to_mw(double dbm) { return std::pow(10.0, dbm / 10.0); }
inline double mw_to_dbm(double mw) { return 10.0 * std::log10(mw); }

/// Received power at every station from every AP, dBm. Links are assumed
/// reciprocal, so the same matrix serves uplink measurements and downlink
/// interference estimates.
class RssiMatrix {
 public:
  RssiMatrix(std::size_t numAps, std::size_t numStations, double fill = 0.0)
      : numAps_(numAps), numStations_(numStations), values_(numAps * numStations, fill) {}

  std::size_t numAps() const { return numAps_; }
  std::size_t numStations() const { return numStations_; }

  double at(ApId ap, StationId sta) const { return values_[index(ap, sta)]; }
  double& at(ApId ap, StationId sta) { return values_[index(ap, sta)]; }

  /// One row per AP, one column per station.
  std::string to_csv() const;

 private:
  std::size_t index(ApId ap, StationId sta) const;

  std::size_t numAps_;
  std::size_t numStations_;
  std::vector<double> values_;
};

RssiMatrix build_rssi_matrix(const Deployment& deployment, const ScenarioConfig& config);

/// SINR (dB) at `sta` served by `ap` while every other member of `group`
/// transmits. Powers are summed in milliwatts.
double station_sinr_db(ApId ap, StationId sta, std::span<const ApId> group,
                       const RssiMatrix& rssi, double noiseDbm);

/// True iff every station associated to every member of `group` sees an
/// SINR >= gammaDb with the whole group transmitting. Members without
/// stations impose no constraint but still interfere.
bool group_feasible(std::span<const ApId> group, const RssiMatrix& rssi,
                    const Deployment& deployment, double noiseDbm, double gammaDb);

}  // namespace mapc
