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
#include <string_view>
#include <vector>

#include "mapc/config.hpp"
#include "mapc/random.hpp"
#include "mapc/types.hpp"

namespace mapc {

/// AP and station positions plus the station-to-AP association. Immutable
/// once constructed.
class Deployment {
 public:
  /// Throws ConfigError if there are no APs, if an association entry names
  /// an unknown AP, or if sharingAp is out of range.
  Deployment(std::vector<Point> apPositions, std::vector<Point> stationPositions,
             std::vector<ApId> association, ApId sharingAp);

  std::size_t numAps() const { return apPositions_.size(); }
  std::size_t numStations() const { return stationPositions_.size(); }

  const std::vector<Point>& apPositions() const { return apPositions_; }
  const std::vector<Point>& stationPositions() const { return stationPositions_; }
  const std::vector<ApId>& association() const { return association_; }
  ApId sharingAp() const { return sharingAp_; }

  ApId apOf(StationId sta) const { return association_.at(sta); }
  /// Stations associated to `ap`, ascending.
  std::span<const StationId> stationsOf(ApId ap) const { return stationsByAp_.at(ap); }

  friend bool operator==(const Deployment& a, const Deployment& b) {
    return a.apPositions_ == b.apPositions_ && a.stationPositions_ == b.stationPositions_ &&
           a.association_ == b.association_ && a.sharingAp_ == b.sharingAp_;
  }

 private:
  std::vector<Point> apPositions_;
  std::vector<Point> stationPositions_;
  std::vector<ApId> association_;
  ApId sharingAp_;
  std::vector<std::vector<StationId>> stationsByAp_;
};

/// Stations closer than this to their AP are redrawn.
inline constexpr double kMinStationDistance = 0.1;

/// One AP at the center of every subarea (row-major ids) and
/// `stationsPerSubarea` stations drawn uniformly inside each subarea.
/// Station ids are grouped by subarea. The sharing AP is the center one.
Deployment generate_grid_deployment(const ScenarioConfig& config, Rng& rng);

/// Maps each station to its closest AP; ties go to the lowest AP id.
/// Throws ConfigError when `apPositions` is empty.
std::vector<ApId> nearest_ap_association(std::span<const Point> apPositions,
                                         std::span<const Point> stationPositions);

std::string deployment_to_json(const Deployment& deployment);
Deployment deployment_from_json(std::string_view text);

}  // namespace mapc
