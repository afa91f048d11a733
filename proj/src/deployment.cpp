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

#include "mapc/deployment.hpp"

#include <fmt/core.h>

#include <json.hpp>

namespace mapc {

Deployment::Deployment(std::vector<Point> apPositions, std::vector<Point> stationPositions,
                       std::vector<ApId> association, ApId sharingAp)
    : apPositions_(std::move(apPositions)),
      stationPositions_(std::move(stationPositions)),
      association_(std::move(association)),
      sharingAp_(sharingAp) {
  if (apPositions_.empty()) {
    throw ConfigError("deployment has no APs");
  }
  if (association_.size() != stationPositions_.size()) {
    throw ConfigError(fmt::format("association has {} entries for {} stations",
                                  association_.size(), stationPositions_.size()));
  }
  if (sharingAp_ >= apPositions_.size()) {
    throw ConfigError(fmt::format("sharing AP {} out of range", sharingAp_));
  }
  stationsByAp_.resize(apPositions_.size());
  for (StationId sta = 0; sta < association_.size(); ++sta) {
    if (association_[sta] >= apPositions_.size()) {
      throw ConfigError(fmt::format("station {} associated to unknown AP {}", sta,
                                    association_[sta]));
    }
    stationsByAp_[association_[sta]].push_back(sta);
  }
}

Deployment generate_grid_deployment(const ScenarioConfig& config, Rng& rng) {
  config.validate();
  const double side = config.subareaSide;
  std::vector<Point> aps;
  std::vector<Point> stations;
  std::vector<ApId> association;
  aps.reserve(static_cast<std::size_t>(config.numSubareas()));

  for (int row = 0; row < config.gridRows; ++row) {
    for (int col = 0; col < config.gridCols; ++col) {
      const Point origin{col * side, row * side};
      const Point center{origin.x + side / 2, origin.y + side / 2};
      const ApId ap = aps.size();
      aps.push_back(center);
      for (int n = 0; n < config.stationsPerSubarea; ++n) {
        Point sta;
        do {
          sta.x = rng.uniform(origin.x, origin.x + side);
          sta.y = rng.uniform(origin.y, origin.y + side);
        } while (distance(sta, center) < kMinStationDistance);
        stations.push_back(sta);
        association.push_back(ap);
      }
    }
  }

  const auto sharing =
      static_cast<ApId>((config.gridRows / 2) * config.gridCols + config.gridCols / 2);
  return Deployment(std::move(aps), std::move(stations), std::move(association), sharing);
}

std::vector<ApId> nearest_ap_association(std::span<const Point> apPositions,
                                         std::span<const Point> stationPositions) {
  if (apPositions.empty()) {
    throw ConfigError("nearest-AP association needs at least one AP");
  }
  std::vector<ApId> association;
  association.reserve(stationPositions.size());
  for (const Point& sta : stationPositions) {
    ApId best = 0;
    double bestDist = distance(sta, apPositions[0]);
    for (ApId ap = 1; ap < apPositions.size(); ++ap) {
      const double d = distance(sta, apPositions[ap]);
      if (d < bestDist) {
        best = ap;
        bestDist = d;
      }
    }
    association.push_back(best);
  }
  return association;
}

namespace {

nlohmann::json points_to_json(const std::vector<Point>& points) {
  auto arr = nlohmann::json::array();
  for (const Point& p : points) {
    arr.push_back({p.x, p.y});
  }
  return arr;
}

std::vector<Point> points_from_json(const nlohmann::json& arr) {
  std::vector<Point> points;
  for (const auto& p : arr) {
    if (!p.is_array() || p.size() != 2) {
      throw ConfigError("deployment point must be a [x, y] pair");
    }
    points.push_back({p[0].get<double>(), p[1].get<double>()});
  }
  return points;
}

}  // namespace

std::string deployment_to_json(const Deployment& deployment) {
  nlohmann::json j;
  j["aps"] = points_to_json(deployment.apPositions());
  j["stations"] = points_to_json(deployment.stationPositions());
  j["association"] = deployment.association();
  j["sharing_ap"] = deployment.sharingAp();
  // max_digits10 output keeps the round trip exact.
  return j.dump(2);
}

Deployment deployment_from_json(std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    return Deployment(points_from_json(j.at("aps")), points_from_json(j.at("stations")),
                      j.at("association").get<std::vector<ApId>>(),
                      j.at("sharing_ap").get<ApId>());
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(fmt::format("malformed deployment JSON: {}", e.what()));
  }
}

}  // namespace mapc
