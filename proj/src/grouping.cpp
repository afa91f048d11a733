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

#include "mapc/grouping.hpp"

#include <fmt/core.h>

#include <algorithm>
#include <limits>
#include <set>

#include <json.hpp>

namespace mapc {

GroupSet::GroupSet(std::vector<Group> groups, std::size_t numAps)
    : groups_(std::move(groups)), containing_(numAps) {
  for (std::size_t g = 0; g < groups_.size(); ++g) {
    if (groups_[g].members.empty()) {
      throw ConfigError(fmt::format("group {} has no members", g));
    }
    for (ApId ap : groups_[g].members) {
      if (ap >= numAps) {
        throw ConfigError(fmt::format("group {} names AP {} of {}", g, ap, numAps));
      }
      auto& list = containing_[ap];
      if (list.empty() || list.back() != g) {
        list.push_back(g);
      }
    }
  }
}

std::string GroupSet::to_json() const {
  auto arr = nlohmann::json::array();
  for (const Group& g : groups_) {
    arr.push_back({{"reference", g.referenceAp}, {"members", g.members}});
  }
  return nlohmann::json{{"groups", arr}}.dump(2);
}

std::vector<ApId> candidate_order(ApId ref, const RssiMatrix& rssi, const Deployment& deployment) {
  const auto refStations = deployment.stationsOf(ref);
  if (refStations.empty()) {
    return {};
  }

  struct Keyed {
    double worstRssi;
    ApId ap;
  };
  std::vector<Keyed> keyed;
  for (ApId ap = 0; ap < deployment.numAps(); ++ap) {
    if (ap == ref) {
      continue;
    }
    double worst = -std::numeric_limits<double>::infinity();
    for (StationId sta : refStations) {
      worst = std::max(worst, rssi.at(ap, sta));
    }
    keyed.push_back({worst, ap});
  }
  std::stable_sort(keyed.begin(), keyed.end(),
                   [](const Keyed& a, const Keyed& b) { return a.worstRssi < b.worstRssi; });

  std::vector<ApId> order;
  order.reserve(keyed.size());
  for (const Keyed& k : keyed) {
    order.push_back(k.ap);
  }
  return order;
}

Group build_group(ApId ref, const RssiMatrix& rssi, const Deployment& deployment,
                  const GroupingParams& params) {
  if (params.maxGroupSize < 1) {
    throw ConfigError("K must be >= 1");
  }
  const auto k = static_cast<std::size_t>(params.maxGroupSize);
  Group group{ref, {ref}};
  for (ApId candidate : candidate_order(ref, rssi, deployment)) {
    if (group.members.size() >= k) {
      break;
    }
    group.members.push_back(candidate);
    if (!group_feasible(group.members, rssi, deployment, params.noiseDbm, params.gammaDb)) {
      group.members.pop_back();
    }
  }
  return group;
}

GroupSet build_all_groups(const RssiMatrix& rssi, const Deployment& deployment,
                          const GroupingParams& params) {
  std::vector<Group> groups;
  std::set<std::vector<ApId>> seen;
  for (ApId ref = 0; ref < deployment.numAps(); ++ref) {
    Group g = build_group(ref, rssi, deployment, params);
    auto key = g.members;
    std::sort(key.begin(), key.end());
    if (seen.insert(std::move(key)).second) {
      groups.push_back(std::move(g));
    }
  }
  return GroupSet(std::move(groups), deployment.numAps());
}

}  // namespace mapc
