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

#include "mapc/channel.hpp"
#include "mapc/deployment.hpp"

namespace mapc {

/// An SR-compatible set of APs. `members` starts with the reference AP and
/// lists the others in the order they were accepted.
struct Group {
  ApId referenceAp = 0;
  std::vector<ApId> members;

  friend bool operator==(const Group&, const Group&) = default;
};

/// Groups plus an AP -> group-index lookup.
class GroupSet {
 public:
  GroupSet() = default;
  /// Throws ConfigError if a group is empty or names an AP >= numAps.
  GroupSet(std::vector<Group> groups, std::size_t numAps);

  const std::vector<Group>& groups() const { return groups_; }
  std::size_t size() const { return groups_.size(); }
  bool empty() const { return groups_.empty(); }
  const Group& operator[](std::size_t i) const { return groups_[i]; }
  std::size_t numAps() const { return containing_.size(); }

  /// Indices of the groups that contain `ap`, ascending.
  std::span<const std::size_t> containing(ApId ap) const { return containing_.at(ap); }

  /// {"groups": [{"reference": r, "members": [...]}, ...]}
  std::string to_json() const;

  friend bool operator==(const GroupSet& a, const GroupSet& b) { return a.groups_ == b.groups_; }

 private:
  std::vector<Group> groups_;
  std::vector<std::vector<std::size_t>> containing_;
};

struct GroupingParams {
  double gammaDb = 20.0;
  int maxGroupSize = 3;  // K
  double noiseDbm = -94.0;
};

/// All APs other than `ref`, ascending by the strongest RSSI any of ref's
/// stations receives from them (ties: lower id). Empty when ref has no
/// stations.
std::vector<ApId> candidate_order(ApId ref, const RssiMatrix& rssi, const Deployment& deployment);

/// Greedy single pass: starting from {ref}, each candidate is kept iff the
/// enlarged group is still feasible. Stops at K members.
Group build_group(ApId ref, const RssiMatrix& rssi, const Deployment& deployment,
                  const GroupingParams& params);

/// One build_group per reference AP; groups with identical member sets are
/// collapsed onto the lowest reference.
GroupSet build_all_groups(const RssiMatrix& rssi, const Deployment& deployment,
                          const GroupingParams& params);

}  // namespace mapc
