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

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "mapc/grouping.hpp"

namespace mapc {

enum class SchedulerKind {
  NumPkSingle,
  NumPkGroup,
  OldPkSingle,
  OldPkGroup,
  CTdmaNumPk,
  CTdmaOldPk,
};

inline constexpr std::array<SchedulerKind, 6> kAllSchedulers = {
    SchedulerKind::NumPkSingle, SchedulerKind::NumPkGroup, SchedulerKind::OldPkSingle,
    SchedulerKind::OldPkGroup,  SchedulerKind::CTdmaNumPk, SchedulerKind::CTdmaOldPk,
};

/// CLI/config name, e.g. "numpk-single".
std::string_view scheduler_name(SchedulerKind kind);
/// Throws ConfigError for an unknown name.
SchedulerKind parse_scheduler(std::string_view name);
/// False for the c-TDMA baselines, which only ever schedule one AP per slot.
bool uses_spatial_reuse(SchedulerKind kind);

struct ApBacklog {
  std::size_t packetCount = 0;
  std::optional<double> oldestArrival;  // seconds; empty iff packetCount == 0
};

/// What the controller knows when it picks the next coordinated slot.
struct BufferSummary {
  std::vector<ApBacklog> perAp;
  double now = 0.0;  // seconds
};

/// Picks the APs for the next coordinated slot.
///
///   NumPkSingle  AP with most packets, then the group containing it with the
///                largest total packet count.
///   NumPkGroup   group with the largest packet count per member.
///   OldPkSingle  AP with the oldest head packet, then the group containing it
///                with the largest summed head-of-line waiting time.
///   OldPkGroup   group with the largest summed waiting time per member.
///   CTdma*       the NumPk / OldPk argmax AP alone.
///
/// Empty APs contribute zero. Ties go to the lowest AP id, then the lowest
/// group index. Only groups with at least one backlogged member compete. A
/// Single kind whose argmax AP is in no group falls back to that AP alone.
/// Returns nullopt when every buffer is empty.
std::optional<std::vector<ApId>> select_group(SchedulerKind kind, const GroupSet& groups,
                                              const BufferSummary& buffers);

}  // namespace mapc
