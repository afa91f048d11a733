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

#include "mapc/scheduler.hpp"

#include <fmt/core.h>

namespace mapc {

namespace {

enum class Metric { PacketCount, WaitingTime };

Metric metric_of(SchedulerKind kind) {
  switch (kind) {
    case SchedulerKind::NumPkSingle:
    case SchedulerKind::NumPkGroup:
    case SchedulerKind::CTdmaNumPk:
      return Metric::PacketCount;
    case SchedulerKind::OldPkSingle:
    case SchedulerKind::OldPkGroup:
    case SchedulerKind::CTdmaOldPk:
      return Metric::WaitingTime;
  }
  return Metric::PacketCount;
}

double ap_score(Metric metric, const ApBacklog& ap, double now) {
  if (ap.packetCount == 0) {
    return 0.0;
  }
  if (metric == Metric::PacketCount) {
    return static_cast<double>(ap.packetCount);
  }
  return now - ap.oldestArrival.value_or(now);
}

// Backlogged AP with the highest score, lowest id on ties.
std::optional<ApId> argmax_ap(Metric metric, const BufferSummary& buffers) {
  std::optional<ApId> best;
  double bestScore = 0.0;
  for (ApId ap = 0; ap < buffers.perAp.size(); ++ap) {
    if (buffers.perAp[ap].packetCount == 0) {
      continue;
    }
    const double score = ap_score(metric, buffers.perAp[ap], buffers.now);
    if (!best || score > bestScore) {
      best = ap;
      bestScore = score;
    }
  }
  return best;
}

struct GroupScore {
  double total = 0.0;
  bool backlogged = false;
};

GroupScore score_group(Metric metric, const Group& group, const BufferSummary& buffers) {
  GroupScore s;
  for (ApId ap : group.members) {
    const ApBacklog& b = buffers.perAp.at(ap);
    s.total += ap_score(metric, b, buffers.now);
    s.backlogged = s.backlogged || b.packetCount > 0;
  }
  return s;
}

template <typename Indices>
std::optional<std::size_t> best_group(Metric metric, bool normalize, const GroupSet& groups,
                                      const Indices& candidates, const BufferSummary& buffers) {
  std::optional<std::size_t> best;
  double bestScore = 0.0;
  for (std::size_t g : candidates) {
    const GroupScore s = score_group(metric, groups[g], buffers);
    if (!s.backlogged) {
      continue;
    }
    const double score =
        normalize ? s.total / static_cast<double>(groups[g].members.size()) : s.total;
    if (!best || score > bestScore) {
      best = g;
      bestScore = score;
    }
  }
  return best;
}

}  // namespace

std::string_view scheduler_name(SchedulerKind kind) {
  switch (kind) {
    case SchedulerKind::NumPkSingle:
      return "numpk-single";
    case SchedulerKind::NumPkGroup:
      return "numpk-group";
    case SchedulerKind::OldPkSingle:
      return "oldpk-single";
    case SchedulerKind::OldPkGroup:
      return "oldpk-group";
    case SchedulerKind::CTdmaNumPk:
      return "ctdma-numpk";
    case SchedulerKind::CTdmaOldPk:
      return "ctdma-oldpk";
  }
  return "unknown";
}

SchedulerKind parse_scheduler(std::string_view name) {
  for (SchedulerKind kind : kAllSchedulers) {
    if (scheduler_name(kind) == name) {
      return kind;
    }
  }
  throw ConfigError(fmt::format(
      "unknown scheduler '{}' (expected numpk-single, numpk-group, oldpk-single, "
      "oldpk-group, ctdma-numpk or ctdma-oldpk)",
      name));
}

bool uses_spatial_reuse(SchedulerKind kind) {
  return kind != SchedulerKind::CTdmaNumPk && kind != SchedulerKind::CTdmaOldPk;
}

std::optional<std::vector<ApId>> select_group(SchedulerKind kind, const GroupSet& groups,
                                              const BufferSummary& buffers) {
  const Metric metric = metric_of(kind);
  const auto head = argmax_ap(metric, buffers);
  if (!head) {
    return std::nullopt;
  }

  switch (kind) {
    case SchedulerKind::CTdmaNumPk:
    case SchedulerKind::CTdmaOldPk:
      return std::vector<ApId>{*head};

    case SchedulerKind::NumPkSingle:
    case SchedulerKind::OldPkSingle: {
      if (*head >= groups.numAps() || groups.containing(*head).empty()) {
        return std::vector<ApId>{*head};
      }
      const auto g = best_group(metric, false, groups, groups.containing(*head), buffers);
      return groups[*g].members;
    }

    case SchedulerKind::NumPkGroup:
    case SchedulerKind::OldPkGroup: {
      std::vector<std::size_t> all(groups.size());
      for (std::size_t g = 0; g < all.size(); ++g) {
        all[g] = g;
      }
      const auto g = best_group(metric, true, groups, all, buffers);
      if (!g) {
        return std::nullopt;
      }
      return groups[*g].members;
    }
  }
  return std::nullopt;
}

}  // namespace mapc
