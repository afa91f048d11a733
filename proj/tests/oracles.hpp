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

// Reference implementations used only by the tests. They deliberately take
// different routes from the library code (natural logs instead of log10,
// linear power ratios, exhaustive enumeration, sort-based argmax) so that a
// shared mistake is unlikely.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <tuple>
#include <vector>

#include "mapc/channel.hpp"
#include "mapc/deployment.hpp"
#include "mapc/grouping.hpp"
#include "mapc/scheduler.hpp"

namespace oracle {

inline double log10_via_ln(double x) { return std::log(x) / std::log(10.0); }

/// Path loss written piecewise from the model definition.
inline double path_loss(double d, double fc, int walls, double bp) {
  if (d <= bp) {
    return 40.05 + 20.0 * log10_via_ln(d * fc / 2.4) + 7.0 * walls;
  }
  return 40.05 + 20.0 * log10_via_ln(bp * fc / 2.4) + 35.0 * log10_via_ln(d / bp) + 7.0 * walls;
}

inline double to_mw(double dbm) { return std::exp(dbm * std::log(10.0) / 10.0); }

/// SINR as a linear power ratio converted to dB once.
inline double sinr(std::size_t ap, std::size_t sta, const std::vector<std::size_t>& group,
                   const mapc::RssiMatrix& rssi, double noiseDbm) {
  double denom = to_mw(noiseDbm);
  for (std::size_t j : group) {
    if (j != ap) {
      denom += to_mw(rssi.at(j, sta));
    }
  }
  return 10.0 * log10_via_ln(to_mw(rssi.at(ap, sta)) / denom);
}

/// Station loop over the raw association vector.
inline bool feasible(const std::vector<std::size_t>& group, const mapc::RssiMatrix& rssi,
                     const std::vector<std::size_t>& association, double noiseDbm,
                     double gammaDb) {
  for (std::size_t sta = 0; sta < association.size(); ++sta) {
    const std::size_t ap = association[sta];
    if (std::find(group.begin(), group.end(), ap) == group.end()) {
      continue;
    }
    if (sinr(ap, sta, group, rssi, noiseDbm) < gammaDb) {
      return false;
    }
  }
  return true;
}

inline std::vector<std::size_t> members_of(std::uint32_t mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < 32; ++i) {
    if (mask & (1u << i)) {
      out.push_back(i);
    }
  }
  return out;
}

inline std::uint32_t mask_of(const std::vector<std::size_t>& members) {
  std::uint32_t m = 0;
  for (std::size_t a : members) {
    m |= 1u << a;
  }
  return m;
}

/// Every non-empty AP subset that satisfies the SINR condition, as bitmasks.
inline std::set<std::uint32_t> feasible_family(std::size_t numAps, const mapc::RssiMatrix& rssi,
                                               const std::vector<std::size_t>& association,
                                               double noiseDbm, double gammaDb) {
  std::set<std::uint32_t> family;
  for (std::uint32_t mask = 1; mask < (1u << numAps); ++mask) {
    if (feasible(members_of(mask), rssi, association, noiseDbm, gammaDb)) {
      family.insert(mask);
    }
  }
  return family;
}

/// Greedy walk replayed on the enumerated family: candidates sorted by
/// (worst RSSI, id) via std::sort on tuples, acceptance by family lookup.
inline std::vector<std::size_t> replay_greedy(std::size_t ref, std::size_t numAps,
                                              const mapc::RssiMatrix& rssi,
                                              const std::vector<std::size_t>& association,
                                              const std::set<std::uint32_t>& family, int k) {
  std::vector<std::size_t> refStations;
  for (std::size_t s = 0; s < association.size(); ++s) {
    if (association[s] == ref) {
      refStations.push_back(s);
    }
  }
  std::vector<std::size_t> members{ref};
  if (refStations.empty()) {
    return members;
  }
  std::vector<std::tuple<double, std::size_t>> keyed;
  for (std::size_t j = 0; j < numAps; ++j) {
    if (j == ref) continue;
    double worst = -1e300;
    for (std::size_t s : refStations) worst = std::max(worst, rssi.at(j, s));
    keyed.emplace_back(worst, j);
  }
  std::sort(keyed.begin(), keyed.end());
  for (const auto& [key, j] : keyed) {
    if (members.size() >= static_cast<std::size_t>(k)) break;
    auto trial = members;
    trial.push_back(j);
    if (family.count(mask_of(trial))) {
      members = trial;
    }
  }
  return members;
}

/// Exhaustive scorer for every scheduler kind. Scores every candidate, then
/// sorts (score desc, index asc) and takes the front.
inline std::optional<std::vector<std::size_t>> schedule(mapc::SchedulerKind kind,
                                                        const mapc::GroupSet& groups,
                                                        const mapc::BufferSummary& b) {
  using K = mapc::SchedulerKind;
  const bool byCount = kind == K::NumPkSingle || kind == K::NumPkGroup || kind == K::CTdmaNumPk;
  auto apValue = [&](std::size_t ap) -> double {
    const auto& x = b.perAp[ap];
    if (x.packetCount == 0) return 0.0;
    return byCount ? static_cast<double>(x.packetCount) : b.now - *x.oldestArrival;
  };

  std::vector<std::pair<double, std::size_t>> aps;  // (-value, id)
  for (std::size_t ap = 0; ap < b.perAp.size(); ++ap) {
    if (b.perAp[ap].packetCount > 0) aps.emplace_back(-apValue(ap), ap);
  }
  if (aps.empty()) return std::nullopt;
  std::sort(aps.begin(), aps.end());
  const std::size_t head = aps.front().second;

  if (kind == K::CTdmaNumPk || kind == K::CTdmaOldPk) {
    return std::vector<std::size_t>{head};
  }

  const bool single = kind == K::NumPkSingle || kind == K::OldPkSingle;
  std::vector<std::pair<double, std::size_t>> scored;  // (-score, group index)
  for (std::size_t g = 0; g < groups.size(); ++g) {
    const auto& members = groups[g].members;
    if (single && std::find(members.begin(), members.end(), head) == members.end()) continue;
    bool any = false;
    double sum = 0.0;
    for (std::size_t ap : members) {
      sum += apValue(ap);
      any = any || b.perAp[ap].packetCount > 0;
    }
    if (!any) continue;
    const double score = single ? sum : sum / static_cast<double>(members.size());
    scored.emplace_back(-score, g);
  }
  if (scored.empty()) {
    if (single) return std::vector<std::size_t>{head};
    return std::nullopt;
  }
  std::sort(scored.begin(), scored.end());
  return groups[scored.front().second].members;
}

/// Random RSSI instance: `numAps` APs and stations scattered in a square, with
/// a random association to one of the APs (every AP gets at least one
/// station unless allowEmpty).
struct Instance {
  mapc::Deployment deployment;
  mapc::RssiMatrix rssi;
};

inline Instance random_instance(std::mt19937_64& gen, std::size_t numAps, std::size_t numStations,
                                double side, bool allowEmpty = false) {
  std::uniform_real_distribution<double> coord(0.0, side);
  std::vector<mapc::Point> aps, stations;
  for (std::size_t a = 0; a < numAps; ++a) aps.push_back({coord(gen), coord(gen)});
  std::vector<std::size_t> association;
  std::uniform_int_distribution<std::size_t> pick(0, numAps - 1);
  for (std::size_t s = 0; s < numStations; ++s) {
    const std::size_t ap = (!allowEmpty && s < numAps) ? s : pick(gen);
    std::uniform_real_distribution<double> off(-4.0, 4.0);
    mapc::Point p{aps[ap].x + off(gen), aps[ap].y + off(gen)};
    if (mapc::distance(p, aps[ap]) < 0.1) p.x += 0.5;
    stations.push_back(p);
    association.push_back(ap);
  }
  mapc::Deployment dep(aps, stations, association, 0);
  mapc::ScenarioConfig cfg;
  return {dep, mapc::build_rssi_matrix(dep, cfg)};
}

}  // namespace oracle
