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

#include "mapc/mcs.hpp"

#include <fmt/core.h>

#include <algorithm>
#include <cmath>

#include "mapc/types.hpp"

namespace mapc {

McsTable::McsTable(std::vector<McsEntry> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) {
    throw ConfigError("MCS table is empty");
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const McsEntry& e = entries_[i];
    if (!std::isfinite(e.minSinrDb) || !(e.dataBitsPerSymbol > 0.0)) {
      throw ConfigError(fmt::format("MCS {}: threshold must be finite and rate > 0", e.index));
    }
    if (i == 0) {
      continue;
    }
    const McsEntry& prev = entries_[i - 1];
    if (e.index <= prev.index || e.minSinrDb <= prev.minSinrDb ||
        e.dataBitsPerSymbol <= prev.dataBitsPerSymbol) {
      throw ConfigError(fmt::format(
          "MCS table must be strictly increasing in index, threshold and rate (at MCS {})",
          e.index));
    }
  }
}

McsTable McsTable::default_11ax() {
  constexpr double kDataSubcarriers = 234.0;
  struct Row {
    double threshold;
    double bitsPerSubcarrier;
    double codeRate;
  };
  // BPSK, QPSK, 16-QAM, 64-QAM, 256-QAM, 1024-QAM.
  constexpr Row rows[] = {
      {2.0, 1, 1.0 / 2},  {5.0, 2, 1.0 / 2},  {8.0, 2, 3.0 / 4},  {11.0, 4, 1.0 / 2},
      {15.0, 4, 3.0 / 4}, {18.0, 6, 2.0 / 3}, {20.0, 6, 3.0 / 4}, {22.0, 6, 5.0 / 6},
      {26.0, 8, 3.0 / 4}, {28.0, 8, 5.0 / 6}, {30.0, 10, 3.0 / 4},
  };
  std::vector<McsEntry> entries;
  int index = 0;
  for (const Row& r : rows) {
    entries.push_back({index++, r.threshold, kDataSubcarriers * r.bitsPerSubcarrier * r.codeRate});
  }
  return McsTable(std::move(entries));
}

const McsEntry& McsTable::at(int mcs) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), mcs,
                             [](const McsEntry& e, int m) { return e.index < m; });
  if (it == entries_.end() || it->index != mcs) {
    throw DomainError(fmt::format("MCS {} is not in the table", mcs));
  }
  return *it;
}

std::optional<int> select_mcs(double sinrDb, const McsTable& table) {
  const auto& entries = table.entries();
  // First entry whose threshold exceeds sinr; the one before it is the answer.
  auto it = std::upper_bound(entries.begin(), entries.end(), sinrDb,
                             [](double s, const McsEntry& e) { return s < e.minSinrDb; });
  if (std::isnan(sinrDb) || it == entries.begin()) {
    return std::nullopt;
  }
  return std::prev(it)->index;
}

double data_rate_bps(int mcs, const McsTable& table, const TimingConfig& timing) {
  const double symbolSec = (timing.ofdmSymbolUs + timing.guardIntervalUs) * 1e-6;
  return table.at(mcs).dataBitsPerSymbol / symbolSec;
}

}  // namespace mapc
