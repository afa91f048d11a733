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

#include <optional>
#include <vector>

#include "mapc/config.hpp"

namespace mapc {

struct McsEntry {
  int index = 0;
  double minSinrDb = 0.0;         // lowest SINR with error-free reception
  double dataBitsPerSymbol = 0.0;  // data subcarriers x bits/subcarrier x code rate
};

/// SINR -> MCS lookup table. Thresholds and rates are strictly increasing.
class McsTable {
 public:
  /// Throws ConfigError if empty or not strictly increasing in index,
  /// threshold and rate.
  explicit McsTable(std::vector<McsEntry> entries);

  /// 802.11ax MCS 0-10, 20 MHz (234 data subcarriers), one spatial stream.
  static McsTable default_11ax();

  const std::vector<McsEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  /// Throws DomainError for an index not in the table.
  const McsEntry& at(int mcs) const;

 private:
  std::vector<McsEntry> entries_;
};

/// Highest MCS whose threshold is <= sinrDb (inclusive), or nullopt below the
/// lowest threshold.
std::optional<int> select_mcs(double sinrDb, const McsTable& table);

/// PHY data rate of `mcs` in bit/s: bits per symbol over symbol + guard time.
double data_rate_bps(int mcs, const McsTable& table, const TimingConfig& timing);

}  // namespace mapc
