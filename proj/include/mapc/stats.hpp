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

namespace mapc {

/// Nearest-rank percentile: the ceil(q n)-th smallest sample (1-indexed,
/// at least the first). Throws DomainError on empty input or q outside [0, 1].
double percentile(std::span<const double> samples, double q);

/// Same as percentile() for input that is already sorted ascending.
double percentile_sorted(std::span<const double> sorted, double q);

struct CdfPoint {
  double value;
  double fraction;
};

/// Sorted samples paired with i/n, i = 1..n. Throws DomainError on empty input.
std::vector<CdfPoint> empirical_cdf(std::span<const double> samples);

/// "value,fraction" rows with a header line.
std::string cdf_to_csv(const std::vector<CdfPoint>& cdf);

}  // namespace mapc
