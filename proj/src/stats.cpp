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

#include "mapc/stats.hpp"

#include <fmt/core.h>

#include <algorithm>
#include <cmath>

#include "mapc/types.hpp"

namespace mapc {

double percentile_sorted(std::span<const double> sorted, double q) {
  if (sorted.empty()) {
    throw DomainError("percentile of an empty sample");
  }
  if (!(q >= 0.0 && q <= 1.0)) {
    throw DomainError(fmt::format("percentile fraction {} outside [0, 1]", q));
  }
  double position = q * static_cast<double>(sorted.size());
  // 0.07 * 100 evaluates to 7.000000000000001; snap products that are
  // integers up to rounding error.
  if (std::abs(position - std::round(position)) < 1e-9) {
    position = std::round(position);
  }
  auto rank = static_cast<std::size_t>(std::ceil(position));
  rank = std::clamp<std::size_t>(rank, 1, sorted.size());
  return sorted[rank - 1];
}

double percentile(std::span<const double> samples, double q) {
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  return percentile_sorted(sorted, q);
}

std::vector<CdfPoint> empirical_cdf(std::span<const double> samples) {
  if (samples.empty()) {
    throw DomainError("CDF of an empty sample");
  }
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<CdfPoint> cdf;
  cdf.reserve(sorted.size());
  const auto n = static_cast<double>(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    cdf.push_back({sorted[i], static_cast<double>(i + 1) / n});
  }
  return cdf;
}

std::string cdf_to_csv(const std::vector<CdfPoint>& cdf) {
  std::string out = "value,fraction\n";
  for (const CdfPoint& p : cdf) {
    out += fmt::format("{:.6f},{:.6f}\n", p.value, p.fraction);
  }
  return out;
}

}  // namespace mapc
