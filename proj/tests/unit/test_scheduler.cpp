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

#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "mapc/scheduler.hpp"
#include "oracles.hpp"

using namespace mapc;
using K = SchedulerKind;

namespace {

BufferSummary counts(std::vector<std::size_t> c, double now = 1.0) {
  BufferSummary b;
  b.now = now;
  for (std::size_t n : c) {
    ApBacklog x;
    x.packetCount = n;
    if (n > 0) x.oldestArrival = now;
    b.perAp.push_back(x);
  }
  return b;
}

BufferSummary waits(std::vector<double> w, double now) {
  BufferSummary b;
  b.now = now;
  for (double v : w) {
    ApBacklog x;
    if (v >= 0) {
      x.packetCount = 1;
      x.oldestArrival = now - v;
    }
    b.perAp.push_back(x);
  }
  return b;
}

GroupSet example_groups() { return GroupSet({{0, {0}}, {1, {1}}, {2, {2}}, {0, {0, 2}}}, 3); }

using Sel = std::optional<std::vector<ApId>>;

}  // namespace

TEST_CASE("scheduler: names round trip") {
  for (SchedulerKind k : kAllSchedulers) {
    CHECK(parse_scheduler(scheduler_name(k)) == k);
  }
  CHECK(scheduler_name(K::NumPkSingle) == "numpk-single");
  CHECK(scheduler_name(K::CTdmaOldPk) == "ctdma-oldpk");
  CHECK_THROWS_AS(parse_scheduler("fifo"), ConfigError);
  CHECK(uses_spatial_reuse(K::OldPkGroup));
  CHECK_FALSE(uses_spatial_reuse(K::CTdmaNumPk));
}

TEST_CASE("scheduler: packet-count examples") {
  const GroupSet g = example_groups();
  const auto b = counts({5, 0, 9});
  CHECK(select_group(K::NumPkSingle, g, b) == Sel{{0, 2}});
  CHECK(select_group(K::NumPkGroup, g, b) == Sel{{2}});
  CHECK(select_group(K::CTdmaNumPk, g, b) == Sel{{2}});
}

TEST_CASE("scheduler: empty system selects nothing") {
  const GroupSet g = example_groups();
  for (SchedulerKind k : kAllSchedulers) {
    CHECK_FALSE(select_group(k, g, counts({0, 0, 0})).has_value());
  }
}

TEST_CASE("scheduler: waiting-time example") {
  const GroupSet g = example_groups();
  const auto b = waits({12e-3, -1, 3e-3}, 0.5);
  CHECK(select_group(K::OldPkSingle, g, b) == Sel{{0, 2}});
  CHECK(select_group(K::CTdmaOldPk, g, b) == Sel{{0}});
  // {0} scores 12 ms, {0,2} 7.5 ms.
  CHECK(select_group(K::OldPkGroup, g, b) == Sel{{0}});
}

TEST_CASE("scheduler: ties go to the lowest AP id then lowest group index") {
  const GroupSet single({{0, {0}}, {1, {1}}}, 2);
  CHECK(select_group(K::CTdmaNumPk, single, counts({4, 4})) == Sel{{0}});
  CHECK(select_group(K::NumPkSingle, single, counts({4, 4})) == Sel{{0}});
  CHECK(select_group(K::NumPkGroup, single, counts({4, 4})) == Sel{{0}});
  const GroupSet pairs({{0, {0, 1}}, {2, {2, 1}}, {0, {0}}}, 3);
  CHECK(select_group(K::NumPkGroup, pairs, counts({3, 3, 3})) == Sel{{0, 1}});
}

TEST_CASE("scheduler: single kinds fall back to the head AP alone") {
  const GroupSet g({{0, {0, 1}}}, 3);
  CHECK(select_group(K::NumPkSingle, g, counts({1, 0, 7})) == Sel{{2}});
  CHECK(select_group(K::NumPkGroup, g, counts({1, 0, 7})) == Sel{{0, 1}});
  CHECK_FALSE(select_group(K::NumPkGroup, g, counts({0, 0, 7})).has_value());
}

TEST_CASE("scheduler: matches the exhaustive scorer on random states") {
  std::mt19937_64 gen(2);
  std::uniform_int_distribution<int> countDist(0, 6), waitDist(0, 5);
  for (int t = 0; t < 3000; ++t) {
    const std::size_t n = 1 + static_cast<std::size_t>(t % 9);
    std::vector<Group> groups;
    for (ApId a = 0; a < n; ++a) {
      std::vector<ApId> mem{a};
      for (ApId b = 0; b < n; ++b) {
        if (b != a && gen() % 4 == 0 && mem.size() < 3) mem.push_back(b);
      }
      groups.push_back({a, mem});
    }
    const GroupSet gs(groups, n);
    BufferSummary b;
    b.now = 2.0;
    for (ApId a = 0; a < n; ++a) {
      ApBacklog x;
      x.packetCount = static_cast<std::size_t>(countDist(gen));
      if (x.packetCount > 0) x.oldestArrival = b.now - 1e-3 * waitDist(gen);
      b.perAp.push_back(x);
    }
    for (SchedulerKind k : kAllSchedulers) {
      const auto got = select_group(k, gs, b);
      CHECK(got == oracle::schedule(k, gs, b));
      if (got && !uses_spatial_reuse(k)) CHECK(got->size() == 1);
    }
  }
}

TEST_CASE("scheduler: argmax invariance under scaling and shifting") {
  std::mt19937_64 gen(17);
  std::uniform_int_distribution<int> countDist(0, 20);
  std::uniform_real_distribution<double> wait(0.0, 0.02);
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = 9;
    std::vector<Group> groups;
    for (ApId a = 0; a < n; ++a) groups.push_back({a, {a, (a + 1 + gen() % 8) % n}});
    const GroupSet gs(groups, n);
    BufferSummary b;
    b.now = 1.0;
    for (ApId a = 0; a < n; ++a) {
      ApBacklog x;
      x.packetCount = static_cast<std::size_t>(countDist(gen));
      if (x.packetCount > 0) x.oldestArrival = b.now - wait(gen);
      b.perAp.push_back(x);
    }
    BufferSummary scaled = b, shifted = b;
    for (auto& x : scaled.perAp) x.packetCount *= 7;
    shifted.now += 0.25;  // 2^-2: the shift is exact in binary
    for (auto& x : shifted.perAp) {
      if (x.oldestArrival) *x.oldestArrival += 0.25;
    }
    for (SchedulerKind k : {K::NumPkSingle, K::NumPkGroup, K::CTdmaNumPk}) {
      CHECK(select_group(k, gs, b) == select_group(k, gs, scaled));
    }
    for (SchedulerKind k : {K::OldPkSingle, K::OldPkGroup, K::CTdmaOldPk}) {
      CHECK(select_group(k, gs, b) == select_group(k, gs, shifted));
    }
    // Single kinds always include the per-AP head.
    const auto head = select_group(K::CTdmaNumPk, gs, b);
    const auto single = select_group(K::NumPkSingle, gs, b);
    if (head) {
      REQUIRE(single);
      CHECK(std::find(single->begin(), single->end(), head->front()) != single->end());
    }
  }
}
