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

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "mapc/engine.hpp"

namespace mapc {

/// A sweep over loads, gammas, Ks and schedulers, repeated on
/// `numDeployments` random deployments.
struct CampaignConfig {
  SimulationConfig base;
  std::vector<double> loadsMbps{8.0};
  std::vector<double> gammasDb{20.0};
  std::vector<int> ks{3};
  std::vector<SchedulerKind> schedulers{kAllSchedulers.begin(), kAllSchedulers.end()};
  std::uint64_t numDeployments = 1000;
  std::uint64_t baseSeed = 1;
  int workers = 1;
  bool writeTraces = false;

  void validate() const;
  std::size_t numRuns() const;
};

struct RunSpec {
  std::size_t runId = 0;
  std::uint64_t deployment = 0;
  std::uint64_t seed = 0;
  double loadMbps = 0.0;
  double gammaDb = 0.0;
  int k = 0;
  SchedulerKind scheduler = SchedulerKind::NumPkSingle;
};

/// baseSeed + hash(deploymentIndex). Sweep coordinates are deliberately not
/// mixed in: every sweep point of a deployment sees the same stations and
/// the same arrival draws.
std::uint64_t run_seed(std::uint64_t baseSeed, std::uint64_t deploymentIndex);

/// Cartesian product in run-id order: deployment, load, gamma, K, scheduler
/// (scheduler varies fastest).
std::vector<RunSpec> expand_runs(const CampaignConfig& campaign);

SimulationConfig config_for(const CampaignConfig& campaign, const RunSpec& spec);

/// One line of runs.csv. Delays in ms, throughput in Mbps; NaN delays mean
/// no packet was delivered.
struct RunRow {
  RunSpec spec;
  double throughputMbps = 0.0;
  double meanDelayMs = 0.0;
  double p50DelayMs = 0.0;
  double p95DelayMs = 0.0;
  double p99DelayMs = 0.0;
  double meanOccupancy = 0.0;
  std::uint64_t arrived = 0;
  std::uint64_t delivered = 0;
  std::uint64_t remaining = 0;
};

RunRow make_row(const RunSpec& spec, const MetricsReport& report);

std::string runs_csv_header();
std::string format_run_row(const RunRow& row);
/// Inverse of the two above. Throws ConfigError on malformed input.
std::vector<RunRow> parse_runs_csv(std::string_view csv);

/// Plot-ready tables derived from runs.csv alone.
struct AggregateTables {
  std::string throughputDelayVsLoad;
  std::string p95DelayVsLoad;
  std::string p95DelayCdf;
  std::string occupancyCdf;
};

AggregateTables aggregate_runs(const std::vector<RunRow>& rows);

struct CampaignResult {
  std::vector<RunRow> rows;  // parsed back from runsCsv, so exactly what was written
  std::string runsCsv;
  AggregateTables aggregates;
};

/// Runs every sweep point on a pool of `workers` threads. With a non-empty
/// `outDir` writes runs.csv, the aggregate tables and campaign.json there.
/// A failed run aborts the campaign with its seed and sweep point in the
/// message.
CampaignResult run_campaign(const CampaignConfig& campaign,
                            const std::filesystem::path& outDir = {});

}  // namespace mapc
