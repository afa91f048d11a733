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

#include "mapc/campaign.hpp"

#include <fmt/core.h>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <mutex>
#include <optional>
#include <thread>

#include "mapc/config_io.hpp"
#include "mapc/stats.hpp"

namespace mapc {

namespace {

constexpr int kNumColumns = 16;

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = line.find(sep, start);
    out.push_back(line.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) {
      return out;
    }
    start = pos + 1;
  }
}

template <typename T>
T parse_number(std::string_view field, std::string_view column) {
  T value{};
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw ConfigError(fmt::format("runs.csv: bad {} value '{}'", column, field));
  }
  return value;
}

// Mean of the non-NaN values, NaN if there are none.
double nan_mean(const std::vector<double>& values) {
  double sum = 0.0;
  std::size_t n = 0;
  for (double v : values) {
    if (!std::isnan(v)) {
      sum += v;
      ++n;
    }
  }
  return n == 0 ? std::nan("") : sum / static_cast<double>(n);
}

std::vector<double> without_nan(const std::vector<double>& values) {
  std::vector<double> out;
  std::copy_if(values.begin(), values.end(), std::back_inserter(out),
               [](double v) { return !std::isnan(v); });
  return out;
}

struct SweepPoint {
  SchedulerKind scheduler;
  double gammaDb;
  int k;
  double loadMbps;

  bool operator==(const SweepPoint&) const = default;
};

struct PointSeries {
  SweepPoint point;
  std::vector<double> throughput;
  std::vector<double> meanDelay;
  std::vector<double> p95Delay;
  std::vector<double> occupancy;
};

std::string point_prefix(const SweepPoint& p) {
  return fmt::format("{},{:.6f},{},{:.6f}", scheduler_name(p.scheduler), p.gammaDb, p.k,
                     p.loadMbps);
}

std::string describe(const RunSpec& spec) {
  return fmt::format("run {} (seed {}, deployment {}, scheduler {}, gamma {} dB, K {}, load {} "
                     "Mbps)",
                     spec.runId, spec.seed, spec.deployment, scheduler_name(spec.scheduler),
                     spec.gammaDb, spec.k, spec.loadMbps);
}

}  // namespace

void CampaignConfig::validate() const {
  base.validate();
  if (loadsMbps.empty() || gammasDb.empty() || ks.empty() || schedulers.empty()) {
    throw ConfigError("campaign: every sweep axis needs at least one value");
  }
  if (numDeployments < 1) {
    throw ConfigError("campaign: at least one deployment is required");
  }
  if (workers < 1) {
    throw ConfigError("campaign: workers must be >= 1");
  }
  for (const RunSpec& spec : expand_runs(*this)) {
    if (spec.deployment > 0) {
      break;
    }
    config_for(*this, spec).validate();
  }
}

std::size_t CampaignConfig::numRuns() const {
  return static_cast<std::size_t>(numDeployments) * loadsMbps.size() * gammasDb.size() *
         ks.size() * schedulers.size();
}

std::uint64_t run_seed(std::uint64_t baseSeed, std::uint64_t deploymentIndex) {
  return baseSeed + splitmix64(deploymentIndex);
}

std::vector<RunSpec> expand_runs(const CampaignConfig& campaign) {
  std::vector<RunSpec> runs;
  runs.reserve(campaign.numRuns());
  for (std::uint64_t d = 0; d < campaign.numDeployments; ++d) {
    const std::uint64_t seed = run_seed(campaign.baseSeed, d);
    for (double load : campaign.loadsMbps) {
      for (double gamma : campaign.gammasDb) {
        for (int k : campaign.ks) {
          for (SchedulerKind kind : campaign.schedulers) {
            runs.push_back({runs.size(), d, seed, load, gamma, k, kind});
          }
        }
      }
    }
  }
  return runs;
}

SimulationConfig config_for(const CampaignConfig& campaign, const RunSpec& spec) {
  SimulationConfig config = campaign.base;
  config.traffic.perStaLoadBps = spec.loadMbps * 1e6;
  config.gammaDb = spec.gammaDb;
  config.maxGroupSize = spec.k;
  config.scheduler = spec.scheduler;
  return config;
}

RunRow make_row(const RunSpec& spec, const MetricsReport& report) {
  RunRow row;
  row.spec = spec;
  row.throughputMbps = report.throughputBps / 1e6;
  row.meanDelayMs = report.meanDelaySec * 1e3;
  row.p50DelayMs = report.delayPercentile(0.50) * 1e3;
  row.p95DelayMs = report.delayPercentile(0.95) * 1e3;
  row.p99DelayMs = report.delayPercentile(0.99) * 1e3;
  row.meanOccupancy = report.meanOccupancy();
  row.arrived = report.packetsArrived;
  row.delivered = report.packetsDelivered;
  row.remaining = report.packetsRemaining;
  return row;
}

std::string runs_csv_header() {
  return "run_id,seed,deployment,scheduler,gamma_db,k,load_mbps,throughput_mbps,mean_delay_ms,"
         "p50_delay_ms,p95_delay_ms,p99_delay_ms,mean_occupancy,arrived,delivered,remaining\n";
}

std::string format_run_row(const RunRow& row) {
  const RunSpec& s = row.spec;
  return fmt::format(
      "{},{},{},{},{:.6f},{},{:.6f},{:.6f},{:.6f},{:.6f},{:.6f},{:.6f},{:.6f},{},{},{}\n",
      s.runId, s.seed, s.deployment, scheduler_name(s.scheduler), s.gammaDb, s.k, s.loadMbps,
      row.throughputMbps, row.meanDelayMs, row.p50DelayMs, row.p95DelayMs, row.p99DelayMs,
      row.meanOccupancy, row.arrived, row.delivered, row.remaining);
}

std::vector<RunRow> parse_runs_csv(std::string_view csv) {
  std::vector<RunRow> rows;
  bool header = true;
  for (std::string_view line : split(csv, '\n')) {
    if (line.empty()) {
      continue;
    }
    if (header) {
      header = false;
      continue;
    }
    const auto f = split(line, ',');
    if (f.size() != kNumColumns) {
      throw ConfigError(fmt::format("runs.csv: expected {} columns, got {} in '{}'", kNumColumns,
                                    f.size(), line));
    }
    RunRow r;
    r.spec.runId = parse_number<std::size_t>(f[0], "run_id");
    r.spec.seed = parse_number<std::uint64_t>(f[1], "seed");
    r.spec.deployment = parse_number<std::uint64_t>(f[2], "deployment");
    r.spec.scheduler = parse_scheduler(f[3]);
    r.spec.gammaDb = parse_number<double>(f[4], "gamma_db");
    r.spec.k = parse_number<int>(f[5], "k");
    r.spec.loadMbps = parse_number<double>(f[6], "load_mbps");
    r.throughputMbps = parse_number<double>(f[7], "throughput_mbps");
    r.meanDelayMs = parse_number<double>(f[8], "mean_delay_ms");
    r.p50DelayMs = parse_number<double>(f[9], "p50_delay_ms");
    r.p95DelayMs = parse_number<double>(f[10], "p95_delay_ms");
    r.p99DelayMs = parse_number<double>(f[11], "p99_delay_ms");
    r.meanOccupancy = parse_number<double>(f[12], "mean_occupancy");
    r.arrived = parse_number<std::uint64_t>(f[13], "arrived");
    r.delivered = parse_number<std::uint64_t>(f[14], "delivered");
    r.remaining = parse_number<std::uint64_t>(f[15], "remaining");
    rows.push_back(r);
  }
  return rows;
}

AggregateTables aggregate_runs(const std::vector<RunRow>& rows) {
  // Sweep points in order of first appearance.
  std::vector<PointSeries> series;
  for (const RunRow& row : rows) {
    const SweepPoint point{row.spec.scheduler, row.spec.gammaDb, row.spec.k, row.spec.loadMbps};
    auto it = std::find_if(series.begin(), series.end(),
                           [&](const PointSeries& s) { return s.point == point; });
    if (it == series.end()) {
      series.push_back({point, {}, {}, {}, {}});
      it = std::prev(series.end());
    }
    it->throughput.push_back(row.throughputMbps);
    it->meanDelay.push_back(row.meanDelayMs);
    it->p95Delay.push_back(row.p95DelayMs);
    it->occupancy.push_back(row.meanOccupancy);
  }

  AggregateTables t;
  t.throughputDelayVsLoad =
      "scheduler,gamma_db,k,load_mbps,deployments,throughput_mbps,mean_delay_ms\n";
  t.p95DelayVsLoad = "scheduler,gamma_db,k,load_mbps,deployments,p95_delay_ms\n";
  t.p95DelayCdf = "scheduler,gamma_db,k,load_mbps,p95_delay_ms,fraction\n";
  t.occupancyCdf = "scheduler,gamma_db,k,load_mbps,mean_occupancy,fraction\n";

  for (const PointSeries& s : series) {
    const std::string prefix = point_prefix(s.point);
    t.throughputDelayVsLoad += fmt::format("{},{},{:.6f},{:.6f}\n", prefix, s.throughput.size(),
                                           nan_mean(s.throughput), nan_mean(s.meanDelay));
    t.p95DelayVsLoad +=
        fmt::format("{},{},{:.6f}\n", prefix, s.p95Delay.size(), nan_mean(s.p95Delay));

    const auto p95 = without_nan(s.p95Delay);
    if (!p95.empty()) {
      for (const CdfPoint& c : empirical_cdf(p95)) {
        t.p95DelayCdf += fmt::format("{},{:.6f},{:.6f}\n", prefix, c.value, c.fraction);
      }
    }
    for (const CdfPoint& c : empirical_cdf(s.occupancy)) {
      t.occupancyCdf += fmt::format("{},{:.6f},{:.6f}\n", prefix, c.value, c.fraction);
    }
  }
  return t;
}

CampaignResult run_campaign(const CampaignConfig& campaign, const std::filesystem::path& outDir) {
  campaign.validate();
  const std::vector<RunSpec> runs = expand_runs(campaign);
  std::vector<std::optional<RunRow>> results(runs.size());
  std::vector<std::string> traces(campaign.writeTraces ? runs.size() : 0);

  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::mutex errorMutex;
  std::optional<std::pair<std::size_t, std::string>> firstError;

  auto worker = [&] {
    while (!failed.load()) {
      const std::size_t i = next.fetch_add(1);
      if (i >= runs.size()) {
        return;
      }
      try {
        const SimulationConfig config = config_for(campaign, runs[i]);
        RunOptions options;
        options.keepTrace = campaign.writeTraces;
        const MetricsReport report = run_simulation(config, runs[i].seed, options);
        results[i] = make_row(runs[i], report);
        if (campaign.writeTraces) {
          traces[i] = trace_to_csv(report.trace, config.timing.txopMaxUs());
        }
      } catch (const std::exception& e) {
        std::lock_guard lock(errorMutex);
        if (!firstError || i < firstError->first) {
          firstError = {i, fmt::format("{} failed: {}", describe(runs[i]), e.what())};
        }
        failed.store(true);
      }
    }
  };

  const auto numWorkers =
      static_cast<std::size_t>(std::min<std::size_t>(campaign.workers, runs.size()));
  if (numWorkers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < numWorkers; ++w) {
      pool.emplace_back(worker);
    }
    for (auto& t : pool) {
      t.join();
    }
  }
  if (firstError) {
    throw Error(firstError->second);
  }

  CampaignResult result;
  result.runsCsv = runs_csv_header();
  for (const auto& row : results) {
    result.runsCsv += format_run_row(*row);
  }
  result.rows = parse_runs_csv(result.runsCsv);
  result.aggregates = aggregate_runs(result.rows);

  if (!outDir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(outDir, ec);
    if (ec) {
      throw IoError(fmt::format("{}: {}", outDir.string(), ec.message()));
    }
    write_text_file(outDir / "runs.csv", result.runsCsv);
    write_text_file(outDir / "throughput_delay_vs_load.csv",
                    result.aggregates.throughputDelayVsLoad);
    write_text_file(outDir / "p95_delay_vs_load.csv", result.aggregates.p95DelayVsLoad);
    write_text_file(outDir / "p95_delay_cdf.csv", result.aggregates.p95DelayCdf);
    write_text_file(outDir / "occupancy_cdf.csv", result.aggregates.occupancyCdf);
    write_text_file(outDir / "campaign.json", campaign_to_json(campaign));
    if (campaign.writeTraces) {
      const auto traceDir = outDir / "traces";
      std::filesystem::create_directories(traceDir, ec);
      if (ec) {
        throw IoError(fmt::format("{}: {}", traceDir.string(), ec.message()));
      }
      for (std::size_t i = 0; i < traces.size(); ++i) {
        write_text_file(traceDir / fmt::format("run_{:06d}.csv", i), traces[i]);
      }
    }
  }
  return result;
}

}  // namespace mapc
