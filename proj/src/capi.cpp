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

#include "mapc/mapc.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <new>
#include <string>

#include "mapc/campaign.hpp"
#include "mapc/channel.hpp"
#include "mapc/config_io.hpp"
#include "mapc/engine.hpp"
#include "mapc/stats.hpp"

struct mapc_config {
  mapc::CampaignConfig campaign;
};

struct mapc_report {
  mapc::RunSpec spec;
  mapc::MetricsReport metrics;
  double txopMaxUs = 0.0;
};

namespace {

thread_local std::string lastError;

mapc_status fail(mapc_status status, std::string message) {
  lastError = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename Body>
mapc_status guarded(Body&& body) {
  try {
    body();
    return MAPC_OK;
  } catch (const mapc::ConfigError& e) {
    return fail(MAPC_ERR_CONFIG, e.what());
  } catch (const mapc::DomainError& e) {
    return fail(MAPC_ERR_DOMAIN, e.what());
  } catch (const mapc::IoError& e) {
    return fail(MAPC_ERR_IO, e.what());
  } catch (const std::bad_alloc&) {
    return fail(MAPC_ERR_RUNTIME, "out of memory");
  } catch (const std::exception& e) {
    return fail(MAPC_ERR_RUNTIME, e.what());
  } catch (...) {
    return fail(MAPC_ERR_RUNTIME, "unknown error");
  }
}

char* dup_string(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) {
    throw std::bad_alloc();
  }
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

mapc_status null_arg(const char* what) {
  return fail(MAPC_ERR_INVALID_ARGUMENT, std::string(what) + " must not be NULL");
}

}  // namespace

extern "C" {

const char* mapc_version(void) { return "0.1.0"; }

const char* mapc_last_error(void) { return lastError.c_str(); }

const char* mapc_status_string(mapc_status status) {
  switch (status) {
    case MAPC_OK:
      return "ok";
    case MAPC_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case MAPC_ERR_CONFIG:
      return "configuration error";
    case MAPC_ERR_DOMAIN:
      return "domain error";
    case MAPC_ERR_IO:
      return "I/O error";
    case MAPC_ERR_RUNTIME:
      return "runtime error";
  }
  return "unknown status";
}

void mapc_string_free(char* str) { std::free(str); }

mapc_status mapc_config_create(mapc_config** out) {
  if (out == nullptr) return null_arg("out");
  return guarded([&] {
    auto* config = new mapc_config{};
    config->campaign.schedulers = {config->campaign.base.scheduler};
    *out = config;
  });
}

mapc_status mapc_config_load_file(const char* path, mapc_config** out) {
  if (path == nullptr) return null_arg("path");
  if (out == nullptr) return null_arg("out");
  return guarded([&] { *out = new mapc_config{mapc::load_config_file(path)}; });
}

mapc_status mapc_config_load_string(const char* json, mapc_config** out) {
  if (json == nullptr) return null_arg("json");
  if (out == nullptr) return null_arg("out");
  return guarded([&] { *out = new mapc_config{mapc::campaign_from_json(json)}; });
}

void mapc_config_destroy(mapc_config* config) { delete config; }

mapc_status mapc_config_to_json(const mapc_config* config, char** out) {
  if (config == nullptr) return null_arg("config");
  if (out == nullptr) return null_arg("out");
  return guarded([&] { *out = dup_string(mapc::campaign_to_json(config->campaign)); });
}

mapc_status mapc_config_set_scheduler(mapc_config* config, const char* name) {
  if (config == nullptr) return null_arg("config");
  if (name == nullptr) return null_arg("name");
  return guarded([&] {
    const auto kind = mapc::parse_scheduler(name);
    config->campaign.base.scheduler = kind;
    config->campaign.schedulers = {kind};
  });
}

mapc_status mapc_config_set_gamma_db(mapc_config* config, double gamma_db) {
  if (config == nullptr) return null_arg("config");
  if (std::isnan(gamma_db)) return fail(MAPC_ERR_CONFIG, "gamma must be a number");
  config->campaign.base.gammaDb = gamma_db;
  config->campaign.gammasDb = {gamma_db};
  return MAPC_OK;
}

mapc_status mapc_config_set_k(mapc_config* config, int k) {
  if (config == nullptr) return null_arg("config");
  if (k < 1) return fail(MAPC_ERR_CONFIG, "K must be >= 1");
  config->campaign.base.maxGroupSize = k;
  config->campaign.ks = {k};
  return MAPC_OK;
}

mapc_status mapc_config_set_load_mbps(mapc_config* config, double load_mbps) {
  if (config == nullptr) return null_arg("config");
  return guarded([&] {
    auto& base = config->campaign.base;
    mapc::arrival_probability(load_mbps * 1e6, base.traffic.burstSize, base.traffic.packetBytes,
                              base.timing.periodSec());
    base.traffic.perStaLoadBps = load_mbps * 1e6;
    config->campaign.loadsMbps = {load_mbps};
  });
}

mapc_status mapc_config_set_seed(mapc_config* config, uint64_t seed) {
  if (config == nullptr) return null_arg("config");
  config->campaign.baseSeed = seed;
  return MAPC_OK;
}

mapc_status mapc_config_get_seed(const mapc_config* config, uint64_t* out) {
  if (config == nullptr) return null_arg("config");
  if (out == nullptr) return null_arg("out");
  *out = config->campaign.baseSeed;
  return MAPC_OK;
}

mapc_status mapc_config_set_num_txops(mapc_config* config, uint64_t num_txops) {
  if (config == nullptr) return null_arg("config");
  if (num_txops < 1) return fail(MAPC_ERR_CONFIG, "at least one TXOP must be simulated");
  config->campaign.base.timing.numTxops = num_txops;
  return MAPC_OK;
}

mapc_status mapc_config_set_deployments(mapc_config* config, uint64_t deployments) {
  if (config == nullptr) return null_arg("config");
  if (deployments < 1) return fail(MAPC_ERR_CONFIG, "at least one deployment is required");
  config->campaign.numDeployments = deployments;
  return MAPC_OK;
}

mapc_status mapc_config_set_workers(mapc_config* config, int workers) {
  if (config == nullptr) return null_arg("config");
  if (workers < 1) return fail(MAPC_ERR_CONFIG, "workers must be >= 1");
  config->campaign.workers = workers;
  return MAPC_OK;
}

mapc_status mapc_config_set_traces(mapc_config* config, int enabled) {
  if (config == nullptr) return null_arg("config");
  config->campaign.writeTraces = enabled != 0;
  return MAPC_OK;
}

mapc_status mapc_simulate(const mapc_config* config, uint64_t seed, int keep_trace,
                          mapc_report** out) {
  if (config == nullptr) return null_arg("config");
  if (out == nullptr) return null_arg("out");
  return guarded([&] {
    const auto& base = config->campaign.base;
    mapc::RunOptions options;
    options.keepTrace = keep_trace != 0;
    auto* report = new mapc_report{};
    try {
      report->spec = {0, 0, seed, base.traffic.perStaLoadBps / 1e6, base.gammaDb,
                      base.maxGroupSize, base.scheduler};
      report->metrics = mapc::run_simulation(base, seed, options);
      report->txopMaxUs = base.timing.txopMaxUs();
    } catch (...) {
      delete report;
      throw;
    }
    *out = report;
  });
}

void mapc_report_destroy(mapc_report* report) { delete report; }

double mapc_report_throughput_bps(const mapc_report* report) {
  return report == nullptr ? std::numeric_limits<double>::quiet_NaN()
                           : report->metrics.throughputBps;
}

double mapc_report_mean_delay_s(const mapc_report* report) {
  return report == nullptr ? std::numeric_limits<double>::quiet_NaN()
                           : report->metrics.meanDelaySec;
}

mapc_status mapc_report_delay_percentile_s(const mapc_report* report, double q, double* out) {
  if (report == nullptr) return null_arg("report");
  if (out == nullptr) return null_arg("out");
  if (report->metrics.delaysSec.empty()) {
    return fail(MAPC_ERR_DOMAIN, "no delivered packets, delay percentile undefined");
  }
  return guarded([&] { *out = mapc::percentile_sorted(report->metrics.delaysSec, q); });
}

double mapc_report_mean_occupancy(const mapc_report* report) {
  return report == nullptr ? std::numeric_limits<double>::quiet_NaN()
                           : report->metrics.meanOccupancy();
}

mapc_status mapc_report_counts(const mapc_report* report, uint64_t* arrived,
                               uint64_t* delivered, uint64_t* remaining) {
  if (report == nullptr) return null_arg("report");
  if (arrived != nullptr) *arrived = report->metrics.packetsArrived;
  if (delivered != nullptr) *delivered = report->metrics.packetsDelivered;
  if (remaining != nullptr) *remaining = report->metrics.packetsRemaining;
  return MAPC_OK;
}

size_t mapc_report_num_txops(const mapc_report* report) {
  return report == nullptr ? 0 : report->metrics.occupancy.size();
}

mapc_status mapc_report_occupancy(const mapc_report* report, size_t index, double* out) {
  if (report == nullptr) return null_arg("report");
  if (out == nullptr) return null_arg("out");
  if (index >= report->metrics.occupancy.size()) {
    return fail(MAPC_ERR_DOMAIN, "TXOP index out of range");
  }
  *out = report->metrics.occupancy[index];
  return MAPC_OK;
}

mapc_status mapc_report_csv(const mapc_report* report, char** out) {
  if (report == nullptr) return null_arg("report");
  if (out == nullptr) return null_arg("out");
  return guarded([&] {
    const auto row = mapc::make_row(report->spec, report->metrics);
    *out = dup_string(mapc::runs_csv_header() + mapc::format_run_row(row));
  });
}

mapc_status mapc_report_trace_csv(const mapc_report* report, char** out) {
  if (report == nullptr) return null_arg("report");
  if (out == nullptr) return null_arg("out");
  if (report->metrics.trace.empty() && !report->metrics.occupancy.empty()) {
    return fail(MAPC_ERR_INVALID_ARGUMENT, "report was produced without keep_trace");
  }
  return guarded(
      [&] { *out = dup_string(mapc::trace_to_csv(report->metrics.trace, report->txopMaxUs)); });
}

mapc_status mapc_groups_json(const mapc_config* config, uint64_t seed, char** out) {
  if (config == nullptr) return null_arg("config");
  if (out == nullptr) return null_arg("out");
  return guarded([&] {
    const auto network = mapc::build_network(config->campaign.base, seed);
    *out = dup_string(network.groups.to_json());
  });
}

mapc_status mapc_deployment_json(const mapc_config* config, uint64_t seed, char** out) {
  if (config == nullptr) return null_arg("config");
  if (out == nullptr) return null_arg("out");
  return guarded([&] {
    const auto network = mapc::build_network(config->campaign.base, seed);
    *out = dup_string(mapc::deployment_to_json(network.deployment));
  });
}

mapc_status mapc_rssi_csv(const mapc_config* config, uint64_t seed, char** out) {
  if (config == nullptr) return null_arg("config");
  if (out == nullptr) return null_arg("out");
  return guarded([&] {
    const auto network = mapc::build_network(config->campaign.base, seed);
    *out = dup_string(network.rssi.to_csv());
  });
}

mapc_status mapc_campaign_run(const mapc_config* config, const char* out_dir, size_t* num_runs) {
  if (config == nullptr) return null_arg("config");
  if (out_dir == nullptr) return null_arg("out_dir");
  return guarded([&] {
    const auto result = mapc::run_campaign(config->campaign, out_dir);
    if (num_runs != nullptr) {
      *num_runs = result.rows.size();
    }
  });
}

mapc_status mapc_path_loss_db(double distance_m, double carrier_ghz, int walls,
                              double breakpoint_m, double* out) {
  if (out == nullptr) return null_arg("out");
  return guarded(
      [&] { *out = mapc::path_loss_db(distance_m, carrier_ghz, walls, breakpoint_m); });
}

mapc_status mapc_percentile(const double* samples, size_t n, double q, double* out) {
  if (samples == nullptr && n > 0) return null_arg("samples");
  if (out == nullptr) return null_arg("out");
  return guarded([&] { *out = mapc::percentile(std::span<const double>(samples, n), q); });
}

}  // extern "C"
