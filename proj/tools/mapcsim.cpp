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

// mapcsim: command line front end of libmapc.
//
//   mapcsim run      --config c.json [--seed N] [--scheduler S] [--out DIR --trace]
//   mapcsim campaign --config c.json --out DIR [--runs N] [--workers N]
//   mapcsim groups   --config c.json [--seed N] [--out DIR]

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>

#include "mapc/mapc.h"

namespace {

struct CliError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(mapc_status status) {
  if (status != MAPC_OK) {
    throw CliError(std::string(mapc_status_string(status)) + ": " + mapc_last_error());
  }
}

struct ConfigDeleter {
  void operator()(mapc_config* c) const { mapc_config_destroy(c); }
};
struct ReportDeleter {
  void operator()(mapc_report* r) const { mapc_report_destroy(r); }
};
struct StringDeleter {
  void operator()(char* s) const { mapc_string_free(s); }
};
using ConfigPtr = std::unique_ptr<mapc_config, ConfigDeleter>;
using ReportPtr = std::unique_ptr<mapc_report, ReportDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

struct Options {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> scheduler;
  std::optional<double> gamma;
  std::optional<int> k;
  std::optional<double> loadMbps;
  std::optional<std::uint64_t> txops;
  std::optional<std::uint64_t> runs;
  std::optional<int> workers;
  std::string out;
  bool trace = false;
};

ConfigPtr load_config(const Options& o) {
  mapc_config* raw = nullptr;
  if (o.config.empty()) {
    check(mapc_config_create(&raw));
  } else {
    check(mapc_config_load_file(o.config.c_str(), &raw));
  }
  ConfigPtr config(raw);
  if (o.seed) check(mapc_config_set_seed(config.get(), *o.seed));
  if (o.scheduler) check(mapc_config_set_scheduler(config.get(), o.scheduler->c_str()));
  if (o.gamma) check(mapc_config_set_gamma_db(config.get(), *o.gamma));
  if (o.k) check(mapc_config_set_k(config.get(), *o.k));
  if (o.loadMbps) check(mapc_config_set_load_mbps(config.get(), *o.loadMbps));
  if (o.txops) check(mapc_config_set_num_txops(config.get(), *o.txops));
  if (o.runs) check(mapc_config_set_deployments(config.get(), *o.runs));
  if (o.workers) check(mapc_config_set_workers(config.get(), *o.workers));
  if (o.trace) check(mapc_config_set_traces(config.get(), 1));
  return config;
}

std::uint64_t seed_of(const mapc_config* config) {
  std::uint64_t seed = 0;
  check(mapc_config_get_seed(config, &seed));
  return seed;
}

StringPtr take(char* s) { return StringPtr(s); }

void write_file(const std::filesystem::path& path, const char* text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) {
    throw CliError("I/O error: " + path.string() + ": cannot write");
  }
}

void ensure_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    throw CliError("I/O error: " + dir.string() + ": " + ec.message());
  }
}

void cmd_run(const Options& o) {
  const ConfigPtr config = load_config(o);
  mapc_report* raw = nullptr;
  check(mapc_simulate(config.get(), seed_of(config.get()), o.trace ? 1 : 0, &raw));
  const ReportPtr report(raw);

  char* csv = nullptr;
  check(mapc_report_csv(report.get(), &csv));
  const StringPtr row = take(csv);
  std::cout << row.get();

  if (!o.out.empty()) {
    ensure_dir(o.out);
    write_file(std::filesystem::path(o.out) / "run.csv", row.get());
    if (o.trace) {
      char* trace = nullptr;
      check(mapc_report_trace_csv(report.get(), &trace));
      const StringPtr t = take(trace);
      write_file(std::filesystem::path(o.out) / "trace.csv", t.get());
    }
  }
}

void cmd_campaign(const Options& o) {
  const ConfigPtr config = load_config(o);
  std::size_t runs = 0;
  check(mapc_campaign_run(config.get(), o.out.c_str(), &runs));
  std::cerr << "mapcsim: " << runs << " runs written to " << o.out << "\n";
}

void cmd_groups(const Options& o) {
  const ConfigPtr config = load_config(o);
  const std::uint64_t seed = seed_of(config.get());
  char* raw = nullptr;
  check(mapc_groups_json(config.get(), seed, &raw));
  const StringPtr groups = take(raw);
  std::cout << groups.get() << "\n";

  if (!o.out.empty()) {
    ensure_dir(o.out);
    const std::filesystem::path dir(o.out);
    write_file(dir / "groups.json", groups.get());
    check(mapc_deployment_json(config.get(), seed, &raw));
    write_file(dir / "deployment.json", take(raw).get());
    check(mapc_rssi_csv(config.get(), seed, &raw));
    write_file(dir / "rssi.csv", take(raw).get());
  }
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--config", o.config, "JSON configuration file (defaults if omitted)")
      ->check(CLI::ExistingFile);
  cmd->add_option("--seed", o.seed, "Random seed (campaign: base seed)");
  cmd->add_option("--gamma", o.gamma, "SINR threshold for group formation, dB");
  cmd->add_option("--k", o.k, "Maximum APs per group")->check(CLI::PositiveNumber);
}

void add_sim(CLI::App* cmd, Options& o) {
  cmd->add_option("--scheduler", o.scheduler,
                  "numpk-single | numpk-group | oldpk-single | oldpk-group | ctdma-numpk | "
                  "ctdma-oldpk");
  cmd->add_option("--load-mbps", o.loadMbps, "Offered load per station, Mbps")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--txops", o.txops, "Number of periodic TXOPs to simulate")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-AP coordinated spatial reuse simulator"};
  app.require_subcommand(1);
  app.set_version_flag("--version", mapc_version());
  Options o;

  auto* run = app.add_subcommand("run", "Run a single simulation and print its CSV row");
  add_common(run, o);
  add_sim(run, o);
  auto* runOut = run->add_option("--out", o.out, "Write run.csv (and trace.csv) here");
  run->add_flag("--trace", o.trace, "Also write the per-TXOP trace")->needs(runOut);

  auto* campaign = app.add_subcommand("campaign", "Run a sweep of simulations");
  add_common(campaign, o);
  add_sim(campaign, o);
  campaign->add_option("--out", o.out, "Output directory")->required();
  campaign->add_option("--runs", o.runs, "Number of random deployments")
      ->check(CLI::PositiveNumber);
  campaign->add_option("--workers", o.workers, "Worker threads")->check(CLI::PositiveNumber);
  campaign->add_flag("--trace", o.trace, "Write one per-TXOP trace per run");

  auto* groups = app.add_subcommand("groups", "Print the SR-compatible groups of a deployment");
  add_common(groups, o);
  groups->add_option("--out", o.out, "Also write groups.json, deployment.json and rssi.csv");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      cmd_run(o);
    } else if (*campaign) {
      cmd_campaign(o);
    } else if (*groups) {
      cmd_groups(o);
    }
  } catch (const std::exception& e) {
    std::cerr << "mapcsim: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
