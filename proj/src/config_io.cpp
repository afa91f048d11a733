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

#include "mapc/config_io.hpp"

#include <fmt/core.h>

#include <fstream>
#include <initializer_list>
#include <sstream>

#include <json.hpp>

namespace mapc {

namespace {

using nlohmann::json;

void check_keys(const json& section, std::string_view name,
                std::initializer_list<std::string_view> allowed) {
  if (!section.is_object()) {
    throw ConfigError(fmt::format("config: '{}' must be an object", name));
  }
  for (const auto& [key, value] : section.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw ConfigError(fmt::format("config: unknown key '{}' in '{}'", key, name));
    }
  }
}

template <typename T>
void read(const json& section, const char* key, T& out) {
  if (auto it = section.find(key); it != section.end()) {
    out = it->get<T>();
  }
}

McsTable mcs_from(const json& arr) {
  if (!arr.is_array()) {
    throw ConfigError("config: 'mcs_table' must be an array");
  }
  std::vector<McsEntry> entries;
  for (const auto& e : arr) {
    check_keys(e, "mcs_table[]", {"mcs", "min_sinr_db", "data_bits_per_symbol"});
    entries.push_back({e.at("mcs").get<int>(), e.at("min_sinr_db").get<double>(),
                       e.at("data_bits_per_symbol").get<double>()});
  }
  return McsTable(std::move(entries));
}

json mcs_to(const McsTable& table) {
  auto arr = json::array();
  for (const McsEntry& e : table.entries()) {
    arr.push_back(
        {{"mcs", e.index}, {"min_sinr_db", e.minSinrDb}, {"data_bits_per_symbol", e.dataBitsPerSymbol}});
  }
  return arr;
}

CampaignConfig parse(const json& root) {
  check_keys(root, "<root>",
             {"scenario", "timing", "traffic", "grouping", "scheduler", "seed", "mcs_table",
              "campaign"});
  CampaignConfig c;
  SimulationConfig& sim = c.base;

  if (auto it = root.find("scenario"); it != root.end()) {
    const json& s = *it;
    check_keys(s, "scenario",
               {"grid_rows", "grid_cols", "subarea_side_m", "stations_per_subarea", "carrier_ghz",
                "tx_power_dbm", "walls", "breakpoint_m", "noise_dbm", "cca_dbm"});
    read(s, "grid_rows", sim.scenario.gridRows);
    read(s, "grid_cols", sim.scenario.gridCols);
    read(s, "subarea_side_m", sim.scenario.subareaSide);
    read(s, "stations_per_subarea", sim.scenario.stationsPerSubarea);
    read(s, "carrier_ghz", sim.scenario.carrierFreqGHz);
    read(s, "tx_power_dbm", sim.scenario.txPowerDbm);
    read(s, "walls", sim.scenario.wallCount);
    read(s, "breakpoint_m", sim.scenario.breakpointMeters);
    read(s, "noise_dbm", sim.scenario.noiseDbm);
    read(s, "cca_dbm", sim.scenario.ccaDbm);
  }

  if (auto it = root.find("timing"); it != root.end()) {
    const json& t = *it;
    check_keys(t, "timing",
               {"period_ms", "txop_max_ms", "map_rts_us", "map_cts_us", "cts_timeout_us",
                "map_tf_us", "te_us", "ofdm_symbol_us", "guard_interval_us", "phy_preamble_us",
                "slot_overhead_us", "num_txops", "handshake_when_idle"});
    read(t, "period_ms", sim.timing.periodMs);
    read(t, "txop_max_ms", sim.timing.txopMaxMs);
    read(t, "map_rts_us", sim.timing.mapRtsUs);
    read(t, "map_cts_us", sim.timing.mapCtsUs);
    read(t, "cts_timeout_us", sim.timing.ctsTimeoutUs);
    read(t, "map_tf_us", sim.timing.mapTfUs);
    read(t, "te_us", sim.timing.teUs);
    read(t, "ofdm_symbol_us", sim.timing.ofdmSymbolUs);
    read(t, "guard_interval_us", sim.timing.guardIntervalUs);
    read(t, "phy_preamble_us", sim.timing.phyPreambleUs);
    read(t, "slot_overhead_us", sim.timing.slotOverheadUs);
    read(t, "num_txops", sim.timing.numTxops);
    read(t, "handshake_when_idle", sim.timing.handshakeWhenIdle);
  }

  if (auto it = root.find("traffic"); it != root.end()) {
    const json& t = *it;
    check_keys(t, "traffic", {"load_mbps", "burst_packets", "packet_bytes"});
    if (auto load = t.find("load_mbps"); load != t.end()) {
      sim.traffic.perStaLoadBps = load->get<double>() * 1e6;
    }
    read(t, "burst_packets", sim.traffic.burstSize);
    read(t, "packet_bytes", sim.traffic.packetBytes);
  }

  if (auto it = root.find("grouping"); it != root.end()) {
    check_keys(*it, "grouping", {"gamma_db", "k"});
    read(*it, "gamma_db", sim.gammaDb);
    read(*it, "k", sim.maxGroupSize);
  }
  if (auto it = root.find("scheduler"); it != root.end()) {
    sim.scheduler = parse_scheduler(it->get<std::string>());
  }
  if (auto it = root.find("mcs_table"); it != root.end()) {
    sim.mcsTable = mcs_from(*it);
  }
  read(root, "seed", c.baseSeed);

  // Without a campaign section every axis is the single base value.
  c.loadsMbps = {sim.traffic.perStaLoadBps / 1e6};
  c.gammasDb = {sim.gammaDb};
  c.ks = {sim.maxGroupSize};
  c.schedulers = {sim.scheduler};

  if (auto it = root.find("campaign"); it != root.end()) {
    const json& cp = *it;
    check_keys(cp, "campaign",
               {"loads_mbps", "gammas_db", "ks", "schedulers", "deployments", "base_seed",
                "workers", "traces"});
    read(cp, "loads_mbps", c.loadsMbps);
    read(cp, "gammas_db", c.gammasDb);
    read(cp, "ks", c.ks);
    if (auto s = cp.find("schedulers"); s != cp.end()) {
      c.schedulers.clear();
      for (const auto& name : *s) {
        c.schedulers.push_back(parse_scheduler(name.get<std::string>()));
      }
    }
    read(cp, "deployments", c.numDeployments);
    read(cp, "base_seed", c.baseSeed);
    read(cp, "workers", c.workers);
    read(cp, "traces", c.writeTraces);
  }
  return c;
}

}  // namespace

CampaignConfig campaign_from_json(std::string_view text) {
  CampaignConfig config;
  try {
    config = parse(json::parse(text));
  } catch (const json::exception& e) {
    throw ConfigError(fmt::format("config: {}", e.what()));
  }
  config.validate();
  return config;
}

CampaignConfig load_config_file(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  try {
    return campaign_from_json(text);
  } catch (const ConfigError& e) {
    throw ConfigError(fmt::format("{}: {}", path.string(), e.what()));
  }
}

std::string campaign_to_json(const CampaignConfig& c) {
  const SimulationConfig& sim = c.base;
  json root;
  root["scenario"] = {
      {"grid_rows", sim.scenario.gridRows},
      {"grid_cols", sim.scenario.gridCols},
      {"subarea_side_m", sim.scenario.subareaSide},
      {"stations_per_subarea", sim.scenario.stationsPerSubarea},
      {"carrier_ghz", sim.scenario.carrierFreqGHz},
      {"tx_power_dbm", sim.scenario.txPowerDbm},
      {"walls", sim.scenario.wallCount},
      {"breakpoint_m", sim.scenario.breakpointMeters},
      {"noise_dbm", sim.scenario.noiseDbm},
      {"cca_dbm", sim.scenario.ccaDbm},
  };
  root["timing"] = {
      {"period_ms", sim.timing.periodMs},
      {"txop_max_ms", sim.timing.txopMaxMs},
      {"map_rts_us", sim.timing.mapRtsUs},
      {"map_cts_us", sim.timing.mapCtsUs},
      {"cts_timeout_us", sim.timing.ctsTimeoutUs},
      {"map_tf_us", sim.timing.mapTfUs},
      {"te_us", sim.timing.teUs},
      {"ofdm_symbol_us", sim.timing.ofdmSymbolUs},
      {"guard_interval_us", sim.timing.guardIntervalUs},
      {"phy_preamble_us", sim.timing.phyPreambleUs},
      {"slot_overhead_us", sim.timing.slotOverheadUs},
      {"num_txops", sim.timing.numTxops},
      {"handshake_when_idle", sim.timing.handshakeWhenIdle},
  };
  root["traffic"] = {
      {"load_mbps", sim.traffic.perStaLoadBps / 1e6},
      {"burst_packets", sim.traffic.burstSize},
      {"packet_bytes", sim.traffic.packetBytes},
  };
  root["grouping"] = {{"gamma_db", sim.gammaDb}, {"k", sim.maxGroupSize}};
  root["scheduler"] = std::string(scheduler_name(sim.scheduler));
  root["seed"] = c.baseSeed;
  root["mcs_table"] = mcs_to(sim.mcsTable);

  auto schedulers = json::array();
  for (SchedulerKind kind : c.schedulers) {
    schedulers.push_back(std::string(scheduler_name(kind)));
  }
  root["campaign"] = {
      {"loads_mbps", c.loadsMbps},   {"gammas_db", c.gammasDb},
      {"ks", c.ks},                  {"schedulers", schedulers},
      {"deployments", c.numDeployments}, {"base_seed", c.baseSeed},
      {"workers", c.workers},        {"traces", c.writeTraces},
  };
  return root.dump(2) + "\n";
}

McsTable mcs_table_from_json(std::string_view text) {
  try {
    return mcs_from(json::parse(text));
  } catch (const json::exception& e) {
    throw ConfigError(fmt::format("mcs_table: {}", e.what()));
  }
}

std::string mcs_table_to_json(const McsTable& table) { return mcs_to(table).dump(2); }

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError(fmt::format("{}: cannot open for reading", path.string()));
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) {
    throw IoError(fmt::format("{}: read failed", path.string()));
  }
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError(fmt::format("{}: cannot open for writing", path.string()));
  }
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) {
    throw IoError(fmt::format("{}: write failed", path.string()));
  }
}

}  // namespace mapc
