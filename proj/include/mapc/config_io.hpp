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

#include <filesystem>
#include <string>
#include <string_view>

#include "mapc/campaign.hpp"

namespace mapc {

// JSON configuration files. Every key is optional and defaults to the
// enterprise scenario values; unknown keys are rejected. See
// docs/config.md for the schema.

/// Throws ConfigError on malformed JSON, unknown keys, wrong types or
/// invalid values.
CampaignConfig campaign_from_json(std::string_view text);

/// Throws IoError when the file cannot be read.
CampaignConfig load_config_file(const std::filesystem::path& path);

/// Complete configuration (all keys present); campaign_from_json reads it back.
std::string campaign_to_json(const CampaignConfig& config);

/// The "mcs_table" section on its own: [{"mcs", "min_sinr_db",
/// "data_bits_per_symbol"}, ...].
McsTable mcs_table_from_json(std::string_view text);
std::string mcs_table_to_json(const McsTable& table);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace mapc
