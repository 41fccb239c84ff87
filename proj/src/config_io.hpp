// SPDX-License-Identifier: Apache-2.0
//
// risorient — orientation-aware link simulator for RIS-assisted MIMO
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <stdexcept>
#include <string>

#include "channel.hpp"
#include "sweep.hpp"

namespace risorient {

class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Scenario plus sweep description as loaded from one config file.
struct LoadedConfig {
  ScenarioConfig scenario;
  SweepSpec sweep;
};

// Parses either the key/value format (sections in brackets, `key = value`,
// `#` comments) or canonical JSON (detected by a leading `{`). Unknown keys
// and malformed values raise ConfigError with origin:line diagnostics.
// Defaults that depend on the environment (path loss table, LOS model) are
// resolved here.
LoadedConfig load_config_text(const std::string &text,
                              const std::string &origin = "<string>");
LoadedConfig load_config_file(const std::string &path);

// Fully resolved configuration as minified JSON with sorted keys. Reloading
// this string reproduces the same canonical form, so the digest is stable
// under key reordering and format changes. Execution knobs (thread count)
// are excluded.
std::string canonical_json(const LoadedConfig &config);

// FNV-1a 64-bit over the canonical JSON, as 16 lowercase hex digits.
std::string config_digest(const LoadedConfig &config);

} // namespace risorient
