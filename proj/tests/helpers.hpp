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

#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>
#include <unistd.h>

#include "channel.hpp"

namespace helpers {

using namespace risorient;

// Bitwise equality of complex matrices.
inline bool bit_equal(const MatrixC &a, const MatrixC &b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    return false;
  if (a.size() == 0)
    return true;
  return std::memcmp(a.data(), b.data(),
                     sizeof(std::complex<double>) *
                         static_cast<std::size_t>(a.size())) == 0;
}

// Reference indoor scenario: Tx (0,25,2), Rx (45,45,1), RIS (40,50,2) at
// 28 GHz, blocked direct link, auto-aimed panels.
inline ScenarioConfig indoor_scenario(std::uint64_t seed = 1234) {
  ScenarioConfig c;
  c.environment = Environment::Indoor;
  c.frequency_ghz = 28.0;
  c.layout.tx_pos = {0.0, 25.0, 2.0};
  c.layout.rx_pos = {45.0, 45.0, 1.0};
  c.layout.ris_pos = {40.0, 50.0, 2.0};
  c.layout.direct_link_blocked = true;
  c.master_seed = seed;
  c.realizations = 10;
  c.threads = 1;
  return c;
}

// Degenerate layout whose nodes sit far behind an explicitly +x-facing
// panel: every drawn path stays in the back hemisphere, so the RIS links are
// exactly zero at zero rotation.
inline ScenarioConfig behind_panel_scenario(std::uint64_t seed = 9) {
  ScenarioConfig c;
  c.environment = Environment::Outdoor;
  c.frequency_ghz = 28.0;
  c.layout.tx_pos = {-100.0, 0.5, 1.0};
  c.layout.rx_pos = {-100.0, -0.5, 1.0};
  c.layout.ris_pos = {0.0, 0.0, 1.0};
  c.layout.direct_link_blocked = true;
  c.ris_array.facing.mode = FacingSpec::Mode::Explicit;
  c.ris_array.facing.boresight = {1.0, 0.0, 0.0};
  c.master_seed = seed;
  c.realizations = 4;
  c.threads = 1;
  return c;
}

struct TempDir {
  std::filesystem::path path;
  explicit TempDir(const std::string &tag) {
    path = std::filesystem::temp_directory_path() /
           ("risorient_test_" + tag + "_" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path, ec);
  }
  std::string file(const std::string &name) const {
    return (path / name).string();
  }
};

inline std::string slurp(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  std::string out((std::istreambuf_iterator<char>(in)),
                  std::istreambuf_iterator<char>());
  return out;
}

inline void spit(const std::string &path, const std::string &content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
}

} // namespace helpers
