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

#include <string>
#include <utility>
#include <vector>

#include "rate.hpp"

namespace risorient {

struct GridSpec {
  double start_deg = 0.0;
  double stop_deg = 350.0;
  double step_deg = 10.0;

  std::vector<double> values() const;
};

enum class SweepAxis { Azimuth, Elevation, Joint };

struct SweepSpec {
  GridSpec azimuth;
  GridSpec elevation;
  std::vector<double> powers_dbm{0.0, 10.0, 20.0, 30.0, 40.0, 50.0};
  // Values for the axis a single-axis sweep does not touch.
  double hold_azimuth_deg = 0.0;
  double hold_elevation_deg = 0.0;
};

std::vector<Violation> validate_sweep(const SweepSpec &spec);

struct HeatmapMeta {
  std::string config_digest;
  std::string tool_version;
  std::string command;
  std::uint64_t seed = 0;
  std::string timestamp;
};

// Grid of ergodic-rate results. axis1 runs along columns, axis2 along rows;
// cells are row-major. Axis names identify the quantity ("phi_deg",
// "theta_deg" or "power_dbm").
struct RateHeatmap {
  std::string axis1_name;
  std::string axis2_name;
  std::vector<double> axis1;
  std::vector<double> axis2;
  std::vector<RateResult> cells;
  HeatmapMeta meta;

  std::size_t rows() const { return axis2.size(); }
  std::size_t cols() const { return axis1.size(); }
  const RateResult &at(std::size_t row, std::size_t col) const {
    return cells[row * cols() + col];
  }
  RateResult &at(std::size_t row, std::size_t col) {
    return cells[row * cols() + col];
  }
  // True when the axes are panel angles rather than power.
  bool is_rotation_map() const;
  // Rotation behind a cell of a rotation map.
  RotationAngles cell_rotation(std::size_t row, std::size_t col) const;
};

// Rate-versus-power curve at zero rotation; the channel draws are shared
// across power levels so power enters only through the SNR factor.
RateHeatmap run_power_sweep(const ScenarioConfig &config,
                            const SweepSpec &spec);

// Ergodic rate over panel orientations. Channel draws are reused across all
// grid cells of a realization index, so the only thing that varies from cell
// to cell is the panel frame.
RateHeatmap run_rotation_sweep(const ScenarioConfig &config,
                               const SweepSpec &spec, SweepAxis axis);

// Argmax cell of a rotation heatmap. Ties break toward the smallest wrapped
// angular deviation from (0,0), then the smallest azimuth, then the smallest
// elevation.
std::pair<RotationAngles, RateResult>
find_optimal_orientation(const RateHeatmap &heatmap);

} // namespace risorient
