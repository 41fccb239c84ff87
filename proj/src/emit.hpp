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
#include <vector>

#include "config_io.hpp"
#include "sweep.hpp"

namespace risorient {

class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Grid CSV: header row `<axis2_name>\<axis1_name>, axis1 values...`, one row
// per axis2 value, cells as mean rates with 9 significant digits. A
// companion file `<path>.stderr.csv` holds the standard errors. Output bytes
// depend only on the heatmap contents.
void write_heatmap_csv(const RateHeatmap &heatmap, const std::string &path);

// Re-reads a heatmap written by write_heatmap_csv (companion included when
// present). Metadata and realization counts are not stored in CSV and come
// back empty/zero.
RateHeatmap read_heatmap_csv(const std::string &path);

// Self-contained SVG rendering: one rect per cell under a fixed
// dark-blue-to-yellow colormap, argmax cell outlined, axis tick labels in the
// axis units, value range in the legend. Byte-stable for equal heatmaps.
void write_heatmap_svg(const RateHeatmap &heatmap, const std::string &path);

// Full grid as JSON (axes, means, standard errors, metadata).
void write_heatmap_json(const RateHeatmap &heatmap, const std::string &path);

// Compact result summary {config_digest, rotation, mean_rate, std_error,
// argmax}; rotation is null for sweeps, argmax is null for single-point
// evaluations and power sweeps.
void write_heatmap_summary(const RateHeatmap &heatmap, const std::string &path);
void write_rate_summary(const std::string &config_digest,
                        const RotationAngles &rotation, const RateResult &rate,
                        const std::string &path);

// Run manifest: digest, tool version, seed, start/end timestamps, emitted
// files. Timestamps honor SOURCE_DATE_EPOCH for reproducible runs.
void write_manifest(const std::string &config_digest, std::uint64_t seed,
                    const std::string &command,
                    const std::string &started_at_iso,
                    const std::vector<std::string> &outputs,
                    const std::string &path);

// Current UTC time as ISO-8601, or the SOURCE_DATE_EPOCH instant when that
// environment variable is set.
std::string timestamp_iso8601();

// Shared number formatting for CSV cells (9 significant digits).
std::string format_rate(double value);

} // namespace risorient
