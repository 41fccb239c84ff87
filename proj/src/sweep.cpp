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

#include "sweep.hpp"

#include <cmath>
#include <stdexcept>

#include "parallel.hpp"
#include "version.hpp"

namespace risorient {

namespace {

// Wrapped distance of an angle from 0 degrees: 350 counts as 10.
double deviation_deg(double deg) {
  const double w = wrap_deg(deg);
  return std::min(w, 360.0 - w);
}

} // namespace

std::vector<double> GridSpec::values() const {
  if (!(step_deg > 0.0) || !std::isfinite(step_deg))
    throw std::invalid_argument("grid step must be > 0");
  if (!(stop_deg >= start_deg))
    throw std::invalid_argument("grid stop must be >= start");
  const auto count = static_cast<std::size_t>(
                         std::floor((stop_deg - start_deg) / step_deg + 1e-9)) +
                     1;
  std::vector<double> v;
  v.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    v.push_back(start_deg + static_cast<double>(i) * step_deg);
  return v;
}

std::vector<Violation> validate_sweep(const SweepSpec &spec) {
  std::vector<Violation> v;
  const auto check_grid = [&v](const GridSpec &g, const char *name) {
    if (!(g.step_deg > 0.0) || !std::isfinite(g.step_deg))
      v.push_back({name, std::string(name) + ": step must be > 0"});
    else if (!(g.stop_deg >= g.start_deg))
      v.push_back({name, std::string(name) + ": stop must be >= start"});
  };
  check_grid(spec.azimuth, "sweep.azimuth");
  check_grid(spec.elevation, "sweep.elevation");
  if (spec.powers_dbm.empty())
    v.push_back({"sweep.powers", "power list must not be empty"});
  for (double p : spec.powers_dbm)
    if (!std::isfinite(p)) {
      v.push_back({"sweep.powers", "power levels must be finite"});
      break;
    }
  if (!std::isfinite(spec.hold_azimuth_deg) ||
      !std::isfinite(spec.hold_elevation_deg))
    v.push_back({"sweep.hold", "held angles must be finite"});
  return v;
}

bool RateHeatmap::is_rotation_map() const {
  return axis1_name != "power_dbm" && axis2_name != "power_dbm";
}

RotationAngles RateHeatmap::cell_rotation(std::size_t row,
                                          std::size_t col) const {
  double phi = 0.0;
  double theta = 0.0;
  const auto apply = [&](const std::string &name, double value) {
    if (name == "phi_deg")
      phi = value;
    else if (name == "theta_deg")
      theta = value;
  };
  apply(axis1_name, axis1[col]);
  apply(axis2_name, axis2[row]);
  return {phi, theta};
}

RateHeatmap run_power_sweep(const ScenarioConfig &config,
                            const SweepSpec &spec) {
  if (spec.powers_dbm.empty())
    throw std::invalid_argument("power sweep needs at least one power level");
  const std::size_t n_powers = spec.powers_dbm.size();
  const std::size_t m = static_cast<std::size_t>(config.realizations);
  const RotationAngles rotation{}; // power study runs unrotated

  // rates[p * m + r]
  std::vector<double> rates(n_powers * m);
  parallel_for(m, config.threads, [&](std::size_t r) {
    const RealizationDraw draw =
        draw_realization_state(config, static_cast<int>(r));
    const Eigen::VectorXd s =
        realized_singular_values(config, draw, rotation);
    for (std::size_t p = 0; p < n_powers; ++p)
      rates[p * m + r] = rate_from_singular_values(
          s, snr_linear(spec.powers_dbm[p], config.noise_dbm));
  });

  RateHeatmap hm;
  hm.axis1_name = "power_dbm";
  hm.axis2_name = "rotation_deg"; // single pseudo-row at zero rotation
  hm.axis1 = spec.powers_dbm;
  hm.axis2 = {0.0};
  hm.cells.resize(n_powers);
  for (std::size_t p = 0; p < n_powers; ++p)
    hm.cells[p] =
        reduce_rates(std::span<const double>(rates).subspan(p * m, m));
  hm.meta.tool_version = kVersion;
  hm.meta.seed = config.master_seed;
  return hm;
}

RateHeatmap run_rotation_sweep(const ScenarioConfig &config,
                               const SweepSpec &spec, SweepAxis axis) {
  RateHeatmap hm;
  switch (axis) {
  case SweepAxis::Azimuth:
    hm.axis1_name = "phi_deg";
    hm.axis2_name = "theta_deg";
    hm.axis1 = spec.azimuth.values();
    hm.axis2 = {spec.hold_elevation_deg};
    break;
  case SweepAxis::Elevation:
    hm.axis1_name = "theta_deg";
    hm.axis2_name = "phi_deg";
    hm.axis1 = spec.elevation.values();
    hm.axis2 = {spec.hold_azimuth_deg};
    break;
  case SweepAxis::Joint:
    hm.axis1_name = "phi_deg";
    hm.axis2_name = "theta_deg";
    hm.axis1 = spec.azimuth.values();
    hm.axis2 = spec.elevation.values();
    break;
  }

  const std::size_t n_cells = hm.axis1.size() * hm.axis2.size();
  const std::size_t m = static_cast<std::size_t>(config.realizations);
  hm.cells.resize(n_cells);

  // Draws depend only on (seed, realization); share them across all cells.
  std::vector<RealizationDraw> draws(m);
  parallel_for(m, config.threads, [&](std::size_t r) {
    draws[r] = draw_realization_state(config, static_cast<int>(r));
  });

  // One task per (cell, realization); results keyed by index so scheduling
  // order cannot leak into the output.
  std::vector<double> rates(n_cells * m);
  parallel_for(n_cells * m, config.threads, [&](std::size_t task) {
    const std::size_t cell = task / m;
    const std::size_t r = task % m;
    const std::size_t row = cell / hm.axis1.size();
    const std::size_t col = cell % hm.axis1.size();
    rates[task] = realized_rate(config, draws[r],
                                hm.cell_rotation(row, col),
                                config.tx_power_dbm);
  });

  for (std::size_t cell = 0; cell < n_cells; ++cell)
    hm.cells[cell] =
        reduce_rates(std::span<const double>(rates).subspan(cell * m, m));
  hm.meta.tool_version = kVersion;
  hm.meta.seed = config.master_seed;
  return hm;
}

std::pair<RotationAngles, RateResult>
find_optimal_orientation(const RateHeatmap &heatmap) {
  if (heatmap.cells.empty())
    throw std::invalid_argument("find_optimal_orientation: empty heatmap");
  if (!heatmap.is_rotation_map())
    throw std::invalid_argument(
        "find_optimal_orientation: not a rotation heatmap");

  bool have = false;
  RotationAngles best_rot;
  RateResult best_cell;
  double best_dev = 0.0;
  for (std::size_t row = 0; row < heatmap.rows(); ++row) {
    for (std::size_t col = 0; col < heatmap.cols(); ++col) {
      const RateResult &cell = heatmap.at(row, col);
      const RotationAngles rot = heatmap.cell_rotation(row, col);
      const double dev = std::hypot(deviation_deg(rot.azimuth_deg),
                                    deviation_deg(rot.elevation_deg));
      const bool better =
          !have || cell.mean_rate > best_cell.mean_rate ||
          (cell.mean_rate == best_cell.mean_rate &&
           (dev < best_dev ||
            (dev == best_dev &&
             (rot.azimuth_deg < best_rot.azimuth_deg ||
              (rot.azimuth_deg == best_rot.azimuth_deg &&
               rot.elevation_deg < best_rot.elevation_deg)))));
      if (better) {
        have = true;
        best_rot = rot;
        best_cell = cell;
        best_dev = dev;
      }
    }
  }
  return {best_rot, best_cell};
}

} // namespace risorient
