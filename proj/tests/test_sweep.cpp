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

#include <doctest.h>

#include "helpers.hpp"
#include "sweep.hpp"

using namespace risorient;

namespace {

SweepSpec small_sweep() {
  SweepSpec s;
  s.azimuth = {0.0, 90.0, 30.0};
  s.elevation = {0.0, 60.0, 30.0};
  s.powers_dbm = {0.0, 10.0, 20.0};
  return s;
}

} // namespace

TEST_SUITE("sweep") {

TEST_CASE("grid expansion covers start to stop inclusive") {
  CHECK(GridSpec{0.0, 350.0, 10.0}.values().size() == 36);
  CHECK(GridSpec{0.0, 0.0, 10.0}.values() == std::vector<double>{0.0});
  const auto v = GridSpec{10.0, 40.0, 15.0}.values();
  CHECK(v == std::vector<double>{10.0, 25.0, 40.0});
  CHECK_THROWS_AS((GridSpec{0.0, 10.0, 0.0}.values()), std::invalid_argument);
  CHECK_THROWS_AS((GridSpec{10.0, 0.0, 5.0}.values()), std::invalid_argument);
}

TEST_CASE("sweep validation flags bad grids and powers") {
  SweepSpec s = small_sweep();
  CHECK(validate_sweep(s).empty());
  s.azimuth.step_deg = -1.0;
  CHECK(!validate_sweep(s).empty());
  s = small_sweep();
  s.powers_dbm.clear();
  CHECK(!validate_sweep(s).empty());
}

TEST_CASE("single-power sweep equals the ergodic rate at that power") {
  ScenarioConfig c = helpers::indoor_scenario();
  c.realizations = 6;
  SweepSpec spec = small_sweep();
  spec.powers_dbm = {10.0};
  const RateHeatmap hm = run_power_sweep(c, spec);
  REQUIRE(hm.rows() == 1);
  REQUIRE(hm.cols() == 1);
  ScenarioConfig at10 = c;
  at10.tx_power_dbm = 10.0;
  const RateResult want = ergodic_rate(at10, {0.0, 0.0});
  CHECK(hm.at(0, 0).mean_rate == want.mean_rate);
  CHECK(hm.at(0, 0).std_error == want.std_error);
}

TEST_CASE("power sweep is non-decreasing along the power axis") {
  ScenarioConfig c = helpers::indoor_scenario();
  c.realizations = 8;
  const RateHeatmap hm = run_power_sweep(c, small_sweep());
  REQUIRE(hm.cols() == 3);
  CHECK(hm.at(0, 0).mean_rate <= hm.at(0, 1).mean_rate);
  CHECK(hm.at(0, 1).mean_rate <= hm.at(0, 2).mean_rate);
}

TEST_CASE("rotation sweep cell (0,0) equals the unrotated ergodic rate "
          "bit-exactly") {
  ScenarioConfig c = helpers::indoor_scenario();
  c.realizations = 5;
  const RateHeatmap hm = run_rotation_sweep(c, small_sweep(),
                                            SweepAxis::Joint);
  const RateResult base = ergodic_rate(c, {0.0, 0.0});
  CHECK(hm.at(0, 0).mean_rate == base.mean_rate);
  CHECK(hm.at(0, 0).std_error == base.std_error);
}

TEST_CASE("every rotation cell reproduces an independent ergodic run") {
  ScenarioConfig c = helpers::indoor_scenario();
  c.realizations = 3;
  SweepSpec spec;
  spec.azimuth = {0.0, 180.0, 90.0};
  spec.elevation = {0.0, 90.0, 90.0};
  const RateHeatmap hm = run_rotation_sweep(c, spec, SweepAxis::Joint);
  for (std::size_t row = 0; row < hm.rows(); ++row)
    for (std::size_t col = 0; col < hm.cols(); ++col) {
      const RateResult want = ergodic_rate(c, hm.cell_rotation(row, col));
      CHECK(hm.at(row, col).mean_rate == want.mean_rate);
      CHECK(hm.at(row, col).std_error == want.std_error);
    }
}

TEST_CASE("single-axis sweeps hold the other angle") {
  ScenarioConfig c = helpers::indoor_scenario();
  c.realizations = 3;
  SweepSpec spec = small_sweep();
  spec.hold_elevation_deg = 30.0;
  const RateHeatmap hm = run_rotation_sweep(c, spec, SweepAxis::Azimuth);
  REQUIRE(hm.rows() == 1);
  REQUIRE(hm.cols() == 4);
  CHECK(hm.axis1_name == "phi_deg");
  CHECK(hm.axis2_name == "theta_deg");
  CHECK(hm.axis2[0] == 30.0);
  const RateResult want = ergodic_rate(c, {60.0, 30.0});
  CHECK(hm.at(0, 2).mean_rate == want.mean_rate);

  const RateHeatmap el = run_rotation_sweep(c, spec, SweepAxis::Elevation);
  REQUIRE(el.rows() == 1);
  REQUIRE(el.cols() == 3);
  CHECK(el.axis1_name == "theta_deg");
  CHECK(el.axis2[0] == 0.0);
}

TEST_CASE("thread count does not change sweep output") {
  ScenarioConfig c = helpers::indoor_scenario();
  c.realizations = 4;
  SweepSpec spec;
  spec.azimuth = {0.0, 120.0, 60.0};
  spec.elevation = {0.0, 60.0, 60.0};
  c.threads = 1;
  const RateHeatmap a = run_rotation_sweep(c, spec, SweepAxis::Joint);
  c.threads = 5;
  const RateHeatmap b = run_rotation_sweep(c, spec, SweepAxis::Joint);
  REQUIRE(a.cells.size() == b.cells.size());
  for (std::size_t i = 0; i < a.cells.size(); ++i) {
    CHECK(a.cells[i].mean_rate == b.cells[i].mean_rate);
    CHECK(a.cells[i].std_error == b.cells[i].std_error);
  }
}

TEST_CASE("single-cell heatmap is its own argmax") {
  RateHeatmap hm;
  hm.axis1_name = "phi_deg";
  hm.axis2_name = "theta_deg";
  hm.axis1 = {40.0};
  hm.axis2 = {20.0};
  hm.cells = {RateResult{2.5, 0.1, 3}};
  const auto [rot, cell] = find_optimal_orientation(hm);
  CHECK(rot.azimuth_deg == 40.0);
  CHECK(rot.elevation_deg == 20.0);
  CHECK(cell.mean_rate == 2.5);
}

TEST_CASE("equal-rate ties break toward the smaller deviation from zero") {
  RateHeatmap hm;
  hm.axis1_name = "phi_deg";
  hm.axis2_name = "theta_deg";
  hm.axis1 = {10.0, 180.0};
  hm.axis2 = {0.0};
  hm.cells = {RateResult{5.0, 0.0, 1}, RateResult{5.0, 0.0, 1}};
  const auto [rot, cell] = find_optimal_orientation(hm);
  CHECK(rot.azimuth_deg == 10.0);

  // Wrapped deviation: 350 degrees is 10 degrees from alignment, closer than
  // 20; equal wrapped deviations fall back to the smaller azimuth value.
  hm.axis1 = {20.0, 350.0};
  const auto [rot2, cell2] = find_optimal_orientation(hm);
  CHECK(rot2.azimuth_deg == 350.0);
  hm.axis1 = {10.0, 350.0};
  const auto [rot3, cell3] = find_optimal_orientation(hm);
  CHECK(rot3.azimuth_deg == 10.0);
}

TEST_CASE("argmax matches a linear scan on a constructed grid") {
  RateHeatmap hm;
  hm.axis1_name = "phi_deg";
  hm.axis2_name = "theta_deg";
  hm.axis1 = {0.0, 10.0, 20.0};
  hm.axis2 = {0.0, 10.0, 20.0};
  hm.cells.resize(9);
  double v = 0.0;
  for (auto &cell : hm.cells) {
    cell.mean_rate = v;
    v += 0.5;
  }
  hm.at(1, 2).mean_rate = 100.0;
  const auto [rot, cell] = find_optimal_orientation(hm);
  CHECK(cell.mean_rate == 100.0);
  CHECK(rot.azimuth_deg == 20.0);
  CHECK(rot.elevation_deg == 10.0);

  // Matches a brute-force scan of the same grid.
  double best = -1.0;
  for (const auto &c : hm.cells)
    best = std::max(best, c.mean_rate);
  CHECK(cell.mean_rate == best);
}

TEST_CASE("argmax is invariant under positive monotone transforms") {
  RateHeatmap hm;
  hm.axis1_name = "phi_deg";
  hm.axis2_name = "theta_deg";
  hm.axis1 = {0.0, 10.0, 20.0, 30.0};
  hm.axis2 = {0.0, 10.0};
  hm.cells.resize(8);
  std::mt19937_64 eng(3);
  for (auto &cell : hm.cells)
    cell.mean_rate = double(eng() % 1000) / 10.0;
  const auto [rot_a, cell_a] = find_optimal_orientation(hm);
  for (auto &cell : hm.cells)
    cell.mean_rate = 3.0 * cell.mean_rate + 7.0;
  const auto [rot_b, cell_b] = find_optimal_orientation(hm);
  CHECK(rot_a.azimuth_deg == rot_b.azimuth_deg);
  CHECK(rot_a.elevation_deg == rot_b.elevation_deg);
}

TEST_CASE("empty heatmaps and power maps are rejected") {
  RateHeatmap empty;
  CHECK_THROWS_AS(find_optimal_orientation(empty), std::invalid_argument);
  RateHeatmap power;
  power.axis1_name = "power_dbm";
  power.axis2_name = "rotation_deg";
  power.axis1 = {0.0};
  power.axis2 = {0.0};
  power.cells = {RateResult{}};
  CHECK_THROWS_AS(find_optimal_orientation(power), std::invalid_argument);
}

} // TEST_SUITE
