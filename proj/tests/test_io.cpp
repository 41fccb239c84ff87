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

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "config_io.hpp"
#include "emit.hpp"
#include "helpers.hpp"

using namespace risorient;

namespace {

const char *kPaperGeometryIni = R"(# reference indoor scenario
environment = indoor
frequency_ghz = 28
seed = 77
realizations = 5

[layout]
tx = 0 25 2
rx = 45 45 1
ris = 40 50 2
direct_blocked = true
)";

RateHeatmap synthetic_2x2() {
  RateHeatmap hm;
  hm.axis1_name = "phi_deg";
  hm.axis2_name = "theta_deg";
  hm.axis1 = {0.0, 10.0};
  hm.axis2 = {0.0, 10.0};
  hm.cells = {RateResult{1.0, 0.1, 4}, RateResult{2.0, 0.2, 4},
              RateResult{3.0, 0.3, 4}, RateResult{4.5, 0.45, 4}};
  hm.meta.config_digest = "0123456789abcdef";
  hm.meta.tool_version = "0.1.0";
  hm.meta.seed = 7;
  return hm;
}

std::size_t count_occurrences(const std::string &text,
                              const std::string &needle) {
  std::size_t count = 0;
  std::size_t pos = 0;
  while ((pos = text.find(needle, pos)) != std::string::npos) {
    ++count;
    pos += needle.size();
  }
  return count;
}

} // namespace

TEST_SUITE("io") {

TEST_CASE("minimal config applies the documented defaults") {
  const LoadedConfig cfg = load_config_text("[layout]\n"
                                            "tx = 0 25 2\n"
                                            "rx = 45 45 1\n"
                                            "ris = 40 50 2\n");
  CHECK(cfg.scenario.environment == Environment::Indoor);
  CHECK(cfg.scenario.frequency_ghz == 28.0);
  CHECK(cfg.scenario.noise_dbm == -100.0);
  CHECK(cfg.scenario.tx_power_dbm == 10.0);
  CHECK(cfg.scenario.realizations == 100);
  CHECK(cfg.scenario.clusters.mean_cluster_count == 1.8);
  CHECK(cfg.scenario.clusters.subrays_per_cluster == 10);
  CHECK(cfg.scenario.clusters.angular_spread_deg == 5.0);
  CHECK(cfg.scenario.path_loss.n_los == 1.73); // indoor table
  CHECK(cfg.scenario.los.d1_m == 1.2);
  CHECK(cfg.scenario.ris_array.pattern_exponent_q == 1.0);
  CHECK(cfg.scenario.bs_array.pattern_exponent_q == 0.0);
  CHECK(cfg.sweep.azimuth.values().size() == 36);
  CHECK(cfg.sweep.powers_dbm.size() == 6);
  CHECK(cfg.scenario.phases.strategy == PhaseStrategy::DominantPair);
}

TEST_CASE("outdoor environment switches the propagation defaults") {
  const LoadedConfig cfg = load_config_text("environment = outdoor\n");
  CHECK(cfg.scenario.path_loss.n_los == 2.1);
  CHECK(cfg.scenario.path_loss.sigma_nlos_db == 8.2);
  CHECK(cfg.scenario.los.d1_m == 18.0);
  CHECK(cfg.scenario.los.d2_m == 36.0);
}

TEST_CASE("reference geometry loads clean and validates") {
  const LoadedConfig cfg = load_config_text(kPaperGeometryIni, "inline.cfg");
  CHECK(validate_scenario(cfg.scenario).empty());
  CHECK(cfg.scenario.master_seed == 77);
}

TEST_CASE("indoor tx above the height limit validates with a named rule") {
  std::string text = kPaperGeometryIni;
  const auto pos = text.find("tx = 0 25 2");
  text.replace(pos, 11, "tx = 0 25 5");
  const LoadedConfig cfg = load_config_text(text);
  const auto violations = validate_scenario(cfg.scenario);
  REQUIRE(!violations.empty());
  CHECK(violations.front().message.find("3 m") != std::string::npos);
}

TEST_CASE("unknown keys are rejected with the line number") {
  try {
    load_config_text("frequency_ghz = 28\nbogus_key = 1\n", "bad.cfg");
    FAIL("expected ConfigError");
  } catch (const ConfigError &e) {
    const std::string msg = e.what();
    CHECK(msg.find("bad.cfg:2") != std::string::npos);
    CHECK(msg.find("bogus_key") != std::string::npos);
  }
}

TEST_CASE("malformed values carry diagnostics") {
  CHECK_THROWS_AS(load_config_text("frequency_ghz = fast\n"), ConfigError);
  CHECK_THROWS_AS(load_config_text("[layout]\ntx = 1 2\n"), ConfigError);
  CHECK_THROWS_AS(load_config_text("frequency_ghz = 28\nfrequency_ghz = 73\n"),
                  ConfigError);
  CHECK_THROWS_AS(load_config_text("key_without_value\n"), ConfigError);
  CHECK_THROWS_AS(load_config_file("/nonexistent/path.cfg"), ConfigError);
}

TEST_CASE("JSON configs load and accept inf for the Ricean factor") {
  const LoadedConfig cfg = load_config_text(R"({
    "environment": "outdoor",
    "frequency_ghz": 73,
    "clusters": {"ricean_k_db": "inf"},
    "layout": {"tx": [0, 25, 10], "rx": [45, 45, 1], "ris": [40, 50, 2]}
  })");
  CHECK(cfg.scenario.frequency_ghz == 73.0);
  CHECK(std::isinf(cfg.scenario.clusters.ricean_k_db));
  CHECK(cfg.scenario.layout.tx_pos.z() == 10.0);
}

TEST_CASE("canonical JSON round-trips to the same digest") {
  const LoadedConfig cfg = load_config_text(kPaperGeometryIni);
  const std::string canon = canonical_json(cfg);
  const LoadedConfig reloaded = load_config_text(canon);
  CHECK(canonical_json(reloaded) == canon);
  CHECK(config_digest(reloaded) == config_digest(cfg));
}

TEST_CASE("digest is stable under key reordering") {
  const LoadedConfig a = load_config_text("frequency_ghz = 28\nseed = 5\n");
  const LoadedConfig b = load_config_text("seed = 5\nfrequency_ghz = 28\n");
  CHECK(config_digest(a) == config_digest(b));
  const LoadedConfig c = load_config_text("seed = 6\nfrequency_ghz = 28\n");
  CHECK(config_digest(a) != config_digest(c));
}

TEST_CASE("format_rate keeps nine significant digits") {
  CHECK(format_rate(0.0) == "0");
  CHECK(format_rate(12.3456789123) == "12.3456789");
  CHECK(format_rate(1234567891.0) == "1.23456789e+09");
}

TEST_CASE("1x1 heatmap emits a two-line CSV") {
  helpers::TempDir dir("csv1");
  RateHeatmap hm;
  hm.axis1_name = "power_dbm";
  hm.axis2_name = "rotation_deg";
  hm.axis1 = {10.0};
  hm.axis2 = {0.0};
  hm.cells = {RateResult{3.25, 0.5, 7}};
  const std::string path = dir.file("one.csv");
  write_heatmap_csv(hm, path);
  const std::string text = helpers::slurp(path);
  CHECK(text == "rotation_deg\\power_dbm,10\n0,3.25\n");
  CHECK(helpers::slurp(path + ".stderr.csv") ==
        "rotation_deg\\power_dbm,10\n0,0.5\n");
}

TEST_CASE("36x36 sweep emits 37 rows by 37 columns") {
  helpers::TempDir dir("csv36");
  RateHeatmap hm;
  hm.axis1_name = "phi_deg";
  hm.axis2_name = "theta_deg";
  for (int i = 0; i < 36; ++i) {
    hm.axis1.push_back(i * 10.0);
    hm.axis2.push_back(i * 10.0);
  }
  hm.cells.assign(36 * 36, RateResult{1.5, 0.0, 1});
  const std::string path = dir.file("grid.csv");
  write_heatmap_csv(hm, path);
  const std::string text = helpers::slurp(path);
  CHECK(count_occurrences(text, "\n") == 37);
  std::istringstream is(text);
  std::string line;
  std::getline(is, line);
  CHECK(count_occurrences(line, ",") == 36); // 37 columns
}

TEST_CASE("CSV emission is byte-identical across calls") {
  helpers::TempDir dir("csvdet");
  const RateHeatmap hm = synthetic_2x2();
  write_heatmap_csv(hm, dir.file("a.csv"));
  write_heatmap_csv(hm, dir.file("b.csv"));
  CHECK(helpers::slurp(dir.file("a.csv")) == helpers::slurp(dir.file("b.csv")));
  CHECK(helpers::slurp(dir.file("a.csv.stderr.csv")) ==
        helpers::slurp(dir.file("b.csv.stderr.csv")));
}

TEST_CASE("CSV round-trip reproduces every emitted digit") {
  helpers::TempDir dir("csvrt");
  RateHeatmap hm = synthetic_2x2();
  hm.cells[0].mean_rate = 1.23456789123456;
  hm.cells[1].mean_rate = 9.87654321e-7;
  const std::string path = dir.file("rt.csv");
  write_heatmap_csv(hm, path);
  const RateHeatmap back = read_heatmap_csv(path);
  REQUIRE(back.rows() == hm.rows());
  REQUIRE(back.cols() == hm.cols());
  CHECK(back.axis1_name == hm.axis1_name);
  CHECK(back.axis2_name == hm.axis2_name);
  for (std::size_t r = 0; r < hm.rows(); ++r)
    for (std::size_t c = 0; c < hm.cols(); ++c) {
      CHECK(format_rate(back.at(r, c).mean_rate) ==
            format_rate(hm.at(r, c).mean_rate));
      CHECK(format_rate(back.at(r, c).std_error) ==
            format_rate(hm.at(r, c).std_error));
    }
}

TEST_CASE("CSV reader rejects malformed files") {
  helpers::TempDir dir("csvbad");
  const std::string path = dir.file("bad.csv");
  helpers::spit(path, "no_backslash_header,1\n0,2\n");
  CHECK_THROWS_AS(read_heatmap_csv(path), IoError);
  helpers::spit(path, "a\\b,1\n0,2,3\n");
  CHECK_THROWS_AS(read_heatmap_csv(path), IoError);
  CHECK_THROWS_AS(read_heatmap_csv(dir.file("missing.csv")), IoError);
}

TEST_CASE("SVG renders one rect per cell plus the argmax outline") {
  helpers::TempDir dir("svg");
  const RateHeatmap hm = synthetic_2x2();
  const std::string path = dir.file("map.svg");
  write_heatmap_svg(hm, path);
  const std::string svg = helpers::slurp(path);
  // background + 4 cells + outline
  CHECK(count_occurrences(svg, "<rect") == 6);
  CHECK(count_occurrences(svg, "stroke=\"#ff0000\"") == 1);
  CHECK(svg.find("phi_deg") != std::string::npos);
  CHECK(svg.find("theta_deg") != std::string::npos);
}

TEST_CASE("monochrome grids render a uniform color") {
  helpers::TempDir dir("svgmono");
  RateHeatmap hm = synthetic_2x2();
  for (auto &c : hm.cells)
    c.mean_rate = 2.0;
  const std::string path = dir.file("mono.svg");
  write_heatmap_svg(hm, path);
  const std::string svg = helpers::slurp(path);
  // All four cells share the bottom-of-scale color.
  CHECK(count_occurrences(svg, "fill=\"#440154\"") == 4);
}

TEST_CASE("SVG output matches the frozen golden file") {
  helpers::TempDir dir("svggold");
  const std::string path = dir.file("golden.svg");
  write_heatmap_svg(synthetic_2x2(), path);
  const std::string got = helpers::slurp(path);
  const std::string want =
      helpers::slurp(std::string(RISORIENT_TEST_DATA) + "/golden_2x2.svg");
  REQUIRE(!want.empty());
  CHECK(got == want);
}

TEST_CASE("summary and manifest carry the documented fields") {
  helpers::TempDir dir("summary");
  RateHeatmap hm = synthetic_2x2();
  const std::string spath = dir.file("summary.json");
  write_heatmap_summary(hm, spath);
  const auto summary = nlohmann::json::parse(helpers::slurp(spath));
  CHECK(summary["config_digest"] == "0123456789abcdef");
  CHECK(summary["rotation"].is_null());
  CHECK(summary["argmax"]["phi_deg"] == 10.0);
  CHECK(summary["argmax"]["theta_deg"] == 10.0);
  CHECK(summary["mean_rate"] == 4.5);

  setenv("SOURCE_DATE_EPOCH", "1700000000", 1);
  const std::string mpath = dir.file("manifest.json");
  write_manifest("0123456789abcdef", 7, "sweep", timestamp_iso8601(),
                 {"a.csv", "b.svg"}, mpath);
  const auto manifest = nlohmann::json::parse(helpers::slurp(mpath));
  unsetenv("SOURCE_DATE_EPOCH");
  CHECK(manifest["config_digest"] == "0123456789abcdef");
  CHECK(manifest["seed"] == 7);
  CHECK(manifest["command"] == "sweep");
  CHECK(manifest["started_at"] == "2023-11-14T22:13:20Z");
  CHECK(manifest["finished_at"] == "2023-11-14T22:13:20Z");
  CHECK(manifest["outputs"].size() == 2);
  CHECK(manifest["tool_version"].is_string());
}

TEST_CASE("rate summary records the rotation") {
  helpers::TempDir dir("ratesum");
  const std::string path = dir.file("summary.json");
  write_rate_summary("feedc0de00000000", RotationAngles(15.0, 30.0),
                     RateResult{6.5, 0.25, 10}, path);
  const auto j = nlohmann::json::parse(helpers::slurp(path));
  CHECK(j["rotation"]["phi_deg"] == 15.0);
  CHECK(j["rotation"]["theta_deg"] == 30.0);
  CHECK(j["mean_rate"] == 6.5);
  CHECK(j["std_error"] == 0.25);
  CHECK(j["argmax"].is_null());
}

} // TEST_SUITE
