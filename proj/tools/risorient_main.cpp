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
//
// Command-line front end. Talks to the simulator exclusively through the
// public C API in risorient.h.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "risorient.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitValidation = 2;
constexpr int kExitUsage = 64;

struct Options {
  std::string config_path;
  std::string out_dir = ".";
  std::uint64_t seed = 0;
  bool seed_set = false;
  int threads = 0;
  bool threads_set = false;
  std::string format = "csv";
  bool image = false;
  bool allow_invalid = false;
  double phi_deg = 0.0;
  double theta_deg = 0.0;
  std::string axis = "joint";
};

struct ConfigHandle {
  rso_config *ptr = nullptr;
  ~ConfigHandle() { rso_config_free(ptr); }
};

struct HeatmapHandle {
  rso_heatmap *ptr = nullptr;
  ~HeatmapHandle() { rso_heatmap_free(ptr); }
};

struct ReportHandle {
  rso_report *ptr = nullptr;
  ~ReportHandle() { rso_report_free(ptr); }
};

int fail(const char *what) {
  std::fprintf(stderr, "error: %s: %s\n", what, rso_last_error());
  return kExitRuntime;
}

std::string join_path(const std::string &dir, const std::string &name) {
  return (std::filesystem::path(dir) / name).string();
}

// Loads, applies overrides, and validates. Returns kExitOk / kExitValidation
// / kExitRuntime; on kExitOk the handle is ready to use.
int prepare_config(const Options &opt, ConfigHandle &cfg,
                   bool print_violations_to_stdout) {
  if (rso_config_load(opt.config_path.c_str(), &cfg.ptr) != RSO_OK)
    return fail("loading config");
  if (opt.seed_set)
    rso_config_set_seed(cfg.ptr, opt.seed);

  int threads = opt.threads_set ? opt.threads : 0;
  if (!opt.threads_set) {
    if (const char *env = std::getenv("RIS_SIM_THREADS"))
      threads = std::atoi(env);
  }
  if (threads > 0)
    rso_config_set_threads(cfg.ptr, threads);

  ReportHandle report;
  if (rso_validate(cfg.ptr, &report.ptr) != RSO_OK)
    return fail("validating config");
  const size_t n = rso_report_count(report.ptr);
  if (n > 0) {
    std::FILE *sink = print_violations_to_stdout ? stdout : stderr;
    for (size_t i = 0; i < n; ++i)
      std::fprintf(sink, "violation: %s\n", rso_report_message(report.ptr, i));
    if (!opt.allow_invalid)
      return kExitValidation;
    std::fprintf(stderr, "continuing despite violations (--allow-invalid)\n");
  }
  return kExitOk;
}

int write_manifest(const ConfigHandle &cfg, const std::string &command,
                   const char *started_at,
                   const std::vector<std::string> &outputs,
                   const std::string &out_dir) {
  std::vector<const char *> names;
  names.reserve(outputs.size());
  for (const auto &o : outputs)
    names.push_back(o.c_str());
  const std::string path = join_path(out_dir, "manifest.json");
  if (rso_write_manifest(cfg.ptr, command.c_str(), started_at, names.data(),
                         names.size(), path.c_str()) != RSO_OK)
    return fail("writing manifest");
  return kExitOk;
}

// Emits a heatmap in the selected format plus summary, returns the list of
// file names written (relative to the out dir).
int emit_heatmap(const HeatmapHandle &hm, const Options &opt,
                 const std::string &stem, std::vector<std::string> &outputs) {
  if (opt.format == "json") {
    const std::string name = stem + ".json";
    if (rso_heatmap_write_json(hm.ptr, join_path(opt.out_dir, name).c_str()) !=
        RSO_OK)
      return fail("writing heatmap JSON");
    outputs.push_back(name);
  } else {
    const std::string name = stem + ".csv";
    if (rso_heatmap_write_csv(hm.ptr, join_path(opt.out_dir, name).c_str()) !=
        RSO_OK)
      return fail("writing heatmap CSV");
    outputs.push_back(name);
    outputs.push_back(name + ".stderr.csv");
  }
  if (opt.image) {
    const std::string name = stem + ".svg";
    if (rso_heatmap_write_svg(hm.ptr, join_path(opt.out_dir, name).c_str()) !=
        RSO_OK)
      return fail("writing heatmap SVG");
    outputs.push_back(name);
  }
  const std::string summary = "summary.json";
  if (rso_heatmap_write_summary(hm.ptr,
                                join_path(opt.out_dir, summary).c_str()) !=
      RSO_OK)
    return fail("writing summary");
  outputs.push_back(summary);
  return kExitOk;
}

int cmd_validate(const Options &opt) {
  ConfigHandle cfg;
  const int rc = prepare_config(opt, cfg, /*print_violations_to_stdout=*/true);
  if (rc == kExitOk)
    std::printf("ok\n");
  return rc;
}

int cmd_rate(const Options &opt) {
  char started[32];
  rso_timestamp_now(started, sizeof started);
  ConfigHandle cfg;
  if (const int rc = prepare_config(opt, cfg, false); rc != kExitOk)
    return rc;

  rso_rate_result r{};
  if (rso_ergodic_rate(cfg.ptr, opt.phi_deg, opt.theta_deg, &r) != RSO_OK)
    return fail("evaluating rate");
  std::printf("rate: %.9g bits/s/Hz (std_error %.9g, realizations %d)\n",
              r.mean_rate, r.std_error, r.realizations);

  std::filesystem::create_directories(opt.out_dir);
  const std::string summary = "summary.json";
  if (rso_write_rate_summary(cfg.ptr, opt.phi_deg, opt.theta_deg, &r,
                             join_path(opt.out_dir, summary).c_str()) !=
      RSO_OK)
    return fail("writing summary");
  return write_manifest(cfg, "rate", started, {summary}, opt.out_dir);
}

int cmd_power_sweep(const Options &opt) {
  char started[32];
  rso_timestamp_now(started, sizeof started);
  ConfigHandle cfg;
  if (const int rc = prepare_config(opt, cfg, false); rc != kExitOk)
    return rc;

  HeatmapHandle hm;
  if (rso_power_sweep(cfg.ptr, &hm.ptr) != RSO_OK)
    return fail("running power sweep");

  std::filesystem::create_directories(opt.out_dir);
  std::vector<std::string> outputs;
  if (const int rc = emit_heatmap(hm, opt, "power_sweep", outputs);
      rc != kExitOk)
    return rc;

  const size_t cols = rso_heatmap_cols(hm.ptr);
  rso_rate_result best{};
  double best_power = 0.0;
  for (size_t c = 0; c < cols; ++c) {
    rso_rate_result cell{};
    rso_heatmap_cell(hm.ptr, 0, c, &cell);
    if (c == 0 || cell.mean_rate > best.mean_rate) {
      best = cell;
      rso_heatmap_axis_value(hm.ptr, 0, c, &best_power);
    }
  }
  std::printf("power sweep: %zu levels, max %.9g bits/s/Hz at %g dBm\n", cols,
              best.mean_rate, best_power);
  return write_manifest(cfg, "power-sweep", started, outputs, opt.out_dir);
}

int run_rotation(const Options &opt, const std::string &command) {
  char started[32];
  rso_timestamp_now(started, sizeof started);
  ConfigHandle cfg;
  if (const int rc = prepare_config(opt, cfg, false); rc != kExitOk)
    return rc;

  rso_axis axis = RSO_AXIS_JOINT;
  std::string stem = "sweep_joint";
  if (opt.axis == "az" || opt.axis == "azimuth") {
    axis = RSO_AXIS_AZIMUTH;
    stem = "sweep_azimuth";
  } else if (opt.axis == "el" || opt.axis == "elevation") {
    axis = RSO_AXIS_ELEVATION;
    stem = "sweep_elevation";
  } else if (opt.axis != "joint") {
    std::fprintf(stderr, "error: unknown axis '%s'\n", opt.axis.c_str());
    return kExitUsage;
  }

  HeatmapHandle hm;
  if (rso_rotation_sweep(cfg.ptr, axis, &hm.ptr) != RSO_OK)
    return fail("running rotation sweep");

  std::filesystem::create_directories(opt.out_dir);
  std::vector<std::string> outputs;
  if (const int rc = emit_heatmap(hm, opt, stem, outputs); rc != kExitOk)
    return rc;

  double phi = 0.0, theta = 0.0;
  rso_rate_result best{};
  if (rso_heatmap_argmax(hm.ptr, &phi, &theta, &best) != RSO_OK)
    return fail("locating argmax");
  std::printf("%s: %zux%zu grid, best phi=%g theta=%g rate=%.9g bits/s/Hz\n",
              command.c_str(), rso_heatmap_rows(hm.ptr),
              rso_heatmap_cols(hm.ptr), phi, theta, best.mean_rate);
  return write_manifest(cfg, command, started, outputs, opt.out_dir);
}

int cmd_sweep(const Options &opt) { return run_rotation(opt, "sweep"); }

int cmd_optimize(Options opt) {
  opt.axis = "joint";
  return run_rotation(opt, "optimize");
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"risorient: link-level simulator for mechanically rotatable "
               "reflecting surfaces"};
  app.set_version_flag("--version", rso_version());

  Options opt;
  app.add_option("--seed", opt.seed, "Override the config master seed")
      ->each([&](const std::string &) { opt.seed_set = true; });
  app.add_option("--out", opt.out_dir, "Output directory (default .)");
  app.add_option("--threads", opt.threads,
                 "Worker threads (default: RIS_SIM_THREADS or all cores)")
      ->each([&](const std::string &) { opt.threads_set = true; });
  app.add_option("--format", opt.format, "Heatmap format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_flag("--image", opt.image, "Also render heatmaps as SVG");
  app.add_flag("--allow-invalid", opt.allow_invalid,
               "Run even when scenario validation fails");

  auto *validate =
      app.add_subcommand("validate", "Check a scenario config and exit");
  validate->add_option("config", opt.config_path, "Scenario config file")
      ->required();

  auto *rate = app.add_subcommand(
      "rate", "Ergodic rate at one panel rotation");
  rate->add_option("config", opt.config_path)->required();
  rate->add_option("--phi", opt.phi_deg, "Azimuth rotation in degrees");
  rate->add_option("--theta", opt.theta_deg, "Elevation rotation in degrees");

  auto *power =
      app.add_subcommand("power-sweep", "Rate vs transmit power, unrotated");
  power->add_option("config", opt.config_path)->required();

  auto *sweep =
      app.add_subcommand("sweep", "Rate vs panel rotation (heatmap)");
  sweep->add_option("config", opt.config_path)->required();
  sweep->add_option("--axis", opt.axis, "az | el | joint (default joint)");

  auto *optimize = app.add_subcommand(
      "optimize", "Joint sweep plus best-orientation report");
  optimize->add_option("config", opt.config_path)->required();

  app.require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (validate->parsed())
      return cmd_validate(opt);
    if (rate->parsed())
      return cmd_rate(opt);
    if (power->parsed())
      return cmd_power_sweep(opt);
    if (sweep->parsed())
      return cmd_sweep(opt);
    if (optimize->parsed())
      return cmd_optimize(opt);
  } catch (const std::exception &e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitRuntime;
  }
  return kExitUsage;
}
