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

#include "risorient.h"

#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "config_io.hpp"
#include "emit.hpp"
#include "rate.hpp"
#include "sweep.hpp"
#include "version.hpp"

using namespace risorient;

struct rso_config {
  LoadedConfig cfg;
};

struct rso_heatmap {
  RateHeatmap hm;
};

struct rso_report {
  std::vector<std::string> messages;
};

namespace {

thread_local std::string t_last_error;

void set_error(const std::string &msg) { t_last_error = msg; }

template <typename Fn> rso_status guarded(Fn &&fn) {
  try {
    return fn();
  } catch (const ConfigError &e) {
    set_error(e.what());
    return RSO_ERROR_PARSE;
  } catch (const IoError &e) {
    set_error(e.what());
    return RSO_ERROR_IO;
  } catch (const std::invalid_argument &e) {
    set_error(e.what());
    return RSO_ERROR_INVALID_ARGUMENT;
  } catch (const std::bad_alloc &) {
    set_error("out of memory");
    return RSO_ERROR_RUNTIME;
  } catch (const std::exception &e) {
    set_error(e.what());
    return RSO_ERROR_RUNTIME;
  }
}

rso_status invalid(const char *msg) {
  set_error(msg);
  return RSO_ERROR_INVALID_ARGUMENT;
}

void fill_meta(RateHeatmap &hm, const LoadedConfig &cfg, const char *command) {
  hm.meta.config_digest = config_digest(cfg);
  hm.meta.tool_version = kVersion;
  hm.meta.command = command;
  hm.meta.seed = cfg.scenario.master_seed;
  hm.meta.timestamp = timestamp_iso8601();
}

} // namespace

extern "C" {

const char *rso_version(void) { return kVersion; }

const char *rso_last_error(void) { return t_last_error.c_str(); }

rso_status rso_config_load(const char *path, rso_config **out) {
  if (!path || !out)
    return invalid("rso_config_load: null argument");
  return guarded([&] {
    auto *h = new rso_config{load_config_file(path)};
    *out = h;
    return RSO_OK;
  });
}

rso_status rso_config_parse(const char *text, rso_config **out) {
  if (!text || !out)
    return invalid("rso_config_parse: null argument");
  return guarded([&] {
    auto *h = new rso_config{load_config_text(text)};
    *out = h;
    return RSO_OK;
  });
}

void rso_config_free(rso_config *cfg) { delete cfg; }

rso_status rso_config_set_seed(rso_config *cfg, uint64_t seed) {
  if (!cfg)
    return invalid("rso_config_set_seed: null config");
  cfg->cfg.scenario.master_seed = seed;
  return RSO_OK;
}

rso_status rso_config_set_threads(rso_config *cfg, int32_t threads) {
  if (!cfg)
    return invalid("rso_config_set_threads: null config");
  cfg->cfg.scenario.threads = threads;
  return RSO_OK;
}

rso_status rso_config_digest(const rso_config *cfg, char *buf, size_t buflen) {
  if (!cfg || !buf)
    return invalid("rso_config_digest: null argument");
  if (buflen < 17)
    return invalid("rso_config_digest: buffer must hold 17 bytes");
  return guarded([&] {
    const std::string d = config_digest(cfg->cfg);
    std::memcpy(buf, d.c_str(), d.size() + 1);
    return RSO_OK;
  });
}

rso_status rso_config_canonical_json(const rso_config *cfg, char **out) {
  if (!cfg || !out)
    return invalid("rso_config_canonical_json: null argument");
  return guarded([&] {
    const std::string s = canonical_json(cfg->cfg);
    char *copy = new char[s.size() + 1];
    std::memcpy(copy, s.c_str(), s.size() + 1);
    *out = copy;
    return RSO_OK;
  });
}

void rso_string_free(char *s) { delete[] s; }

rso_status rso_validate(const rso_config *cfg, rso_report **out) {
  if (!cfg || !out)
    return invalid("rso_validate: null argument");
  return guarded([&] {
    auto *rep = new rso_report;
    for (const Violation &v : validate_scenario(cfg->cfg.scenario))
      rep->messages.push_back(v.field + ": " + v.message);
    for (const Violation &v : validate_sweep(cfg->cfg.sweep))
      rep->messages.push_back(v.field + ": " + v.message);
    *out = rep;
    return RSO_OK;
  });
}

size_t rso_report_count(const rso_report *report) {
  return report ? report->messages.size() : 0;
}

const char *rso_report_message(const rso_report *report, size_t index) {
  if (!report || index >= report->messages.size())
    return nullptr;
  return report->messages[index].c_str();
}

void rso_report_free(rso_report *report) { delete report; }

rso_status rso_ergodic_rate(const rso_config *cfg, double phi_deg,
                            double theta_deg, rso_rate_result *out) {
  if (!cfg || !out)
    return invalid("rso_ergodic_rate: null argument");
  return guarded([&] {
    const RateResult r = ergodic_rate(cfg->cfg.scenario,
                                      RotationAngles(phi_deg, theta_deg));
    *out = {r.mean_rate, r.std_error, r.realizations_used};
    return RSO_OK;
  });
}

rso_status rso_power_sweep(const rso_config *cfg, rso_heatmap **out) {
  if (!cfg || !out)
    return invalid("rso_power_sweep: null argument");
  return guarded([&] {
    auto *h = new rso_heatmap{run_power_sweep(cfg->cfg.scenario,
                                              cfg->cfg.sweep)};
    fill_meta(h->hm, cfg->cfg, "power-sweep");
    *out = h;
    return RSO_OK;
  });
}

rso_status rso_rotation_sweep(const rso_config *cfg, rso_axis axis,
                              rso_heatmap **out) {
  if (!cfg || !out)
    return invalid("rso_rotation_sweep: null argument");
  SweepAxis ax;
  switch (axis) {
  case RSO_AXIS_AZIMUTH:
    ax = SweepAxis::Azimuth;
    break;
  case RSO_AXIS_ELEVATION:
    ax = SweepAxis::Elevation;
    break;
  case RSO_AXIS_JOINT:
    ax = SweepAxis::Joint;
    break;
  default:
    return invalid("rso_rotation_sweep: unknown axis");
  }
  return guarded([&] {
    auto *h = new rso_heatmap{
        run_rotation_sweep(cfg->cfg.scenario, cfg->cfg.sweep, ax)};
    fill_meta(h->hm, cfg->cfg, "sweep");
    *out = h;
    return RSO_OK;
  });
}

rso_status rso_heatmap_load_csv(const char *path, rso_heatmap **out) {
  if (!path || !out)
    return invalid("rso_heatmap_load_csv: null argument");
  return guarded([&] {
    auto *h = new rso_heatmap{read_heatmap_csv(path)};
    *out = h;
    return RSO_OK;
  });
}

void rso_heatmap_free(rso_heatmap *hm) { delete hm; }

size_t rso_heatmap_rows(const rso_heatmap *hm) {
  return hm ? hm->hm.rows() : 0;
}

size_t rso_heatmap_cols(const rso_heatmap *hm) {
  return hm ? hm->hm.cols() : 0;
}

rso_status rso_heatmap_cell(const rso_heatmap *hm, size_t row, size_t col,
                            rso_rate_result *out) {
  if (!hm || !out)
    return invalid("rso_heatmap_cell: null argument");
  if (row >= hm->hm.rows() || col >= hm->hm.cols())
    return invalid("rso_heatmap_cell: index out of range");
  const RateResult &c = hm->hm.at(row, col);
  *out = {c.mean_rate, c.std_error, c.realizations_used};
  return RSO_OK;
}

rso_status rso_heatmap_axis_value(const rso_heatmap *hm, int32_t axis,
                                  size_t index, double *out) {
  if (!hm || !out)
    return invalid("rso_heatmap_axis_value: null argument");
  const std::vector<double> &vals = axis == 0 ? hm->hm.axis1 : hm->hm.axis2;
  if (axis != 0 && axis != 1)
    return invalid("rso_heatmap_axis_value: axis must be 0 or 1");
  if (index >= vals.size())
    return invalid("rso_heatmap_axis_value: index out of range");
  *out = vals[index];
  return RSO_OK;
}

rso_status rso_heatmap_argmax(const rso_heatmap *hm, double *phi_deg,
                              double *theta_deg, rso_rate_result *out) {
  if (!hm || !phi_deg || !theta_deg || !out)
    return invalid("rso_heatmap_argmax: null argument");
  return guarded([&] {
    const auto [rot, cell] = find_optimal_orientation(hm->hm);
    *phi_deg = rot.azimuth_deg;
    *theta_deg = rot.elevation_deg;
    *out = {cell.mean_rate, cell.std_error, cell.realizations_used};
    return RSO_OK;
  });
}

rso_status rso_heatmap_write_csv(const rso_heatmap *hm, const char *path) {
  if (!hm || !path)
    return invalid("rso_heatmap_write_csv: null argument");
  return guarded([&] {
    write_heatmap_csv(hm->hm, path);
    return RSO_OK;
  });
}

rso_status rso_heatmap_write_svg(const rso_heatmap *hm, const char *path) {
  if (!hm || !path)
    return invalid("rso_heatmap_write_svg: null argument");
  return guarded([&] {
    write_heatmap_svg(hm->hm, path);
    return RSO_OK;
  });
}

rso_status rso_heatmap_write_json(const rso_heatmap *hm, const char *path) {
  if (!hm || !path)
    return invalid("rso_heatmap_write_json: null argument");
  return guarded([&] {
    write_heatmap_json(hm->hm, path);
    return RSO_OK;
  });
}

rso_status rso_heatmap_write_summary(const rso_heatmap *hm, const char *path) {
  if (!hm || !path)
    return invalid("rso_heatmap_write_summary: null argument");
  return guarded([&] {
    write_heatmap_summary(hm->hm, path);
    return RSO_OK;
  });
}

rso_status rso_write_rate_summary(const rso_config *cfg, double phi_deg,
                                  double theta_deg,
                                  const rso_rate_result *rate,
                                  const char *path) {
  if (!cfg || !rate || !path)
    return invalid("rso_write_rate_summary: null argument");
  return guarded([&] {
    RateResult r;
    r.mean_rate = rate->mean_rate;
    r.std_error = rate->std_error;
    r.realizations_used = rate->realizations;
    write_rate_summary(config_digest(cfg->cfg),
                       RotationAngles(phi_deg, theta_deg), r, path);
    return RSO_OK;
  });
}

rso_status rso_timestamp_now(char *buf, size_t buflen) {
  if (!buf)
    return invalid("rso_timestamp_now: null buffer");
  if (buflen < 24)
    return invalid("rso_timestamp_now: buffer must hold 24 bytes");
  const std::string t = timestamp_iso8601();
  std::memcpy(buf, t.c_str(), t.size() + 1);
  return RSO_OK;
}

rso_status rso_write_manifest(const rso_config *cfg, const char *command,
                              const char *started_at_iso,
                              const char *const *outputs, size_t n_outputs,
                              const char *path) {
  if (!cfg || !command || !path || (n_outputs > 0 && !outputs))
    return invalid("rso_write_manifest: null argument");
  return guarded([&] {
    std::vector<std::string> files;
    files.reserve(n_outputs);
    for (size_t i = 0; i < n_outputs; ++i)
      files.emplace_back(outputs[i] ? outputs[i] : "");
    write_manifest(config_digest(cfg->cfg), cfg->cfg.scenario.master_seed,
                   command,
                   started_at_iso ? started_at_iso : timestamp_iso8601(),
                   files, path);
    return RSO_OK;
  });
}

} // extern "C"
