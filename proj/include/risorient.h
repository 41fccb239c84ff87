/* SPDX-License-Identifier: Apache-2.0
 *
 * risorient — orientation-aware link simulator for RIS-assisted MIMO
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ------------------------------------------------------------------------
 *
 * C interface of the risorient shared library. All entry points are
 * thread-compatible: distinct handles may be used from distinct threads, and
 * the library never touches global mutable state apart from the thread-local
 * error message. Every function that can fail returns an rso_status; the
 * human-readable detail of the most recent failure on the calling thread is
 * available from rso_last_error().
 */

#ifndef RISORIENT_H
#define RISORIENT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define RSO_API __declspec(dllexport)
#else
#define RSO_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rso_status {
  RSO_OK = 0,
  RSO_ERROR_INVALID_ARGUMENT = 1,
  RSO_ERROR_PARSE = 2,
  RSO_ERROR_VALIDATION = 3,
  RSO_ERROR_IO = 4,
  RSO_ERROR_RUNTIME = 5
} rso_status;

typedef enum rso_axis {
  RSO_AXIS_AZIMUTH = 0,
  RSO_AXIS_ELEVATION = 1,
  RSO_AXIS_JOINT = 2
} rso_axis;

/* Opaque handles. Free with the matching *_free function; NULL is ignored. */
typedef struct rso_config rso_config;
typedef struct rso_heatmap rso_heatmap;
typedef struct rso_report rso_report;

typedef struct rso_rate_result {
  double mean_rate;  /* bits/s/Hz */
  double std_error;  /* bits/s/Hz */
  int32_t realizations;
} rso_rate_result;

RSO_API const char *rso_version(void);

/* Message of the last failure on this thread; empty string when none. */
RSO_API const char *rso_last_error(void);

/* ---- configuration ---------------------------------------------------- */

/* Loads a scenario+sweep description from a file; either the key/value
 * format or canonical JSON. */
RSO_API rso_status rso_config_load(const char *path, rso_config **out);
RSO_API rso_status rso_config_parse(const char *text, rso_config **out);
RSO_API void rso_config_free(rso_config *cfg);

RSO_API rso_status rso_config_set_seed(rso_config *cfg, uint64_t seed);
RSO_API rso_status rso_config_set_threads(rso_config *cfg, int32_t threads);

/* Writes 16 hex digits plus NUL; buflen must be >= 17. */
RSO_API rso_status rso_config_digest(const rso_config *cfg, char *buf,
                                     size_t buflen);

/* Minified canonical JSON; free with rso_string_free. */
RSO_API rso_status rso_config_canonical_json(const rso_config *cfg,
                                             char **out);
RSO_API void rso_string_free(char *s);

/* ---- validation -------------------------------------------------------- */

/* Always returns a report on success of the check itself; the report lists
 * zero or more violations. */
RSO_API rso_status rso_validate(const rso_config *cfg, rso_report **out);
RSO_API size_t rso_report_count(const rso_report *report);
RSO_API const char *rso_report_message(const rso_report *report, size_t index);
RSO_API void rso_report_free(rso_report *report);

/* ---- evaluation --------------------------------------------------------- */

/* Ergodic rate at one panel rotation, at the configured transmit power. */
RSO_API rso_status rso_ergodic_rate(const rso_config *cfg, double phi_deg,
                                    double theta_deg, rso_rate_result *out);

/* Rate-versus-power curve at zero rotation (1 x n_powers heatmap). */
RSO_API rso_status rso_power_sweep(const rso_config *cfg, rso_heatmap **out);

/* Ergodic rate over panel orientations. */
RSO_API rso_status rso_rotation_sweep(const rso_config *cfg, rso_axis axis,
                                      rso_heatmap **out);

/* ---- heatmaps ----------------------------------------------------------- */

RSO_API rso_status rso_heatmap_load_csv(const char *path, rso_heatmap **out);
RSO_API void rso_heatmap_free(rso_heatmap *hm);

RSO_API size_t rso_heatmap_rows(const rso_heatmap *hm);
RSO_API size_t rso_heatmap_cols(const rso_heatmap *hm);
RSO_API rso_status rso_heatmap_cell(const rso_heatmap *hm, size_t row,
                                    size_t col, rso_rate_result *out);

/* axis 0 = columns (axis1), axis 1 = rows (axis2). */
RSO_API rso_status rso_heatmap_axis_value(const rso_heatmap *hm, int32_t axis,
                                          size_t index, double *out);

/* Argmax of a rotation heatmap with the documented tie-breaks. Fails with
 * RSO_ERROR_INVALID_ARGUMENT on power-sweep maps. */
RSO_API rso_status rso_heatmap_argmax(const rso_heatmap *hm, double *phi_deg,
                                      double *theta_deg, rso_rate_result *out);

RSO_API rso_status rso_heatmap_write_csv(const rso_heatmap *hm,
                                         const char *path);
RSO_API rso_status rso_heatmap_write_svg(const rso_heatmap *hm,
                                         const char *path);
RSO_API rso_status rso_heatmap_write_json(const rso_heatmap *hm,
                                          const char *path);
RSO_API rso_status rso_heatmap_write_summary(const rso_heatmap *hm,
                                             const char *path);

/* ---- run artifacts ------------------------------------------------------ */

RSO_API rso_status rso_write_rate_summary(const rso_config *cfg,
                                          double phi_deg, double theta_deg,
                                          const rso_rate_result *rate,
                                          const char *path);

/* ISO-8601 UTC timestamp (honors SOURCE_DATE_EPOCH); buflen >= 24. */
RSO_API rso_status rso_timestamp_now(char *buf, size_t buflen);

RSO_API rso_status rso_write_manifest(const rso_config *cfg,
                                      const char *command,
                                      const char *started_at_iso,
                                      const char *const *outputs,
                                      size_t n_outputs, const char *path);

#ifdef __cplusplus
}
#endif

#endif /* RISORIENT_H */
