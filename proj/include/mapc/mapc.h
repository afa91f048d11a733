/*
 * Copyright 2026 The mapcsim Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface of libmapc, the multi-AP coordinated spatial reuse simulator.
 *
 * Conventions:
 *  - Every fallible call returns a mapc_status. On failure a description is
 *    available from mapc_last_error() (thread-local, valid until the next
 *    failing call on the same thread).
 *  - Handles are opaque and owned by the caller; release them with the
 *    matching *_destroy function. Destroying NULL is a no-op.
 *  - Strings returned through char** are heap allocated and must be released
 *    with mapc_string_free().
 */

#ifndef MAPC_MAPC_H
#define MAPC_MAPC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(MAPC_BUILDING_LIBRARY)
#    define MAPC_API __declspec(dllexport)
#  else
#    define MAPC_API __declspec(dllimport)
#  endif
#else
#  define MAPC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mapc_status {
  MAPC_OK = 0,
  MAPC_ERR_INVALID_ARGUMENT = 1, /* NULL handle/pointer or bad flag value */
  MAPC_ERR_CONFIG = 2,           /* invalid or inconsistent configuration */
  MAPC_ERR_DOMAIN = 3,           /* argument outside an operation's domain */
  MAPC_ERR_IO = 4,               /* file could not be read or written */
  MAPC_ERR_RUNTIME = 5           /* anything else, e.g. a failed campaign run */
} mapc_status;

typedef struct mapc_config mapc_config;
typedef struct mapc_report mapc_report;

MAPC_API const char* mapc_version(void);
MAPC_API const char* mapc_last_error(void);
MAPC_API const char* mapc_status_string(mapc_status status);
MAPC_API void mapc_string_free(char* str);

/* ---- configuration ---------------------------------------------------- */

/* Default enterprise scenario. */
MAPC_API mapc_status mapc_config_create(mapc_config** out);
/* JSON configuration file (schema in docs/config.md). */
MAPC_API mapc_status mapc_config_load_file(const char* path, mapc_config** out);
MAPC_API mapc_status mapc_config_load_string(const char* json, mapc_config** out);
MAPC_API void mapc_config_destroy(mapc_config* config);
/* Full resolved configuration as JSON. */
MAPC_API mapc_status mapc_config_to_json(const mapc_config* config, char** out);

/* The setters below change the base simulation and collapse the matching
 * campaign sweep axis to that single value. */
MAPC_API mapc_status mapc_config_set_scheduler(mapc_config* config, const char* name);
MAPC_API mapc_status mapc_config_set_gamma_db(mapc_config* config, double gamma_db);
MAPC_API mapc_status mapc_config_set_k(mapc_config* config, int k);
MAPC_API mapc_status mapc_config_set_load_mbps(mapc_config* config, double load_mbps);

MAPC_API mapc_status mapc_config_set_seed(mapc_config* config, uint64_t seed);
MAPC_API mapc_status mapc_config_get_seed(const mapc_config* config, uint64_t* out);
MAPC_API mapc_status mapc_config_set_num_txops(mapc_config* config, uint64_t num_txops);
MAPC_API mapc_status mapc_config_set_deployments(mapc_config* config, uint64_t deployments);
MAPC_API mapc_status mapc_config_set_workers(mapc_config* config, int workers);
MAPC_API mapc_status mapc_config_set_traces(mapc_config* config, int enabled);

/* ---- single simulation ------------------------------------------------ */

/* Runs the base simulation with `seed`. keep_trace != 0 retains the per-TXOP
 * trace for mapc_report_trace_csv(). */
MAPC_API mapc_status mapc_simulate(const mapc_config* config, uint64_t seed, int keep_trace,
                                   mapc_report** out);
MAPC_API void mapc_report_destroy(mapc_report* report);

MAPC_API double mapc_report_throughput_bps(const mapc_report* report);
/* NaN when no packet was delivered. */
MAPC_API double mapc_report_mean_delay_s(const mapc_report* report);
/* Nearest-rank delay percentile, q in [0, 1]. */
MAPC_API mapc_status mapc_report_delay_percentile_s(const mapc_report* report, double q,
                                                    double* out);
MAPC_API double mapc_report_mean_occupancy(const mapc_report* report);
MAPC_API mapc_status mapc_report_counts(const mapc_report* report, uint64_t* arrived,
                                        uint64_t* delivered, uint64_t* remaining);
MAPC_API size_t mapc_report_num_txops(const mapc_report* report);
/* Occupancy (duration / TXOP maximum) of TXOP `index`. */
MAPC_API mapc_status mapc_report_occupancy(const mapc_report* report, size_t index,
                                           double* out);
/* runs.csv header plus one row for this run. */
MAPC_API mapc_status mapc_report_csv(const mapc_report* report, char** out);
/* Per-slot trace; requires keep_trace. */
MAPC_API mapc_status mapc_report_trace_csv(const mapc_report* report, char** out);

/* ---- network inspection ----------------------------------------------- */

MAPC_API mapc_status mapc_groups_json(const mapc_config* config, uint64_t seed, char** out);
MAPC_API mapc_status mapc_deployment_json(const mapc_config* config, uint64_t seed, char** out);
/* Rows are APs, columns stations, values dBm. */
MAPC_API mapc_status mapc_rssi_csv(const mapc_config* config, uint64_t seed, char** out);

/* ---- campaigns -------------------------------------------------------- */

/* Runs the configured sweep and writes runs.csv, the aggregate tables and
 * campaign.json into out_dir (created if missing). `num_runs` may be NULL. */
MAPC_API mapc_status mapc_campaign_run(const mapc_config* config, const char* out_dir,
                                       size_t* num_runs);

/* ---- primitives ------------------------------------------------------- */

MAPC_API mapc_status mapc_path_loss_db(double distance_m, double carrier_ghz, int walls,
                                       double breakpoint_m, double* out);
MAPC_API mapc_status mapc_percentile(const double* samples, size_t n, double q, double* out);

#ifdef __cplusplus
}
#endif

#endif /* MAPC_MAPC_H */
