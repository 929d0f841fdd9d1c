// Copyright 2026 The adcop Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the adcop library. All handles are opaque; every call
 * returning adcop_status leaves a message for adcop_last_error() on
 * failure. Strings returned through char** are owned by the caller and
 * released with adcop_string_free. */
#ifndef ADCOP_ADCOP_H_
#define ADCOP_ADCOP_H_

#include <stddef.h>
#include <stdint.h>

#if defined(ADCOP_BUILDING_LIBRARY)
#define ADCOP_API __attribute__((visibility("default")))
#else
#define ADCOP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum adcop_status {
  ADCOP_OK = 0,
  ADCOP_ERR_INVALID_ARGUMENT = 1,
  ADCOP_ERR_DOMAIN = 2,
  ADCOP_ERR_NOT_FOUND = 3,
  ADCOP_ERR_PRECONDITION = 4,
  ADCOP_ERR_PARSE = 5,
  ADCOP_ERR_IO = 6,
  ADCOP_ERR_CAP_EXCEEDED = 7,
  ADCOP_ERR_PROTOCOL = 8,
  ADCOP_ERR_ROUTING = 9,
  ADCOP_ERR_UNSOUND_PENALTY = 10,
  ADCOP_ERR_CONFIG = 11,
  ADCOP_ERR_UNKNOWN_ALGORITHM = 12,
  ADCOP_ERR_INTERNAL = 99
} adcop_status;

typedef struct adcop_instance adcop_instance;
typedef struct adcop_report adcop_report;
typedef struct adcop_config adcop_config;
typedef struct adcop_experiment adcop_experiment;

/* Message of the last failed call on this thread; never NULL. */
ADCOP_API const char* adcop_last_error(void);
ADCOP_API const char* adcop_status_name(adcop_status status);
ADCOP_API void adcop_string_free(char* s);

/* ---- instances ---- */

typedef struct adcop_instance_stats {
  int num_agents;
  int num_variables;
  int max_domain_size;
  int num_constraints;
  int edges;
  double density; /* edges over agent pairs */
  int connected;
  int symmetric;
} adcop_instance_stats;

ADCOP_API adcop_status adcop_instance_parse(const char* text, adcop_instance** out);
ADCOP_API adcop_status adcop_instance_read(const char* path, adcop_instance** out);
ADCOP_API adcop_status adcop_instance_format(const adcop_instance* instance, char** out);
ADCOP_API adcop_status adcop_instance_write(const adcop_instance* instance, const char* path);
ADCOP_API void adcop_instance_free(adcop_instance* instance);
ADCOP_API adcop_status adcop_instance_stats_get(const adcop_instance* instance,
                                               adcop_instance_stats* out);

/* Generates from the preset configured in `config` (see adcop_config_set). */
ADCOP_API adcop_status adcop_instance_generate(const adcop_config* config, uint64_t seed,
                                               adcop_instance** out);

/* penalty <= 0 selects the default penalty. */
ADCOP_API adcop_status adcop_instance_to_peav(const adcop_instance* instance, int64_t penalty,
                                              adcop_instance** out);
ADCOP_API adcop_status adcop_instance_aggregate(const adcop_instance* instance,
                                                adcop_instance** out);

typedef struct adcop_peav_size {
  int variables;
  int constraints;
  double density;
} adcop_peav_size;

ADCOP_API adcop_status adcop_instance_peav_size(const adcop_instance* instance,
                                                adcop_peav_size* out);

/* ---- configuration ---- */

/* A fresh config holds the setup1-desk preset, one seed and no algorithms. */
ADCOP_API adcop_status adcop_config_new(adcop_config** out);
ADCOP_API adcop_status adcop_config_load(const char* path, adcop_config** out);
ADCOP_API void adcop_config_free(adcop_config* config);

/* Keys: preset, algorithms (comma separated), seeds, seed, out, policy,
 * cycles, p, coord_c, offer_probability, threshold, oracle (0/1),
 * trace (path) and the generator parameters n, k, p1, p2, degree, edge_p,
 * z, lo, hi, m0, m. Solver keys set here override the config file. */
ADCOP_API adcop_status adcop_config_set(adcop_config* config, const char* key,
                                        const char* value);
ADCOP_API adcop_status adcop_config_get_out(const adcop_config* config, char** out);

/* ---- single runs ---- */

/* Runs one algorithm with the solver parameters of `config` (NULL selects
 * defaults). */
ADCOP_API adcop_status adcop_solve(const adcop_instance* instance, const char* algorithm,
                                   const adcop_config* config, uint64_t seed,
                                   adcop_report** out);
ADCOP_API void adcop_report_free(adcop_report* report);

/* Returns 0 when the run found no full assignment. */
ADCOP_API int adcop_report_cost(const adcop_report* report, int64_t* cost);
/* Returns 0 when no oracle optimum is known. */
ADCOP_API int adcop_report_optimal_cost(const adcop_report* report, int64_t* cost);
ADCOP_API int64_t adcop_report_nclo(const adcop_report* report);
ADCOP_API int64_t adcop_report_messages(const adcop_report* report);
ADCOP_API double adcop_report_privacy_loss(const adcop_report* report);
ADCOP_API double adcop_report_privacy_gain(const adcop_report* report);
/* Writes up to `capacity` values (0-based) and returns the full length. */
ADCOP_API size_t adcop_report_assignment(const adcop_report* report, int* values,
                                         size_t capacity);
/* CSV row; seed < 0 leaves the seed column empty. */
ADCOP_API adcop_status adcop_report_csv_row(const adcop_report* report, const char* preset,
                                            int64_t seed, char** out);
ADCOP_API adcop_status adcop_report_summary(const adcop_report* report, char** out);
/* Per-cycle global cost as "cycle,cost" CSV with a header line. Empty body
 * for complete solvers. */
ADCOP_API adcop_status adcop_report_cost_trace(const adcop_report* report, char** out);

ADCOP_API const char* adcop_csv_header(void);
/* Comma-separated algorithm and preset names. */
ADCOP_API const char* adcop_algorithm_names(void);
ADCOP_API const char* adcop_preset_names(void);

/* ---- experiments ---- */

ADCOP_API adcop_status adcop_experiment_run(const adcop_config* config, adcop_experiment** out);
ADCOP_API void adcop_experiment_free(adcop_experiment* experiment);
ADCOP_API const char* adcop_experiment_csv(const adcop_experiment* experiment);
ADCOP_API const char* adcop_experiment_summary(const adcop_experiment* experiment);
ADCOP_API int adcop_experiment_failures(const adcop_experiment* experiment);

#ifdef __cplusplus
}
#endif

#endif /* ADCOP_ADCOP_H_ */
