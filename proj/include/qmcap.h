// Copyright 2026 The qmcap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QMCAP_H_
#define QMCAP_H_

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define QMCAP_API __declspec(dllexport)
#else
#define QMCAP_API __attribute__((visibility("default")))
#endif

typedef enum {
  QMCAP_OK = 0,
  QMCAP_INVALID_ARGUMENT = 1,
  QMCAP_UNSUPPORTED = 2,
  QMCAP_NUMERICAL = 3,
  QMCAP_IO = 4,
  QMCAP_BUDGET_EXCEEDED = 5,
  QMCAP_INTERNAL = 6,
  /* qmcap_run finished but a checked claim failed; the report is still set. */
  QMCAP_ASSERTION_FAILED = 7
} qmcap_status;

typedef struct qmcap_state qmcap_state;
typedef struct qmcap_channel qmcap_channel;

QMCAP_API const char* qmcap_version(void);

/* Message of the last failed call on this thread, or "" after a success. */
QMCAP_API const char* qmcap_last_error(void);

/* Presets as in the state files; s and t are only read by appe-magic and may
   both be 0 otherwise. */
QMCAP_API qmcap_status qmcap_state_preset(const char* name, int d, int n, int s, int t, qmcap_state** out);
QMCAP_API qmcap_status qmcap_state_from_json(const char* json, qmcap_state** out);
QMCAP_API qmcap_status qmcap_state_load(const char* path, qmcap_state** out);
QMCAP_API qmcap_status qmcap_state_save(const qmcap_state* state, const char* path);
/* The string is owned by the caller and released with qmcap_string_free. */
QMCAP_API qmcap_status qmcap_state_to_json(const qmcap_state* state, char** out);
QMCAP_API qmcap_status qmcap_state_dim(const qmcap_state* state, int* out);
QMCAP_API void qmcap_state_free(qmcap_state* state);

/* Beam-splitter channel rho -> Tr_2[U (rho (x) env) U^dagger]. The
   environment is copied. */
QMCAP_API qmcap_status qmcap_channel_create(int s, int t, const qmcap_state* env, qmcap_channel** out);
QMCAP_API void qmcap_channel_free(qmcap_channel* channel);

QMCAP_API qmcap_status qmcap_coherent_information(const qmcap_channel* channel, const qmcap_state* input,
                                                  double* out);
QMCAP_API qmcap_status qmcap_mrm(const qmcap_state* state, double* out);
/* converged may be NULL. A cut budget that runs out yields a lower bound with
   *converged = 0. */
QMCAP_API qmcap_status qmcap_mrm_inf(const qmcap_state* state, int max_cuts, double* value, int* converged);
QMCAP_API qmcap_status qmcap_wigner_negativity(const qmcap_state* state, double* out);

/* Runs a command with a flat JSON config and writes the report in format
   "json", "csv" or "text" to *out. */
QMCAP_API qmcap_status qmcap_run(const char* command, const char* config_json, const char* format, char** out);
/* Same as qmcap_run but returns every rendering at once; any of the output
   pointers may be NULL. */
QMCAP_API qmcap_status qmcap_run_all(const char* command, const char* config_json, char** json, char** csv,
                                     char** text);
QMCAP_API void qmcap_string_free(char* str);

#ifdef __cplusplus
}
#endif

#endif  /* QMCAP_H_ */
