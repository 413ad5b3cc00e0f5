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


#include <math.h>
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "qmcap.h"

static int failures = 0;

#define CHECK(cond)                                                  \
  do {                                                               \
    if (!(cond)) {                                                   \
      fprintf(stderr, "%s:%d: check failed: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                    \
    }                                                                \
  } while (0)

#define CHECK_NEAR(a, b, tol) CHECK(fabs((a) - (b)) <= (tol))

static void test_version(void) {
  CHECK(strcmp(qmcap_version(), "0.1.0") == 0);
}

static void test_coherent_information_one_half(void) {
  qmcap_state* env = NULL;
  qmcap_state* input = NULL;
  qmcap_channel* channel = NULL;
  CHECK(qmcap_state_preset("uniform-01", 13, 1, 0, 0, &env) == QMCAP_OK);
  const char* json =
      "{\"d\": 13, \"n\": 1, \"form\": \"preset\", \"preset\": \"ket-zero\"}";
  CHECK(qmcap_state_from_json(json, &input) == QMCAP_OK);
  qmcap_state_free(input);
  input = NULL;

  char dense[4096];
  size_t used = (size_t)snprintf(dense, sizeof dense, "{\"d\": 13, \"n\": 1, \"form\": \"dense\", \"re\": [");
  for (int i = 0; i < 13; ++i) {
    used += (size_t)snprintf(dense + used, sizeof dense - used, "%s[", i ? "," : "");
    for (int j = 0; j < 13; ++j) {
      double v = (i == j && (i == 0 || i == 9)) ? 0.5 : 0.0;
      used += (size_t)snprintf(dense + used, sizeof dense - used, "%s%g", j ? "," : "", v);
    }
    used += (size_t)snprintf(dense + used, sizeof dense - used, "]");
  }
  snprintf(dense + used, sizeof dense - used, "]}");
  CHECK(qmcap_state_from_json(dense, &input) == QMCAP_OK);

  int dim = 0;
  CHECK(qmcap_state_dim(input, &dim) == QMCAP_OK);
  CHECK(dim == 13);
  CHECK(qmcap_channel_create(2, 6, env, &channel) == QMCAP_OK);
  double ic = 0;
  CHECK(qmcap_coherent_information(channel, input, &ic) == QMCAP_OK);
  CHECK_NEAR(ic, 0.5, 1e-9);
  qmcap_channel_free(channel);
  qmcap_state_free(input);
  qmcap_state_free(env);
}

static void test_magic_measures(void) {
  qmcap_state* state = NULL;
  CHECK(qmcap_state_preset("uniform-01", 7, 1, 0, 0, &state) == QMCAP_OK);
  double value = 0;
  CHECK(qmcap_mrm(state, &value) == QMCAP_OK);
  CHECK_NEAR(value, log2(7.0), 1e-9);
  int converged = 0;
  CHECK(qmcap_mrm_inf(state, 500, &value, &converged) == QMCAP_OK);
  CHECK(converged == 1);
  CHECK(value > 0);
  CHECK(qmcap_mrm_inf(state, 500, &value, NULL) == QMCAP_OK);
  CHECK(qmcap_wigner_negativity(state, &value) == QMCAP_OK);
  CHECK(value > 0);
  qmcap_state_free(state);

  CHECK(qmcap_state_preset("ket-zero", 7, 1, 0, 0, &state) == QMCAP_OK);
  CHECK(qmcap_mrm(state, &value) == QMCAP_OK);
  CHECK_NEAR(value, 0.0, 1e-9);
  qmcap_state_free(state);
}

static void test_errors(void) {
  qmcap_state* state = NULL;
  CHECK(qmcap_state_preset("no-such-state", 7, 1, 0, 0, &state) == QMCAP_INVALID_ARGUMENT);
  CHECK(state == NULL);
  CHECK(strlen(qmcap_last_error()) > 0);
  CHECK(qmcap_state_preset("ket-zero", 9, 1, 0, 0, &state) == QMCAP_INVALID_ARGUMENT);
  CHECK(qmcap_state_load("/nonexistent/qmcap/state.json", &state) == QMCAP_IO);
  CHECK(qmcap_state_from_json("{not json", &state) == QMCAP_INVALID_ARGUMENT);

  CHECK(qmcap_state_preset("ket-zero", 7, 1, 0, 0, &state) == QMCAP_OK);
  CHECK(strcmp(qmcap_last_error(), "") == 0);
  qmcap_channel* channel = NULL;
  CHECK(qmcap_channel_create(2, 3, state, &channel) == QMCAP_INVALID_ARGUMENT);
  CHECK(channel == NULL);
  CHECK(qmcap_mrm(NULL, NULL) == QMCAP_INVALID_ARGUMENT);
  qmcap_state_free(state);
  qmcap_state_free(NULL);
  qmcap_channel_free(NULL);
  qmcap_string_free(NULL);
}

static void test_save_and_load(void) {
  qmcap_state* state = NULL;
  qmcap_state* loaded = NULL;
  char path[] = "qmcap_capi_state.json";
  CHECK(qmcap_state_preset("symmetric-pm1", 7, 1, 0, 0, &state) == QMCAP_OK);
  CHECK(qmcap_state_save(state, path) == QMCAP_OK);
  CHECK(qmcap_state_load(path, &loaded) == QMCAP_OK);
  char* a = NULL;
  char* b = NULL;
  CHECK(qmcap_state_to_json(state, &a) == QMCAP_OK);
  CHECK(qmcap_state_to_json(loaded, &b) == QMCAP_OK);
  CHECK(a && b && strcmp(a, b) == 0);
  qmcap_string_free(a);
  qmcap_string_free(b);
  qmcap_state_free(state);
  qmcap_state_free(loaded);
  remove(path);
}

static void test_run(void) {
  char* out = NULL;
  CHECK(qmcap_run("params", "{\"d\": 7}", "json", &out) == QMCAP_OK);
  CHECK(out && strstr(out, "\"nontrivial_count\": 4") != NULL);
  qmcap_string_free(out);
  out = NULL;
  CHECK(qmcap_run("params", "{\"d\": 7}", "csv", &out) == QMCAP_OK);
  CHECK(out && strncmp(out, "s,t,nontrivial\n", 15) == 0);
  qmcap_string_free(out);
  out = NULL;
  CHECK(qmcap_run("params", "{\"d\": 7}", "yaml", &out) == QMCAP_INVALID_ARGUMENT);
  CHECK(qmcap_run("capacity", "{\"d\": 7, \"s\": 2, \"t\": 2, \"env\": \"ket-zero\"}", "json", &out) ==
        QMCAP_INVALID_ARGUMENT);
  CHECK(strstr(qmcap_last_error(), "seed") != NULL);

  char* json = NULL;
  char* text = NULL;
  CHECK(qmcap_run_all("magic", "{\"d\": 7, \"env\": \"uniform-01\"}", &json, NULL, &text) == QMCAP_OK);
  CHECK(json && strstr(json, "\"mrm\"") != NULL);
  CHECK(text && strstr(text, "mrm = ") != NULL);
  qmcap_string_free(json);
  qmcap_string_free(text);
}

int main(void) {
  test_version();
  test_coherent_information_one_half();
  test_magic_measures();
  test_errors();
  test_save_and_load();
  test_run();
  if (failures) {
    fprintf(stderr, "%d check(s) failed\n", failures);
    return 1;
  }
  printf("all C API checks passed\n");
  return 0;
}
