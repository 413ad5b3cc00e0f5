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

#include "qmcap.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "qmcap/capacity.hpp"
#include "qmcap/commands.hpp"
#include "qmcap/error.hpp"
#include "qmcap/magic.hpp"
#include "qmcap/state_io.hpp"
#include "qmcap/states.hpp"

struct qmcap_state {
  qmcap::DensityMatrix rho;
};

struct qmcap_channel {
  qmcap::BeamSplitterChannel chan;
};

namespace {

thread_local std::string last_error;

qmcap_status status_of(qmcap::ErrorCode code) {
  switch (code) {
    case qmcap::ErrorCode::kInvalidArgument:
      return QMCAP_INVALID_ARGUMENT;
    case qmcap::ErrorCode::kUnsupported:
      return QMCAP_UNSUPPORTED;
    case qmcap::ErrorCode::kNumerical:
      return QMCAP_NUMERICAL;
    case qmcap::ErrorCode::kIo:
      return QMCAP_IO;
    case qmcap::ErrorCode::kBudgetExceeded:
      return QMCAP_BUDGET_EXCEEDED;
    case qmcap::ErrorCode::kInternal:
      return QMCAP_INTERNAL;
  }
  return QMCAP_INTERNAL;
}

template <typename Body>
qmcap_status guarded(Body&& body) {
  try {
    qmcap_status status = body();
    if (status == QMCAP_OK) last_error.clear();
    return status;
  } catch (const qmcap::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const nlohmann::json::exception& e) {
    last_error = e.what();
    return QMCAP_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return QMCAP_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return QMCAP_INTERNAL;
  }
}

qmcap_status null_argument(const char* what) {
  last_error = std::string(what) + " must not be NULL";
  return QMCAP_INVALID_ARGUMENT;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* qmcap_version(void) { return qmcap::kVersion; }

const char* qmcap_last_error(void) { return last_error.c_str(); }

qmcap_status qmcap_state_preset(const char* name, int d, int n, int s, int t, qmcap_state** out) {
  if (name == nullptr) return null_argument("name");
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    qmcap::QuditParams params = qmcap::QuditParams::make(d, n);
    std::optional<qmcap::BSParams> bs;
    if (s != 0 || t != 0) bs = qmcap::BSParams::make(params, s, t);
    *out = new qmcap_state{qmcap::preset_state(name, params, bs)};
    return QMCAP_OK;
  });
}

qmcap_status qmcap_state_from_json(const char* json, qmcap_state** out) {
  if (json == nullptr) return null_argument("json");
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    *out = new qmcap_state{qmcap::state_from_json(nlohmann::json::parse(json))};
    return QMCAP_OK;
  });
}

qmcap_status qmcap_state_load(const char* path, qmcap_state** out) {
  if (path == nullptr) return null_argument("path");
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    *out = new qmcap_state{qmcap::load_state(path)};
    return QMCAP_OK;
  });
}

qmcap_status qmcap_state_save(const qmcap_state* state, const char* path) {
  if (state == nullptr) return null_argument("state");
  if (path == nullptr) return null_argument("path");
  return guarded([&] {
    qmcap::save_state(path, state->rho);
    return QMCAP_OK;
  });
}

qmcap_status qmcap_state_to_json(const qmcap_state* state, char** out) {
  if (state == nullptr) return null_argument("state");
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    *out = copy_string(qmcap::state_to_json(state->rho).dump());
    return QMCAP_OK;
  });
}

qmcap_status qmcap_state_dim(const qmcap_state* state, int* out) {
  if (state == nullptr) return null_argument("state");
  if (out == nullptr) return null_argument("out");
  *out = static_cast<int>(state->rho.dim());
  last_error.clear();
  return QMCAP_OK;
}

void qmcap_state_free(qmcap_state* state) { delete state; }

qmcap_status qmcap_channel_create(int s, int t, const qmcap_state* env, qmcap_channel** out) {
  if (env == nullptr) return null_argument("env");
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    qmcap::BSParams bs = qmcap::BSParams::make(env->rho.params(), s, t);
    *out = new qmcap_channel{qmcap::BeamSplitterChannel(bs, env->rho)};
    return QMCAP_OK;
  });
}

void qmcap_channel_free(qmcap_channel* channel) { delete channel; }

qmcap_status qmcap_coherent_information(const qmcap_channel* channel, const qmcap_state* input, double* out) {
  if (channel == nullptr) return null_argument("channel");
  if (input == nullptr) return null_argument("input");
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    *out = qmcap::coherent_information(channel->chan, input->rho);
    return QMCAP_OK;
  });
}

qmcap_status qmcap_mrm(const qmcap_state* state, double* out) {
  if (state == nullptr) return null_argument("state");
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    *out = qmcap::mrm(state->rho);
    return QMCAP_OK;
  });
}

qmcap_status qmcap_mrm_inf(const qmcap_state* state, int max_cuts, double* value, int* converged) {
  if (state == nullptr) return null_argument("state");
  if (value == nullptr) return null_argument("value");
  return guarded([&] {
    qmcap::MrmInfOptions options;
    options.max_cuts = max_cuts;
    options.throw_on_budget = false;
    qmcap::MrmInfResult result = qmcap::mrm_inf(state->rho, options);
    *value = result.value;
    if (converged != nullptr) *converged = result.converged ? 1 : 0;
    return QMCAP_OK;
  });
}

qmcap_status qmcap_wigner_negativity(const qmcap_state* state, double* out) {
  if (state == nullptr) return null_argument("state");
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    *out = qmcap::wigner_negativity(state->rho);
    return QMCAP_OK;
  });
}

qmcap_status qmcap_run_all(const char* command, const char* config_json, char** json, char** csv, char** text) {
  if (command == nullptr) return null_argument("command");
  return guarded([&] {
    nlohmann::json config =
        config_json == nullptr || *config_json == '\0' ? nlohmann::json::object() : nlohmann::json::parse(config_json);
    qmcap::CommandResult result = qmcap::run_command(command, config);
    std::string rendered[3] = {result.report.dump(2) + "\n", result.csv, result.text};
    char** outputs[3] = {json, csv, text};
    char* copies[3] = {nullptr, nullptr, nullptr};
    try {
      for (int i = 0; i < 3; ++i) {
        if (outputs[i] != nullptr) copies[i] = copy_string(rendered[i]);
      }
    } catch (...) {
      for (char* c : copies) std::free(c);
      throw;
    }
    for (int i = 0; i < 3; ++i) {
      if (outputs[i] != nullptr) *outputs[i] = copies[i];
    }
    if (!result.pass) {
      last_error = "command " + std::string(command) + " reported a failed check";
      return QMCAP_ASSERTION_FAILED;
    }
    return QMCAP_OK;
  });
}

qmcap_status qmcap_run(const char* command, const char* config_json, const char* format, char** out) {
  if (out == nullptr) return null_argument("out");
  std::string fmt = format == nullptr ? "json" : format;
  if (fmt == "json") return qmcap_run_all(command, config_json, out, nullptr, nullptr);
  if (fmt == "csv") return qmcap_run_all(command, config_json, nullptr, out, nullptr);
  if (fmt == "text") return qmcap_run_all(command, config_json, nullptr, nullptr, out);
  last_error = "format must be json, csv or text";
  return QMCAP_INVALID_ARGUMENT;
}

void qmcap_string_free(char* str) { std::free(str); }

}  // extern "C"
