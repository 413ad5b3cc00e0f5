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

#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace qmcap {

inline constexpr const char* kVersion = "0.1.0";

struct CommandResult {
  /// {command, inputs_echo, results, seed, version, wall_time_ms, pass}.
  nlohmann::json report;
  /// The tabular part of the results as CSV with a header row.
  std::string csv;
  /// Human-readable summary, one line per result or per check.
  std::string text;
  /// False when a checked claim failed.
  bool pass = true;
};

/// Runs one of params, coherent, capacity, magic, convolve, clt, wigner,
/// fidelity or verify. The config is a flat JSON object: d, n, s, t, env,
/// input, seed and the command's budget knobs. Environments and inputs are
/// "preset:NAME" or "file:PATH". Throws qmcap::Error on invalid configs.
CommandResult run_command(const std::string& command, const nlohmann::json& config);

const std::vector<std::string>& command_names();

}  // namespace qmcap
