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

#include <nlohmann/json.hpp>

#include "qmcap/density_matrix.hpp"

namespace qmcap {

/// State files:
///   {"d": 7, "n": 1, "form": "dense", "re": [[...]], "im": [[...]]}
///   {"d": 7, "n": 1, "form": "ket", "amplitudes": [x, [re, im], ...]}
///   {"d": 7, "n": 1, "form": "preset", "preset": "uniform-01", "s": 2, "t": 2}
nlohmann::json state_to_json(const DensityMatrix& rho);
DensityMatrix state_from_json(const nlohmann::json& j);
DensityMatrix load_state(const std::string& path);
void save_state(const std::string& path, const DensityMatrix& rho);

}  // namespace qmcap
