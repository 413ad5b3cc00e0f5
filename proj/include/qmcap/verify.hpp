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

#include <cstdint>
#include <string>
#include <vector>

namespace qmcap {

/// One checked claim: `measured relation threshold`.
struct CheckLine {
  std::string name;
  double measured = 0;
  double threshold = 0;
  /// "<=", ">=" or "==" (the latter with threshold as tolerance on |measured|).
  std::string relation = "<=";
  bool pass = false;
  std::string detail;
};

std::string format_line(const CheckLine& line);

struct SuiteReport {
  std::string suite;
  int samples = 0;
  /// Largest amount by which a measured value exceeded its threshold; <= 0
  /// when every check passed.
  double worst_violation = 0;
  std::vector<CheckLine> lines;

  bool pass() const;
  void add(CheckLine line);
};

struct VerifyConfig {
  int d = 7;
  int s = 2;
  int t = 2;
  std::uint64_t seed = 7;
  /// Random inputs per environment (theorem-2) and per random environment (theorem-4).
  int samples = 100;
  int restarts = 32;
  int iterations = 2000;
  /// Random environments for theorem-4 and the complement identity.
  int environments = 20;
  /// Stabilizer environments given to the optimizer in theorem-2.
  int optimizer_environments = 5;
  /// Environment preset for theorem-5.
  std::string symmetric_environment = "symmetric-pm1";
  int clt_steps = 400;
  /// Pairs for the duality lemma and magic states for the Hudson converse.
  int lemma_samples = 100;
  /// Search trials for the coding suite.
  int trials = 200;
};

/// theorem-2, theorem-3, theorem-4 or theorem-5.
SuiteReport verify_theorem(const std::string& theorem, const VerifyConfig& config);
SuiteReport verify_lemmas(const VerifyConfig& config);
SuiteReport verify_coding(const VerifyConfig& config);

/// all, theorem-2..5, lemmas or coding. Throws kInvalidArgument on other names.
std::vector<SuiteReport> verify_suite(const std::string& suite, const VerifyConfig& config);
const std::vector<std::string>& suite_names();

}  // namespace qmcap
