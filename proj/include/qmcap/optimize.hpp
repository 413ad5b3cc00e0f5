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

#include <functional>
#include <vector>

#include "qmcap/numerics.hpp"

namespace qmcap {

struct AscentOptions {
  int iterations = 2000;
  double initial_step = 0.25;
  double min_step = 1e-8;
  double grow = 1.2;
  double shrink = 0.95;
  /// Gradient steps after the pattern search. Central differences are used
  /// when no gradient is supplied.
  int polish_steps = 25;
  double fd_step = 1e-6;
  /// Best-so-far is recorded every this many iterations.
  int history_stride = 50;
};

struct AscentTrace {
  double start_value = 0;
  double best_value = 0;
  int iterations = 0;
  int evaluations = 0;
  /// Iteration cap reached while the step was still above min_step.
  bool budget_exhausted = false;
  /// Nondecreasing best-so-far values.
  std::vector<double> history;
};

using Objective = std::function<double(const RealVector&)>;
using Gradient = std::function<RealVector(const RealVector&)>;

/// Random-direction pattern search followed by gradient ascent with
/// backtracking. Deterministic for a given engine state. Each gradient call
/// counts as one evaluation.
RealVector maximize(const Objective& f, RealVector x, Rng& rng, const AscentOptions& options, AscentTrace& trace,
                    const Gradient& gradient = {});

}  // namespace qmcap
