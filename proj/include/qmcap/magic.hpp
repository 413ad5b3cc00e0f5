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

#include <vector>

#include "qmcap/states.hpp"

namespace qmcap {

/// S(M(rho)) - S(rho), with M the mean state.
double mrm(const DensityMatrix& rho);

/// min D(rho || sigma) over the minimal stabilizer-projection family.
/// Members whose support misses rho contribute +infinity.
double mrm_enumerated(const DensityMatrix& rho, bool heavy = false);

struct MrmInfOptions {
  int max_cuts = 500;
  double tolerance = 1e-8;
  /// When false, hitting max_cuts returns the best lower bound with
  /// converged = false instead of throwing.
  bool throw_on_budget = true;
};

struct MrmInfResult {
  /// log2 of the optimal total weight.
  double value = 0;
  double total_weight = 1;
  /// Weight on each pure stabilizer state, in family order.
  std::vector<double> weights;
  int cuts = 0;
  int rounds = 0;
  int pivots = 0;
  /// Smallest eigenvalue of sum_i y_i P_i - rho at the returned weights.
  double min_eigenvalue = 0;
  /// |primal - dual| objective gap of the last linear program.
  double lp_gap = 0;
  bool converged = false;
};

/// log2 min { sum_i y_i : sum_i y_i P_i >= rho, y >= 0 } over pure stabilizer
/// projectors P_i, by cutting planes. Every LP value is a lower bound on the
/// optimum; the loop stops once the weights are feasible within `tolerance`.
/// Requires n = 1.
MrmInfResult mrm_inf(const DensityMatrix& rho, const MrmInfOptions& options = {});

/// sum_x max(0, -W(x) / d^n).
double wigner_negativity(const DensityMatrix& rho);

}  // namespace qmcap
