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

#include "qmcap/numerics.hpp"

namespace qmcap {

/// Revised simplex for
///
///     maximize c^T z  subject to  A z <= b,  z >= 0,
///
/// with b >= 0, so the all-slack basis is feasible and no phase one is needed.
/// Columns can be appended between solves; the current basis stays feasible
/// and the next solve starts from it. Pivoting follows Bland's rule.
class DenseSimplex {
 public:
  explicit DenseSimplex(RealVector b);

  std::size_t rows() const { return static_cast<std::size_t>(b_.size()); }
  std::size_t columns() const { return columns_.size(); }
  void add_column(RealVector a, double cost);

  struct Result {
    /// c^T z.
    double objective = 0;
    /// b^T y for the dual multipliers y.
    double dual_objective = 0;
    /// Structural variables z.
    RealVector primal;
    /// Dual multipliers y >= 0, one per row, with A^T y >= c at optimality.
    RealVector dual;
    /// Largest violation of A^T y >= c among structural columns.
    double dual_infeasibility = 0;
    int pivots = 0;
  };

  /// Throws kNumerical if the program is unbounded, kBudgetExceeded after
  /// max_pivots pivots.
  Result solve(int max_pivots = 100000);

 private:
  RealVector column(std::size_t j) const;
  double cost(std::size_t j) const;
  void refactor();

  RealVector b_;
  std::vector<RealVector> columns_;
  std::vector<double> costs_;
  // Basis entries index structural columns first, then slack k as columns() + k.
  std::vector<std::size_t> basis_;
  RealMatrix basis_inverse_;
  int pivots_since_refactor_ = 0;
};

}  // namespace qmcap
