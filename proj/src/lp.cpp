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

#include "qmcap/lp.hpp"

#include <algorithm>
#include <limits>

#include "qmcap/error.hpp"

namespace qmcap {

namespace {

constexpr double kReducedCostTolerance = 1e-12;
constexpr double kPivotTolerance = 1e-11;
constexpr int kRefactorInterval = 50;

}  // namespace

DenseSimplex::DenseSimplex(RealVector b) : b_(std::move(b)) {
  if ((b_.array() < 0).any()) {
    throw_error(ErrorCode::kInvalidArgument, "simplex right-hand side must be nonnegative");
  }
  basis_.resize(rows());
  for (std::size_t i = 0; i < rows(); ++i) basis_[i] = i;
  basis_inverse_ = RealMatrix::Identity(b_.size(), b_.size());
}

void DenseSimplex::add_column(RealVector a, double cost) {
  if (static_cast<std::size_t>(a.size()) != rows()) {
    throw_error(ErrorCode::kInvalidArgument, "simplex column has the wrong length");
  }
  // Slack ids are shifted by one to keep structural ids first.
  for (std::size_t& id : basis_) {
    if (id >= columns_.size()) ++id;
  }
  columns_.push_back(std::move(a));
  costs_.push_back(cost);
}

RealVector DenseSimplex::column(std::size_t j) const {
  if (j < columns_.size()) return columns_[j];
  RealVector e = RealVector::Zero(b_.size());
  e(static_cast<Index>(j - columns_.size())) = 1;
  return e;
}

double DenseSimplex::cost(std::size_t j) const { return j < columns_.size() ? costs_[j] : 0.0; }

void DenseSimplex::refactor() {
  Index m = b_.size();
  RealMatrix basis(m, m);
  for (Index i = 0; i < m; ++i) basis.col(i) = column(basis_[i]);
  basis_inverse_ = basis.partialPivLu().inverse();
  pivots_since_refactor_ = 0;
}

DenseSimplex::Result DenseSimplex::solve(int max_pivots) {
  Index m = b_.size();
  std::size_t total = columns_.size() + rows();
  Result result;
  for (;;) {
    RealVector cb(m);
    for (Index i = 0; i < m; ++i) cb(i) = cost(basis_[i]);
    RealVector y = basis_inverse_.transpose() * cb;
    RealVector x = basis_inverse_ * b_;

    std::vector<bool> in_basis(total, false);
    for (std::size_t id : basis_) in_basis[id] = true;
    std::size_t entering = total;
    for (std::size_t j = 0; j < total; ++j) {
      if (in_basis[j]) continue;
      double reduced = j < columns_.size() ? costs_[j] - columns_[j].dot(y) : -y(static_cast<Index>(j - columns_.size()));
      if (reduced > kReducedCostTolerance) {
        entering = j;
        break;
      }
    }
    if (entering == total) break;
    if (result.pivots >= max_pivots) {
      throw_error(ErrorCode::kBudgetExceeded, "simplex pivot budget exhausted");
    }

    RealVector u = basis_inverse_ * column(entering);
    Index leave = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (Index i = 0; i < m; ++i) {
      if (u(i) <= kPivotTolerance) continue;
      double ratio = std::max(x(i), 0.0) / u(i);
      if (leave < 0 || ratio < best_ratio - 1e-14) {
        best_ratio = ratio;
        leave = i;
      } else if (ratio <= best_ratio + 1e-14 && basis_[i] < basis_[leave]) {
        best_ratio = std::min(best_ratio, ratio);
        leave = i;
      }
    }
    if (leave < 0) {
      throw_error(ErrorCode::kNumerical, "linear program is unbounded");
    }

    // Product-form update of the basis inverse.
    double pivot = u(leave);
    RealVector pivot_row = basis_inverse_.row(leave) / pivot;
    for (Index i = 0; i < m; ++i) {
      if (i == leave) continue;
      if (u(i) != 0) basis_inverse_.row(i) -= u(i) * pivot_row.transpose();
    }
    basis_inverse_.row(leave) = pivot_row.transpose();
    basis_[leave] = entering;
    ++result.pivots;
    if (++pivots_since_refactor_ >= kRefactorInterval) refactor();
  }

  // Final refinement on the optimal basis.
  RealMatrix basis(m, m);
  RealVector cb(m);
  for (Index i = 0; i < m; ++i) {
    basis.col(i) = column(basis_[i]);
    cb(i) = cost(basis_[i]);
  }
  Eigen::PartialPivLU<RealMatrix> lu(basis);
  RealVector x = lu.solve(b_);
  RealVector y = lu.transpose().solve(cb);
  result.primal = RealVector::Zero(static_cast<Index>(columns_.size()));
  for (Index i = 0; i < m; ++i) {
    if (basis_[i] < columns_.size()) result.primal(static_cast<Index>(basis_[i])) = std::max(x(i), 0.0);
  }
  result.dual = y.cwiseMax(0.0);
  result.objective = 0;
  for (std::size_t j = 0; j < columns_.size(); ++j) result.objective += costs_[j] * result.primal(static_cast<Index>(j));
  result.dual_objective = b_.dot(result.dual);
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    result.dual_infeasibility = std::max(result.dual_infeasibility, costs_[j] - columns_[j].dot(result.dual));
  }
  return result;
}

}  // namespace qmcap
