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

#include "qmcap/qudit.hpp"

namespace qmcap {

/// A positive unit-trace operator on n qudits of dimension d. Construction
/// validates the invariants and stores the exact Hermitian part.
class DensityMatrix {
 public:
  /// Throws kInvalidArgument unless the matrix is d^n square, Hermitian
  /// within 1e-10, has eigenvalues >= -1e-10 and trace 1 within 1e-10.
  DensityMatrix(QuditParams params, ComplexMatrix matrix);

  /// Skips the spectral checks. For outputs of maps already known to be
  /// positive and trace preserving.
  static DensityMatrix trusted(QuditParams params, ComplexMatrix matrix);

  static DensityMatrix pure(QuditParams params, const ComplexVector& ket);
  static DensityMatrix maximally_mixed(QuditParams params);

  const QuditParams& params() const { return params_; }
  const ComplexMatrix& matrix() const { return matrix_; }
  Index dim() const { return matrix_.rows(); }

 private:
  DensityMatrix() = default;
  QuditParams params_;
  ComplexMatrix matrix_;
};

/// rho (x) sigma as a state on n_rho + n_sigma qudits.
DensityMatrix tensor(const DensityMatrix& rho, const DensityMatrix& sigma);
DensityMatrix tensor_power(const DensityMatrix& rho, int copies);

double entropy(const DensityMatrix& rho);

}  // namespace qmcap
