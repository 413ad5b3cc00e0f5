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

#include "qmcap/density_matrix.hpp"

#include <string>

#include "qmcap/error.hpp"

namespace qmcap {

namespace {

ComplexMatrix hermitian_part(const ComplexMatrix& m) { return (m + m.adjoint()) * 0.5; }

void require_shape(const QuditParams& params, const ComplexMatrix& m) {
  if (m.rows() != params.dim() || m.cols() != params.dim()) {
    throw_error(ErrorCode::kInvalidArgument, "density matrix must be " + std::to_string(params.dim()) + "x" +
                                                 std::to_string(params.dim()) + ", got " +
                                                 std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

}  // namespace

DensityMatrix::DensityMatrix(QuditParams params, ComplexMatrix matrix) : params_(params) {
  require_shape(params, matrix);
  double herm = hermiticity_error(matrix);
  if (herm > 1e-10) {
    throw_error(ErrorCode::kInvalidArgument, "density matrix is not Hermitian (deviation " + std::to_string(herm) + ")");
  }
  matrix_ = hermitian_part(matrix);
  double trace = matrix_.trace().real();
  if (std::abs(trace - 1) > 1e-10) {
    throw_error(ErrorCode::kInvalidArgument, "density matrix trace is " + std::to_string(trace) + ", expected 1");
  }
  std::vector<double> values = eigenvalues_hermitian(matrix_);
  if (values.back() < -1e-10) {
    throw_error(ErrorCode::kInvalidArgument,
                "density matrix has negative eigenvalue " + std::to_string(values.back()));
  }
}

DensityMatrix DensityMatrix::trusted(QuditParams params, ComplexMatrix matrix) {
  require_shape(params, matrix);
  DensityMatrix out;
  out.params_ = params;
  out.matrix_ = hermitian_part(matrix);
  return out;
}

DensityMatrix DensityMatrix::pure(QuditParams params, const ComplexVector& ket) {
  if (ket.size() != params.dim()) {
    throw_error(ErrorCode::kInvalidArgument, "ket has length " + std::to_string(ket.size()) + ", expected " +
                                                 std::to_string(params.dim()));
  }
  double norm = ket.norm();
  if (norm == 0) {
    throw_error(ErrorCode::kInvalidArgument, "ket is zero");
  }
  ComplexVector v = ket / norm;
  return trusted(params, v * v.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(QuditParams params) {
  Index n = params.dim();
  return trusted(params, ComplexMatrix::Identity(n, n) / static_cast<double>(n));
}

DensityMatrix tensor(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.params().d != sigma.params().d) {
    throw_error(ErrorCode::kInvalidArgument, "tensor: local dimensions differ");
  }
  QuditParams params = QuditParams::make(rho.params().d, rho.params().n + sigma.params().n);
  return DensityMatrix::trusted(params, kron(rho.matrix(), sigma.matrix()));
}

DensityMatrix tensor_power(const DensityMatrix& rho, int copies) {
  if (copies < 1) {
    throw_error(ErrorCode::kInvalidArgument, "tensor_power: copies must be positive");
  }
  DensityMatrix out = rho;
  for (int k = 1; k < copies; ++k) {
    out = tensor(out, rho);
  }
  return out;
}

double entropy(const DensityMatrix& rho) { return von_neumann_entropy(rho.matrix()); }

}  // namespace qmcap
