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

#include <complex>
#include <cstdint>
#include <limits>
#include <random>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace qmcap {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Eigenvalues below this are treated as zero when deciding supports.
inline constexpr double kSupportThreshold = 1e-10;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Eigen-decomposition of a Hermitian matrix, eigenvalues sorted descending
/// and eigenvectors stored as matching columns.
struct Spectrum {
  std::vector<double> values;
  ComplexMatrix vectors;
};

/// max |M[i][j] - conj(M[j][i])|.
double hermiticity_error(const ComplexMatrix& m);

/// Throws kInvalidArgument for non-square input or Hermiticity error above 1e-10.
Spectrum eig_hermitian(const ComplexMatrix& m);

/// Eigenvalues only, descending. Same preconditions as eig_hermitian.
std::vector<double> eigenvalues_hermitian(const ComplexMatrix& m);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector kron(const ComplexVector& a, const ComplexVector& b);

/// Traces out every subsystem not listed in `keep`. Subsystem 0 is the most
/// significant factor of the row index, matching kron(A, B) ordering.
ComplexMatrix partial_trace(const ComplexMatrix& m, std::span<const Index> dims,
                            std::span<const std::size_t> keep);

/// Shannon entropy in bits with 0 log 0 = 0. Entries in (-1e-9, 0) count as 0.
double shannon_entropy(std::span<const double> probabilities);

/// -Tr(rho log2 rho). Throws kNumerical when an eigenvalue is below -1e-9.
double von_neumann_entropy(const ComplexMatrix& rho);

/// D(rho||sigma) in bits; +infinity when supp(rho) is not inside supp(sigma).
double relative_entropy(const ComplexMatrix& rho, const ComplexMatrix& sigma);

/// log2 of the least lambda with rho <= lambda sigma; +infinity on support mismatch.
double max_relative_entropy(const ComplexMatrix& rho, const ComplexMatrix& sigma);

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);

/// Hermitian square root of a positive semidefinite matrix.
ComplexMatrix psd_sqrt(const ComplexMatrix& m);

// Seeded randomness. All generators take an explicit engine owned by the caller.

using Rng = std::mt19937_64;

/// SplitMix64 mixing of (seed, stream); used to derive independent per-task seeds.
std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream);

ComplexMatrix random_ginibre(Index rows, Index cols, Rng& rng);
ComplexMatrix random_hermitian(Index n, Rng& rng);
/// Haar-distributed unitary (QR of a Ginibre matrix with phase correction).
ComplexMatrix random_unitary(Index n, Rng& rng);

}  // namespace qmcap
