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

#include "qmcap/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qmcap/error.hpp"

#ifdef QMCAP_HAVE_LAPACKE
#include <lapacke.h>
#endif

namespace qmcap {

namespace {

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw_error(ErrorCode::kInvalidArgument,
                std::string(what) + ": expected a non-empty square matrix, got " +
                    std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

void require_hermitian(const ComplexMatrix& m, const char* what) {
  require_square(m, what);
  double err = hermiticity_error(m);
  if (err > 1e-10) {
    throw_error(ErrorCode::kInvalidArgument,
                std::string(what) + ": matrix is not Hermitian (deviation " + std::to_string(err) + ")");
  }
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw_error(ErrorCode::kInvalidArgument, std::string(what) + ": dimension mismatch");
  }
}

double xlog2x(double x) { return x > 0 ? x * std::log2(x) : 0.0; }

}  // namespace

double hermiticity_error(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    return kInfinity;
  }
  double err = 0;
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = i; j < m.cols(); ++j) {
      err = std::max(err, std::abs(m(i, j) - std::conj(m(j, i))));
    }
  }
  return err;
}

Spectrum eig_hermitian(const ComplexMatrix& m) {
  require_hermitian(m, "eig_hermitian");
  ComplexMatrix h = (m + m.adjoint()) * 0.5;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  if (solver.info() != Eigen::Success) {
    throw_error(ErrorCode::kNumerical, "eig_hermitian: eigensolver did not converge");
  }
  Index n = h.rows();
  Spectrum out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Index k = 0; k < n; ++k) {
    out.values[k] = solver.eigenvalues()(n - 1 - k);
    out.vectors.col(k) = solver.eigenvectors().col(n - 1 - k);
  }
  return out;
}

std::vector<double> eigenvalues_hermitian(const ComplexMatrix& m) {
  require_hermitian(m, "eigenvalues_hermitian");
  ComplexMatrix h = (m + m.adjoint()) * 0.5;
  std::vector<double> values(static_cast<std::size_t>(h.rows()));
#ifdef QMCAP_HAVE_LAPACKE
  if (h.rows() >= 32) {
    lapack_int n = static_cast<lapack_int>(h.rows());
    lapack_int info = LAPACKE_zheevd(LAPACK_COL_MAJOR, 'N', 'L', n, reinterpret_cast<lapack_complex_double*>(h.data()), n,
                                     values.data());
    if (info != 0) {
      throw_error(ErrorCode::kNumerical, "eigenvalues_hermitian: zheevd failed with info " + std::to_string(info));
    }
    std::reverse(values.begin(), values.end());
    return values;
  }
#endif
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw_error(ErrorCode::kNumerical, "eigenvalues_hermitian: eigensolver did not converge");
  }
  std::copy(solver.eigenvalues().data(), solver.eigenvalues().data() + h.rows(), values.begin());
  std::reverse(values.begin(), values.end());
  return values;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexVector kron(const ComplexVector& a, const ComplexVector& b) {
  ComplexVector out(a.size() * b.size());
  for (Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, std::span<const Index> dims,
                            std::span<const std::size_t> keep) {
  require_square(m, "partial_trace");
  Index total = 1;
  for (Index d : dims) {
    if (d <= 0) {
      throw_error(ErrorCode::kInvalidArgument, "partial_trace: subsystem dimensions must be positive");
    }
    total *= d;
  }
  if (total != m.rows()) {
    throw_error(ErrorCode::kInvalidArgument, "partial_trace: product of dims " + std::to_string(total) +
                                                 " does not match matrix size " + std::to_string(m.rows()));
  }
  std::vector<bool> kept(dims.size(), false);
  for (std::size_t k : keep) {
    if (k >= dims.size()) {
      throw_error(ErrorCode::kInvalidArgument, "partial_trace: keep index out of range");
    }
    kept[k] = true;
  }

  // Offsets of each kept (resp. traced) composite index inside the full index.
  std::vector<Index> kept_offsets{0};
  std::vector<Index> traced_offsets{0};
  Index stride = 1;
  for (std::size_t s = dims.size(); s-- > 0;) {
    auto& target = kept[s] ? kept_offsets : traced_offsets;
    std::vector<Index> next;
    next.reserve(target.size() * dims[s]);
    for (Index digit = 0; digit < dims[s]; ++digit) {
      for (Index base : target) {
        next.push_back(base + digit * stride);
      }
    }
    // Subsystem s is more significant than those already placed, so it varies slowest.
    target = std::move(next);
    stride *= dims[s];
  }

  Index out_dim = static_cast<Index>(kept_offsets.size());
  ComplexMatrix out = ComplexMatrix::Zero(out_dim, out_dim);
  for (Index r = 0; r < out_dim; ++r) {
    for (Index c = 0; c < out_dim; ++c) {
      Complex acc = 0;
      for (Index t : traced_offsets) {
        acc += m(kept_offsets[r] + t, kept_offsets[c] + t);
      }
      out(r, c) = acc;
    }
  }
  return out;
}

double shannon_entropy(std::span<const double> probabilities) {
  double h = 0;
  for (double p : probabilities) {
    if (p < -1e-9) {
      throw_error(ErrorCode::kNumerical, "entropy: negative eigenvalue " + std::to_string(p));
    }
    h -= xlog2x(p);
  }
  return h;
}

double von_neumann_entropy(const ComplexMatrix& rho) {
  std::vector<double> values = eigenvalues_hermitian(rho);
  return shannon_entropy(values);
}

namespace {

struct SupportSplit {
  Spectrum spectrum;
  Index rank = 0;
};

SupportSplit support_of(const ComplexMatrix& sigma) {
  SupportSplit out{eig_hermitian(sigma), 0};
  for (double v : out.spectrum.values) {
    if (v > kSupportThreshold) {
      ++out.rank;
    }
  }
  return out;
}

// Weight of rho outside the span of the leading `rank` eigenvectors.
double weight_outside(const ComplexMatrix& rho, const SupportSplit& split) {
  Index n = rho.rows();
  if (split.rank == n) {
    return 0;
  }
  const ComplexMatrix kernel = split.spectrum.vectors.rightCols(n - split.rank);
  return (kernel.adjoint() * rho * kernel).trace().real();
}

}  // namespace

double relative_entropy(const ComplexMatrix& rho, const ComplexMatrix& sigma) {
  require_same_shape(rho, sigma, "relative_entropy");
  SupportSplit split = support_of(sigma);
  if (weight_outside(rho, split) > kSupportThreshold) {
    return kInfinity;
  }
  double cross = 0;
  for (Index k = 0; k < split.rank; ++k) {
    auto v = split.spectrum.vectors.col(k);
    double weight = (v.adjoint() * rho * v)(0, 0).real();
    cross += weight * std::log2(split.spectrum.values[k]);
  }
  double result = -von_neumann_entropy(rho) - cross;
  return std::max(result, 0.0);
}

double max_relative_entropy(const ComplexMatrix& rho, const ComplexMatrix& sigma) {
  require_same_shape(rho, sigma, "max_relative_entropy");
  require_hermitian(rho, "max_relative_entropy");
  SupportSplit split = support_of(sigma);
  if (weight_outside(rho, split) > kSupportThreshold) {
    return kInfinity;
  }
  const ComplexMatrix basis = split.spectrum.vectors.leftCols(split.rank);
  RealVector inv_sqrt(split.rank);
  for (Index k = 0; k < split.rank; ++k) {
    inv_sqrt(k) = 1.0 / std::sqrt(split.spectrum.values[k]);
  }
  ComplexMatrix restricted = basis.adjoint() * rho * basis;
  ComplexMatrix scaled = inv_sqrt.asDiagonal() * restricted * inv_sqrt.asDiagonal();
  std::vector<double> values = eigenvalues_hermitian(scaled);
  return std::log2(values.front());
}

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "frobenius_distance");
  return (a - b).norm();
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m) {
  Spectrum sp = eig_hermitian(m);
  RealVector roots(sp.values.size());
  for (std::size_t k = 0; k < sp.values.size(); ++k) {
    roots(static_cast<Index>(k)) = std::sqrt(std::max(sp.values[k], 0.0));
  }
  return sp.vectors * roots.asDiagonal() * sp.vectors.adjoint();
}

std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

ComplexMatrix random_ginibre(Index rows, Index cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  ComplexMatrix out(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) {
      double re = normal(rng);
      double im = normal(rng);
      out(i, j) = Complex(re, im);
    }
  }
  return out;
}

ComplexMatrix random_hermitian(Index n, Rng& rng) {
  ComplexMatrix g = random_ginibre(n, n, rng);
  return (g + g.adjoint()) * 0.5;
}

ComplexMatrix random_unitary(Index n, Rng& rng) {
  ComplexMatrix g = random_ginibre(n, n, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index k = 0; k < n; ++k) {
    Complex diag = r(k, k);
    double mag = std::abs(diag);
    if (mag > 0) {
      q.col(k) *= diag / mag;
    }
  }
  return q;
}

}  // namespace qmcap
