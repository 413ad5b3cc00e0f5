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

#include "qmcap/channel.hpp"

#include <algorithm>
#include <cmath>

#include "qmcap/error.hpp"

namespace qmcap {

namespace {

// Applies (x, y) -> (alpha x + beta y) digit-wise to two register indices.
Index combine(const QuditParams& params, Index x, Index y, std::int64_t alpha, std::int64_t beta) {
  std::vector<int> dx = index_to_digits(params, x);
  std::vector<int> dy = index_to_digits(params, y);
  std::vector<int> out(params.n);
  for (int k = 0; k < params.n; ++k) out[k] = params.mod(alpha * dx[k] + beta * dy[k]);
  return digits_to_index(params, out);
}

void require_dim(const ComplexMatrix& x, Index dim, const char* what) {
  if (x.rows() != dim || x.cols() != dim) {
    throw_error(ErrorCode::kInvalidArgument, std::string(what) + ": expected a " + std::to_string(dim) + "x" +
                                                 std::to_string(dim) + " operator");
  }
}

}  // namespace

std::vector<Index> beam_splitter_permutation(const BSParams& bs) {
  const QuditParams& params = bs.params;
  Index dim = params.dim();
  std::vector<Index> perm(dim * dim);
  for (Index i = 0; i < dim; ++i) {
    for (Index j = 0; j < dim; ++j) {
      Index a = combine(params, i, j, bs.s, bs.t);
      Index b = combine(params, i, j, -bs.t, bs.s);
      perm[i * dim + j] = a * dim + b;
    }
  }
  return perm;
}

ComplexMatrix beam_splitter_unitary(const BSParams& bs) {
  BSParams checked = BSParams::make(bs.params, bs.s, bs.t);
  std::vector<Index> perm = beam_splitter_permutation(checked);
  Index n = static_cast<Index>(perm.size());
  ComplexMatrix u = ComplexMatrix::Zero(n, n);
  for (Index k = 0; k < n; ++k) u(perm[k], k) = 1;
  return u;
}

BeamSplitterChannel::BeamSplitterChannel(BSParams bs, DensityMatrix environment)
    : bs_(BSParams::make(bs.params, bs.s, bs.t)), environment_(std::move(environment)), dim_(bs.params.dim()) {
  if (environment_.params() != bs_.params) {
    throw_error(ErrorCode::kInvalidArgument, "environment must live on the same (d, n) as the beam splitter");
  }
  in_a_.resize(dim_ * dim_);
  in_b_.resize(dim_ * dim_);
  // Inverse of the beam splitter: i = s a - t b, j = t a + s b.
  for (Index a = 0; a < dim_; ++a) {
    for (Index b = 0; b < dim_; ++b) {
      in_a_[a * dim_ + b] = combine(params(), a, b, bs_.s, -bs_.t);
      in_b_[a * dim_ + b] = combine(params(), a, b, bs_.t, bs_.s);
    }
  }
  Spectrum sp = eig_hermitian(environment_.matrix());
  std::vector<Index> support;
  for (std::size_t l = 0; l < sp.values.size(); ++l) {
    if (sp.values[l] > kSupportThreshold) support.push_back(static_cast<Index>(l));
  }
  env_factor_.resize(static_cast<Index>(support.size()), dim_);
  for (std::size_t c = 0; c < support.size(); ++c) {
    env_factor_.row(static_cast<Index>(c)) =
        std::sqrt(sp.values[static_cast<std::size_t>(support[c])]) * sp.vectors.col(support[c]).transpose();
  }
}

ComplexMatrix BeamSplitterChannel::apply(const ComplexMatrix& x) const {
  require_dim(x, dim_, "channel");
  const ComplexMatrix& sigma = environment_.matrix();
  ComplexMatrix out(dim_, dim_);
  for (Index a2 = 0; a2 < dim_; ++a2) {
    for (Index a = 0; a < dim_; ++a) {
      Complex acc = 0;
      for (Index b = 0; b < dim_; ++b) {
        acc += x(input_a(a, b), input_a(a2, b)) * sigma(input_b(a, b), input_b(a2, b));
      }
      out(a, a2) = acc;
    }
  }
  return out;
}

ComplexMatrix BeamSplitterChannel::apply_complement(const ComplexMatrix& x) const {
  require_dim(x, dim_, "complementary channel");
  const ComplexMatrix& sigma = environment_.matrix();
  ComplexMatrix out(dim_, dim_);
  for (Index b2 = 0; b2 < dim_; ++b2) {
    for (Index b = 0; b < dim_; ++b) {
      Complex acc = 0;
      for (Index a = 0; a < dim_; ++a) {
        acc += x(input_a(a, b), input_a(a, b2)) * sigma(input_b(a, b), input_b(a, b2));
      }
      out(b, b2) = acc;
    }
  }
  return out;
}

ComplexMatrix BeamSplitterChannel::apply_dilation_complement(const ComplexMatrix& x) const {
  require_dim(x, dim_, "complementary channel");
  const Index rank = environment_rank();
  const Index total = rank * dim_;
  if (total > kMaxDilationDim) {
    throw_error(ErrorCode::kUnsupported, "complementary channel output of dimension " + std::to_string(total) +
                                             " exceeds " + std::to_string(kMaxDilationDim) +
                                             "; use a lower-rank environment");
  }
  ComplexMatrix out = ComplexMatrix::Zero(total, total);
  // Rank-one r x r block updates written on interleaved (re, im) doubles.
  std::vector<double> left(2 * static_cast<std::size_t>(rank));
  for (Index b2 = 0; b2 < dim_; ++b2) {
    for (Index a = 0; a < dim_; ++a) {
      const double* right = reinterpret_cast<const double*>(env_factor_.col(input_b(a, b2)).data());
      Index col = input_a(a, b2);
      for (Index b = 0; b < dim_; ++b) {
        Complex entry = x(input_a(a, b), col);
        if (entry == Complex(0)) continue;
        const double* f = reinterpret_cast<const double*>(env_factor_.col(input_b(a, b)).data());
        for (Index l = 0; l < rank; ++l) {
          left[2 * l] = entry.real() * f[2 * l] - entry.imag() * f[2 * l + 1];
          left[2 * l + 1] = entry.real() * f[2 * l + 1] + entry.imag() * f[2 * l];
        }
        for (Index l2 = 0; l2 < rank; ++l2) {
          double cr = right[2 * l2];
          double ci = -right[2 * l2 + 1];
          double* dst = reinterpret_cast<double*>(out.col(b2 * rank + l2).data() + b * rank);
          for (Index l = 0; l < rank; ++l) {
            dst[2 * l] += left[2 * l] * cr - left[2 * l + 1] * ci;
            dst[2 * l + 1] += left[2 * l] * ci + left[2 * l + 1] * cr;
          }
        }
      }
    }
  }
  return out;
}

ComplexMatrix BeamSplitterChannel::apply_adjoint(const ComplexMatrix& y) const {
  require_dim(y, dim_, "adjoint channel");
  const ComplexMatrix& sigma = environment_.matrix();
  ComplexMatrix out = ComplexMatrix::Zero(dim_, dim_);
  for (Index a2 = 0; a2 < dim_; ++a2) {
    for (Index a = 0; a < dim_; ++a) {
      Complex entry = y(a2, a);
      for (Index b = 0; b < dim_; ++b) {
        out(input_a(a2, b), input_a(a, b)) += entry * sigma(input_b(a, b), input_b(a2, b));
      }
    }
  }
  return out;
}

ComplexMatrix BeamSplitterChannel::apply_dilation_complement_adjoint(const ComplexMatrix& y) const {
  const Index rank = environment_rank();
  require_dim(y, rank * dim_, "adjoint complementary channel");
  ComplexMatrix out = ComplexMatrix::Zero(dim_, dim_);
  for (Index b2 = 0; b2 < dim_; ++b2) {
    for (Index b = 0; b < dim_; ++b) {
      auto block = y.block(b2 * rank, b * rank, rank, rank);
      for (Index a = 0; a < dim_; ++a) {
        out(input_a(a, b2), input_a(a, b)) +=
            env_factor_.col(input_b(a, b2)).dot(block * env_factor_.col(input_b(a, b)));
      }
    }
  }
  return out;
}

ComplexMatrix BeamSplitterChannel::apply_extended(const ComplexMatrix& y, Index reference_dim) const {
  Index total = reference_dim * dim_;
  require_dim(y, total, "extended channel");
  const ComplexMatrix& sigma = environment_.matrix();
  ComplexMatrix out = ComplexMatrix::Zero(total, total);
  for (Index r = 0; r < reference_dim; ++r) {
    for (Index r2 = 0; r2 < reference_dim; ++r2) {
      for (Index a = 0; a < dim_; ++a) {
        for (Index a2 = 0; a2 < dim_; ++a2) {
          Complex acc = 0;
          for (Index b = 0; b < dim_; ++b) {
            acc += y(r * dim_ + input_a(a, b), r2 * dim_ + input_a(a2, b)) *
                   sigma(input_b(a, b), input_b(a2, b));
          }
          out(r * dim_ + a, r2 * dim_ + a2) = acc;
        }
      }
    }
  }
  return out;
}

DensityMatrix BeamSplitterChannel::apply(const DensityMatrix& rho) const {
  return DensityMatrix::trusted(params(), apply(rho.matrix()));
}

DensityMatrix BeamSplitterChannel::apply_complement(const DensityMatrix& rho) const {
  return DensityMatrix::trusted(params(), apply_complement(rho.matrix()));
}

std::vector<ComplexMatrix> BeamSplitterChannel::kraus() const {
  Spectrum sp = eig_hermitian(environment_.matrix());
  std::vector<ComplexMatrix> out;
  for (std::size_t l = 0; l < sp.values.size(); ++l) {
    if (sp.values[l] <= kSupportThreshold) continue;
    double weight = std::sqrt(sp.values[l]);
    for (Index b = 0; b < dim_; ++b) {
      ComplexMatrix k = ComplexMatrix::Zero(dim_, dim_);
      for (Index a = 0; a < dim_; ++a) {
        k(a, input_a(a, b)) = weight * sp.vectors(input_b(a, b), static_cast<Index>(l));
      }
      out.push_back(std::move(k));
    }
  }
  return out;
}

DensityMatrix convolve(const BSParams& bs, const DensityMatrix& rho, const DensityMatrix& sigma) {
  return BeamSplitterChannel(bs, sigma).apply(rho);
}

DensityMatrix convolve_complement(const BSParams& bs, const DensityMatrix& rho, const DensityMatrix& sigma) {
  return BeamSplitterChannel(bs, sigma).apply_complement(rho);
}

CltReport iterate_convolution(const BSParams& bs, const DensityMatrix& rho, int steps, double stop_below) {
  if (steps < 1) throw_error(ErrorCode::kInvalidArgument, "iterate_convolution: steps must be at least 1");
  CltReport report;
  CharacteristicTable xi = characteristic_function(rho);
  for (Complex v : xi.values) {
    double mag = std::abs(v);
    if (mag < 1 - 1e-9) {
      report.m_star = std::max(report.m_star, mag);
    } else if (std::abs(v - Complex(1)) > 1e-9) {
      report.zero_mean = false;
    }
  }
  CharacteristicTable mean = characteristic_function(mean_state(rho));
  BeamSplitterChannel with_rho(bs, rho);
  DensityMatrix current = rho;
  for (int step = 1; step <= steps; ++step) {
    if (step > 1) current = with_rho.apply(current);
    CharacteristicTable table = characteristic_function(current);
    double dist = 0;
    for (std::size_t f = 0; f < table.values.size(); ++f) {
      dist = std::max(dist, std::abs(table.values[f] - mean.values[f]));
    }
    report.steps.push_back(CltStep{step, dist, std::pow(report.m_star, step)});
    if (dist < stop_below) break;
  }
  return report;
}

double ChoiMatrix::min_eigenvalue() const { return eigenvalues_hermitian(matrix).back(); }

double ChoiMatrix::trace_preservation_error() const {
  const Index dims[] = {din, dout};
  const std::size_t keep[] = {0};
  ComplexMatrix reduced = partial_trace(matrix, dims, keep);
  ComplexMatrix target = ComplexMatrix::Identity(din, din) / static_cast<double>(din);
  return (reduced - target).cwiseAbs().maxCoeff();
}

ChoiMatrix choi(Index din, Index dout, const LinearMap& map) {
  ChoiMatrix out{din, dout, ComplexMatrix::Zero(din * dout, din * dout)};
  for (Index i = 0; i < din; ++i) {
    for (Index j = 0; j < din; ++j) {
      ComplexMatrix unit = ComplexMatrix::Zero(din, din);
      unit(i, j) = 1;
      ComplexMatrix image = map(unit);
      if (image.rows() != dout || image.cols() != dout) {
        throw_error(ErrorCode::kInvalidArgument, "choi: map output has the wrong dimension");
      }
      out.matrix.block(i * dout, j * dout, dout, dout) = image / static_cast<double>(din);
    }
  }
  return out;
}

ChoiMatrix choi(const BeamSplitterChannel& chan) {
  return choi(chan.dim(), chan.dim(), [&](const ComplexMatrix& x) { return chan.apply(x); });
}

ChoiMatrix choi_complement(const BeamSplitterChannel& chan) {
  return choi(chan.dim(), chan.dim(), [&](const ComplexMatrix& x) { return chan.apply_complement(x); });
}

IdentityReport complement_identity_check(const BSParams& bs, const DensityMatrix& sigma) {
  const QuditParams& params = bs.params;
  BeamSplitterChannel lhs(bs, sigma);
  DensityMatrix inverted = DensityMatrix::trusted(params, phase_inversion(params, sigma.matrix()));
  BeamSplitterChannel swapped(bs.swapped(), inverted);
  ChoiMatrix left = choi_complement(lhs);
  ChoiMatrix right = choi(lhs.dim(), lhs.dim(), [&](const ComplexMatrix& x) {
    return phase_inversion(params, swapped.apply(x));
  });
  IdentityReport out;
  out.distance = frobenius_distance(left.matrix, right.matrix);
  out.pass = out.distance <= 1e-9;
  return out;
}

DegradationReport degradation_witness(const BSParams& bs, const DensityMatrix& sigma, const WeylIndex& a) {
  const QuditParams& params = bs.params;
  if (bs.s != bs.t) {
    throw_error(ErrorCode::kInvalidArgument, "degradation witness needs s = t mod d, got (" +
                                                 std::to_string(bs.s) + ", " + std::to_string(bs.t) + ")");
  }
  MonomialOperator shift_back = weyl_monomial(params, negate(params, a));
  ComplexMatrix centered = shift_back.conjugate(sigma.matrix());
  double asym = frobenius_distance(phase_inversion(params, centered), centered);
  if (asym > 1e-9) {
    throw_error(ErrorCode::kInvalidArgument,
                "degradation witness: w(a)^dagger sigma w(a) is not phase-inversion symmetric (distance " +
                    std::to_string(asym) + ")");
  }
  BeamSplitterChannel chan(bs, sigma);
  MonomialOperator displacement = weyl_monomial(params, scale(params, -2 * static_cast<std::int64_t>(bs.s), a));
  ChoiMatrix left = choi_complement(chan);
  ChoiMatrix right = choi(chan.dim(), chan.dim(), [&](const ComplexMatrix& x) {
    return phase_inversion(params, displacement.conjugate(chan.apply(x)));
  });
  DegradationReport out;
  out.distance = frobenius_distance(left.matrix, right.matrix);
  out.pass = out.distance <= 1e-9;
  out.anti_degradable = out.pass;
  out.degradable = out.pass && chan.environment_rank() == 1;
  return out;
}

}  // namespace qmcap
