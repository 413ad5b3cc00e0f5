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
#include <string>
#include <vector>

#include "qmcap/states.hpp"

namespace qmcap {

/// Index map of U_{s,t}: |i, j> -> |s i + t j, -t i + s j>, qudit-wise on
/// n-qudit registers. Entry i * d^n + j holds the output index a * d^n + b.
std::vector<Index> beam_splitter_permutation(const BSParams& bs);
/// Dense permutation matrix of U_{s,t} on d^{2n} dimensions.
ComplexMatrix beam_splitter_unitary(const BSParams& bs);

/// Lambda(rho) = Tr_B U (rho (x) sigma) U^dagger and its complement Tr_A.
/// The unitary is never formed; outputs are assembled from the inverse index
/// map in O(d^{3n}) operations.
class BeamSplitterChannel {
 public:
  BeamSplitterChannel(BSParams bs, DensityMatrix environment);

  const BSParams& bsparams() const { return bs_; }
  const DensityMatrix& environment() const { return environment_; }
  const QuditParams& params() const { return bs_.params; }
  Index dim() const { return dim_; }

  /// Both maps extend linearly to arbitrary operators.
  ComplexMatrix apply(const ComplexMatrix& x) const;
  ComplexMatrix apply_complement(const ComplexMatrix& x) const;
  static constexpr Index kMaxDilationDim = 4096;
  /// Complementary channel of the Stinespring dilation that purifies the
  /// environment. The output lives on H_B (x) H_E', where E' is spanned by the
  /// support of sigma, so it coincides with apply_complement for pure sigma.
  /// Throws kUnsupported when rank(sigma) d^n exceeds kMaxDilationDim.
  ComplexMatrix apply_dilation_complement(const ComplexMatrix& x) const;
  /// Hilbert-Schmidt adjoints of apply and apply_dilation_complement.
  ComplexMatrix apply_adjoint(const ComplexMatrix& y) const;
  ComplexMatrix apply_dilation_complement_adjoint(const ComplexMatrix& y) const;
  Index environment_rank() const { return env_factor_.rows(); }
  /// (id_R (x) Lambda)(y) for y on H_R (x) H_A with the reference first.
  ComplexMatrix apply_extended(const ComplexMatrix& y, Index reference_dim) const;

  DensityMatrix apply(const DensityMatrix& rho) const;
  DensityMatrix apply_complement(const DensityMatrix& rho) const;

  /// Kraus operators of Lambda from the Stinespring dilation, one per
  /// (environment eigenvector, traced output) pair.
  std::vector<ComplexMatrix> kraus() const;

 private:
  Index input_a(Index a, Index b) const { return in_a_[a * dim_ + b]; }
  Index input_b(Index a, Index b) const { return in_b_[a * dim_ + b]; }

  BSParams bs_;
  DensityMatrix environment_;
  Index dim_;
  std::vector<Index> in_a_;
  std::vector<Index> in_b_;
  /// Column j holds sqrt(mu_l) <j|e_l> over the support of sigma.
  ComplexMatrix env_factor_;
};

DensityMatrix convolve(const BSParams& bs, const DensityMatrix& rho, const DensityMatrix& sigma);
DensityMatrix convolve_complement(const BSParams& bs, const DensityMatrix& rho, const DensityMatrix& sigma);

struct CltStep {
  int step = 0;
  double distance = 0;
  double bound = 0;
};

struct CltReport {
  /// Largest |Xi_rho| strictly below 1 - 1e-9 (0 when there is none).
  double m_star = 0;
  /// Xi_rho equals 1 on every unit-magnitude label.
  bool zero_mean = true;
  std::vector<CltStep> steps;
};

/// Distances max_x |Xi_{conv^N rho}(x) - Xi_{M(rho)}(x)| for N = 1..steps,
/// where conv^N rho = (conv^{N-1} rho) conv rho. Stops after the first step
/// whose distance is below stop_below.
CltReport iterate_convolution(const BSParams& bs, const DensityMatrix& rho, int steps, double stop_below = 0);

using LinearMap = std::function<ComplexMatrix(const ComplexMatrix&)>;

/// (1/din) sum_ij |i><j| (x) Lambda(|i><j|).
struct ChoiMatrix {
  Index din = 0;
  Index dout = 0;
  ComplexMatrix matrix;

  double min_eigenvalue() const;
  /// max-entry deviation of the output partial trace from I/din.
  double trace_preservation_error() const;
};

ChoiMatrix choi(Index din, Index dout, const LinearMap& map);
ChoiMatrix choi(const BeamSplitterChannel& chan);
ChoiMatrix choi_complement(const BeamSplitterChannel& chan);

struct IdentityReport {
  double distance = 0;
  bool pass = false;
};

/// Choi distance between Lambda^c_{s,sigma} and A o Lambda_{t,A(sigma)}, where
/// A is the phase-space inversion and Lambda_{t,.} uses U_{t,s}.
IdentityReport complement_identity_check(const BSParams& bs, const DensityMatrix& sigma);

struct DegradationReport {
  double distance = 0;
  bool pass = false;
  bool degradable = false;
  bool anti_degradable = false;
};

/// For s = t and sigma = w(a) sigma0 w(a)^dagger with A(sigma0) = sigma0, checks
/// Lambda^c = A o D_{-2sa} o Lambda with D_b(X) = w(b) X w(b)^dagger. Throws
/// kInvalidArgument naming the failed precondition. Degradability is only
/// reported for pure sigma, where the partial-trace map is the true complement.
DegradationReport degradation_witness(const BSParams& bs, const DensityMatrix& sigma, const WeylIndex& a);

}  // namespace qmcap
