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

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qmcap/weyl.hpp"

namespace qmcap {

/// Named states. Single-qudit kets are listed below; for n > 1 the preset is
/// the n-fold tensor power.
///   ket-zero         |0>
///   uniform-01       (|0> + |1>) / sqrt2
///   symmetric-pm1    (|1> + |-1>) / sqrt2
///   appc-a           sqrt(2/5)|0> + sqrt(3/5)|1>
///   appc-b           sqrt(2/5)|0> + sqrt(3/5)|-1>
///   appe-magic       (|0> + |t>) / sqrt2, needs beam-splitter parameters
///   maximally-mixed  I / d^n
DensityMatrix preset_state(const std::string& name, const QuditParams& params,
                           const std::optional<BSParams>& bs = std::nullopt);
const std::vector<std::string>& preset_names();

/// w(label) sigma = omega^character sigma.
struct StabilizerGenerator {
  WeylIndex label;
  int character = 0;
};

struct StabilizerMember {
  std::vector<StabilizerGenerator> generators;

  int rank() const { return static_cast<int>(generators.size()); }
};

/// (1/d^{n-r}) prod_i (1/d) sum_k omega^{-a_i k} w(k x_i) for commuting labels x_i.
DensityMatrix stabilizer_state(const QuditParams& params, const std::vector<StabilizerGenerator>& generators);

/// Minimal stabilizer-projection states. Pure members come first, the
/// maximally mixed state last. For n = 1 every state is materialized up front;
/// for n = 2 members are materialized on request.
class StabilizerFamily {
 public:
  StabilizerFamily(QuditParams params, std::vector<StabilizerMember> members);

  const QuditParams& params() const { return params_; }
  std::size_t size() const { return members_.size(); }
  const StabilizerMember& member(std::size_t i) const { return members_[i]; }
  DensityMatrix state(std::size_t i) const;
  /// Indices of the rank-n (pure) members.
  std::vector<std::size_t> pure_members() const;

 private:
  QuditParams params_;
  std::vector<StabilizerMember> members_;
  std::vector<ComplexMatrix> cache_;
};

/// n = 1 for any odd prime d; n = 2 only with `heavy` set and d = 7 (plus the
/// smaller d = 3, 5). The n = 1 families are cached.
std::shared_ptr<const StabilizerFamily> enumerate_stabilizers(const QuditParams& params, bool heavy = false);

/// Keeps the characteristic function where |Xi| >= 1 - 1e-9. For n = 1 the
/// result is checked against the enumerated family.
DensityMatrix mean_state(const DensityMatrix& rho);

struct PurifiedState {
  Index reference_dim = 0;
  Index system_dim = 0;
  /// Amplitudes on H_R (x) H_A, reference most significant.
  ComplexVector vector;

  ComplexMatrix projector() const { return vector * vector.adjoint(); }
};

PurifiedState purify(const DensityMatrix& rho);

/// (1/|G|) sum_{g in G} w(g) rho w(g)^dagger over the group generated by the
/// labels. Throws kInvalidArgument when two generators do not commute.
DensityMatrix dephasing_channel(const std::vector<WeylIndex>& generators, const DensityMatrix& rho);

/// A(0) X A(0)^dagger, the phase-space inversion.
ComplexMatrix phase_inversion(const QuditParams& params, const ComplexMatrix& x);

struct InversionSymmetry {
  bool symmetric = false;
  double operator_distance = 0;
  double characteristic_deviation = 0;
};

/// Both the operator route and the Xi(x) = Xi(-x) route, with their verdicts.
InversionSymmetry phase_inversion_symmetry(const DensityMatrix& rho);
/// Throws kNumerical if the two routes disagree.
bool is_phase_inversion_symmetric(const DensityMatrix& rho);

DensityMatrix random_pure_state(const QuditParams& params, Rng& rng);
/// Ginibre-induced full-rank state.
DensityMatrix random_density_matrix(const QuditParams& params, Rng& rng);

}  // namespace qmcap
