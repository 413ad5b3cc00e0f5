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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qmcap/channel.hpp"
#include "qmcap/optimize.hpp"

namespace qmcap {

/// S(Lambda(rho)) - S(Lambda^c(rho)), with Lambda^c the complement of the
/// dilation that purifies the environment.
double coherent_information(const BeamSplitterChannel& chan, const DensityMatrix& rho);
/// Hermitian H with d I_c = Tr(H d rho) along trace-zero directions. Output
/// eigenvalues below 1e-15 are clamped before taking the logarithm.
ComplexMatrix coherent_information_gradient(const BeamSplitterChannel& chan, const ComplexMatrix& rho);
/// S(Lambda(rho)) - S((id (x) Lambda)(Psi_RA)) with Psi_RA a purification of rho.
double coherent_information_purified(const BeamSplitterChannel& chan, const DensityMatrix& rho);

struct CapacityOptions {
  int restarts = 32;
  int iterations = 2000;
  std::uint64_t seed = 0;
  /// Extra candidates for the first restart, alongside I/d^n and the
  /// two-level mixtures (|0><0| + |k><k|)/2.
  std::vector<DensityMatrix> warm_starts;
  int polish_steps = 25;
};

struct RestartTrace {
  std::uint64_t seed = 0;
  AscentTrace ascent;
};

/// Q^(1) lower bound: the best coherent information found. The value is
/// recomputed from best_state and is never claimed optimal.
struct CapacityReport {
  std::optional<DensityMatrix> best_state;
  double best_value = 0;
  int restarts = 0;
  std::uint64_t seed = 0;
  int evaluations = 0;
  bool budget_exhausted = false;
  std::vector<RestartTrace> traces;
};

/// Maximizes I_c over rho = G G^dagger / Tr(G G^dagger) with G a free complex
/// matrix. Restarts run in parallel with seeds split from options.seed.
CapacityReport qcap_one_shot(const BeamSplitterChannel& chan, const CapacityOptions& options);

struct Thm3Construction {
  /// "s2-neq-t2", "s-eq-t" or "s-eq-minus-t".
  std::string regime;
  DensityMatrix environment;
  DensityMatrix input;
  double expected = 0;
  /// Closed-form spectra of the channel and complement outputs, when known.
  std::vector<double> output_spectrum;
  std::vector<double> complement_spectrum;
};

/// Explicit environment and input with positive coherent information for a
/// nontrivial single-qudit (s, t).
Thm3Construction thm3_construction(const BSParams& bs);

}  // namespace qmcap
