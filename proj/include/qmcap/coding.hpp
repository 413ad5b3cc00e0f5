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
#include <vector>

#include "qmcap/channel.hpp"

namespace qmcap {

/// An isometric encoding C^K -> C^{d^n} (columns are the images of |i>) and a
/// decoding channel C^{d^n} -> C^K given by Kraus operators.
struct CodeSpec {
  int K = 0;
  ComplexMatrix encoding;
  std::vector<ComplexMatrix> decoding;

  /// Throws kInvalidArgument unless the encoding is an isometry and the
  /// decoding Kraus operators are complete, each within 1e-10.
  static CodeSpec make(ComplexMatrix encoding, std::vector<ComplexMatrix> decoding);
};

/// Decoder sum_i |i><e_i| on the span of the encoding images e_i, completed by
/// |0><c| for an orthonormal basis c of the complement.
std::vector<ComplexMatrix> projective_default_decoder(const ComplexMatrix& encoding);

/// <Phi| D o Lambda o E (|Phi><Phi|) |Phi> with |Phi> = K^{-1/2} sum_i |i, i>.
double entanglement_fidelity(const CodeSpec& code, const BeamSplitterChannel& chan);

/// Encoding |i> -> |i> and decoding |s i> -> |i>, completed by |0><m| on the
/// remaining kets. With a |0> environment this reaches F_e = 1/K.
CodeSpec stabilizer_code_construction(const QuditParams& params, const BSParams& bs, int K);

/// For s^2 != t^2 and environment (|0> + |t>)/sqrt2: encoding |0> -> |0>,
/// |1> -> |s>, decoding with Kraus operators |0><0| + |1><1|,
/// |0><t^2| + |1><s^2| and |0><m| for every other m.
CodeSpec magic_code_construction(const BSParams& bs);

/// Pretty-good (Petz) recovery for the encoding through the channel.
std::vector<ComplexMatrix> petz_decoder(const BeamSplitterChannel& chan, const ComplexMatrix& encoding);

/// Haar-random isometric encoding and random Stinespring decoder.
ComplexMatrix random_encoding(Index dim, int K, Rng& rng);
std::vector<ComplexMatrix> random_decoder(Index dim, int K, Rng& rng);

struct FidelitySearch {
  double best = 0;
  int trials = 0;
  int evaluations = 0;
};

/// Best F_e over random encodings with Petz and random decoders, each refined
/// by a short local search on the encoding. Seeded candidates are included.
FidelitySearch search_fidelity(const BeamSplitterChannel& chan, int K, int trials, std::uint64_t seed,
                               const std::vector<CodeSpec>& candidates = {});

struct CeilingReport {
  double best = 0;
  double ceiling = 0;
  int trials = 0;
  int environments = 0;
  bool pass = false;
};

/// Falsification harness for the stabilizer ceiling 1/K: trials are spread
/// over every enumerated stabilizer environment.
CeilingReport stabilizer_ceiling_search(const QuditParams& params, const BSParams& bs, int K, int trials,
                                        std::uint64_t seed);

struct RatioReport {
  double best_fidelity = 0;
  double mrm_inf = 0;
  bool mrm_inf_converged = false;
  double bound = 0;
  bool pass = false;
};

/// Checks best F_e <= 2^{mrm_inf(sigma)} / K + 1e-6. The cutting-plane value
/// is a lower bound on mrm_inf at every stage, so the check stays valid when
/// the cut budget runs out.
RatioReport fidelity_ratio_bound_check(const DensityMatrix& sigma, const BSParams& bs, int K, int trials,
                                       std::uint64_t seed);

}  // namespace qmcap
