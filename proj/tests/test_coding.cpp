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

#include <cmath>
#include <functional>
#include <tuple>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qmcap/coding.hpp"
#include "qmcap/error.hpp"
#include "qmcap/states.hpp"

namespace qmcap {
namespace {

/// (1/K^2) sum_{ij} <i| D(Lambda(V|i><j|V^dagger)) |j> with the channel built
/// from the explicit beam-splitter unitary.
double oracle_fidelity(int d, int s, int t, const ComplexMatrix& sigma, const ComplexMatrix& encoding,
                       const std::vector<ComplexMatrix>& decoding) {
  const int K = static_cast<int>(encoding.cols());
  double total = 0;
  for (int i = 0; i < K; ++i) {
    for (int j = 0; j < K; ++j) {
      ComplexMatrix in = encoding.col(i) * encoding.col(j).adjoint();
      ComplexMatrix out = oracle::channel(d, s, t, sigma, in);
      Complex acc = 0;
      for (const ComplexMatrix& k : decoding) acc += (k * out * k.adjoint())(i, j);
      total += acc.real();
    }
  }
  return total / (K * K);
}

void expect_invalid(const std::function<void()>& fn) {
  try {
    fn();
    ADD_FAILURE() << "expected an invalid-argument error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
  }
}

TEST(EntanglementFidelity, MatchesOracleOnRandomCodes) {
  QuditParams params = QuditParams::make(7, 1);
  BSParams bs = BSParams::make(params, 2, 5);
  for (std::uint64_t k = 0; k < 3; ++k) {
    Rng rng(1200 + k);
    DensityMatrix sigma = random_density_matrix(params, rng);
    int K = 2 + static_cast<int>(k);
    CodeSpec code = CodeSpec::make(random_encoding(7, K, rng), random_decoder(7, K, rng));
    double value = entanglement_fidelity(code, BeamSplitterChannel(bs, sigma));
    EXPECT_NEAR(value, oracle_fidelity(7, 2, 5, sigma.matrix(), code.encoding, code.decoding), 1e-12);
    EXPECT_GE(value, -1e-12);
    EXPECT_LE(value, 1 + 1e-12);
  }
}

TEST(EntanglementFidelity, IdentityChannelWithMatchedCodeIsOne) {
  QuditParams params = QuditParams::make(7, 1);
  BSParams bs = BSParams::make(params, 1, 0);
  Rng rng(1210);
  BeamSplitterChannel chan(bs, random_density_matrix(params, rng));
  for (int K : {2, 3, 7}) {
    ComplexMatrix encoding = random_encoding(7, K, rng);
    CodeSpec code = CodeSpec::make(encoding, projective_default_decoder(encoding));
    EXPECT_NEAR(entanglement_fidelity(code, chan), 1.0, 1e-12) << "K = " << K;
    CodeSpec petz{K, encoding, petz_decoder(chan, encoding)};
    EXPECT_NEAR(entanglement_fidelity(petz, chan), 1.0, 1e-9) << "K = " << K;
  }
}

TEST(EntanglementFidelity, LinearInTheEnvironment) {
  QuditParams params = QuditParams::make(7, 1);
  BSParams bs = BSParams::make(params, 2, 5);
  Rng rng(1220);
  DensityMatrix a = random_density_matrix(params, rng);
  DensityMatrix b = random_pure_state(params, rng);
  CodeSpec code = CodeSpec::make(random_encoding(7, 3, rng), random_decoder(7, 3, rng));
  DensityMatrix mix(params, 0.25 * a.matrix() + 0.75 * b.matrix());
  double lhs = entanglement_fidelity(code, BeamSplitterChannel(bs, mix));
  double rhs = 0.25 * entanglement_fidelity(code, BeamSplitterChannel(bs, a)) +
               0.75 * entanglement_fidelity(code, BeamSplitterChannel(bs, b));
  EXPECT_NEAR(lhs, rhs, 1e-12);
}

TEST(CodeSpec, RejectsNonIsometricEncoding) {
  ComplexMatrix encoding = ComplexMatrix::Zero(7, 2);
  encoding(0, 0) = 1;
  encoding(0, 1) = 1;
  ComplexMatrix decoder = ComplexMatrix::Zero(2, 7);
  decoder(0, 0) = 1;
  expect_invalid([&] { CodeSpec::make(encoding, {decoder}); });
}

TEST(CodeSpec, RejectsIncompleteDecoder) {
  ComplexMatrix encoding = ComplexMatrix::Zero(7, 2);
  encoding(0, 0) = 1;
  encoding(1, 1) = 1;
  ComplexMatrix partial = ComplexMatrix::Zero(2, 7);
  partial(0, 0) = 1;
  partial(1, 1) = 1;
  expect_invalid([&] { CodeSpec::make(encoding, {partial}); });
  expect_invalid([&] { CodeSpec::make(encoding, {}); });
}

TEST(CodeSpec, ProjectiveDefaultDecoderIsCompleteAndInvertsTheEncoding) {
  Rng rng(1230);
  ComplexMatrix encoding = random_encoding(7, 3, rng);
  std::vector<ComplexMatrix> decoding = projective_default_decoder(encoding);
  ComplexMatrix completeness = ComplexMatrix::Zero(7, 7);
  for (const ComplexMatrix& k : decoding) completeness += k.adjoint() * k;
  EXPECT_LT((completeness - ComplexMatrix::Identity(7, 7)).norm(), 1e-10);
  EXPECT_LT((decoding.front() * encoding - ComplexMatrix::Identity(3, 3)).norm(), 1e-10);
}

TEST(StabilizerCode, ReachesOneOverKWithVacuumEnvironment) {
  for (auto [d, s, t] : {std::tuple{7, 2, 5}, std::tuple{13, 2, 6}}) {
    QuditParams params = QuditParams::make(d, 1);
    BSParams bs = BSParams::make(params, s, t);
    DensityMatrix vacuum = preset_state("ket-zero", params);
    BeamSplitterChannel chan(bs, vacuum);
    for (int K : {2, 3, 4, d}) {
      CodeSpec code = stabilizer_code_construction(params, bs, K);
      double value = entanglement_fidelity(code, chan);
      EXPECT_NEAR(value, 1.0 / K, 1e-12) << "d = " << d << ", K = " << K;
      EXPECT_NEAR(value, oracle_fidelity(d, s, t, vacuum.matrix(), code.encoding, code.decoding), 1e-12);
    }
  }
}

TEST(MagicCode, ReachesThreeQuarters) {
  QuditParams params = QuditParams::make(13, 1);
  BSParams bs = BSParams::make(params, 2, 6);
  DensityMatrix sigma = preset_state("appe-magic", params, bs);
  CodeSpec code = magic_code_construction(bs);
  double value = entanglement_fidelity(code, BeamSplitterChannel(bs, sigma));
  EXPECT_NEAR(value, 0.75, 1e-12);
  EXPECT_NEAR(value, oracle_fidelity(13, 2, 6, sigma.matrix(), code.encoding, code.decoding), 1e-12);
  EXPECT_GT(value, 0.5);
}

TEST(MagicCode, RequiresDistinctSquares) {
  QuditParams params = QuditParams::make(7, 1);
  expect_invalid([&] { magic_code_construction(BSParams::make(params, 2, 2)); });
}

TEST(StabilizerCeiling, SearchStaysBelowOneOverK) {
  QuditParams params = QuditParams::make(7, 1);
  BSParams bs = BSParams::make(params, 2, 5);
  CeilingReport report = stabilizer_ceiling_search(params, bs, 2, 60, 1240);
  EXPECT_TRUE(report.pass);
  EXPECT_EQ(report.environments, 57);
  EXPECT_LE(report.best, 0.5 + 1e-6);
  EXPECT_GE(report.best, 0.5 - 1e-3);
}

TEST(RatioBound, HoldsForStabilizerAndRandomEnvironments) {
  QuditParams params = QuditParams::make(7, 1);
  BSParams bs = BSParams::make(params, 2, 5);
  RatioReport vacuum = fidelity_ratio_bound_check(preset_state("ket-zero", params), bs, 2, 20, 1250);
  EXPECT_TRUE(vacuum.pass);
  EXPECT_NEAR(vacuum.mrm_inf, 0.0, 1e-6);
  EXPECT_LE(vacuum.best_fidelity, 0.5 + 1e-6);
  Rng rng(1251);
  RatioReport random = fidelity_ratio_bound_check(random_pure_state(params, rng), bs, 2, 20, 1252);
  EXPECT_TRUE(random.pass);
  EXPECT_GT(random.mrm_inf, 0.0);
  EXPECT_LE(random.best_fidelity, random.bound);
}

TEST(FidelitySearch, FindsSeededCandidate) {
  QuditParams params = QuditParams::make(13, 1);
  BSParams bs = BSParams::make(params, 2, 6);
  BeamSplitterChannel chan(bs, preset_state("appe-magic", params, bs));
  FidelitySearch search = search_fidelity(chan, 2, 2, 1260, {magic_code_construction(bs)});
  EXPECT_GE(search.best, 0.75 - 1e-12);
  EXPECT_LE(search.best, 1 + 1e-12);
}

}  // namespace
}  // namespace qmcap
