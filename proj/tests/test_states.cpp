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
#include <cstdio>
#include <fstream>
#include <functional>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qmcap/error.hpp"
#include "qmcap/state_io.hpp"
#include "qmcap/states.hpp"

namespace qmcap {
namespace {

ComplexMatrix ket_projector(int d, const std::vector<std::pair<int, Complex>>& amplitudes) {
  ComplexVector v = ComplexVector::Zero(d);
  for (const auto& [k, a] : amplitudes) v(k) = a;
  v.normalize();
  return v * v.adjoint();
}

ErrorCode code_of(const std::function<void()>& body) {
  try {
    body();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInternal;
}

TEST(DensityMatrixTest, ValidatesInvariants) {
  QuditParams params = QuditParams::make(3, 1);
  ComplexMatrix m = ComplexMatrix::Identity(3, 3) / 3.0;
  EXPECT_NO_THROW(DensityMatrix(params, m));
  ComplexMatrix bad_trace = ComplexMatrix::Identity(3, 3) / 2.0;
  EXPECT_THROW(DensityMatrix(params, bad_trace), Error);
  ComplexMatrix negative = ComplexMatrix::Zero(3, 3);
  negative(0, 0) = 1.5;
  negative(1, 1) = -0.5;
  EXPECT_THROW(DensityMatrix(params, negative), Error);
  ComplexMatrix non_hermitian = m;
  non_hermitian(0, 1) = 0.1;
  EXPECT_THROW(DensityMatrix(params, non_hermitian), Error);
  EXPECT_THROW(DensityMatrix(params, ComplexMatrix::Identity(2, 2) / 2.0), Error);
}

TEST(Qudit, ParamsValidation) {
  EXPECT_EQ(code_of([] { QuditParams::make(9, 1); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { QuditParams::make(7, 0); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { QuditParams::make(7, 4); }), ErrorCode::kUnsupported);
  EXPECT_EQ(QuditParams::make(7, 3).dim(), 343);
  EXPECT_EQ(QuditParams::make(13, 1).inverse_two() * 2 % 13, 1);
}

TEST(Presets, UniformSuperposition) {
  QuditParams params = QuditParams::make(7, 1);
  EXPECT_LE((preset_state("uniform-01", params).matrix() - ket_projector(7, {{0, 1}, {1, 1}})).norm(), 1e-14);
}

TEST(Presets, SymmetricPlusMinusOneSupport) {
  QuditParams params = QuditParams::make(7, 1);
  EXPECT_LE((preset_state("symmetric-pm1", params).matrix() - ket_projector(7, {{1, 1}, {6, 1}})).norm(), 1e-14);
}

TEST(Presets, AppendixStates) {
  QuditParams params = QuditParams::make(7, 1);
  EXPECT_LE((preset_state("appc-a", params).matrix() -
             ket_projector(7, {{0, std::sqrt(0.4)}, {1, std::sqrt(0.6)}})).norm(), 1e-14);
  EXPECT_LE((preset_state("appc-b", params).matrix() -
             ket_projector(7, {{0, std::sqrt(0.4)}, {6, std::sqrt(0.6)}})).norm(), 1e-14);
  QuditParams p13 = QuditParams::make(13, 1);
  BSParams bs = BSParams::make(p13, 2, 6);
  EXPECT_LE((preset_state("appe-magic", p13, bs).matrix() - ket_projector(13, {{0, 1}, {6, 1}})).norm(), 1e-14);
  EXPECT_THROW(preset_state("appe-magic", p13), Error);
}

TEST(Presets, MaximallyMixedTensorPowersAndUnknown) {
  QuditParams params = QuditParams::make(3, 2);
  EXPECT_LE((preset_state("maximally-mixed", params).matrix() - ComplexMatrix::Identity(9, 9) / 9.0).norm(), 1e-14);
  QuditParams one = QuditParams::make(3, 1);
  ComplexMatrix u = preset_state("uniform-01", one).matrix();
  EXPECT_LE((preset_state("uniform-01", params).matrix() - oracle::kron(u, u)).norm(), 1e-14);
  EXPECT_EQ(code_of([&] { preset_state("no-such-state", one); }), ErrorCode::kInvalidArgument);
}

TEST(Stabilizers, SingleQuditCounts) {
  for (int d : {3, 5, 7}) {
    auto family = enumerate_stabilizers(QuditParams::make(d, 1));
    EXPECT_EQ(family->pure_members().size(), static_cast<std::size_t>(d * (d + 1)));
    EXPECT_EQ(family->size(), static_cast<std::size_t>(d * (d + 1) + 1));
    ComplexMatrix last = family->state(family->size() - 1).matrix();
    EXPECT_LE((last - ComplexMatrix::Identity(d, d) / double(d)).norm(), 1e-12);
  }
}

TEST(Stabilizers, PureMembersMatchEigenbasisOracle) {
  const int d = 7;
  auto family = enumerate_stabilizers(QuditParams::make(d, 1));
  std::vector<oracle::Matrix> expected = oracle::pure_stabilizer_projectors(d);
  std::vector<bool> used(expected.size(), false);
  for (std::size_t i : family->pure_members()) {
    ComplexMatrix p = family->state(i).matrix();
    bool found = false;
    for (std::size_t j = 0; j < expected.size() && !found; ++j) {
      if (!used[j] && (p - expected[j]).norm() < 1e-9) used[j] = found = true;
    }
    EXPECT_TRUE(found) << "member " << i;
  }
}

TEST(Stabilizers, GeneratorProjectors) {
  QuditParams params = QuditParams::make(5, 1);
  DensityMatrix zero = stabilizer_state(params, {{WeylIndex::single(1, 0), 0}});
  EXPECT_LE((zero.matrix() - ket_projector(5, {{0, 1}})).norm(), 1e-12);
  DensityMatrix mixed = stabilizer_state(params, {});
  EXPECT_LE((mixed.matrix() - ComplexMatrix::Identity(5, 5) / 5.0).norm(), 1e-12);
  ComplexMatrix x = oracle::weyl(5, {0}, {1});
  DensityMatrix plus = stabilizer_state(params, {{WeylIndex::single(0, 1), 0}});
  EXPECT_LE((x * plus.matrix() - plus.matrix()).norm(), 1e-12);
}

TEST(Stabilizers, TwoQuditHeavyEnumeration) {
  QuditParams params = QuditParams::make(3, 2);
  EXPECT_EQ(code_of([&] { enumerate_stabilizers(params); }), ErrorCode::kUnsupported);
  auto family = enumerate_stabilizers(params, true);
  EXPECT_EQ(family->pure_members().size(), 360u);
  for (std::size_t i : family->pure_members()) {
    if (i % 37 != 0) continue;
    ComplexMatrix p = family->state(i).matrix();
    EXPECT_LE((p * p - p).norm(), 1e-10);
    EXPECT_NEAR(p.trace().real(), 1.0, 1e-12);
  }
}

TEST(MeanState, StabilizerFixedPoint) {
  QuditParams params = QuditParams::make(7, 1);
  auto family = enumerate_stabilizers(params);
  for (std::size_t i = 0; i < family->size(); i += 5) {
    EXPECT_LE((mean_state(family->state(i)).matrix() - family->state(i).matrix()).norm(), 1e-10);
  }
}

TEST(MeanState, MagicStatesMapToMaximallyMixed) {
  QuditParams params = QuditParams::make(7, 1);
  ComplexMatrix mixed = ComplexMatrix::Identity(7, 7) / 7.0;
  EXPECT_LE((mean_state(preset_state("uniform-01", params)).matrix() - mixed).norm(), 1e-10);
  Rng rng(13);
  EXPECT_LE((mean_state(random_pure_state(params, rng)).matrix() - mixed).norm(), 1e-10);
}

TEST(Purify, PureStateHasTrivialReference) {
  QuditParams params = QuditParams::make(5, 1);
  PurifiedState psi = purify(preset_state("uniform-01", params));
  EXPECT_EQ(psi.reference_dim, 1);
  EXPECT_LE((psi.projector() - preset_state("uniform-01", params).matrix()).norm(), 1e-12);
}

TEST(Purify, MaximallyMixedGivesMaximallyEntangled) {
  QuditParams params = QuditParams::make(5, 1);
  PurifiedState psi = purify(DensityMatrix::maximally_mixed(params));
  ASSERT_EQ(psi.reference_dim, 5);
  oracle::Matrix proj = psi.projector();
  EXPECT_LE((oracle::partial_trace_loops(proj, 5, 5, true) - ComplexMatrix::Identity(5, 5) / 5.0).norm(), 1e-12);
  EXPECT_NEAR(oracle::entropy(proj), 0.0, 1e-10);
}

TEST(Purify, RandomRoundTrip) {
  QuditParams params = QuditParams::make(7, 1);
  Rng rng(8);
  DensityMatrix rho = random_density_matrix(params, rng);
  PurifiedState psi = purify(rho);
  oracle::Matrix reduced =
      oracle::partial_trace_loops(psi.projector(), static_cast<int>(psi.reference_dim), 7, false);
  EXPECT_LE((reduced - rho.matrix()).norm(), 1e-10);
  EXPECT_NEAR(psi.vector.norm(), 1.0, 1e-12);
}

TEST(Dephasing, ClockGroupKeepsDiagonal) {
  QuditParams params = QuditParams::make(7, 1);
  Rng rng(3);
  DensityMatrix rho = random_density_matrix(params, rng);
  DensityMatrix out = dephasing_channel({WeylIndex::single(1, 0)}, rho);
  ComplexMatrix diag = rho.matrix().diagonal().asDiagonal();
  EXPECT_LE((out.matrix() - diag).norm(), 1e-12);
  DensityMatrix twice = dephasing_channel({WeylIndex::single(1, 0)}, out);
  EXPECT_LE((twice.matrix() - out.matrix()).norm(), 1e-12);
}

TEST(Dephasing, IdempotentAndFixesGroupStabilizer) {
  QuditParams params = QuditParams::make(5, 1);
  Rng rng(4);
  DensityMatrix rho = random_density_matrix(params, rng);
  std::vector<WeylIndex> group = {WeylIndex::single(1, 2)};
  DensityMatrix once = dephasing_channel(group, rho);
  EXPECT_LE((dephasing_channel(group, once).matrix() - once.matrix()).norm(), 1e-12);
  DensityMatrix stab = stabilizer_state(params, {{WeylIndex::single(1, 2), 3}});
  EXPECT_LE((dephasing_channel(group, stab).matrix() - stab.matrix()).norm(), 1e-12);
  EXPECT_EQ(code_of([&] { dephasing_channel({WeylIndex::single(1, 0), WeylIndex::single(0, 1)}, rho); }),
            ErrorCode::kInvalidArgument);
}

TEST(PhaseInversion, ZeroMeanStabilizersAreSymmetric) {
  QuditParams params = QuditParams::make(7, 1);
  auto family = enumerate_stabilizers(params);
  int zero_mean = 0;
  for (std::size_t i = 0; i < family->size(); ++i) {
    CharacteristicTable xi = characteristic_function(family->state(i));
    bool is_zero_mean = true;
    for (Complex v : xi.values) {
      if (std::abs(v) > 1e-9 && std::abs(v - 1.0) > 1e-9) is_zero_mean = false;
    }
    if (!is_zero_mean) continue;
    ++zero_mean;
    EXPECT_TRUE(is_phase_inversion_symmetric(family->state(i))) << "member " << i;
  }
  EXPECT_EQ(zero_mean, 9);
}

TEST(PhaseInversion, Presets) {
  QuditParams params = QuditParams::make(7, 1);
  EXPECT_TRUE(is_phase_inversion_symmetric(preset_state("symmetric-pm1", params)));
  InversionSymmetry u = phase_inversion_symmetry(preset_state("uniform-01", params));
  EXPECT_FALSE(u.symmetric);
  EXPECT_GT(u.characteristic_deviation, 1e-3);
  EXPECT_FALSE(is_phase_inversion_symmetric(preset_state("uniform-01", params)));
}

TEST(RandomStates, PureAndMixed) {
  QuditParams params = QuditParams::make(7, 1);
  Rng rng(1);
  DensityMatrix pure = random_pure_state(params, rng);
  EXPECT_NEAR((pure.matrix() * pure.matrix()).trace().real(), 1.0, 1e-12);
  DensityMatrix mixed = random_density_matrix(params, rng);
  EXPECT_GT(eigenvalues_hermitian(mixed.matrix()).back(), 0.0);
}

TEST(StateIo, DenseRoundTrip) {
  QuditParams params = QuditParams::make(5, 1);
  Rng rng(2);
  DensityMatrix rho = random_density_matrix(params, rng);
  DensityMatrix back = state_from_json(state_to_json(rho));
  EXPECT_LE((back.matrix() - rho.matrix()).norm(), 1e-15);
  EXPECT_EQ(back.params(), params);
}

TEST(StateIo, KetAndPresetForms) {
  nlohmann::json ket = {{"d", 7}, {"n", 1}, {"form", "ket"}, {"amplitudes", {1, {0, 1}, 0, 0, 0, 0, 0}}};
  ComplexMatrix expected = ket_projector(7, {{0, 1}, {1, Complex(0, 1)}});
  EXPECT_LE((state_from_json(ket).matrix() - expected).norm(), 1e-14);
  nlohmann::json preset = {{"d", 13}, {"n", 1}, {"form", "preset"}, {"preset", "appe-magic"}, {"s", 2}, {"t", 6}};
  EXPECT_LE((state_from_json(preset).matrix() - ket_projector(13, {{0, 1}, {6, 1}})).norm(), 1e-14);
}

TEST(StateIo, Errors) {
  EXPECT_EQ(code_of([] { state_from_json(nlohmann::json{{"d", 7}}); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { state_from_json(nlohmann::json{{"d", 7}, {"n", 1}, {"form", "ket"}, {"amplitudes", {1, 2}}}); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { load_state("/nonexistent/state.json"); }), ErrorCode::kIo);
  std::string path = ::testing::TempDir() + "qmcap_bad_state.json";
  {
    std::ofstream out(path);
    out << "{ not json";
  }
  EXPECT_EQ(code_of([&] { load_state(path); }), ErrorCode::kInvalidArgument);
  QuditParams params = QuditParams::make(3, 1);
  std::string good = ::testing::TempDir() + "qmcap_good_state.json";
  save_state(good, preset_state("uniform-01", params));
  EXPECT_LE((load_state(good).matrix() - preset_state("uniform-01", params).matrix()).norm(), 1e-15);
  std::remove(path.c_str());
  std::remove(good.c_str());
}

}  // namespace
}  // namespace qmcap
