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

#include <optional>
#include <string>
#include <vector>

#include "qmcap/density_matrix.hpp"

namespace qmcap {

/// A phase-space point (p, q) in Z_d^n x Z_d^n, components reduced mod d.
struct WeylIndex {
  std::vector<int> p;
  std::vector<int> q;

  static WeylIndex zero(int n);
  static WeylIndex single(int p, int q) { return WeylIndex{{p}, {q}}; }

  bool operator==(const WeylIndex&) const = default;
};

/// Reduces every component mod d and checks the length matches n.
WeylIndex normalize(const QuditParams& params, WeylIndex x);
WeylIndex add(const QuditParams& params, const WeylIndex& x, const WeylIndex& y);
WeylIndex negate(const QuditParams& params, const WeylIndex& x);
WeylIndex scale(const QuditParams& params, std::int64_t k, const WeylIndex& x);
/// [x, y] = sum_i (p_x q_y - q_x p_y) mod d.
int symplectic_form(const QuditParams& params, const WeylIndex& x, const WeylIndex& y);
bool is_zero(const WeylIndex& x);
std::string to_string(const WeylIndex& x);

/// Labels are enumerated as index(p) * d^n + index(q), where index() reads
/// the digit vector with qudit 0 most significant.
std::size_t flat_index(const QuditParams& params, const WeylIndex& x);
WeylIndex from_flat(const QuditParams& params, std::size_t flat);
std::size_t label_count(const QuditParams& params);

Index digits_to_index(const QuditParams& params, const std::vector<int>& digits);
std::vector<int> index_to_digits(const QuditParams& params, Index k);

/// An operator of the form M|k> = phase[k] |target[k]>.
struct MonomialOperator {
  std::vector<Index> target;
  std::vector<Complex> phase;

  Index dim() const { return static_cast<Index>(target.size()); }
  ComplexMatrix dense() const;
  /// Tr(rho M).
  Complex trace_with(const ComplexMatrix& rho) const;
  /// M X M^dagger.
  ComplexMatrix conjugate(const ComplexMatrix& x) const;
};

/// w(p, q) = tensor_i omega^{-2^{-1} p_i q_i} Z^{p_i} X^{q_i}.
MonomialOperator weyl_monomial(const QuditParams& params, const WeylIndex& x);
ComplexMatrix weyl_operator(const QuditParams& params, const WeylIndex& x);

/// A(x) = w(x) A(0) w(x)^dagger with A(0) = sum_k |-k><k|.
MonomialOperator phase_point_monomial(const QuditParams& params, const WeylIndex& x);
ComplexMatrix phase_point_operator(const QuditParams& params, const WeylIndex& x);

/// Xi(x) = Tr(rho w(-x)) for every label.
struct CharacteristicTable {
  QuditParams params;
  std::vector<Complex> values;

  Complex at(const WeylIndex& x) const { return values[flat_index(params, x)]; }
};

CharacteristicTable characteristic_function(const DensityMatrix& rho);
/// Same table for an arbitrary operator on the register.
CharacteristicTable characteristic_function(const QuditParams& params, const ComplexMatrix& op);
/// (1/d^n) sum_x Xi(x) w(x).
ComplexMatrix inverse_weyl_transform(const CharacteristicTable& table);

/// Discrete Wigner function W(x) = Tr(rho A(x)). Raw values sum to d^n.
struct WignerTable {
  QuditParams params;
  std::vector<double> raw;
  double max_imaginary = 0;

  std::vector<double> normalized() const;
  double min_raw() const;
};

WignerTable wigner_function(const DensityMatrix& rho);
/// The same table computed through the symplectic Fourier transform of Xi.
WignerTable wigner_from_characteristic(const CharacteristicTable& table);

/// Beam-splitter weights with s^2 + t^2 = 1 mod d.
struct BSParams {
  QuditParams params;
  int s = 1;
  int t = 0;

  static BSParams make(const QuditParams& params, int s, int t);
  /// s^2 and t^2 both outside {0, 1}.
  bool nontrivial() const;
  /// The pair (t, s), which is again valid.
  BSParams swapped() const { return BSParams{params, t, s}; }
};

std::vector<BSParams> valid_st_pairs(const QuditParams& params);

// Clifford words.

enum class CliffordGateKind { kFourier, kPhase, kCx, kWeyl };

struct CliffordGate {
  CliffordGateKind kind = CliffordGateKind::kFourier;
  int qudit = 0;
  /// Target of kCx (control is `qudit`).
  int other = 0;
  /// Displacement of kWeyl.
  WeylIndex shift;
};

/// F|j> = d^{-1/2} sum_k omega^{-jk} |k>, so that F Z F^dagger = X.
ComplexMatrix fourier_gate(int d);
/// |k> -> omega^{2^{-1} k^2} |k>.
ComplexMatrix phase_gate(int d);
/// |a, b> -> |a, a + b>.
ComplexMatrix cx_gate(int d);

ComplexMatrix clifford_unitary(const QuditParams& params, const std::vector<CliffordGate>& word);
std::vector<CliffordGate> random_clifford_word(const QuditParams& params, std::uint64_t seed, int length = 24);
/// Unitary of a random word of at least 20 generators. n must be 1 or 2.
ComplexMatrix random_clifford(const QuditParams& params, std::uint64_t seed, int length = 24);

struct CliffordImage {
  WeylIndex label;
  Complex phase;
};

/// If U w(x) U^dagger = phase * w(y) within 1e-9, returns (y, phase).
std::optional<CliffordImage> clifford_conjugation_image(const QuditParams& params, const ComplexMatrix& u,
                                                        const WeylIndex& x);

}  // namespace qmcap
