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

#include "qmcap/weyl.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qmcap/error.hpp"

namespace qmcap {

WeylIndex WeylIndex::zero(int n) { return WeylIndex{std::vector<int>(n, 0), std::vector<int>(n, 0)}; }

WeylIndex normalize(const QuditParams& params, WeylIndex x) {
  if (static_cast<int>(x.p.size()) != params.n || static_cast<int>(x.q.size()) != params.n) {
    throw_error(ErrorCode::kInvalidArgument,
                "Weyl label must have " + std::to_string(params.n) + " p and q components");
  }
  for (int& v : x.p) v = params.mod(v);
  for (int& v : x.q) v = params.mod(v);
  return x;
}

WeylIndex add(const QuditParams& params, const WeylIndex& x, const WeylIndex& y) {
  WeylIndex out = x;
  for (int i = 0; i < params.n; ++i) {
    out.p[i] = params.mod(x.p[i] + y.p[i]);
    out.q[i] = params.mod(x.q[i] + y.q[i]);
  }
  return out;
}

WeylIndex negate(const QuditParams& params, const WeylIndex& x) { return scale(params, -1, x); }

WeylIndex scale(const QuditParams& params, std::int64_t k, const WeylIndex& x) {
  WeylIndex out = x;
  for (int i = 0; i < params.n; ++i) {
    out.p[i] = params.mod(k * x.p[i]);
    out.q[i] = params.mod(k * x.q[i]);
  }
  return out;
}

int symplectic_form(const QuditParams& params, const WeylIndex& x, const WeylIndex& y) {
  std::int64_t acc = 0;
  for (int i = 0; i < params.n; ++i) {
    acc += static_cast<std::int64_t>(x.p[i]) * y.q[i] - static_cast<std::int64_t>(x.q[i]) * y.p[i];
  }
  return params.mod(acc);
}

bool is_zero(const WeylIndex& x) {
  return std::all_of(x.p.begin(), x.p.end(), [](int v) { return v == 0; }) &&
         std::all_of(x.q.begin(), x.q.end(), [](int v) { return v == 0; });
}

std::string to_string(const WeylIndex& x) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < x.p.size(); ++i) out << (i ? "," : "") << x.p[i];
  out << ";";
  for (std::size_t i = 0; i < x.q.size(); ++i) out << (i ? "," : "") << x.q[i];
  out << ")";
  return out.str();
}

Index digits_to_index(const QuditParams& params, const std::vector<int>& digits) {
  Index out = 0;
  for (int v : digits) {
    out = out * params.d + v;
  }
  return out;
}

std::vector<int> index_to_digits(const QuditParams& params, Index k) {
  std::vector<int> digits(params.n);
  for (int i = params.n - 1; i >= 0; --i) {
    digits[i] = static_cast<int>(k % params.d);
    k /= params.d;
  }
  return digits;
}

std::size_t flat_index(const QuditParams& params, const WeylIndex& x) {
  WeylIndex y = normalize(params, x);
  return static_cast<std::size_t>(digits_to_index(params, y.p) * params.dim() + digits_to_index(params, y.q));
}

WeylIndex from_flat(const QuditParams& params, std::size_t flat) {
  Index dim = params.dim();
  return WeylIndex{index_to_digits(params, static_cast<Index>(flat) / dim),
                   index_to_digits(params, static_cast<Index>(flat) % dim)};
}

std::size_t label_count(const QuditParams& params) {
  return static_cast<std::size_t>(params.dim() * params.dim());
}

ComplexMatrix MonomialOperator::dense() const {
  ComplexMatrix out = ComplexMatrix::Zero(dim(), dim());
  for (Index k = 0; k < dim(); ++k) {
    out(target[k], k) = phase[k];
  }
  return out;
}

Complex MonomialOperator::trace_with(const ComplexMatrix& rho) const {
  // Tr(rho M) = sum_k <k| rho M |k> = sum_k phase[k] rho(k, target[k]).
  Complex acc = 0;
  for (Index k = 0; k < dim(); ++k) {
    acc += phase[k] * rho(k, target[k]);
  }
  return acc;
}

ComplexMatrix MonomialOperator::conjugate(const ComplexMatrix& x) const {
  ComplexMatrix out(dim(), dim());
  for (Index j = 0; j < dim(); ++j) {
    for (Index i = 0; i < dim(); ++i) {
      out(target[i], target[j]) = phase[i] * x(i, j) * std::conj(phase[j]);
    }
  }
  return out;
}

namespace {

// Applies per-qudit rules |k_i> -> omega^{e_i(k_i)} |f_i(k_i)> across the register.
template <typename Rule>
MonomialOperator build_monomial(const QuditParams& params, Rule rule) {
  static thread_local int cached_d = 0;
  static thread_local std::vector<Complex> roots;
  if (cached_d != params.d) {
    roots = roots_of_unity(params.d);
    cached_d = params.d;
  }
  Index dim = params.dim();
  MonomialOperator out;
  out.target.resize(dim);
  out.phase.resize(dim);
  std::vector<int> digits(params.n, 0);
  for (Index k = 0; k < dim; ++k) {
    std::int64_t exponent = 0;
    Index target = 0;
    for (int i = 0; i < params.n; ++i) {
      auto [e, f] = rule(i, digits[i]);
      exponent += e;
      target = target * params.d + f;
    }
    out.target[k] = target;
    out.phase[k] = roots[params.mod(exponent)];
    for (int i = params.n - 1; i >= 0; --i) {
      if (++digits[i] < params.d) break;
      digits[i] = 0;
    }
  }
  return out;
}

}  // namespace

MonomialOperator weyl_monomial(const QuditParams& params, const WeylIndex& x0) {
  require_odd_prime(params, "weyl_operator");
  WeylIndex x = normalize(params, x0);
  std::int64_t h = params.inverse_two();
  return build_monomial(params, [&](int i, int k) {
    std::int64_t p = x.p[i];
    std::int64_t q = x.q[i];
    return std::pair<std::int64_t, int>{-h * p * q + p * (k + q), params.mod(k + q)};
  });
}

ComplexMatrix weyl_operator(const QuditParams& params, const WeylIndex& x) {
  return weyl_monomial(params, x).dense();
}

MonomialOperator phase_point_monomial(const QuditParams& params, const WeylIndex& x0) {
  require_odd_prime(params, "phase_point_operator");
  WeylIndex x = normalize(params, x0);
  return build_monomial(params, [&](int i, int k) {
    std::int64_t p = x.p[i];
    std::int64_t q = x.q[i];
    return std::pair<std::int64_t, int>{2 * p * (q - k), params.mod(2 * q - k)};
  });
}

ComplexMatrix phase_point_operator(const QuditParams& params, const WeylIndex& x) {
  return phase_point_monomial(params, x).dense();
}

CharacteristicTable characteristic_function(const QuditParams& params, const ComplexMatrix& op) {
  require_odd_prime(params, "characteristic_function");
  if (op.rows() != params.dim() || op.cols() != params.dim()) {
    throw_error(ErrorCode::kInvalidArgument, "characteristic_function: operator dimension mismatch");
  }
  CharacteristicTable table{params, std::vector<Complex>(label_count(params))};
  for (std::size_t flat = 0; flat < table.values.size(); ++flat) {
    WeylIndex minus_x = negate(params, from_flat(params, flat));
    table.values[flat] = weyl_monomial(params, minus_x).trace_with(op);
  }
  return table;
}

CharacteristicTable characteristic_function(const DensityMatrix& rho) {
  return characteristic_function(rho.params(), rho.matrix());
}

ComplexMatrix inverse_weyl_transform(const CharacteristicTable& table) {
  const QuditParams& params = table.params;
  if (table.values.size() != label_count(params)) {
    throw_error(ErrorCode::kInvalidArgument, "inverse_weyl_transform: incomplete table");
  }
  Index dim = params.dim();
  ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
  for (std::size_t flat = 0; flat < table.values.size(); ++flat) {
    Complex c = table.values[flat];
    if (c == Complex(0)) continue;
    MonomialOperator w = weyl_monomial(params, from_flat(params, flat));
    for (Index k = 0; k < dim; ++k) {
      out(w.target[k], k) += c * w.phase[k];
    }
  }
  return out / static_cast<double>(dim);
}

std::vector<double> WignerTable::normalized() const {
  std::vector<double> out(raw.size());
  double scale = 1.0 / static_cast<double>(params.dim());
  std::transform(raw.begin(), raw.end(), out.begin(), [&](double v) { return v * scale; });
  return out;
}

double WignerTable::min_raw() const { return *std::min_element(raw.begin(), raw.end()); }

WignerTable wigner_function(const DensityMatrix& rho) {
  const QuditParams& params = rho.params();
  require_odd_prime(params, "wigner_function");
  WignerTable table{params, std::vector<double>(label_count(params)), 0};
  for (std::size_t flat = 0; flat < table.raw.size(); ++flat) {
    Complex v = phase_point_monomial(params, from_flat(params, flat)).trace_with(rho.matrix());
    table.raw[flat] = v.real();
    table.max_imaginary = std::max(table.max_imaginary, std::abs(v.imag()));
  }
  return table;
}

WignerTable wigner_from_characteristic(const CharacteristicTable& xi) {
  const QuditParams& params = xi.params;
  std::vector<Complex> roots = roots_of_unity(params.d);
  std::size_t count = label_count(params);
  WignerTable table{params, std::vector<double>(count), 0};
  std::vector<WeylIndex> labels(count);
  for (std::size_t f = 0; f < count; ++f) labels[f] = from_flat(params, f);
  for (std::size_t fx = 0; fx < count; ++fx) {
    Complex acc = 0;
    for (std::size_t fu = 0; fu < count; ++fu) {
      // Tr(rho w(u)) = Xi(-u), weighted by omega^{[x, u]}.
      Complex tr = xi.values[flat_index(params, negate(params, labels[fu]))];
      acc += roots[symplectic_form(params, labels[fx], labels[fu])] * tr;
    }
    acc /= static_cast<double>(params.dim());
    table.raw[fx] = acc.real();
    table.max_imaginary = std::max(table.max_imaginary, std::abs(acc.imag()));
  }
  return table;
}

BSParams BSParams::make(const QuditParams& params, int s, int t) {
  BSParams out{params, params.mod(s), params.mod(t)};
  if (params.mod(static_cast<std::int64_t>(out.s) * out.s + static_cast<std::int64_t>(out.t) * out.t) != 1 % params.d) {
    throw_error(ErrorCode::kInvalidArgument, "(s, t) = (" + std::to_string(s) + ", " + std::to_string(t) +
                                                 ") does not satisfy s^2 + t^2 = 1 mod " + std::to_string(params.d));
  }
  return out;
}

bool BSParams::nontrivial() const {
  int s2 = params.mod(static_cast<std::int64_t>(s) * s);
  int t2 = params.mod(static_cast<std::int64_t>(t) * t);
  return s2 != 0 && s2 != 1 && t2 != 0 && t2 != 1;
}

std::vector<BSParams> valid_st_pairs(const QuditParams& params) {
  std::vector<BSParams> out;
  for (int s = 0; s < params.d; ++s) {
    for (int t = 0; t < params.d; ++t) {
      if (params.mod(s * s + t * t) == 1 % params.d) {
        out.push_back(BSParams{params, s, t});
      }
    }
  }
  return out;
}

ComplexMatrix fourier_gate(int d) {
  std::vector<Complex> roots = roots_of_unity(d);
  ComplexMatrix f(d, d);
  double norm = 1.0 / std::sqrt(static_cast<double>(d));
  for (int k = 0; k < d; ++k) {
    for (int j = 0; j < d; ++j) {
      f(k, j) = roots[((-j * k) % d + d) % d] * norm;
    }
  }
  return f;
}

ComplexMatrix phase_gate(int d) {
  std::vector<Complex> roots = roots_of_unity(d);
  std::int64_t h = (d + 1) / 2;
  ComplexMatrix p = ComplexMatrix::Zero(d, d);
  for (int k = 0; k < d; ++k) {
    p(k, k) = roots[(h * k * k) % d];
  }
  return p;
}

ComplexMatrix cx_gate(int d) {
  ComplexMatrix g = ComplexMatrix::Zero(d * d, d * d);
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      g(a * d + (a + b) % d, a * d + b) = 1;
    }
  }
  return g;
}

namespace {

ComplexMatrix embed(const QuditParams& params, const ComplexMatrix& gate, int first, int width) {
  Index before = 1;
  for (int i = 0; i < first; ++i) before *= params.d;
  Index after = 1;
  for (int i = first + width; i < params.n; ++i) after *= params.d;
  return kron(kron(ComplexMatrix::Identity(before, before), gate), ComplexMatrix::Identity(after, after));
}

// CX with arbitrary control/target qudits, as a permutation on the full register.
ComplexMatrix cx_on(const QuditParams& params, int control, int target) {
  Index dim = params.dim();
  ComplexMatrix g = ComplexMatrix::Zero(dim, dim);
  for (Index k = 0; k < dim; ++k) {
    std::vector<int> digits = index_to_digits(params, k);
    digits[target] = params.mod(digits[target] + digits[control]);
    g(digits_to_index(params, digits), k) = 1;
  }
  return g;
}

}  // namespace

ComplexMatrix clifford_unitary(const QuditParams& params, const std::vector<CliffordGate>& word) {
  require_odd_prime(params, "clifford_unitary");
  Index dim = params.dim();
  ComplexMatrix u = ComplexMatrix::Identity(dim, dim);
  for (const CliffordGate& g : word) {
    if (g.qudit < 0 || g.qudit >= params.n) {
      throw_error(ErrorCode::kInvalidArgument, "clifford gate qudit out of range");
    }
    ComplexMatrix m;
    switch (g.kind) {
      case CliffordGateKind::kFourier:
        m = embed(params, fourier_gate(params.d), g.qudit, 1);
        break;
      case CliffordGateKind::kPhase:
        m = embed(params, phase_gate(params.d), g.qudit, 1);
        break;
      case CliffordGateKind::kCx:
        if (g.other < 0 || g.other >= params.n || g.other == g.qudit) {
          throw_error(ErrorCode::kInvalidArgument, "CX needs two distinct qudits");
        }
        m = cx_on(params, g.qudit, g.other);
        break;
      case CliffordGateKind::kWeyl:
        m = weyl_operator(params, g.shift);
        break;
    }
    u = m * u;
  }
  return u;
}

std::vector<CliffordGate> random_clifford_word(const QuditParams& params, std::uint64_t seed, int length) {
  if (params.n < 1 || params.n > 2) {
    throw_error(ErrorCode::kUnsupported, "random_clifford supports n = 1 or 2");
  }
  length = std::max(length, 20);
  Rng rng(seed);
  int kinds = params.n == 2 ? 4 : 3;
  std::uniform_int_distribution<int> pick_kind(0, kinds - 1);
  std::uniform_int_distribution<int> pick_qudit(0, params.n - 1);
  std::uniform_int_distribution<int> pick_value(0, params.d - 1);
  std::vector<CliffordGate> word;
  word.reserve(length);
  for (int k = 0; k < length; ++k) {
    int kind = pick_kind(rng);
    CliffordGate g;
    g.qudit = pick_qudit(rng);
    if (kind == 0) {
      g.kind = CliffordGateKind::kFourier;
    } else if (kind == 1) {
      g.kind = CliffordGateKind::kPhase;
    } else if (kind == 2) {
      g.kind = CliffordGateKind::kWeyl;
      g.shift = WeylIndex::zero(params.n);
      for (int i = 0; i < params.n; ++i) {
        g.shift.p[i] = pick_value(rng);
        g.shift.q[i] = pick_value(rng);
      }
    } else {
      g.kind = CliffordGateKind::kCx;
      g.other = 1 - g.qudit;
    }
    word.push_back(g);
  }
  return word;
}

ComplexMatrix random_clifford(const QuditParams& params, std::uint64_t seed, int length) {
  return clifford_unitary(params, random_clifford_word(params, seed, length));
}

std::optional<CliffordImage> clifford_conjugation_image(const QuditParams& params, const ComplexMatrix& u,
                                                        const WeylIndex& x) {
  ComplexMatrix image = u * weyl_operator(params, x) * u.adjoint();
  CharacteristicTable coeffs = characteristic_function(params, image);
  double dim = static_cast<double>(params.dim());
  std::size_t best = 0;
  for (std::size_t f = 1; f < coeffs.values.size(); ++f) {
    if (std::abs(coeffs.values[f]) > std::abs(coeffs.values[best])) best = f;
  }
  // Tr(M w(-y)) / d^n is the coefficient of w(y).
  Complex phase = coeffs.values[best] / dim;
  WeylIndex y = from_flat(params, best);
  if ((image - phase * weyl_operator(params, y)).norm() > 1e-9) {
    return std::nullopt;
  }
  return CliffordImage{y, phase};
}

}  // namespace qmcap
