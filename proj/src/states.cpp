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

#include "qmcap/states.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <set>

#include "qmcap/error.hpp"

namespace qmcap {

namespace {

ComplexVector basis_ket(int d, int k) {
  ComplexVector v = ComplexVector::Zero(d);
  v(((k % d) + d) % d) += 1.0;
  return v;
}

ComplexVector two_term_ket(int d, double a, int ka, double b, int kb) {
  return a * basis_ket(d, ka) + b * basis_ket(d, kb);
}

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {"ket-zero", "uniform-01", "symmetric-pm1", "appc-a",
                                                 "appc-b",   "appe-magic", "maximally-mixed"};
  return names;
}

DensityMatrix preset_state(const std::string& name, const QuditParams& params, const std::optional<BSParams>& bs) {
  QuditParams single{params.d, 1};
  int d = params.d;
  double r = std::sqrt(0.5);
  ComplexVector ket;
  if (name == "maximally-mixed") {
    return DensityMatrix::maximally_mixed(params);
  } else if (name == "ket-zero") {
    ket = basis_ket(d, 0);
  } else if (name == "uniform-01") {
    ket = two_term_ket(d, r, 0, r, 1);
  } else if (name == "symmetric-pm1") {
    ket = two_term_ket(d, r, 1, r, -1);
  } else if (name == "appc-a") {
    ket = two_term_ket(d, std::sqrt(0.4), 0, std::sqrt(0.6), 1);
  } else if (name == "appc-b") {
    ket = two_term_ket(d, std::sqrt(0.4), 0, std::sqrt(0.6), -1);
  } else if (name == "appe-magic") {
    if (!bs) {
      throw_error(ErrorCode::kInvalidArgument, "preset appe-magic needs beam-splitter parameters (s, t)");
    }
    ket = two_term_ket(d, r, 0, r, bs->t);
  } else {
    throw_error(ErrorCode::kInvalidArgument, "unknown preset state '" + name + "'");
  }
  return tensor_power(DensityMatrix::pure(single, ket), params.n);
}

DensityMatrix stabilizer_state(const QuditParams& params, const std::vector<StabilizerGenerator>& generators) {
  require_odd_prime(params, "stabilizer_state");
  std::vector<Complex> roots = roots_of_unity(params.d);
  Index dim = params.dim();
  for (std::size_t i = 0; i < generators.size(); ++i) {
    for (std::size_t j = i + 1; j < generators.size(); ++j) {
      if (symplectic_form(params, generators[i].label, generators[j].label) != 0) {
        throw_error(ErrorCode::kInvalidArgument, "stabilizer generators do not commute");
      }
    }
  }
  ComplexMatrix state = ComplexMatrix::Identity(dim, dim);
  for (const StabilizerGenerator& g : generators) {
    ComplexMatrix projector = ComplexMatrix::Zero(dim, dim);
    for (int k = 0; k < params.d; ++k) {
      MonomialOperator w = weyl_monomial(params, scale(params, k, g.label));
      Complex c = roots[params.mod(-static_cast<std::int64_t>(g.character) * k)] / static_cast<double>(params.d);
      for (Index a = 0; a < dim; ++a) {
        projector(w.target[a], a) += c * w.phase[a];
      }
    }
    state = state * projector;
  }
  double norm = state.trace().real();
  return DensityMatrix::trusted(params, state / norm);
}

StabilizerFamily::StabilizerFamily(QuditParams params, std::vector<StabilizerMember> members)
    : params_(params), members_(std::move(members)) {
  if (params_.n == 1) {
    cache_.reserve(members_.size());
    for (const StabilizerMember& m : members_) {
      cache_.push_back(stabilizer_state(params_, m.generators).matrix());
    }
  }
}

DensityMatrix StabilizerFamily::state(std::size_t i) const {
  if (i >= members_.size()) {
    throw_error(ErrorCode::kInvalidArgument, "stabilizer member index out of range");
  }
  if (!cache_.empty()) {
    return DensityMatrix::trusted(params_, cache_[i]);
  }
  return stabilizer_state(params_, members_[i].generators);
}

std::vector<std::size_t> StabilizerFamily::pure_members() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i].rank() == params_.n) out.push_back(i);
  }
  return out;
}

namespace {

using Vec4 = std::vector<int>;

WeylIndex label_from_vector(const QuditParams& params, const Vec4& v) {
  WeylIndex x = WeylIndex::zero(params.n);
  for (int i = 0; i < params.n; ++i) {
    x.p[i] = v[i];
    x.q[i] = v[params.n + i];
  }
  return x;
}

// All k-dimensional subspaces of Z_d^m in reduced row echelon form.
void echelon_subspaces(int d, int m, int k, std::vector<std::vector<Vec4>>& out) {
  std::vector<int> pivots(k);
  std::function<void(int, int)> choose_pivots = [&](int idx, int start) {
    if (idx == k) {
      // Free entries: row r, columns after pivots[r] that are not pivot columns.
      std::vector<std::pair<int, int>> free;
      for (int r = 0; r < k; ++r) {
        for (int c = pivots[r] + 1; c < m; ++c) {
          if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free.emplace_back(r, c);
        }
      }
      std::vector<int> values(free.size(), 0);
      for (;;) {
        std::vector<Vec4> rows(k, Vec4(m, 0));
        for (int r = 0; r < k; ++r) rows[r][pivots[r]] = 1;
        for (std::size_t f = 0; f < free.size(); ++f) rows[free[f].first][free[f].second] = values[f];
        out.push_back(rows);
        std::size_t f = 0;
        while (f < values.size() && ++values[f] == d) values[f++] = 0;
        if (f == values.size()) break;
      }
      return;
    }
    for (int c = start; c < m; ++c) {
      pivots[idx] = c;
      choose_pivots(idx + 1, c + 1);
    }
  };
  choose_pivots(0, 0);
}

std::vector<StabilizerMember> enumerate_members(const QuditParams& params) {
  int d = params.d;
  int m = 2 * params.n;
  std::vector<StabilizerMember> out;
  for (int r = params.n; r >= 1; --r) {
    std::vector<std::vector<Vec4>> subspaces;
    echelon_subspaces(d, m, r, subspaces);
    for (const auto& rows : subspaces) {
      std::vector<WeylIndex> labels;
      for (const Vec4& row : rows) labels.push_back(label_from_vector(params, row));
      bool isotropic = true;
      for (std::size_t i = 0; i < labels.size() && isotropic; ++i) {
        for (std::size_t j = i + 1; j < labels.size(); ++j) {
          if (symplectic_form(params, labels[i], labels[j]) != 0) {
            isotropic = false;
            break;
          }
        }
      }
      if (!isotropic) continue;
      std::vector<int> chars(r, 0);
      for (;;) {
        StabilizerMember member;
        for (int i = 0; i < r; ++i) member.generators.push_back({labels[i], chars[i]});
        out.push_back(std::move(member));
        int i = 0;
        while (i < r && ++chars[i] == d) chars[i++] = 0;
        if (i == r) break;
      }
    }
  }
  out.push_back(StabilizerMember{});
  return out;
}

}  // namespace

std::shared_ptr<const StabilizerFamily> enumerate_stabilizers(const QuditParams& params, bool heavy) {
  require_odd_prime(params, "enumerate_stabilizers");
  if (params.n > 2 || (params.n == 2 && !heavy)) {
    throw_error(ErrorCode::kUnsupported, "stabilizer enumeration supports n = 1, or n = 2 in heavy mode");
  }
  if (params.n == 2 && params.d > 7) {
    throw_error(ErrorCode::kUnsupported, "two-qudit stabilizer enumeration supports d <= 7");
  }
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const StabilizerFamily>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto key = std::make_pair(params.d, params.n);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto family = std::make_shared<const StabilizerFamily>(params, enumerate_members(params));
  if (params.n == 1) cache.emplace(key, family);
  return family;
}

DensityMatrix mean_state(const DensityMatrix& rho) {
  const QuditParams& params = rho.params();
  CharacteristicTable table = characteristic_function(rho);
  for (Complex& v : table.values) {
    if (std::abs(v) < 1 - 1e-9) v = 0;
  }
  DensityMatrix mean = DensityMatrix::trusted(params, inverse_weyl_transform(table));
  if (params.n == 1) {
    auto family = enumerate_stabilizers(params);
    double best = kInfinity;
    for (std::size_t i = 0; i < family->size(); ++i) {
      best = std::min(best, frobenius_distance(mean.matrix(), family->state(i).matrix()));
    }
    if (best > 1e-8) {
      throw_error(ErrorCode::kNumerical, "mean state is not a stabilizer state (distance " + std::to_string(best) + ")");
    }
  }
  return mean;
}

PurifiedState purify(const DensityMatrix& rho) {
  Spectrum sp = eig_hermitian(rho.matrix());
  Index rank = 0;
  for (double v : sp.values) {
    if (v > kSupportThreshold) ++rank;
  }
  PurifiedState out;
  out.reference_dim = rank;
  out.system_dim = rho.dim();
  out.vector = ComplexVector::Zero(rank * rho.dim());
  for (Index k = 0; k < rank; ++k) {
    out.vector.segment(k * rho.dim(), rho.dim()) = std::sqrt(sp.values[k]) * sp.vectors.col(k);
  }
  out.vector.normalize();
  return out;
}

DensityMatrix dephasing_channel(const std::vector<WeylIndex>& generators, const DensityMatrix& rho) {
  const QuditParams& params = rho.params();
  require_odd_prime(params, "dephasing_channel");
  std::vector<WeylIndex> gens;
  for (const WeylIndex& g : generators) gens.push_back(normalize(params, g));
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (symplectic_form(params, gens[i], gens[j]) != 0) {
        throw_error(ErrorCode::kInvalidArgument, "dephasing generators " + to_string(gens[i]) + " and " +
                                                     to_string(gens[j]) + " do not commute");
      }
    }
  }
  std::set<std::size_t> group{flat_index(params, WeylIndex::zero(params.n))};
  for (const WeylIndex& g : gens) {
    std::set<std::size_t> next;
    for (std::size_t e : group) {
      WeylIndex x = from_flat(params, e);
      for (int k = 0; k < params.d; ++k) next.insert(flat_index(params, add(params, x, scale(params, k, g))));
    }
    group = std::move(next);
  }
  ComplexMatrix out = ComplexMatrix::Zero(rho.dim(), rho.dim());
  for (std::size_t e : group) {
    out += weyl_monomial(params, from_flat(params, e)).conjugate(rho.matrix());
  }
  return DensityMatrix::trusted(params, out / static_cast<double>(group.size()));
}

ComplexMatrix phase_inversion(const QuditParams& params, const ComplexMatrix& x) {
  return phase_point_monomial(params, WeylIndex::zero(params.n)).conjugate(x);
}

InversionSymmetry phase_inversion_symmetry(const DensityMatrix& rho) {
  const QuditParams& params = rho.params();
  InversionSymmetry out;
  out.operator_distance = frobenius_distance(phase_inversion(params, rho.matrix()), rho.matrix());
  CharacteristicTable table = characteristic_function(rho);
  for (std::size_t f = 0; f < table.values.size(); ++f) {
    WeylIndex minus = negate(params, from_flat(params, f));
    out.characteristic_deviation =
        std::max(out.characteristic_deviation, std::abs(table.values[f] - table.at(minus)));
  }
  out.symmetric = out.operator_distance <= 1e-9;
  return out;
}

bool is_phase_inversion_symmetric(const DensityMatrix& rho) {
  InversionSymmetry s = phase_inversion_symmetry(rho);
  bool by_table = s.characteristic_deviation <= 1e-9;
  if (by_table != s.symmetric) {
    throw_error(ErrorCode::kNumerical, "phase-inversion symmetry routes disagree (operator distance " +
                                           std::to_string(s.operator_distance) + ", table deviation " +
                                           std::to_string(s.characteristic_deviation) + ")");
  }
  return s.symmetric;
}

DensityMatrix random_pure_state(const QuditParams& params, Rng& rng) {
  ComplexMatrix g = random_ginibre(params.dim(), 1, rng);
  return DensityMatrix::pure(params, g.col(0));
}

DensityMatrix random_density_matrix(const QuditParams& params, Rng& rng) {
  ComplexMatrix g = random_ginibre(params.dim(), params.dim(), rng);
  ComplexMatrix m = g * g.adjoint();
  return DensityMatrix::trusted(params, m / m.trace().real());
}

}  // namespace qmcap
