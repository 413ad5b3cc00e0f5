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

#include "qmcap/magic.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qmcap/error.hpp"
#include "qmcap/lp.hpp"

namespace qmcap {

double mrm(const DensityMatrix& rho) { return entropy(mean_state(rho)) - entropy(rho); }

double mrm_enumerated(const DensityMatrix& rho, bool heavy) {
  auto family = enumerate_stabilizers(rho.params(), heavy);
  double best = kInfinity;
  for (std::size_t i = 0; i < family->size(); ++i) {
    best = std::min(best, relative_entropy(rho.matrix(), family->state(i).matrix()));
  }
  return best;
}

MrmInfResult mrm_inf(const DensityMatrix& rho, const MrmInfOptions& options) {
  const QuditParams& params = rho.params();
  if (params.n != 1) {
    throw_error(ErrorCode::kUnsupported, "mrm_inf supports single-qudit states");
  }
  auto family = enumerate_stabilizers(params);
  std::vector<ComplexVector> kets;
  for (std::size_t i : family->pure_members()) {
    Spectrum sp = eig_hermitian(family->state(i).matrix());
    kets.push_back(sp.vectors.col(0));
  }
  Index count = static_cast<Index>(kets.size());
  Index dim = rho.dim();

  // Dual of the covering program: maximize sum_c (v_c^dag rho v_c) z_c subject
  // to sum_c |<psi_i|v_c>|^2 z_c <= 1 for every stabilizer ket psi_i.
  DenseSimplex lp(RealVector::Ones(count));
  MrmInfResult result;
  auto add_cut = [&](const ComplexVector& v0) {
    ComplexVector v = v0.normalized();
    RealVector a(count);
    for (Index i = 0; i < count; ++i) a(i) = std::norm(kets[i].dot(v));
    lp.add_column(std::move(a), (v.adjoint() * rho.matrix() * v)(0, 0).real());
    ++result.cuts;
  };

  Spectrum sp = eig_hermitian(rho.matrix());
  for (Index k = 0; k < dim; ++k) {
    if (sp.values[k] > kSupportThreshold) add_cut(sp.vectors.col(k));
  }
  for (Index k = 0; k < dim; ++k) add_cut(ComplexVector::Unit(dim, k));

  for (;;) {
    DenseSimplex::Result lp_result = lp.solve();
    ++result.rounds;
    result.pivots += lp_result.pivots;
    result.weights.assign(lp_result.dual.data(), lp_result.dual.data() + count);
    result.total_weight = lp_result.dual_objective;
    result.value = std::log2(std::max(result.total_weight, 1e-300));
    result.lp_gap = std::abs(lp_result.dual_objective - lp_result.objective);

    ComplexMatrix slack = -rho.matrix();
    for (Index i = 0; i < count; ++i) slack += result.weights[i] * (kets[i] * kets[i].adjoint());
    Spectrum residual = eig_hermitian(slack);
    result.min_eigenvalue = residual.values.back();
    if (result.min_eigenvalue >= -options.tolerance) {
      result.converged = true;
      return result;
    }
    if (result.cuts >= options.max_cuts) {
      if (options.throw_on_budget) {
        std::ostringstream msg;
        msg.precision(12);
        msg << "mrm_inf: cut budget of " << options.max_cuts << " exhausted; best lower bound " << result.value
            << " bits, residual eigenvalue " << result.min_eigenvalue;
        throw_error(ErrorCode::kBudgetExceeded, msg.str());
      }
      return result;
    }
    for (Index k = dim - 1; k >= 0 && result.cuts < options.max_cuts; --k) {
      if (residual.values[k] >= 0) break;
      add_cut(residual.vectors.col(k));
    }
  }
}

double wigner_negativity(const DensityMatrix& rho) {
  WignerTable w = wigner_function(rho);
  double scale = 1.0 / static_cast<double>(rho.dim());
  double total = 0;
  for (double v : w.raw) total += std::max(0.0, -v * scale);
  return total;
}

}  // namespace qmcap
