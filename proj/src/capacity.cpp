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

#include "qmcap/capacity.hpp"

#include <algorithm>
#include <cmath>

#include "qmcap/error.hpp"
#include "qmcap/parallel.hpp"

namespace qmcap {

double coherent_information(const BeamSplitterChannel& chan, const DensityMatrix& rho) {
  return von_neumann_entropy(chan.apply(rho.matrix())) - von_neumann_entropy(chan.apply_dilation_complement(rho.matrix()));
}

namespace {

ComplexMatrix log2_clamped(const ComplexMatrix& m) {
  Spectrum sp = eig_hermitian(m);
  RealVector logs(static_cast<Index>(sp.values.size()));
  for (std::size_t k = 0; k < sp.values.size(); ++k) logs(static_cast<Index>(k)) = std::log2(std::max(sp.values[k], 1e-15));
  return sp.vectors * logs.asDiagonal() * sp.vectors.adjoint();
}

}  // namespace

ComplexMatrix coherent_information_gradient(const BeamSplitterChannel& chan, const ComplexMatrix& rho) {
  ComplexMatrix h = chan.apply_dilation_complement_adjoint(log2_clamped(chan.apply_dilation_complement(rho))) -
                    chan.apply_adjoint(log2_clamped(chan.apply(rho)));
  return 0.5 * (h + h.adjoint());
}

double coherent_information_purified(const BeamSplitterChannel& chan, const DensityMatrix& rho) {
  PurifiedState psi = purify(rho);
  ComplexMatrix joint = chan.apply_extended(psi.projector(), psi.reference_dim);
  return von_neumann_entropy(chan.apply(rho.matrix())) - von_neumann_entropy(joint);
}

namespace {

ComplexMatrix unpack(const RealVector& x, Index dim) {
  ComplexMatrix g(dim, dim);
  for (Index k = 0; k < dim * dim; ++k) g(k / dim, k % dim) = Complex(x(2 * k), x(2 * k + 1));
  return g;
}

RealVector pack(const ComplexMatrix& g) {
  Index dim = g.rows();
  RealVector x(2 * dim * dim);
  for (Index k = 0; k < dim * dim; ++k) {
    x(2 * k) = g(k / dim, k % dim).real();
    x(2 * k + 1) = g(k / dim, k % dim).imag();
  }
  return x;
}

ComplexMatrix state_from_factor(const ComplexMatrix& g) {
  ComplexMatrix m = g * g.adjoint();
  return m / m.trace().real();
}

}  // namespace

CapacityReport qcap_one_shot(const BeamSplitterChannel& chan, const CapacityOptions& options) {
  if (options.restarts < 1) throw_error(ErrorCode::kInvalidArgument, "capacity: restarts must be positive");
  if (options.iterations < 0) throw_error(ErrorCode::kInvalidArgument, "capacity: iterations must be nonnegative");
  const QuditParams& params = chan.params();
  Index dim = chan.dim();
  if (dim > 49) throw_error(ErrorCode::kUnsupported, "capacity optimization supports d^n <= 49");

  auto objective = [&](const RealVector& x) {
    ComplexMatrix g = unpack(x, dim);
    double norm = g.squaredNorm();
    if (!(norm > 1e-300)) return -kInfinity;
    ComplexMatrix rho = g * g.adjoint() / norm;
    return shannon_entropy(eigenvalues_hermitian(chan.apply(rho))) -
           shannon_entropy(eigenvalues_hermitian(chan.apply_dilation_complement(rho)));
  };
  // rho = G G^dagger / t gives d I_c = (2 / t) Re Tr(G^dagger (H - Tr(H rho)) dG).
  auto gradient = [&](const RealVector& x) {
    ComplexMatrix g = unpack(x, dim);
    double norm = g.squaredNorm();
    if (!(norm > 1e-300)) return RealVector(RealVector::Zero(x.size()));
    ComplexMatrix rho = g * g.adjoint() / norm;
    ComplexMatrix h = coherent_information_gradient(chan, rho);
    h -= (h * rho).trace().real() * ComplexMatrix::Identity(dim, dim);
    return RealVector(pack((2.0 / norm) * h * g));
  };

  // Structured candidates seed the first restart.
  std::vector<ComplexMatrix> pool;
  pool.push_back(ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim));
  for (Index k = 1; k < dim; ++k) {
    ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
    m(0, 0) = 0.5;
    m(k, k) = 0.5;
    pool.push_back(m);
  }
  for (const DensityMatrix& w : options.warm_starts) {
    if (w.params() != params) throw_error(ErrorCode::kInvalidArgument, "capacity: warm start has the wrong dimension");
    pool.push_back(w.matrix());
  }
  std::size_t best_seed = 0;
  double best_seed_value = -kInfinity;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    double v = coherent_information(chan, DensityMatrix::trusted(params, pool[i]));
    if (v > best_seed_value) {
      best_seed_value = v;
      best_seed = i;
    }
  }

  AscentOptions ascent;
  ascent.iterations = options.iterations;
  ascent.polish_steps = options.polish_steps;
  std::vector<RestartTrace> traces(options.restarts);
  std::vector<ComplexMatrix> results(options.restarts);
  parallel_for(static_cast<std::size_t>(options.restarts), [&](std::size_t r) {
    std::uint64_t seed = split_seed(options.seed, r);
    Rng rng(seed);
    ComplexMatrix g = r == 0 ? psd_sqrt(pool[best_seed]) : random_ginibre(dim, dim, rng);
    RestartTrace trace;
    trace.seed = seed;
    RealVector x = maximize(objective, pack(g), rng, ascent, trace.ascent, gradient);
    results[r] = state_from_factor(unpack(x, dim));
    traces[r] = std::move(trace);
  });

  CapacityReport report;
  report.restarts = options.restarts;
  report.seed = options.seed;
  std::size_t best = 0;
  for (std::size_t r = 0; r < traces.size(); ++r) {
    report.evaluations += traces[r].ascent.evaluations;
    report.budget_exhausted = report.budget_exhausted || traces[r].ascent.budget_exhausted;
    if (traces[r].ascent.best_value > traces[best].ascent.best_value) best = r;
  }
  report.best_state = DensityMatrix::trusted(params, results[best]);
  report.best_value = coherent_information(chan, *report.best_state);
  report.traces = std::move(traces);
  return report;
}

Thm3Construction thm3_construction(const BSParams& bs) {
  const QuditParams& params = bs.params;
  if (params.n != 1) throw_error(ErrorCode::kUnsupported, "thm3_construction: single-qudit beam splitters only");
  if (!bs.nontrivial()) {
    throw_error(ErrorCode::kInvalidArgument, "thm3_construction: (s, t) = (" + std::to_string(bs.s) + ", " +
                                                 std::to_string(bs.t) + ") is trivial");
  }
  int d = params.d;
  Index dim = params.dim();
  int s2 = params.mod(static_cast<std::int64_t>(bs.s) * bs.s);
  int t2 = params.mod(static_cast<std::int64_t>(bs.t) * bs.t);
  if (s2 != t2) {
    // t^{-1} s, found by search since d is small.
    int ratio = 0;
    for (int k = 1; k < d; ++k) {
      if (params.mod(static_cast<std::int64_t>(bs.t) * k) == bs.s) ratio = k;
    }
    ComplexMatrix rho = ComplexMatrix::Zero(dim, dim);
    rho(0, 0) = 0.5;
    rho(ratio, ratio) = 0.5;
    return Thm3Construction{"s2-neq-t2", preset_state("uniform-01", params), DensityMatrix(params, rho), 0.5, {}, {}};
  }
  bool same = bs.s == bs.t;
  ComplexMatrix psi = ComplexMatrix::Zero(2, dim);
  psi(0, 0) = std::sqrt(6.0) / 5;
  psi(0, 1) = 3.0 / 5;
  psi(1, 0) = std::sqrt(2.0 / 5);
  DensityMatrix rho(params, psi.transpose() * psi);
  double r61 = std::sqrt(61.0);
  double r1321 = std::sqrt(1321.0);
  std::vector<double> tau_b = {59.0 / 125, 3 * (11 + r61) / 125, 3 * (11 - r61) / 125};
  std::vector<double> tau_a = {66.0 / 125, (59 + r1321) / 250, (59 - r1321) / 250};
  std::sort(tau_b.rbegin(), tau_b.rend());
  std::sort(tau_a.rbegin(), tau_a.rend());
  double expected = shannon_entropy(tau_a) - shannon_entropy(tau_b);
  return Thm3Construction{same ? "s-eq-t" : "s-eq-minus-t",
                          preset_state(same ? "appc-a" : "appc-b", params),
                          rho,
                          expected,
                          tau_a,
                          tau_b};
}

}  // namespace qmcap
