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

#include "qmcap/coding.hpp"

#include <algorithm>
#include <cmath>

#include "qmcap/error.hpp"
#include "qmcap/magic.hpp"

namespace qmcap {

CodeSpec CodeSpec::make(ComplexMatrix encoding, std::vector<ComplexMatrix> decoding) {
  Index dim = encoding.rows();
  Index K = encoding.cols();
  if (K < 1 || K > dim) {
    throw_error(ErrorCode::kInvalidArgument, "code: need 1 <= K <= d^n, got K = " + std::to_string(K));
  }
  double iso = (encoding.adjoint() * encoding - ComplexMatrix::Identity(K, K)).cwiseAbs().maxCoeff();
  if (iso > 1e-10) {
    throw_error(ErrorCode::kInvalidArgument, "code: encoding is not an isometry (deviation " + std::to_string(iso) + ")");
  }
  if (decoding.empty()) throw_error(ErrorCode::kInvalidArgument, "code: decoder has no Kraus operators");
  ComplexMatrix sum = ComplexMatrix::Zero(dim, dim);
  for (const ComplexMatrix& k : decoding) {
    if (k.rows() != K || k.cols() != dim) {
      throw_error(ErrorCode::kInvalidArgument, "code: decoder Kraus operators must be K x d^n");
    }
    sum += k.adjoint() * k;
  }
  double comp = (sum - ComplexMatrix::Identity(dim, dim)).cwiseAbs().maxCoeff();
  if (comp > 1e-10) {
    throw_error(ErrorCode::kInvalidArgument, "code: decoder Kraus operators are not complete (deviation " +
                                                 std::to_string(comp) + ")");
  }
  return CodeSpec{static_cast<int>(K), std::move(encoding), std::move(decoding)};
}

std::vector<ComplexMatrix> projective_default_decoder(const ComplexMatrix& encoding) {
  Index dim = encoding.rows();
  Index K = encoding.cols();
  std::vector<ComplexMatrix> out{encoding.adjoint()};
  ComplexMatrix complement = ComplexMatrix::Identity(dim, dim) - encoding * encoding.adjoint();
  Spectrum sp = eig_hermitian(complement);
  for (Index k = 0; k < dim; ++k) {
    if (sp.values[k] < 0.5) break;
    ComplexMatrix m = ComplexMatrix::Zero(K, dim);
    m.row(0) = sp.vectors.col(k).adjoint();
    out.push_back(std::move(m));
  }
  return out;
}

double entanglement_fidelity(const CodeSpec& code, const BeamSplitterChannel& chan) {
  if (code.encoding.rows() != chan.dim()) {
    throw_error(ErrorCode::kInvalidArgument, "entanglement_fidelity: code and channel dimensions differ");
  }
  int K = code.K;
  Complex total = 0;
  for (int i = 0; i < K; ++i) {
    for (int j = 0; j < K; ++j) {
      ComplexMatrix out = chan.apply(code.encoding.col(i) * code.encoding.col(j).adjoint());
      for (const ComplexMatrix& r : code.decoding) {
        total += (r.row(i) * out * r.row(j).adjoint())(0, 0);
      }
    }
  }
  return total.real() / (static_cast<double>(K) * K);
}

CodeSpec stabilizer_code_construction(const QuditParams& params, const BSParams& bs, int K) {
  Index dim = params.dim();
  if (K < 1 || K > dim) {
    throw_error(ErrorCode::kInvalidArgument, "stabilizer code: K = " + std::to_string(K) + " must be in [1, d^n]");
  }
  ComplexMatrix encoding = ComplexMatrix::Zero(dim, K);
  ComplexMatrix coherent = ComplexMatrix::Zero(K, dim);
  std::vector<bool> addressed(dim, false);
  for (int i = 0; i < K; ++i) {
    encoding(i, i) = 1;
    std::vector<int> digits = index_to_digits(params, i);
    for (int& v : digits) v = params.mod(static_cast<std::int64_t>(bs.s) * v);
    Index image = digits_to_index(params, digits);
    if (addressed[image]) {
      throw_error(ErrorCode::kInvalidArgument, "stabilizer code: s = 0 maps code kets together");
    }
    addressed[image] = true;
    coherent(i, image) = 1;
  }
  std::vector<ComplexMatrix> decoding{coherent};
  for (Index m = 0; m < dim; ++m) {
    if (addressed[m]) continue;
    ComplexMatrix k = ComplexMatrix::Zero(K, dim);
    k(0, m) = 1;
    decoding.push_back(std::move(k));
  }
  return CodeSpec::make(std::move(encoding), std::move(decoding));
}

CodeSpec magic_code_construction(const BSParams& bs) {
  const QuditParams& params = bs.params;
  if (params.n != 1) throw_error(ErrorCode::kUnsupported, "magic code: single-qudit beam splitters only");
  int s2 = params.mod(static_cast<std::int64_t>(bs.s) * bs.s);
  int t2 = params.mod(static_cast<std::int64_t>(bs.t) * bs.t);
  if (!bs.nontrivial() || s2 == t2) {
    throw_error(ErrorCode::kInvalidArgument, "magic code needs nontrivial (s, t) with s^2 != t^2 mod d");
  }
  Index dim = params.dim();
  ComplexMatrix encoding = ComplexMatrix::Zero(dim, 2);
  encoding(0, 0) = 1;
  encoding(bs.s, 1) = 1;
  ComplexMatrix k1 = ComplexMatrix::Zero(2, dim);
  k1(0, 0) = 1;
  k1(1, 1) = 1;
  ComplexMatrix k2 = ComplexMatrix::Zero(2, dim);
  k2(0, t2) = 1;
  k2(1, s2) = 1;
  std::vector<ComplexMatrix> decoding{k1, k2};
  for (Index m = 0; m < dim; ++m) {
    if (m == 0 || m == 1 || m == t2 || m == s2) continue;
    ComplexMatrix k = ComplexMatrix::Zero(2, dim);
    k(0, m) = 1;
    decoding.push_back(std::move(k));
  }
  return CodeSpec::make(std::move(encoding), std::move(decoding));
}

std::vector<ComplexMatrix> petz_decoder(const BeamSplitterChannel& chan, const ComplexMatrix& encoding) {
  Index dim = chan.dim();
  Index K = encoding.cols();
  Spectrum omega = eig_hermitian(chan.apply(ComplexMatrix(encoding * encoding.adjoint())));
  double cutoff = 1e-12 * std::max(omega.values.front(), 1.0);
  ComplexMatrix inv_sqrt = ComplexMatrix::Zero(dim, dim);
  std::vector<ComplexMatrix> out;
  for (Index k = 0; k < dim; ++k) {
    auto v = omega.vectors.col(k);
    if (omega.values[k] > cutoff) {
      inv_sqrt += (1.0 / std::sqrt(omega.values[k])) * (v * v.adjoint());
    } else {
      ComplexMatrix m = ComplexMatrix::Zero(K, dim);
      m.row(0) = v.adjoint();
      out.push_back(std::move(m));
    }
  }
  for (const ComplexMatrix& kraus : chan.kraus()) {
    out.push_back((kraus * encoding).adjoint() * inv_sqrt);
  }
  return out;
}

ComplexMatrix random_encoding(Index dim, int K, Rng& rng) { return random_unitary(dim, rng).leftCols(K); }

std::vector<ComplexMatrix> random_decoder(Index dim, int K, Rng& rng) {
  Index copies = (dim + K - 1) / K + 1;
  ComplexMatrix w = random_unitary(copies * K, rng).leftCols(dim);
  std::vector<ComplexMatrix> out;
  for (Index c = 0; c < copies; ++c) out.push_back(w.middleRows(c * K, K));
  return out;
}

namespace {

double fidelity_with_petz(const BeamSplitterChannel& chan, const ComplexMatrix& encoding) {
  CodeSpec code{static_cast<int>(encoding.cols()), encoding, petz_decoder(chan, encoding)};
  return entanglement_fidelity(code, chan);
}

ComplexMatrix orthonormalize(const ComplexMatrix& v) {
  Eigen::HouseholderQR<ComplexMatrix> qr(v);
  ComplexMatrix q = ComplexMatrix(qr.householderQ()).leftCols(v.cols());
  return q;
}

}  // namespace

FidelitySearch search_fidelity(const BeamSplitterChannel& chan, int K, int trials, std::uint64_t seed,
                               const std::vector<CodeSpec>& candidates) {
  FidelitySearch out;
  Index dim = chan.dim();
  for (const CodeSpec& code : candidates) {
    out.best = std::max(out.best, entanglement_fidelity(code, chan));
    out.best = std::max(out.best, fidelity_with_petz(chan, code.encoding));
    out.evaluations += 2;
  }
  for (int trial = 0; trial < trials; ++trial) {
    Rng rng(split_seed(seed, static_cast<std::uint64_t>(trial)));
    ComplexMatrix v = random_encoding(dim, K, rng);
    double fv = fidelity_with_petz(chan, v);
    CodeSpec random_code{K, v, random_decoder(dim, K, rng)};
    out.best = std::max(out.best, entanglement_fidelity(random_code, chan));
    out.evaluations += 2;
    double step = 0.3;
    for (int local = 0; local < 8; ++local) {
      ComplexMatrix trial_v = orthonormalize(v + step * random_ginibre(dim, K, rng));
      double ft = fidelity_with_petz(chan, trial_v);
      ++out.evaluations;
      if (ft > fv) {
        v = std::move(trial_v);
        fv = ft;
      } else {
        step *= 0.5;
      }
    }
    out.best = std::max(out.best, fv);
    ++out.trials;
  }
  return out;
}

CeilingReport stabilizer_ceiling_search(const QuditParams& params, const BSParams& bs, int K, int trials,
                                        std::uint64_t seed) {
  auto family = enumerate_stabilizers(params);
  CeilingReport report;
  report.ceiling = 1.0 / K;
  report.environments = static_cast<int>(family->size());
  std::size_t envs = family->size();
  for (std::size_t e = 0; e < envs; ++e) {
    int share = trials / static_cast<int>(envs) + (static_cast<int>(e) < trials % static_cast<int>(envs) ? 1 : 0);
    BeamSplitterChannel chan(bs, family->state(e));
    std::vector<CodeSpec> candidates;
    if (e == 0 && K <= params.dim()) candidates.push_back(stabilizer_code_construction(params, bs, K));
    FidelitySearch found = search_fidelity(chan, K, share, split_seed(seed, e), candidates);
    report.best = std::max(report.best, found.best);
    report.trials += found.trials;
  }
  report.pass = report.best <= report.ceiling + 1e-6;
  return report;
}

RatioReport fidelity_ratio_bound_check(const DensityMatrix& sigma, const BSParams& bs, int K, int trials,
                                       std::uint64_t seed) {
  RatioReport report;
  MrmInfOptions options;
  options.throw_on_budget = false;
  MrmInfResult magic = mrm_inf(sigma, options);
  report.mrm_inf = magic.value;
  report.mrm_inf_converged = magic.converged;
  report.bound = std::exp2(magic.value) / K;

  BeamSplitterChannel chan(bs, sigma);
  std::vector<CodeSpec> candidates;
  int s2 = bs.params.mod(static_cast<std::int64_t>(bs.s) * bs.s);
  int t2 = bs.params.mod(static_cast<std::int64_t>(bs.t) * bs.t);
  if (K == 2 && bs.nontrivial() && s2 != t2) candidates.push_back(magic_code_construction(bs));
  if (K <= bs.params.dim()) candidates.push_back(stabilizer_code_construction(bs.params, bs, K));
  report.best_fidelity = search_fidelity(chan, K, trials, seed, candidates).best;
  report.pass = report.best_fidelity <= report.bound + 1e-6;
  return report;
}

}  // namespace qmcap
