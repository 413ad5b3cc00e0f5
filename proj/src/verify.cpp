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

#include "qmcap/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>

#include "qmcap/capacity.hpp"
#include "qmcap/coding.hpp"
#include "qmcap/error.hpp"
#include "qmcap/magic.hpp"
#include "qmcap/parallel.hpp"

namespace qmcap {

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

CheckLine at_most(std::string name, double measured, double threshold, std::string detail = "") {
  return CheckLine{std::move(name), measured, threshold, "<=", measured <= threshold, std::move(detail)};
}

CheckLine at_least(std::string name, double measured, double threshold, std::string detail = "") {
  return CheckLine{std::move(name), measured, threshold, ">=", measured >= threshold, std::move(detail)};
}

CheckLine deviation(std::string name, double value, double expected, double tolerance) {
  return at_most(std::move(name), std::abs(value - expected), tolerance,
                 "value " + fmt(value) + ", expected " + fmt(expected));
}

std::vector<double> top(std::vector<double> v, std::size_t k) {
  v.resize(std::min(k, v.size()));
  return v;
}

double spectrum_deviation(const std::vector<double>& measured, const std::vector<double>& expected) {
  double dev = 0;
  for (std::size_t k = 0; k < measured.size(); ++k) {
    double e = k < expected.size() ? expected[k] : 0.0;
    dev = std::max(dev, std::abs(measured[k] - e));
  }
  return dev;
}

CapacityReport optimize(const BeamSplitterChannel& chan, const VerifyConfig& config, std::uint64_t seed,
                        std::vector<DensityMatrix> warm = {}) {
  CapacityOptions options;
  options.restarts = config.restarts;
  options.iterations = config.iterations;
  options.seed = seed;
  options.warm_starts = std::move(warm);
  return qcap_one_shot(chan, options);
}

SuiteReport named(std::string suite) {
  SuiteReport report;
  report.suite = std::move(suite);
  return report;
}

QuditParams single(const VerifyConfig& config) { return QuditParams::make(config.d, 1); }

BSParams beam_splitter(const VerifyConfig& config) {
  return BSParams::make(single(config), config.s, config.t);
}

SuiteReport theorem_two(const VerifyConfig& config) {
  SuiteReport report = named("theorem-2");
  QuditParams params = single(config);
  BSParams bs = beam_splitter(config);
  auto family = enumerate_stabilizers(params);
  std::vector<double> worst(family->size(), -kInfinity);
  parallel_for(family->size(), [&](std::size_t e) {
    BeamSplitterChannel chan(bs, family->state(e));
    for (int r = 0; r < config.samples; ++r) {
      Rng rng(split_seed(config.seed, e * 100003 + static_cast<std::size_t>(r)));
      DensityMatrix rho = r % 2 == 0 ? random_density_matrix(params, rng) : random_pure_state(params, rng);
      worst[e] = std::max(worst[e], coherent_information(chan, rho));
    }
  });
  report.samples = static_cast<int>(family->size()) * config.samples;
  report.add(at_most("stabilizer environments x random inputs: max I_c", *std::max_element(worst.begin(), worst.end()),
                     1e-9, std::to_string(family->size()) + " environments, " + std::to_string(config.samples) +
                               " inputs each"));

  std::vector<std::size_t> order(family->size());
  std::iota(order.begin(), order.end(), 0);
  Rng pick(config.seed);
  std::shuffle(order.begin(), order.end(), pick);
  double best = -kInfinity;
  std::string chosen;
  int count = std::min<int>(config.optimizer_environments, static_cast<int>(order.size()));
  for (int k = 0; k < count; ++k) {
    BeamSplitterChannel chan(bs, family->state(order[k]));
    best = std::max(best, optimize(chan, config, split_seed(config.seed, 7000 + k)).best_value);
    chosen += (k ? "," : "") + std::to_string(order[k]);
  }
  report.add(at_most("optimizer on stabilizer environments: best I_c", best, 1e-6,
                     "members " + chosen + ", " + std::to_string(config.restarts) + " restarts"));
  return report;
}

SuiteReport theorem_three(const VerifyConfig& config) {
  SuiteReport report = named("theorem-3");
  BSParams bs = beam_splitter(config);
  Thm3Construction c = thm3_construction(bs);
  BeamSplitterChannel chan(bs, c.environment);
  double ic = coherent_information(chan, c.input);
  report.samples = 1;
  if (c.regime == "s2-neq-t2") {
    report.add(deviation("construction I_c (" + c.regime + ")", ic, 0.5, 1e-9));
  } else {
    std::vector<double> out = top(eigenvalues_hermitian(chan.apply(c.input.matrix())), static_cast<std::size_t>(bs.params.dim()));
    std::vector<double> comp = top(eigenvalues_hermitian(chan.apply_complement(c.input.matrix())), static_cast<std::size_t>(bs.params.dim()));
    report.add(at_most("channel output spectrum {66/125, (59+-sqrt1321)/250}", spectrum_deviation(out, c.output_spectrum), 1e-9));
    report.add(at_most("complement output spectrum {59/125, 3(11-+sqrt61)/125}", spectrum_deviation(comp, c.complement_spectrum), 1e-9));
    report.add(deviation("construction I_c (" + c.regime + ") vs 0.0178", ic, 0.0178, 5e-4));
    report.add(deviation("construction I_c vs closed-form spectra", ic, c.expected, 1e-9));
    BSParams mirror = BSParams::make(bs.params, bs.s, c.regime == "s-eq-t" ? -bs.s : bs.s);
    Thm3Construction other = thm3_construction(mirror);
    double ic_other = coherent_information(BeamSplitterChannel(mirror, other.environment), other.input);
    report.add(deviation("I_c agrees with the (" + std::to_string(mirror.s) + "," + std::to_string(mirror.t) + ") case",
                         ic, ic_other, 1e-9));
  }
  CapacityReport opt = optimize(chan, config, split_seed(config.seed, 3), {c.input});
  report.add(at_least("optimizer lower bound >= construction", opt.best_value, ic - 1e-6,
                      "best " + fmt(opt.best_value)));
  return report;
}

SuiteReport theorem_four(const VerifyConfig& config) {
  SuiteReport report = named("theorem-4");
  QuditParams params = single(config);
  BSParams bs = beam_splitter(config);
  double worst_sample = -kInfinity;
  double worst_opt = -kInfinity;
  for (int e = 0; e < config.environments; ++e) {
    Rng rng(split_seed(config.seed, 40000 + e));
    DensityMatrix sigma = random_density_matrix(params, rng);
    double bound = mrm(sigma);
    BeamSplitterChannel chan(bs, sigma);
    for (int r = 0; r < config.samples; ++r) {
      DensityMatrix rho = r % 2 == 0 ? random_density_matrix(params, rng) : random_pure_state(params, rng);
      worst_sample = std::max(worst_sample, coherent_information(chan, rho) - bound);
    }
    worst_opt = std::max(worst_opt, optimize(chan, config, split_seed(config.seed, 41000 + e)).best_value - bound);
  }
  report.samples = config.environments * config.samples;
  report.add(at_most("random inputs: max I_c - mrm(sigma)", worst_sample, 1e-6,
                     std::to_string(config.environments) + " random environments"));
  report.add(at_most("optimizer: max best - mrm(sigma)", worst_opt, 1e-6,
                     std::to_string(config.restarts) + " restarts per environment"));

  DensityMatrix u01 = preset_state("uniform-01", params);
  report.add(deviation("mrm(uniform-01) = log2 d", mrm(u01), std::log2(static_cast<double>(config.d)), 1e-9));
  BeamSplitterChannel chan(bs, u01);
  CapacityReport opt = optimize(chan, config, split_seed(config.seed, 42000));
  report.add(at_most("optimizer best for uniform-01 <= mrm", opt.best_value, mrm(u01) + 1e-6));
  if (config.d * config.d <= 343) {
    Rng rng(split_seed(config.seed, 43000));
    DensityMatrix rho = random_density_matrix(params, rng);
    ComplexMatrix factor = random_ginibre(params.dim(), 2, rng);
    DensityMatrix sigma(params, factor * factor.adjoint() / factor.squaredNorm());
    QuditParams two = QuditParams::make(config.d, 2);
    BeamSplitterChannel doubled(BSParams::make(two, bs.s, bs.t), tensor(sigma, sigma));
    double single_ic = coherent_information(BeamSplitterChannel(bs, sigma), rho);
    double pair_ic = coherent_information(doubled, tensor(rho, rho));
    report.add(deviation("product additivity: I_c doubles", pair_ic, 2 * single_ic, 1e-8));
  }
  return report;
}

SuiteReport theorem_five(const VerifyConfig& config) {
  SuiteReport report = named("theorem-5");
  QuditParams params = single(config);
  BSParams bs = beam_splitter(config);
  double worst = 0;
  for (int e = 0; e < config.environments; ++e) {
    Rng rng(split_seed(config.seed, 50000 + e));
    worst = std::max(worst, complement_identity_check(bs, random_density_matrix(params, rng)).distance);
  }
  report.samples = config.environments;
  report.add(at_most("complement identity: Choi distance", worst, 1e-9,
                     std::to_string(config.environments) + " random environments"));
  if (bs.s != bs.t) return report;
  DensityMatrix sigma = preset_state(config.symmetric_environment, params, bs);
  DegradationReport witness = degradation_witness(bs, sigma, WeylIndex::zero(1));
  report.add(at_most("degradation witness for " + config.symmetric_environment + ": Choi distance", witness.distance, 1e-9,
                     !witness.pass               ? "witness failed"
                     : witness.degradable ? "degradable and anti-degradable"
                                          : "anti-degradable"));
  BeamSplitterChannel chan(bs, sigma);
  CapacityReport opt = optimize(chan, config, split_seed(config.seed, 51000));
  report.add(at_most("optimizer best for " + config.symmetric_environment, opt.best_value, 1e-4));
  return report;
}

// Monomial of w(a) (x) w(b) on two registers.
MonomialOperator tensor_monomial(const MonomialOperator& a, const MonomialOperator& b) {
  MonomialOperator out;
  Index db = b.dim();
  for (Index i = 0; i < a.dim(); ++i) {
    for (Index j = 0; j < db; ++j) {
      out.target.push_back(a.target[i] * db + b.target[j]);
      out.phase.push_back(a.phase[i] * b.phase[j]);
    }
  }
  return out;
}

double covariance_deviation(const BSParams& bs) {
  const QuditParams& params = bs.params;
  std::vector<Index> perm = beam_splitter_permutation(bs);
  std::size_t labels = label_count(params);
  double worst = 0;
  for (std::size_t fa = 0; fa < labels; ++fa) {
    WeylIndex a = from_flat(params, fa);
    for (std::size_t fb = 0; fb < labels; ++fb) {
      WeylIndex b = from_flat(params, fb);
      MonomialOperator lhs = tensor_monomial(weyl_monomial(params, a), weyl_monomial(params, b));
      MonomialOperator rhs = tensor_monomial(weyl_monomial(params, add(params, scale(params, bs.s, a), scale(params, bs.t, b))),
                                             weyl_monomial(params, add(params, scale(params, -bs.t, a), scale(params, bs.s, b))));
      // U M U^dagger sends |perm(k)> to phase[k] |perm(target[k])>.
      for (Index k = 0; k < lhs.dim(); ++k) {
        Index col = perm[k];
        if (rhs.target[col] != perm[lhs.target[k]]) return kInfinity;
        worst = std::max(worst, std::abs(rhs.phase[col] - lhs.phase[k]));
      }
    }
  }
  return worst;
}

}  // namespace

std::string format_line(const CheckLine& line) {
  std::string out = std::string(line.pass ? "PASS" : "FAIL") + "  " + line.name + ": " + fmt(line.measured) + " " +
                    line.relation + " " + fmt(line.threshold);
  if (!line.detail.empty()) out += "  (" + line.detail + ")";
  return out;
}

bool SuiteReport::pass() const {
  return std::all_of(lines.begin(), lines.end(), [](const CheckLine& l) { return l.pass; });
}

void SuiteReport::add(CheckLine line) {
  double violation = line.relation == ">=" ? line.threshold - line.measured : line.measured - line.threshold;
  if (lines.empty() || violation > worst_violation) worst_violation = violation;
  lines.push_back(std::move(line));
}

SuiteReport verify_theorem(const std::string& theorem, const VerifyConfig& config) {
  if (theorem == "theorem-2") return theorem_two(config);
  if (theorem == "theorem-3") return theorem_three(config);
  if (theorem == "theorem-4") return theorem_four(config);
  if (theorem == "theorem-5") return theorem_five(config);
  throw_error(ErrorCode::kInvalidArgument, "unknown theorem '" + theorem + "'");
}

SuiteReport verify_lemmas(const VerifyConfig& config) {
  SuiteReport report = named("lemmas");
  QuditParams params = single(config);
  BSParams bs = beam_splitter(config);
  int n = config.lemma_samples;
  report.samples = n;

  double duality = 0;
  double growth = kInfinity;
  double positivity = kInfinity;
  double clifford = 0;
  double max_entropy = -kInfinity;
  double mean_magnitudes = 0;
  for (int k = 0; k < n; ++k) {
    Rng rng(split_seed(config.seed, 60000 + k));
    DensityMatrix rho = random_density_matrix(params, rng);
    DensityMatrix sigma = k % 2 == 0 ? random_density_matrix(params, rng) : random_pure_state(params, rng);
    DensityMatrix out = convolve(bs, rho, sigma);
    CharacteristicTable xo = characteristic_function(out);
    CharacteristicTable xr = characteristic_function(rho);
    CharacteristicTable xs = characteristic_function(sigma);
    for (std::size_t f = 0; f < xo.values.size(); ++f) {
      WeylIndex x = from_flat(params, f);
      duality = std::max(duality, std::abs(xo.values[f] - xr.at(scale(params, bs.s, x)) * xs.at(scale(params, bs.t, x))));
    }
    double s_out = entropy(out);
    growth = std::min(growth, s_out - std::max(entropy(rho), entropy(sigma)));
    if (bs.s == bs.t) positivity = std::min(positivity, wigner_function(out).min_raw());
    ComplexMatrix u = random_clifford(params, split_seed(config.seed, 61000 + k));
    DensityMatrix rho_u = DensityMatrix::trusted(params, u * rho.matrix() * u.adjoint());
    DensityMatrix sigma_u = DensityMatrix::trusted(params, u * sigma.matrix() * u.adjoint());
    clifford = std::max(clifford, spectrum_deviation(eigenvalues_hermitian(convolve(bs, rho_u, sigma_u).matrix()),
                                                     eigenvalues_hermitian(out.matrix())));
    DensityMatrix mean = mean_state(rho);
    max_entropy = std::max(max_entropy, entropy(rho) - entropy(mean));
    for (Complex v : characteristic_function(mean).values) {
      double mag = std::abs(v);
      mean_magnitudes = std::max(mean_magnitudes, std::min(mag, std::abs(mag - 1)));
    }
  }
  report.add(at_most("convolution-multiplication duality: max deviation", duality, 1e-10, std::to_string(n) + " random pairs"));
  report.add(at_most("beam-splitter covariance, exhaustive: max phase deviation", covariance_deviation(bs), 1e-12));

  auto family = enumerate_stabilizers(params);
  double stability = 0;
  for (std::size_t i = 0; i < family->size(); ++i) {
    BeamSplitterChannel chan(bs, family->state(i));
    for (std::size_t j = 0; j < family->size(); ++j) {
      ComplexMatrix out = chan.apply(family->state(j).matrix());
      double best = kInfinity;
      for (std::size_t m = 0; m < family->size() && best > 1e-9; ++m) {
        best = std::min(best, frobenius_distance(out, family->state(m).matrix()));
      }
      stability = std::max(stability, best);
    }
  }
  report.add(at_most("convolutional stability: distance to the stabilizer family", stability, 1e-9,
                     std::to_string(family->size() * family->size()) + " pairs"));

  std::vector<std::pair<std::string, DensityMatrix>> clt_states = {{"ket-zero", preset_state("ket-zero", params)},
                                                                   {"uniform-01", preset_state("uniform-01", params)}};
  for (int k = 0; k < 3; ++k) {
    Rng rng(split_seed(config.seed, 62000 + k));
    clt_states.emplace_back("random state " + std::to_string(k), random_density_matrix(params, rng));
  }
  for (const auto& [name, rho] : clt_states) {
    CltReport clt = iterate_convolution(bs, rho, config.clt_steps, 1e-9);
    double excess = -kInfinity;
    double increase = -kInfinity;
    for (std::size_t k = 0; k < clt.steps.size(); ++k) {
      excess = std::max(excess, clt.steps[k].distance - clt.steps[k].bound);
      if (k > 0) increase = std::max(increase, clt.steps[k].distance - clt.steps[k - 1].distance);
    }
    report.add(at_most("central limit, " + name + ": distance - m*^N", excess, 1e-12,
                       "m* = " + fmt(clt.m_star) + ", zero-mean " + (clt.zero_mean ? "yes" : "no")));
    report.add(at_most("central limit, " + name + ": step-to-step increase", std::max(increase, 0.0), 1e-12));
    report.add(at_most("central limit, " + name + ": final distance", clt.steps.back().distance, 1e-9,
                       std::to_string(clt.steps.size()) + " steps"));
  }

  double hudson = kInfinity;
  for (std::size_t i : family->pure_members()) hudson = std::min(hudson, wigner_function(family->state(i)).min_raw());
  report.add(at_least("discrete Hudson: min Wigner entry over pure stabilizer states", hudson, -1e-12,
                      std::to_string(family->pure_members().size()) + " states"));
  int negative = 0;
  for (int k = 0; k < n; ++k) {
    Rng rng(split_seed(config.seed, 63000 + k));
    std::vector<double> w = wigner_function(random_pure_state(params, rng)).normalized();
    if (*std::min_element(w.begin(), w.end()) < -1e-6) ++negative;
  }
  report.add(at_least("Hudson converse: random pure states with a negative entry", negative, std::ceil(0.99 * n),
                      "of " + std::to_string(n)));
  report.add(at_most("maximal entropy principle: max S(rho) - S(M(rho))", max_entropy, 1e-9));
  report.add(at_most("mean state: characteristic magnitudes off {0, 1}", mean_magnitudes, 1e-9));
  report.add(at_least("entropy growth: min S(rho conv sigma) - max(S(rho), S(sigma))", growth, -1e-9));
  report.add(at_most("Clifford compatibility: spectral deviation", clifford, 1e-9));
  if (bs.s == bs.t) report.add(at_least("Wigner positivity of convolutions (s = t)", positivity, -1e-10));
  return report;
}

SuiteReport verify_coding(const VerifyConfig& config) {
  SuiteReport report = named("coding");
  QuditParams params = single(config);
  BSParams bs = beam_splitter(config);
  BeamSplitterChannel vacuum(bs, preset_state("ket-zero", params));
  for (int K : {2, 3, 4}) {
    if (K > params.dim()) continue;
    double fe = entanglement_fidelity(stabilizer_code_construction(params, bs, K), vacuum);
    report.add(deviation("stabilizer construction F_e = 1/K, K = " + std::to_string(K), fe, 1.0 / K, 1e-12));
  }

  int s2 = params.mod(static_cast<std::int64_t>(bs.s) * bs.s);
  int t2 = params.mod(static_cast<std::int64_t>(bs.t) * bs.t);
  bool magic_regime = bs.nontrivial() && s2 != t2;
  if (magic_regime) {
    DensityMatrix sigma = preset_state("appe-magic", params, bs);
    BeamSplitterChannel chan(bs, sigma);
    CodeSpec code = magic_code_construction(bs);
    double fe = entanglement_fidelity(code, chan);
    report.add(deviation("magic construction F_e = 3/4", fe, 0.75, 1e-9));

    // Any completion of the decoder on the kets the channel never reaches.
    std::vector<Index> free;
    for (Index m = 0; m < params.dim(); ++m) {
      if (m != 0 && m != 1 && m != s2 && m != t2) free.push_back(m);
    }
    Rng rng(split_seed(config.seed, 70000));
    std::vector<ComplexMatrix> completion = random_decoder(static_cast<Index>(free.size()), 2, rng);
    std::vector<ComplexMatrix> decoding(code.decoding.begin(), code.decoding.begin() + 2);
    for (const ComplexMatrix& k : completion) {
      ComplexMatrix full = ComplexMatrix::Zero(2, params.dim());
      for (std::size_t c = 0; c < free.size(); ++c) full.col(free[c]) = k.col(static_cast<Index>(c));
      decoding.push_back(full);
    }
    double completed = entanglement_fidelity(CodeSpec::make(code.encoding, decoding), chan);
    report.add(deviation("magic construction: decoder completion independence", completed, fe, 1e-12));

    Rng mix(split_seed(config.seed, 71000));
    DensityMatrix other = random_density_matrix(params, mix);
    double p = 0.3;
    DensityMatrix mixture(params, p * sigma.matrix() + (1 - p) * other.matrix());
    double lhs = entanglement_fidelity(code, BeamSplitterChannel(bs, mixture));
    double rhs = p * fe + (1 - p) * entanglement_fidelity(code, BeamSplitterChannel(bs, other));
    report.add(deviation("F_e is linear in the environment", lhs, rhs, 1e-10));
  }

  for (int K : {2, 3}) {
    CeilingReport ceiling = stabilizer_ceiling_search(params, bs, K, config.trials, split_seed(config.seed, 72000 + K));
    report.add(at_most("stabilizer ceiling search, K = " + std::to_string(K) + ": best F_e", ceiling.best, 1.0 / K + 1e-6,
                       std::to_string(ceiling.trials) + " trials over " + std::to_string(ceiling.environments) +
                           " environments"));
    report.add(at_least("stabilizer ceiling search, K = " + std::to_string(K) + ": construction found", ceiling.best,
                        1.0 / K - 1e-3));
  }

  std::vector<std::pair<std::string, DensityMatrix>> envs = {{"ket-zero", preset_state("ket-zero", params)}};
  if (magic_regime) envs.emplace_back("appe-magic", preset_state("appe-magic", params, bs));
  for (int k = 0; k < 2; ++k) {
    Rng rng(split_seed(config.seed, 73000 + k));
    envs.emplace_back("random pure state " + std::to_string(k), random_pure_state(params, rng));
  }
  int trials = std::max(1, config.trials / 2);
  for (const auto& [name, sigma] : envs) {
    RatioReport ratio = fidelity_ratio_bound_check(sigma, bs, 2, trials, split_seed(config.seed, 74000));
    report.add(at_most("ratio bound, " + name + ": best F_e vs 2^mrm_inf / K", ratio.best_fidelity, ratio.bound + 1e-6,
                       "mrm_inf " + fmt(ratio.mrm_inf) + (ratio.mrm_inf_converged ? "" : " (lower bound)")));
  }
  report.samples = config.trials;
  return report;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"all", "theorem-2", "theorem-3", "theorem-4",
                                                 "theorem-5", "lemmas", "coding"};
  return names;
}

std::vector<SuiteReport> verify_suite(const std::string& suite, const VerifyConfig& config) {
  if (suite == "lemmas") return {verify_lemmas(config)};
  if (suite == "coding") return {verify_coding(config)};
  if (suite == "all") {
    BSParams bs = beam_splitter(config);
    std::vector<SuiteReport> out{verify_theorem("theorem-2", config)};
    if (bs.nontrivial()) out.push_back(verify_theorem("theorem-3", config));
    out.push_back(verify_theorem("theorem-4", config));
    out.push_back(verify_theorem("theorem-5", config));
    out.push_back(verify_lemmas(config));
    out.push_back(verify_coding(config));
    return out;
  }
  return {verify_theorem(suite, config)};
}

}  // namespace qmcap
