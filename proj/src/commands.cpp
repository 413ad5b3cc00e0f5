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

#include "qmcap/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "qmcap/capacity.hpp"
#include "qmcap/coding.hpp"
#include "qmcap/error.hpp"
#include "qmcap/magic.hpp"
#include "qmcap/state_io.hpp"
#include "qmcap/states.hpp"
#include "qmcap/verify.hpp"

namespace qmcap {

namespace {

using nlohmann::json;

/// Reads typed keys from the flat config and records every value used, so
/// the report echoes defaults as well as given values.
class ConfigReader {
 public:
  explicit ConfigReader(const json& raw) : raw_(raw.is_null() ? json::object() : raw) {
    if (!raw_.is_object()) throw_error(ErrorCode::kInvalidArgument, "config must be a JSON object");
  }

  bool has(const std::string& key) const { return raw_.contains(key) && !raw_.at(key).is_null(); }

  template <typename T>
  T get(const std::string& key, T fallback) {
    T value = has(key) ? read<T>(key) : fallback;
    echo_[key] = value;
    return value;
  }

  template <typename T>
  T require(const std::string& key, const std::string& command) {
    if (!has(key)) throw_error(ErrorCode::kInvalidArgument, command + " needs '" + key + "'");
    T value = read<T>(key);
    echo_[key] = value;
    return value;
  }

  template <typename T>
  std::optional<T> optional(const std::string& key) {
    if (!has(key)) return std::nullopt;
    T value = read<T>(key);
    echo_[key] = value;
    return value;
  }

  void allow(const std::vector<std::string>& keys) const {
    for (const auto& [key, value] : raw_.items()) {
      if (!value.is_null() && std::find(keys.begin(), keys.end(), key) == keys.end()) {
        throw_error(ErrorCode::kInvalidArgument, "unknown config key '" + key + "'");
      }
    }
  }

  const json& echo() const { return echo_; }

 private:
  template <typename T>
  T read(const std::string& key) const {
    try {
      return raw_.at(key).get<T>();
    } catch (const json::exception&) {
      throw_error(ErrorCode::kInvalidArgument, "config key '" + key + "' has the wrong type");
    }
  }

  json raw_;
  json echo_ = json::object();
};

int positive(int value, const char* name) {
  if (value < 1) throw_error(ErrorCode::kInvalidArgument, std::string(name) + " must be at least 1");
  return value;
}

QuditParams read_params(ConfigReader& cfg, const std::string& command) {
  int d = cfg.require<int>("d", command);
  int n = cfg.get<int>("n", 1);
  QuditParams params = QuditParams::make(d, n);
  require_odd_prime(params, command.c_str());
  return params;
}

BSParams read_bs(ConfigReader& cfg, const QuditParams& params, const std::string& command) {
  int s = cfg.require<int>("s", command);
  int t = cfg.require<int>("t", command);
  return BSParams::make(params, s, t);
}

std::uint64_t read_seed(ConfigReader& cfg, const std::string& command) {
  return cfg.require<std::uint64_t>("seed", command);
}

DensityMatrix resolve_state(const std::string& source, const QuditParams& params, const std::optional<BSParams>& bs) {
  std::string name = source;
  if (source.rfind("file:", 0) == 0) {
    DensityMatrix rho = load_state(source.substr(5));
    if (!(rho.params() == params)) {
      throw_error(ErrorCode::kInvalidArgument, "state file " + source.substr(5) + " has d = " +
                                                   std::to_string(rho.params().d) + ", n = " +
                                                   std::to_string(rho.params().n) + ", expected d = " +
                                                   std::to_string(params.d) + ", n = " + std::to_string(params.n));
    }
    return rho;
  }
  if (source.rfind("preset:", 0) == 0) name = source.substr(7);
  return preset_state(name, params, bs);
}

DensityMatrix read_state(ConfigReader& cfg, const std::string& key, const QuditParams& params,
                         const std::optional<BSParams>& bs, const std::string& command) {
  return resolve_state(cfg.require<std::string>(key, command), params, bs);
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string scalar_csv(const json& results) {
  std::string out = "quantity,value\n";
  for (const auto& [key, value] : results.items()) {
    if (value.is_number()) out += key + "," + format_number(value.get<double>()) + "\n";
    if (value.is_boolean()) out += key + "," + (value.get<bool>() ? "true" : "false") + "\n";
    if (value.is_string()) out += key + "," + value.get<std::string>() + "\n";
  }
  return out;
}

std::string scalar_text(const json& results) {
  std::string out;
  for (const auto& [key, value] : results.items()) {
    if (value.is_number()) out += key + " = " + format_number(value.get<double>()) + "\n";
    if (value.is_boolean() || value.is_string()) out += key + " = " + value.dump() + "\n";
  }
  return out;
}

json spectrum_json(const ComplexMatrix& m) {
  std::vector<double> values = eigenvalues_hermitian(m);
  std::vector<double> kept;
  for (double v : values) {
    if (v > kSupportThreshold) kept.push_back(v);
  }
  return kept;
}

struct Outcome {
  json results = json::object();
  std::string csv;
  std::string text;
  bool pass = true;
  std::optional<std::uint64_t> seed;
};

Outcome cmd_params(ConfigReader& cfg) {
  int d = cfg.require<int>("d", "params");
  QuditParams params = QuditParams::make(d, 1);
  Outcome out;
  json pairs = json::array();
  json nontrivial = json::array();
  out.csv = "s,t,nontrivial\n";
  for (const BSParams& bs : valid_st_pairs(params)) {
    bool flag = bs.nontrivial();
    pairs.push_back({{"s", bs.s}, {"t", bs.t}, {"nontrivial", flag}});
    if (flag) nontrivial.push_back({bs.s, bs.t});
    out.csv += std::to_string(bs.s) + "," + std::to_string(bs.t) + "," + (flag ? "true" : "false") + "\n";
    out.text += "(" + std::to_string(bs.s) + ", " + std::to_string(bs.t) + ") " + (flag ? "nontrivial" : "trivial") + "\n";
  }
  out.results = {{"pairs", pairs}, {"nontrivial", nontrivial}, {"nontrivial_count", nontrivial.size()}};
  return out;
}

Outcome cmd_coherent(ConfigReader& cfg) {
  QuditParams params = read_params(cfg, "coherent");
  BSParams bs = read_bs(cfg, params, "coherent");
  DensityMatrix sigma = read_state(cfg, "env", params, bs, "coherent");
  DensityMatrix rho = read_state(cfg, "input", params, bs, "coherent");
  BeamSplitterChannel chan(bs, sigma);
  ComplexMatrix output = chan.apply(rho.matrix());
  ComplexMatrix complement = chan.apply_dilation_complement(rho.matrix());
  Outcome out;
  out.results = {{"coherent_information", coherent_information(chan, rho)},
                 {"coherent_information_purified", coherent_information_purified(chan, rho)},
                 {"output_entropy", von_neumann_entropy(output)},
                 {"complement_entropy", von_neumann_entropy(complement)},
                 {"output_spectrum", spectrum_json(output)},
                 {"complement_spectrum", spectrum_json(complement)}};
  out.csv = scalar_csv(out.results);
  out.text = scalar_text(out.results);
  return out;
}

Outcome cmd_capacity(ConfigReader& cfg) {
  QuditParams params = read_params(cfg, "capacity");
  BSParams bs = read_bs(cfg, params, "capacity");
  DensityMatrix sigma = read_state(cfg, "env", params, bs, "capacity");
  CapacityOptions options;
  options.seed = read_seed(cfg, "capacity");
  options.restarts = positive(cfg.get<int>("restarts", options.restarts), "restarts");
  options.iterations = positive(cfg.get<int>("iterations", options.iterations), "iterations");
  options.polish_steps = cfg.get<int>("polish_steps", options.polish_steps);
  CapacityReport report = qcap_one_shot(BeamSplitterChannel(bs, sigma), options);

  Outcome out;
  out.seed = options.seed;
  json restarts = json::array();
  out.csv = "restart,seed,start_value,best_value,iterations,evaluations,budget_exhausted\n";
  for (std::size_t r = 0; r < report.traces.size(); ++r) {
    const RestartTrace& trace = report.traces[r];
    restarts.push_back({{"seed", trace.seed},
                        {"start_value", trace.ascent.start_value},
                        {"best_value", trace.ascent.best_value},
                        {"iterations", trace.ascent.iterations},
                        {"evaluations", trace.ascent.evaluations},
                        {"budget_exhausted", trace.ascent.budget_exhausted},
                        {"history", trace.ascent.history}});
    out.csv += std::to_string(r) + "," + std::to_string(trace.seed) + "," + format_number(trace.ascent.start_value) +
               "," + format_number(trace.ascent.best_value) + "," + std::to_string(trace.ascent.iterations) + "," +
               std::to_string(trace.ascent.evaluations) + "," + (trace.ascent.budget_exhausted ? "true" : "false") +
               "\n";
  }
  out.results = {{"best_value", report.best_value},
                 {"bound", "lower"},
                 {"evaluations", report.evaluations},
                 {"budget_exhausted", report.budget_exhausted},
                 {"restarts", restarts}};
  if (report.best_state) out.results["best_state"] = state_to_json(*report.best_state);
  out.text = "Q1 lower bound = " + format_number(report.best_value) + " (" + std::to_string(report.restarts) +
             " restarts, " + std::to_string(report.evaluations) + " evaluations)\n";
  return out;
}

Outcome cmd_magic(ConfigReader& cfg) {
  QuditParams params = read_params(cfg, "magic");
  std::optional<BSParams> bs;
  if (cfg.has("s") || cfg.has("t")) bs = read_bs(cfg, params, "magic");
  DensityMatrix sigma = read_state(cfg, "env", params, bs, "magic");
  bool heavy = cfg.get<bool>("heavy", false);
  Outcome out;
  double closed = mrm(sigma);
  out.results["mrm"] = closed;
  if (params.n == 1 || heavy) {
    double enumerated = mrm_enumerated(sigma, heavy);
    out.results["mrm_enumerated"] = enumerated;
    out.results["mrm_route_discrepancy"] = std::abs(closed - enumerated);
  }
  if (params.n == 1) {
    MrmInfOptions options;
    options.max_cuts = positive(cfg.get<int>("max_cuts", options.max_cuts), "max_cuts");
    options.throw_on_budget = false;
    MrmInfResult inf = mrm_inf(sigma, options);
    out.results["mrm_inf"] = inf.value;
    out.results["mrm_inf_converged"] = inf.converged;
    out.results["mrm_inf_cuts"] = inf.cuts;
    out.results["mrm_inf_min_eigenvalue"] = inf.min_eigenvalue;
  }
  out.results["wigner_negativity"] = wigner_negativity(sigma);
  out.results["entropy"] = entropy(sigma);
  out.csv = scalar_csv(out.results);
  out.text = scalar_text(out.results);
  return out;
}

Outcome cmd_convolve(ConfigReader& cfg) {
  QuditParams params = read_params(cfg, "convolve");
  BSParams bs = read_bs(cfg, params, "convolve");
  DensityMatrix sigma = read_state(cfg, "env", params, bs, "convolve");
  DensityMatrix rho = read_state(cfg, "input", params, bs, "convolve");
  bool complement = cfg.get<bool>("complement", false);
  DensityMatrix result = complement ? convolve_complement(bs, rho, sigma) : convolve(bs, rho, sigma);
  Outcome out;
  out.results = {{"entropy", entropy(result)},
                 {"input_entropy", entropy(rho)},
                 {"env_entropy", entropy(sigma)},
                 {"purity", (result.matrix() * result.matrix()).trace().real()},
                 {"wigner_negativity", wigner_negativity(result)},
                 {"state", state_to_json(result)}};
  out.csv = scalar_csv(out.results);
  out.text = scalar_text(out.results);
  return out;
}

Outcome cmd_clt(ConfigReader& cfg) {
  QuditParams params = read_params(cfg, "clt");
  BSParams bs = read_bs(cfg, params, "clt");
  DensityMatrix rho = read_state(cfg, "input", params, bs, "clt");
  int steps = positive(cfg.get<int>("steps", 100), "steps");
  CltReport report = iterate_convolution(bs, rho, steps);
  Outcome out;
  json rows = json::array();
  out.csv = "step,distance,bound\n";
  bool respected = true;
  for (const CltStep& step : report.steps) {
    rows.push_back({{"step", step.step}, {"distance", step.distance}, {"bound", step.bound}});
    out.csv += std::to_string(step.step) + "," + format_number(step.distance) + "," + format_number(step.bound) + "\n";
    respected = respected && step.distance <= step.bound + 1e-12;
  }
  out.results = {{"m_star", report.m_star},
                 {"zero_mean", report.zero_mean},
                 {"final_distance", report.steps.empty() ? 0.0 : report.steps.back().distance},
                 {"bound_respected", respected},
                 {"steps", rows}};
  out.pass = !report.zero_mean || respected;
  out.text = scalar_text(out.results);
  return out;
}

Outcome cmd_wigner(ConfigReader& cfg) {
  QuditParams params = read_params(cfg, "wigner");
  std::optional<BSParams> bs;
  if (cfg.has("s") || cfg.has("t")) bs = read_bs(cfg, params, "wigner");
  DensityMatrix sigma = read_state(cfg, "env", params, bs, "wigner");
  WignerTable table = wigner_function(sigma);
  std::vector<double> values = table.normalized();
  Outcome out;
  json entries = json::array();
  out.csv = "p,q,W\n";
  for (std::size_t f = 0; f < values.size(); ++f) {
    WeylIndex x = from_flat(params, f);
    entries.push_back({{"p", x.p}, {"q", x.q}, {"W", values[f]}});
    std::string p;
    std::string q;
    for (std::size_t i = 0; i < x.p.size(); ++i) {
      p += (i ? " " : "") + std::to_string(x.p[i]);
      q += (i ? " " : "") + std::to_string(x.q[i]);
    }
    out.csv += p + "," + q + "," + format_number(values[f]) + "\n";
  }
  double negativity = wigner_negativity(sigma);
  out.results = {{"negativity", negativity},
                 {"min", *std::min_element(values.begin(), values.end())},
                 {"max_imaginary", table.max_imaginary},
                 {"entries", entries}};
  out.text = "negativity = " + format_number(negativity) + "\nmin = " +
             format_number(*std::min_element(values.begin(), values.end())) + "\n";
  return out;
}

Complex amplitude(const json& v) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return {v[0].get<double>(), v[1].get<double>()};
  }
  throw_error(ErrorCode::kInvalidArgument, "amplitude must be a number or a [re, im] pair");
}

ComplexMatrix matrix_from_json(const json& j, Index rows, Index cols) {
  ComplexMatrix m = ComplexMatrix::Zero(rows, cols);
  if (j.is_object()) {
    const json& re = j.at("re");
    const json* im = j.contains("im") ? &j.at("im") : nullptr;
    if (re.size() != static_cast<std::size_t>(rows)) throw_error(ErrorCode::kInvalidArgument, "Kraus row count mismatch");
    for (Index r = 0; r < rows; ++r) {
      if (re[r].size() != static_cast<std::size_t>(cols)) {
        throw_error(ErrorCode::kInvalidArgument, "Kraus column count mismatch");
      }
      for (Index c = 0; c < cols; ++c) {
        m(r, c) = Complex(re[r][c].get<double>(), im ? (*im)[r][c].get<double>() : 0.0);
      }
    }
    return m;
  }
  if (j.size() != static_cast<std::size_t>(rows)) throw_error(ErrorCode::kInvalidArgument, "Kraus row count mismatch");
  for (Index r = 0; r < rows; ++r) {
    if (j[r].size() != static_cast<std::size_t>(cols)) {
      throw_error(ErrorCode::kInvalidArgument, "Kraus column count mismatch");
    }
    for (Index c = 0; c < cols; ++c) m(r, c) = amplitude(j[r][c]);
  }
  return m;
}

/// CodeSpec files: {"K": 2, "encoding": [[amplitudes], ...],
/// "decoding": "projective-default" | [Kraus matrices]}.
CodeSpec load_code(const std::string& path, const QuditParams& params) {
  std::ifstream in(path);
  if (!in) throw_error(ErrorCode::kIo, "cannot open code file " + path);
  try {
    json j = json::parse(in);
    int K = j.at("K").get<int>();
    const json& vectors = j.at("encoding");
    if (K < 1 || vectors.size() != static_cast<std::size_t>(K)) {
      throw_error(ErrorCode::kInvalidArgument, "code file needs K encoding vectors");
    }
    Index dim = params.dim();
    ComplexMatrix encoding(dim, K);
    for (int i = 0; i < K; ++i) {
      if (vectors[i].size() != static_cast<std::size_t>(dim)) {
        throw_error(ErrorCode::kInvalidArgument, "encoding vector length must be d^n");
      }
      for (Index k = 0; k < dim; ++k) encoding(k, i) = amplitude(vectors[i][k]);
    }
    const json& dec = j.at("decoding");
    std::vector<ComplexMatrix> decoding;
    if (dec.is_string()) {
      if (dec.get<std::string>() != "projective-default") {
        throw_error(ErrorCode::kInvalidArgument, "unknown decoder '" + dec.get<std::string>() + "'");
      }
      decoding = projective_default_decoder(encoding);
    } else {
      for (const json& k : dec) decoding.push_back(matrix_from_json(k, K, dim));
    }
    return CodeSpec::make(encoding, decoding);
  } catch (const json::exception& e) {
    throw_error(ErrorCode::kInvalidArgument, "malformed code file " + path + ": " + e.what());
  }
}

Outcome cmd_fidelity(ConfigReader& cfg) {
  QuditParams params = read_params(cfg, "fidelity");
  BSParams bs = read_bs(cfg, params, "fidelity");
  DensityMatrix sigma = read_state(cfg, "env", params, bs, "fidelity");
  BeamSplitterChannel chan(bs, sigma);
  std::string code_source = cfg.get<std::string>("code", "stabilizer");
  std::optional<CodeSpec> code;
  if (code_source == "magic") {
    code = magic_code_construction(bs);
  } else if (code_source == "stabilizer") {
    code = stabilizer_code_construction(params, bs, positive(cfg.get<int>("K", 2), "K"));
  } else if (code_source.rfind("file:", 0) == 0) {
    code = load_code(code_source.substr(5), params);
  } else if (code_source != "none") {
    throw_error(ErrorCode::kInvalidArgument, "code must be stabilizer, magic, none or file:PATH");
  }
  Outcome out;
  if (code) {
    out.results["K"] = code->K;
    out.results["entanglement_fidelity"] = entanglement_fidelity(*code, chan);
  }
  int trials = cfg.get<int>("trials", 0);
  if (trials > 0) {
    int K = code ? code->K : positive(cfg.get<int>("K", 2), "K");
    out.seed = read_seed(cfg, "fidelity");
    std::vector<CodeSpec> candidates;
    if (code) candidates.push_back(*code);
    FidelitySearch search = search_fidelity(chan, K, trials, *out.seed, candidates);
    out.results["K"] = K;
    out.results["search_best"] = search.best;
    out.results["search_trials"] = search.trials;
    out.results["search_evaluations"] = search.evaluations;
  }
  if (!code && trials <= 0) throw_error(ErrorCode::kInvalidArgument, "fidelity with code none needs trials > 0");
  out.csv = scalar_csv(out.results);
  out.text = scalar_text(out.results);
  return out;
}

Outcome cmd_verify(ConfigReader& cfg) {
  VerifyConfig vc;
  std::string suite = cfg.get<std::string>("suite", "all");
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) {
    throw_error(ErrorCode::kInvalidArgument, "unknown suite '" + suite + "'");
  }
  vc.d = cfg.get<int>("d", vc.d);
  require_odd_prime(QuditParams::make(vc.d, 1), "verify");
  vc.s = cfg.get<int>("s", vc.s);
  vc.t = cfg.get<int>("t", vc.t);
  BSParams::make(QuditParams::make(vc.d, 1), vc.s, vc.t);
  vc.seed = cfg.get<std::uint64_t>("seed", vc.seed);
  vc.samples = positive(cfg.get<int>("samples", vc.samples), "samples");
  vc.restarts = positive(cfg.get<int>("restarts", vc.restarts), "restarts");
  vc.iterations = positive(cfg.get<int>("iterations", vc.iterations), "iterations");
  vc.environments = positive(cfg.get<int>("environments", vc.environments), "environments");
  vc.optimizer_environments =
      positive(cfg.get<int>("optimizer_environments", vc.optimizer_environments), "optimizer_environments");
  vc.symmetric_environment = cfg.get<std::string>("symmetric_environment", vc.symmetric_environment);
  vc.clt_steps = positive(cfg.get<int>("steps", vc.clt_steps), "steps");
  vc.lemma_samples = positive(cfg.get<int>("lemma_samples", vc.lemma_samples), "lemma_samples");
  vc.trials = positive(cfg.get<int>("trials", vc.trials), "trials");

  Outcome out;
  out.seed = vc.seed;
  json suites = json::array();
  out.csv = "suite,check,measured,relation,threshold,pass\n";
  for (const SuiteReport& report : verify_suite(suite, vc)) {
    json lines = json::array();
    out.text += "== " + report.suite + "\n";
    for (const CheckLine& line : report.lines) {
      lines.push_back({{"name", line.name},
                       {"measured", line.measured},
                       {"relation", line.relation},
                       {"threshold", line.threshold},
                       {"pass", line.pass},
                       {"detail", line.detail}});
      std::string name = line.name;
      std::replace(name.begin(), name.end(), ',', ';');
      out.csv += report.suite + "," + name + "," + format_number(line.measured) + "," + line.relation + "," +
                 format_number(line.threshold) + "," + (line.pass ? "PASS" : "FAIL") + "\n";
      out.text += format_line(line) + "\n";
    }
    suites.push_back({{"theorem", report.suite},
                      {"config", cfg.echo()},
                      {"samples", report.samples},
                      {"worst_violation", report.worst_violation},
                      {"pass", report.pass()},
                      {"checks", lines}});
    out.pass = out.pass && report.pass();
  }
  out.results = {{"suite", suite}, {"reports", suites}};
  out.text += std::string(out.pass ? "PASS" : "FAIL") + "  suite " + suite + "\n";
  return out;
}

struct Handler {
  std::function<Outcome(ConfigReader&)> run;
  std::vector<std::string> keys;
};

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table = {
      {"params", {cmd_params, {"d"}}},
      {"coherent", {cmd_coherent, {"d", "n", "s", "t", "env", "input"}}},
      {"capacity", {cmd_capacity, {"d", "n", "s", "t", "env", "seed", "restarts", "iterations", "polish_steps"}}},
      {"magic", {cmd_magic, {"d", "n", "s", "t", "env", "heavy", "max_cuts"}}},
      {"convolve", {cmd_convolve, {"d", "n", "s", "t", "env", "input", "complement"}}},
      {"clt", {cmd_clt, {"d", "n", "s", "t", "input", "steps"}}},
      {"wigner", {cmd_wigner, {"d", "n", "s", "t", "env"}}},
      {"fidelity", {cmd_fidelity, {"d", "n", "s", "t", "env", "code", "K", "trials", "seed"}}},
      {"verify",
       {cmd_verify,
        {"suite", "d", "s", "t", "seed", "samples", "restarts", "iterations", "environments",
         "optimizer_environments", "symmetric_environment", "steps", "lemma_samples", "trials"}}}};
  return table;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"params", "coherent", "capacity", "magic", "convolve",
                                                 "clt",    "wigner",   "fidelity", "verify"};
  return names;
}

CommandResult run_command(const std::string& command, const nlohmann::json& config) {
  auto it = handlers().find(command);
  if (it == handlers().end()) throw_error(ErrorCode::kInvalidArgument, "unknown command '" + command + "'");
  auto start = std::chrono::steady_clock::now();
  ConfigReader cfg(config);
  cfg.allow(it->second.keys);
  Outcome outcome = it->second.run(cfg);
  double elapsed =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  CommandResult result;
  result.report = {{"command", command},
                   {"inputs_echo", cfg.echo()},
                   {"results", outcome.results},
                   {"seed", outcome.seed ? json(*outcome.seed) : json(nullptr)},
                   {"version", kVersion},
                   {"wall_time_ms", elapsed},
                   {"pass", outcome.pass}};
  result.csv = std::move(outcome.csv);
  result.text = std::move(outcome.text);
  result.pass = outcome.pass;
  return result;
}

}  // namespace qmcap
