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

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "qmcap/commands.hpp"
#include "qmcap/error.hpp"

namespace qmcap {
namespace {

using nlohmann::json;

ErrorCode error_code_of(const std::string& command, const json& config) {
  try {
    run_command(command, config);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << command << " did not fail for " << config.dump();
  return ErrorCode::kInternal;
}

std::filesystem::path temp_file(const std::string& name, const json& content) {
  std::filesystem::path path = std::filesystem::temp_directory_path() / ("qmcap_test_" + name);
  std::ofstream(path) << content.dump();
  return path;
}

TEST(Commands, ReportHasTheCommonFields) {
  CommandResult result = run_command("params", {{"d", 7}});
  for (const char* key : {"command", "inputs_echo", "results", "seed", "version", "wall_time_ms", "pass"}) {
    EXPECT_TRUE(result.report.contains(key)) << key;
  }
  EXPECT_EQ(result.report["command"], "params");
  EXPECT_EQ(result.report["version"], kVersion);
  EXPECT_TRUE(result.report["seed"].is_null());
  EXPECT_EQ(result.report["inputs_echo"]["d"], 7);
  EXPECT_TRUE(result.pass);
}

TEST(Commands, ParamsCountsNontrivialPairs) {
  EXPECT_EQ(run_command("params", {{"d", 7}}).report["results"]["nontrivial_count"], 4);
  EXPECT_EQ(run_command("params", {{"d", 13}}).report["results"]["nontrivial_count"], 8);
  EXPECT_EQ(run_command("params", {{"d", 5}}).report["results"]["nontrivial_count"], 0);
  EXPECT_EQ(error_code_of("params", {{"d", 9}}), ErrorCode::kInvalidArgument);
  EXPECT_EQ(run_command("params", {{"d", 7}}).csv.rfind("s,t,nontrivial\n", 0), 0u);
}

TEST(Commands, RejectsUnknownCommandsKeysAndTypes) {
  EXPECT_EQ(error_code_of("teleport", json::object()), ErrorCode::kInvalidArgument);
  EXPECT_EQ(error_code_of("params", {{"d", 7}, {"seed", 3}}), ErrorCode::kInvalidArgument);
  EXPECT_EQ(error_code_of("params", {{"d", "seven"}}), ErrorCode::kInvalidArgument);
  EXPECT_EQ(error_code_of("params", json::object()), ErrorCode::kInvalidArgument);
  EXPECT_EQ(error_code_of("coherent", {{"d", 7}, {"s", 2}, {"t", 3}, {"env", "ket-zero"}, {"input", "ket-zero"}}),
            ErrorCode::kInvalidArgument);
}

TEST(Commands, CoherentInformationFromStateFile) {
  json state = {{"d", 13}, {"n", 1}, {"form", "dense"}, {"re", json::array()}, {"im", json::array()}};
  for (int i = 0; i < 13; ++i) {
    json re = json::array();
    json im = json::array();
    for (int j = 0; j < 13; ++j) {
      re.push_back(i == j && (i == 0 || i == 9) ? 0.5 : 0.0);
      im.push_back(0.0);
    }
    state["re"].push_back(re);
    state["im"].push_back(im);
  }
  std::filesystem::path path = temp_file("two_level.json", state);
  CommandResult result = run_command(
      "coherent", {{"d", 13}, {"s", 2}, {"t", 6}, {"env", "preset:uniform-01"}, {"input", "file:" + path.string()}});
  EXPECT_NEAR(result.report["results"]["coherent_information"].get<double>(), 0.5, 1e-9);
  EXPECT_NEAR(result.report["results"]["coherent_information_purified"].get<double>(), 0.5, 1e-9);
  std::filesystem::remove(path);

  EXPECT_EQ(error_code_of("coherent", {{"d", 7}, {"s", 2}, {"t", 2}, {"env", "ket-zero"}, {"input", "file:" + path.string()}}),
            ErrorCode::kIo);
}

TEST(Commands, StateFileDimensionMustMatch) {
  std::filesystem::path path =
      temp_file("ket3.json", {{"d", 3}, {"n", 1}, {"form", "ket"}, {"amplitudes", {1, 0, 0}}});
  EXPECT_EQ(error_code_of("coherent", {{"d", 7}, {"s", 2}, {"t", 2}, {"env", "ket-zero"}, {"input", "file:" + path.string()}}),
            ErrorCode::kInvalidArgument);
  std::filesystem::remove(path);
}

TEST(Commands, CapacityNeedsSeedAndIsDeterministic) {
  json config = {{"d", 7}, {"s", 2}, {"t", 2}, {"env", "ket-zero"}, {"restarts", 2}, {"iterations", 100}};
  EXPECT_EQ(error_code_of("capacity", config), ErrorCode::kInvalidArgument);
  config["seed"] = 11;
  CommandResult first = run_command("capacity", config);
  CommandResult second = run_command("capacity", config);
  EXPECT_EQ(first.report["results"], second.report["results"]);
  EXPECT_EQ(first.csv, second.csv);
  EXPECT_EQ(first.report["seed"], 11);
}

TEST(Commands, MagicMeasuresOfUniformSuperposition) {
  CommandResult result = run_command("magic", {{"d", 7}, {"env", "uniform-01"}});
  EXPECT_NEAR(result.report["results"]["mrm"].get<double>(), std::log2(7.0), 1e-9);
  EXPECT_NEAR(result.report["results"]["mrm_route_discrepancy"].get<double>(), 0.0, 1e-9);
  EXPECT_GT(result.report["results"]["wigner_negativity"].get<double>(), 0.0);
  EXPECT_TRUE(result.report["results"]["mrm_inf_converged"].get<bool>());
}

TEST(Commands, ConvolveOfVacuumAndUniformSuperposition) {
  CommandResult result =
      run_command("convolve", {{"d", 7}, {"s", 2}, {"t", 2}, {"env", "ket-zero"}, {"input", "uniform-01"}});
  EXPECT_NEAR(result.report["results"]["entropy"].get<double>(), 1.0, 1e-9);
  EXPECT_NEAR(result.report["results"]["purity"].get<double>(), 0.5, 1e-9);
  EXPECT_EQ(result.csv.rfind("quantity,value\n", 0), 0u);
}

TEST(Commands, CltRespectsTheBound) {
  CommandResult result = run_command("clt", {{"d", 7}, {"s", 2}, {"t", 2}, {"input", "uniform-01"}, {"steps", 10}});
  EXPECT_TRUE(result.pass);
  EXPECT_TRUE(result.report["results"]["bound_respected"].get<bool>());
  EXPECT_EQ(result.report["results"]["steps"].size(), 10u);
}

TEST(Commands, WignerNegativityOfUniformSuperposition) {
  CommandResult result = run_command("wigner", {{"d", 7}, {"env", "uniform-01"}});
  EXPECT_NEAR(result.report["results"]["negativity"].get<double>(), 0.3209970862453525, 1e-9);
}

TEST(Commands, FidelityOfBuiltInAndFileCodes) {
  json magic = {{"d", 13}, {"s", 2}, {"t", 6}, {"env", "appe-magic"}, {"code", "magic"}};
  EXPECT_NEAR(run_command("fidelity", magic).report["results"]["entanglement_fidelity"].get<double>(), 0.75, 1e-9);

  json stab = {{"d", 7}, {"s", 2}, {"t", 5}, {"env", "ket-zero"}, {"code", "stabilizer"}, {"K", 3}};
  EXPECT_NEAR(run_command("fidelity", stab).report["results"]["entanglement_fidelity"].get<double>(), 1.0 / 3, 1e-12);

  std::filesystem::path path = temp_file(
      "code.json", {{"K", 2}, {"encoding", {{1, 0, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0, 0}}}, {"decoding", "projective-default"}});
  json identity = {{"d", 7}, {"s", 1}, {"t", 0}, {"env", "uniform-01"}, {"code", "file:" + path.string()}};
  EXPECT_NEAR(run_command("fidelity", identity).report["results"]["entanglement_fidelity"].get<double>(), 1.0, 1e-12);
  std::filesystem::remove(path);

  json none = {{"d", 7}, {"s", 2}, {"t", 5}, {"env", "ket-zero"}, {"code", "none"}};
  EXPECT_EQ(error_code_of("fidelity", none), ErrorCode::kInvalidArgument);
  none["trials"] = 2;
  EXPECT_EQ(error_code_of("fidelity", none), ErrorCode::kInvalidArgument);
  none["seed"] = 5;
  EXPECT_LE(run_command("fidelity", none).report["results"]["search_best"].get<double>(), 0.5 + 1e-6);
}

TEST(Commands, FidelityRejectsNonIsometricCodeFile) {
  std::filesystem::path path = temp_file(
      "bad_code.json", {{"K", 2}, {"encoding", {{1, 0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0, 0}}}, {"decoding", "projective-default"}});
  json config = {{"d", 7}, {"s", 2}, {"t", 5}, {"env", "ket-zero"}, {"code", "file:" + path.string()}};
  EXPECT_EQ(error_code_of("fidelity", config), ErrorCode::kInvalidArgument);
  std::filesystem::remove(path);
}

TEST(Commands, VerifySuiteReportsPass) {
  CommandResult result = run_command(
      "verify", {{"suite", "theorem-5"}, {"d", 7}, {"s", 2}, {"t", 2}, {"seed", 3}, {"restarts", 1}, {"iterations", 50}});
  EXPECT_TRUE(result.pass);
  EXPECT_NE(result.text.find("PASS"), std::string::npos);
  EXPECT_EQ(error_code_of("verify", {{"suite", "theorem-9"}, {"d", 7}, {"seed", 1}}), ErrorCode::kInvalidArgument);
}

TEST(Commands, NamesListEveryCommand) {
  std::vector<std::string> names = command_names();
  for (const char* name : {"params", "coherent", "capacity", "magic", "convolve", "clt", "wigner", "fidelity", "verify"}) {
    EXPECT_NE(std::find(names.begin(), names.end(), name), names.end()) << name;
  }
}

}  // namespace
}  // namespace qmcap
