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

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "qmcap.h"

namespace {

enum class Kind { kInt, kSeed, kString, kFlag };

struct Flag {
  const char* key;
  const char* name;
  Kind kind;
  const char* help;
};

const std::vector<Flag>& all_flags() {
  static const std::vector<Flag> flags = {
      {"d", "--d", Kind::kInt, "local dimension (prime)"},
      {"n", "--n", Kind::kInt, "number of qudits"},
      {"s", "--s", Kind::kInt, "beam-splitter weight s"},
      {"t", "--t", Kind::kInt, "beam-splitter weight t"},
      {"env", "--env", Kind::kString, "environment state, preset:NAME or file:PATH"},
      {"input", "--input", Kind::kString, "input state, preset:NAME or file:PATH"},
      {"seed", "--seed", Kind::kSeed, "master seed"},
      {"restarts", "--restarts", Kind::kInt, "optimizer restarts"},
      {"iterations", "--iterations", Kind::kInt, "optimizer iterations per restart"},
      {"polish_steps", "--polish-steps", Kind::kInt, "gradient polish steps per restart"},
      {"steps", "--steps", Kind::kInt, "convolution steps"},
      {"K", "--K", Kind::kInt, "code dimension"},
      {"code", "--code", Kind::kString, "stabilizer, magic, none or file:PATH"},
      {"trials", "--trials", Kind::kInt, "random search trials"},
      {"suite", "--suite", Kind::kString, "all, theorem-2..5, lemmas or coding"},
      {"samples", "--samples", Kind::kInt, "random inputs per environment"},
      {"environments", "--environments", Kind::kInt, "random environments"},
      {"optimizer_environments", "--optimizer-environments", Kind::kInt, "stabilizer environments given to the optimizer"},
      {"symmetric_environment", "--symmetric-env", Kind::kString, "environment preset for the symmetric case"},
      {"lemma_samples", "--lemma-samples", Kind::kInt, "random pairs for the lemma checks"},
      {"max_cuts", "--max-cuts", Kind::kInt, "cutting-plane budget"},
      {"heavy", "--heavy", Kind::kFlag, "allow the slow two-qudit stabilizer enumeration"},
      {"complement", "--complement", Kind::kFlag, "apply the complementary convolution"},
  };
  return flags;
}

struct Command {
  const char* name;
  const char* help;
  std::vector<std::string> keys;
};

const std::vector<Command>& commands() {
  static const std::vector<Command> table = {
      {"params", "list the (s, t) pairs for a dimension", {"d"}},
      {"coherent", "coherent information of an input through the channel", {"d", "n", "s", "t", "env", "input"}},
      {"capacity", "one-shot capacity lower bound by multi-restart ascent",
       {"d", "n", "s", "t", "env", "seed", "restarts", "iterations", "polish_steps"}},
      {"magic", "magic measures of a state", {"d", "n", "s", "t", "env", "heavy", "max_cuts"}},
      {"convolve", "beam-splitter convolution of two states", {"d", "n", "s", "t", "env", "input", "complement"}},
      {"clt", "iterated self-convolution toward the mean state", {"d", "n", "s", "t", "input", "steps"}},
      {"wigner", "discrete Wigner function and negativity", {"d", "n", "s", "t", "env"}},
      {"fidelity", "entanglement fidelity of a code through the channel",
       {"d", "n", "s", "t", "env", "code", "K", "trials", "seed"}},
      {"verify", "run a verification suite",
       {"suite", "d", "s", "t", "seed", "samples", "restarts", "iterations", "environments", "optimizer_environments",
        "symmetric_environment", "steps", "lemma_samples", "trials"}},
  };
  return table;
}

struct Values {
  std::map<std::string, std::optional<int>> ints;
  std::map<std::string, std::optional<std::uint64_t>> seeds;
  std::map<std::string, std::optional<std::string>> strings;
  std::map<std::string, bool> flags;
};

int exit_code(qmcap_status status) {
  switch (status) {
    case QMCAP_OK:
      return 0;
    case QMCAP_INVALID_ARGUMENT:
    case QMCAP_UNSUPPORTED:
    case QMCAP_IO:
      return 2;
    default:
      return 1;
  }
}

bool write_file(const std::string& path, const char* body) {
  std::ofstream out(path);
  if (!out) return false;
  out << body;
  return static_cast<bool>(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Beam-splitter channels, magic and quantum capacity on prime-dimensional qudits"};
  app.set_version_flag("--version", qmcap_version());
  app.set_config("--config", "", "TOML run file");
  app.require_subcommand(1);

  std::string format = "json";
  std::string out_path;
  Values values;
  std::map<std::string, CLI::App*> subcommands;
  for (const Command& command : commands()) {
    CLI::App* sub = app.add_subcommand(command.name, command.help);
    subcommands[command.name] = sub;
    for (const Flag& flag : all_flags()) {
      if (std::find(command.keys.begin(), command.keys.end(), flag.key) == command.keys.end()) continue;
      switch (flag.kind) {
        case Kind::kInt:
          sub->add_option(flag.name, values.ints[flag.key], flag.help);
          break;
        case Kind::kSeed:
          sub->add_option(flag.name, values.seeds[flag.key], flag.help);
          break;
        case Kind::kString:
          sub->add_option(flag.name, values.strings[flag.key], flag.help);
          break;
        case Kind::kFlag:
          sub->add_flag(flag.name, values.flags[flag.key], flag.help);
          break;
      }
    }
    sub->add_option("--format", format, "report format")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--out", out_path, "write the report to this file");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::string name;
  for (const auto& [key, sub] : subcommands) {
    if (sub->parsed()) name = key;
  }
  nlohmann::json config = nlohmann::json::object();
  for (const auto& [key, v] : values.ints) {
    if (v) config[key] = *v;
  }
  for (const auto& [key, v] : values.seeds) {
    if (v) config[key] = *v;
  }
  for (const auto& [key, v] : values.strings) {
    if (v) config[key] = *v;
  }
  for (const auto& [key, v] : values.flags) {
    if (v) config[key] = true;
  }

  char* json = nullptr;
  char* csv = nullptr;
  char* text = nullptr;
  qmcap_status status = qmcap_run_all(name.c_str(), config.dump().c_str(), &json, &csv, &text);
  int code = exit_code(status);
  if (json != nullptr) {
    const char* body = format == "json" ? json : format == "csv" ? csv : text;
    if (out_path.empty()) {
      std::fputs(body, stdout);
    } else if (write_file(out_path, body)) {
      std::fputs(text, stdout);
    } else {
      std::fprintf(stderr, "qmcap: cannot write %s\n", out_path.c_str());
      code = 2;
    }
  }
  if (status != QMCAP_OK) std::fprintf(stderr, "qmcap: %s\n", qmcap_last_error());
  qmcap_string_free(json);
  qmcap_string_free(csv);
  qmcap_string_free(text);
  return code;
}
