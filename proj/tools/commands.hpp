// Copyright 2026 The Hornex Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hornex/eval.hpp"
#include "hornex/rules.hpp"
#include "hornex/training.hpp"

namespace hornex::cli {

struct Paths {
  std::filesystem::path train;
  std::filesystem::path valid;
  std::filesystem::path test;
  std::filesystem::path rules;
  std::filesystem::path output = "out";
  std::filesystem::path checkpoint;  // empty: <output>/checkpoint.bin
};

struct EvalOptions {
  SideMode side = SideMode::kBoth;
  std::vector<std::size_t> hits = kDefaultHits;
  std::string split = "test";  // valid | test
};

struct FewShotOptions {
  std::size_t task_relations = 1;
  std::vector<std::size_t> shots = {0, 1, 3, 5};
  std::vector<std::string> eligible;  // relation names; empty means all
  std::uint64_t seed = 0;
};

struct VerifyOptions {
  std::vector<std::size_t> ks = {1, 2, 3};
  std::vector<std::size_t> dims = {2, 8, 32};
  double bound = 1.0;
  std::size_t trials = 10000;
  std::uint64_t seed = 0;
};

struct SynthOptions {
  std::size_t entities = 200;
  std::size_t cluster_size = 10;
  std::size_t facts_per_base_relation = 400;
  std::uint64_t seed = 0;
};

struct RunConfig {
  Paths paths;
  TrainConfig train;
  EvalOptions eval;
  RuleFilter rules;
  FewShotOptions fewshot;
  VerifyOptions verify;
  SynthOptions synth;
  int threads = 0;  // 0: OpenMP default
};

// Flags that override values read from the config file.
struct Overrides {
  std::optional<std::uint64_t> seed;  // all seeds: train, fewshot, verify, synth
  std::optional<int> threads;
  std::optional<std::filesystem::path> output_dir;
  std::vector<std::string> assignments;  // "section.key=value"
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// INI sections [paths] [train] [eval] [rules] [fewshot] [verify] [synth]
// [run]. Unknown sections or keys are rejected. Relative paths in the file
// resolve against the file's directory; an empty path means defaults only.
RunConfig load_config(const std::filesystem::path& path, const Overrides& overrides = {});

// The resolved configuration as a JSON object (compact text).
std::string config_echo(const RunConfig& config);

// Each command returns a process exit code and writes its artifacts under
// config.paths.output. Human-readable progress goes to `log`.
int cmd_train(const RunConfig& config, std::ostream& log);
int cmd_eval(const RunConfig& config, std::ostream& log);
int cmd_rules_filter(const RunConfig& config, std::ostream& log);
int cmd_rules_confidence(const RunConfig& config, std::ostream& log);
int cmd_fewshot(const RunConfig& config, std::ostream& log);
int cmd_verify(const RunConfig& config, std::ostream& log);
int cmd_diagnostics(const RunConfig& config, std::ostream& log);
int cmd_synth(const RunConfig& config, std::ostream& log);

}  // namespace hornex::cli
