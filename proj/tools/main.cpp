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

#include <omp.h>

#include <exception>
#include <functional>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

using Command = std::function<int(const hornex::cli::RunConfig&, std::ostream&)>;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hornex: rule-constrained ComplEx embeddings for knowledge graphs"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  std::string config_path;
  hornex::cli::Overrides overrides;
  std::uint64_t seed = 0;
  int threads = 0;
  std::string output_dir;
  app.add_option("--config", config_path, "INI run configuration");
  auto* seed_opt = app.add_option("--seed", seed, "Override every seed in the configuration");
  auto* threads_opt = app.add_option("--threads", threads, "Cap on OpenMP worker threads")->check(CLI::PositiveNumber);
  auto* output_opt = app.add_option("--output-dir", output_dir, "Directory for all artifacts");
  app.add_option("--set", overrides.assignments, "Override a config value: section.key=value");

  Command command;
  auto bind = [&](CLI::App* sub, Command fn) { sub->callback([&command, fn] { command = fn; }); };
  bind(app.add_subcommand("train", "Train embeddings, write checkpoint, log and validation metrics"),
       hornex::cli::cmd_train);
  bind(app.add_subcommand("eval", "Filtered ranking evaluation of a checkpoint"), hornex::cli::cmd_eval);
  auto* rules = app.add_subcommand("rules", "Rule file utilities");
  rules->require_subcommand(1);
  bind(rules->add_subcommand("filter", "Keep rules by confidence and length"), hornex::cli::cmd_rules_filter);
  bind(rules->add_subcommand("confidence", "Re-score rules against the graph"),
       hornex::cli::cmd_rules_confidence);
  bind(app.add_subcommand("fewshot", "Build zero/few-shot splits"), hornex::cli::cmd_fewshot);
  bind(app.add_subcommand("verify", "Run the numerical inequality suite"), hornex::cli::cmd_verify);
  bind(app.add_subcommand("diagnostics", "Export per-rule embedding deltas and embeddings"),
       hornex::cli::cmd_diagnostics);
  bind(app.add_subcommand("synth", "Write the planted-rule synthetic graph"), hornex::cli::cmd_synth);

  CLI11_PARSE(app, argc, argv);

  if (*seed_opt) overrides.seed = seed;
  if (*threads_opt) overrides.threads = threads;
  if (*output_opt) overrides.output_dir = output_dir;

  try {
    const auto config = hornex::cli::load_config(config_path, overrides);
    if (config.threads > 0) omp_set_num_threads(config.threads);
    return command(config, std::cout);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
