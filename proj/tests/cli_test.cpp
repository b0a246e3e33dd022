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

#include "commands.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include "json.hpp"
#include "test_util.hpp"

namespace hornex::cli {
namespace {

namespace fs = std::filesystem;
using hornex::testing::read_file;
using hornex::testing::TempDir;
using hornex::testing::write_file;

std::vector<nlohmann::json> read_jsonl(const fs::path& path) {
  std::vector<nlohmann::json> out;
  std::istringstream in(read_file(path));
  for (std::string line; std::getline(in, line);) out.push_back(nlohmann::json::parse(line));
  return out;
}

// Writes a small planted graph plus a config pointing at it.
struct ToyRun {
  TempDir dir;
  RunConfig config;

  ToyRun() {
    RunConfig synth;
    synth.paths.output = dir / "data";
    synth.synth = {40, 8, 30, 5};
    std::ostringstream log;
    cmd_synth(synth, log);
    write_file(dir / "run.ini",
               "[paths]\ntrain = data/train.txt\nvalid = data/valid.txt\ntest = data/test.txt\n"
               "rules = data/rules.tsv\noutput = out\n"
               "[train]\nepochs = 3\ndim = 8\nbatch_size = 40\nmu = 0.5\nvalidate_every = 1\n"
               "[verify]\nks = 1,2\ndims = 2\ntrials = 200\n");
    config = load_config(dir / "run.ini");
  }
};

TEST(Config, DefaultsWithoutFile) {
  const auto c = load_config({});
  EXPECT_EQ(c.train.dim, 64u);
  EXPECT_EQ(c.fewshot.shots, (std::vector<std::size_t>{0, 1, 3, 5}));
  EXPECT_EQ(c.paths.output, fs::path("out"));
}

TEST(Config, ParsesSectionsAndResolvesRelativePaths) {
  TempDir dir;
  write_file(dir / "c.ini",
             "[paths]\ntrain = d/train.txt\ntest = /abs/test.txt\n[train]\nlearning_rate = 0.25\n"
             "mu = 2\nvalidation_side = tail\n[eval]\nhits = 1,5\n[rules]\nstrict = true\n"
             "[fewshot]\neligible = a, b\n[run]\nthreads = 3\n");
  const auto c = load_config(dir / "c.ini");
  EXPECT_EQ(c.paths.train, dir.path() / "d/train.txt");
  EXPECT_EQ(c.paths.test, fs::path("/abs/test.txt"));
  EXPECT_DOUBLE_EQ(c.train.learning_rate, 0.25);
  EXPECT_DOUBLE_EQ(c.train.mu, 2.0);
  EXPECT_EQ(c.train.validation_side, SideMode::kTail);
  EXPECT_EQ(c.eval.hits, (std::vector<std::size_t>{1, 5}));
  EXPECT_TRUE(c.rules.strict);
  EXPECT_EQ(c.fewshot.eligible, (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(c.threads, 3);
}

TEST(Config, RejectsUnknownKeysAndBadValues) {
  TempDir dir;
  write_file(dir / "c.ini", "[train]\nlearnin_rate = 0.1\n");
  EXPECT_THROW(load_config(dir / "c.ini"), ConfigError);
  write_file(dir / "c.ini", "[train]\nepochs = ten\n");
  EXPECT_THROW(load_config(dir / "c.ini"), ConfigError);
  write_file(dir / "c.ini", "[eval]\nsplit = train\n");
  EXPECT_THROW(load_config(dir / "c.ini"), ConfigError);
  EXPECT_THROW(load_config(dir / "missing.ini"), ConfigError);
}

TEST(Config, OverridesApplyAfterFile) {
  TempDir dir;
  write_file(dir / "c.ini", "[train]\nseed = 1\nepochs = 5\n[paths]\noutput = o\n");
  Overrides o;
  o.seed = 99;
  o.threads = 2;
  o.output_dir = dir / "elsewhere";
  o.assignments = {"train.epochs=7", "verify.trials=50"};
  const auto c = load_config(dir / "c.ini", o);
  EXPECT_EQ(c.train.seed, 99u);
  EXPECT_EQ(c.fewshot.seed, 99u);
  EXPECT_EQ(c.verify.seed, 99u);
  EXPECT_EQ(c.synth.seed, 99u);
  EXPECT_EQ(c.threads, 2);
  EXPECT_EQ(c.paths.output, dir / "elsewhere");
  EXPECT_EQ(c.train.epochs, 7u);
  EXPECT_EQ(c.verify.trials, 50u);
  Overrides bad;
  bad.assignments = {"train.epochs"};
  EXPECT_THROW(load_config({}, bad), ConfigError);
}

TEST(Config, EchoIsValidJsonWithEveryField) {
  const auto echo = nlohmann::json::parse(config_echo(load_config({})));
  for (const char* section : {"paths", "train", "eval", "rules", "fewshot", "verify", "synth", "run"}) {
    EXPECT_TRUE(echo.contains(section)) << section;
  }
  EXPECT_EQ(echo["train"]["dim"], 64);
}

TEST(Commands, TrainWritesArtifactsAndLog) {
  ToyRun run;
  std::ostringstream log;
  ASSERT_EQ(cmd_train(run.config, log), 0);
  const auto out = run.dir / "out";
  for (const char* f : {"checkpoint.bin", "entities.dict", "relations.dict", "train_log.jsonl",
                        "metrics_valid.json", "resolved_config.json"}) {
    EXPECT_TRUE(fs::exists(out / f)) << f;
  }
  const auto lines = read_jsonl(out / "train_log.jsonl");
  ASSERT_EQ(lines.size(), 1u + 3u);
  EXPECT_EQ(lines[0]["config"]["train"]["epochs"], 3);
  for (std::size_t e = 1; e <= 3; ++e) {
    EXPECT_EQ(lines[e]["epoch"], e);
    EXPECT_TRUE(lines[e].contains("valid_mrr"));
    EXPECT_GE(lines[e]["rule_penalty"].get<double>(), 0.0);
  }
  const auto metrics = nlohmann::json::parse(read_file(out / "metrics_valid.json"));
  EXPECT_GT(metrics["mrr"].get<double>(), 0.0);
  EXPECT_TRUE(metrics.contains("hits@10"));
  EXPECT_TRUE(metrics.contains("config"));
}

TEST(Commands, ZeroMuLogsZeroPenalty) {
  ToyRun run;
  run.config.train.mu = 0.0;
  std::ostringstream log;
  ASSERT_EQ(cmd_train(run.config, log), 0);
  const auto lines = read_jsonl(run.dir / "out" / "train_log.jsonl");
  for (std::size_t e = 1; e < lines.size(); ++e) EXPECT_EQ(lines[e]["rule_penalty"].get<double>(), 0.0);
}

TEST(Commands, MissingRulesFileNamesThePath) {
  ToyRun run;
  run.config.paths.rules = run.dir / "nope.tsv";
  std::ostringstream log;
  try {
    cmd_train(run.config, log);
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("nope.tsv"), std::string::npos) << e.what();
  }
}

TEST(Commands, EvalAfterZeroEpochsMatchesInitialisation) {
  ToyRun run;
  run.config.train.epochs = 0;
  std::ostringstream log;
  ASSERT_EQ(cmd_train(run.config, log), 0);
  ASSERT_EQ(cmd_eval(run.config, log), 0);
  const auto out = run.dir / "out";
  const auto metrics = nlohmann::json::parse(read_file(out / "metrics_test.json"));
  const auto kg = load_graph(run.config.paths.train, run.config.paths.valid, run.config.paths.test);
  const auto emb = init_embeddings(kg.num_entities(), kg.num_relations(), 8, 1.0, 0);
  EXPECT_DOUBLE_EQ(metrics["mrr"].get<double>(), evaluate(emb, kg, kg.test()).mrr);
  const auto ranks = read_file(out / "ranks_test.tsv");
  EXPECT_EQ(static_cast<std::size_t>(std::count(ranks.begin(), ranks.end(), '\n')), 2 * kg.test().size());
}

TEST(Commands, EvalRejectsMismatchedCheckpoint) {
  ToyRun run;
  const auto other = init_embeddings(3, 1, 8, 1.0, 0);
  fs::create_directories(run.dir / "out");
  save_checkpoint(run.dir / "out" / "checkpoint.bin", other, AdagradState(other), "");
  std::ostringstream log;
  EXPECT_THROW(cmd_eval(run.config, log), ConfigError);
}

TEST(Commands, RulesFilterAndConfidence) {
  ToyRun run;
  std::ostringstream log;
  run.config.rules.max_length = 1;
  ASSERT_EQ(cmd_rules_filter(run.config, log), 0);
  const auto filtered = read_file(run.dir / "out" / "rules_filtered.tsv");
  EXPECT_EQ(std::count(filtered.begin(), filtered.end(), '\n'), 4);
  EXPECT_NE(log.str().find("hierarchy 4"), std::string::npos) << log.str();

  ASSERT_EQ(cmd_rules_confidence(run.config, log), 0);
  const auto report = read_file(run.dir / "out" / "rule_confidence.tsv");
  EXPECT_EQ(report.substr(0, report.find('\n')), "stated\tground\tbody_groundings\tsupported\thead\tbody");
  // Planted rules hold on the full graph.
  std::istringstream rows(report);
  std::string line;
  std::getline(rows, line);
  int n = 0;
  while (std::getline(rows, line)) {
    EXPECT_EQ(line.substr(0, 4), "1\t1\t") << line;
    ++n;
  }
  EXPECT_EQ(n, 8);
}

TEST(Commands, FewShotWritesNestedSplits) {
  ToyRun run;
  run.config.fewshot.eligible = {"r4", "r5", "r6", "r7"};
  std::ostringstream log;
  ASSERT_EQ(cmd_fewshot(run.config, log), 0);
  std::vector<nlohmann::json> support;
  for (const int k : {0, 1, 3, 5}) {
    const auto dir = run.dir / "out" / ("shots_" + std::to_string(k));
    for (const char* f : {"train.txt", "valid.txt", "test.txt", "manifest.json"}) {
      EXPECT_TRUE(fs::exists(dir / f)) << dir << f;
    }
    const auto manifest = nlohmann::json::parse(read_file(dir / "manifest.json"));
    EXPECT_EQ(manifest["support"].size(), static_cast<std::size_t>(k));
    support.push_back(manifest["support"]);
  }
  for (std::size_t i = 1; i < support.size(); ++i) {
    for (std::size_t j = 0; j < support[i - 1].size(); ++j) EXPECT_EQ(support[i][j], support[i - 1][j]);
  }
}

TEST(Commands, FewShotUnknownEligibleRelation) {
  ToyRun run;
  run.config.fewshot.eligible = {"zzz"};
  std::ostringstream log;
  EXPECT_THROW(cmd_fewshot(run.config, log), ConfigError);
}

TEST(Commands, VerifyWritesReportsAndPasses) {
  ToyRun run;
  std::ostringstream log;
  EXPECT_EQ(cmd_verify(run.config, log), 0) << log.str();
  const auto lines = read_jsonl(run.dir / "out" / "theorem_reports.jsonl");
  ASSERT_GT(lines.size(), 1u);
  EXPECT_TRUE(lines[0].contains("config"));
  for (std::size_t i = 1; i < lines.size(); ++i) EXPECT_TRUE(lines[i]["passed"].get<bool>()) << lines[i];
}

TEST(Commands, DiagnosticsExportsCsv) {
  ToyRun run;
  std::ostringstream log;
  ASSERT_EQ(cmd_train(run.config, log), 0);
  ASSERT_EQ(cmd_diagnostics(run.config, log), 0);
  for (const char* f : {"rule_diagnostics.csv", "rule_summary.csv", "entity_embeddings.csv",
                        "relation_embeddings.csv"}) {
    EXPECT_TRUE(fs::exists(run.dir / "out" / f)) << f;
  }
  const auto summary = read_file(run.dir / "out" / "rule_summary.csv");
  EXPECT_EQ(std::count(summary.begin(), summary.end(), '\n'), 1 + 8);
}

}  // namespace
}  // namespace hornex::cli
