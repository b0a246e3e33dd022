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

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "hornex/fewshot.hpp"
#include "hornex/synthetic.hpp"
#include "hornex/verify.hpp"
#include "json.hpp"

namespace hornex::cli {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

std::string trim(std::string_view s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string_view::npos) return {};
  const auto end = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(begin, end - begin + 1));
}

template <typename T>
T parse_number(const std::string& key, const std::string& text) {
  const auto value = trim(text);
  T out{};
  const auto* first = value.data();
  const auto* last = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(first, last, out);
  if (value.empty() || ec != std::errc() || ptr != last) {
    throw ConfigError(key + ": cannot parse '" + value + "' as a number");
  }
  return out;
}

bool parse_bool(const std::string& key, const std::string& text) {
  const auto value = trim(text);
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw ConfigError(key + ": expected true or false, got '" + value + "'");
}

std::vector<std::string> parse_names(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto name = trim(item);
    if (!name.empty()) out.push_back(std::move(name));
  }
  return out;
}

std::vector<std::size_t> parse_sizes(const std::string& key, const std::string& text) {
  std::vector<std::size_t> out;
  for (const auto& item : parse_names(text)) out.push_back(parse_number<std::size_t>(key, item));
  if (out.empty()) throw ConfigError(key + ": expected a comma-separated list");
  return out;
}

std::string join(const std::vector<std::size_t>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + std::to_string(values[i]);
  return out;
}

// Setter for "section.key"; `base` resolves relative paths.
using Setter = std::function<void(RunConfig&, const std::string& value, const fs::path& base)>;

const std::map<std::string, Setter>& setters() {
  auto path_setter = [](fs::path Paths::*member) {
    return Setter([member](RunConfig& c, const std::string& v, const fs::path& base) {
      const fs::path p = trim(v);
      c.paths.*member = (p.empty() || p.is_absolute() || base.empty()) ? p : (base / p).lexically_normal();
    });
  };
  static const std::map<std::string, Setter> table = {
      {"paths.train", path_setter(&Paths::train)},
      {"paths.valid", path_setter(&Paths::valid)},
      {"paths.test", path_setter(&Paths::test)},
      {"paths.rules", path_setter(&Paths::rules)},
      {"paths.output", path_setter(&Paths::output)},
      {"paths.checkpoint", path_setter(&Paths::checkpoint)},
      {"train.learning_rate",
       [](RunConfig& c, const std::string& v, const fs::path&) {
         c.train.learning_rate = parse_number<double>("train.learning_rate", v);
       }},
      {"train.batch_size",
       [](RunConfig& c, const std::string& v, const fs::path&) {
         c.train.batch_size = parse_number<std::size_t>("train.batch_size", v);
       }},
      {"train.epochs",
       [](RunConfig& c, const std::string& v, const fs::path&) {
         c.train.epochs = parse_number<std::size_t>("train.epochs", v);
       }},
      {"train.validate_every",
       [](RunConfig& c, const std::string& v, const fs::path&) {
         c.train.validate_every = parse_number<std::size_t>("train.validate_every", v);
       }},
      {"train.mu",
       [](RunConfig& c, const std::string& v, const fs::path&) {
         c.train.mu = parse_number<double>("train.mu", v);
       }},
      {"train.eta",
       [](RunConfig& c, const std::string& v, const fs::path&) {
         c.train.eta = parse_number<double>("train.eta", v);
       }},
      {"train.negatives",
       [](RunConfig& c, const std::string& v, const fs::path&) {
         c.train.negatives_per_positive = parse_number<std::size_t>("train.negatives", v);
       }},
      {"train.bound",
       [](RunConfig& c, const std::string& v, const fs::path&) {
         c.train.bound_r = parse_number<double>("train.bound", v);
       }},
      {"train.dim",
       [](RunConfig& c, const std::string& v, const fs::path&) {
         c.train.dim = parse_number<std::size_t>("train.dim", v);
       }},
      {"train.seed",
       [](RunConfig& c, const std::string& v, const fs::path&) {
         c.train.seed = parse_number<std::uint64_t>("train.seed", v);
       }},
      {"train.validation_side",
       [](RunConfig& c, const std::string& v, const fs::path&) {
         c.train.validation_side = parse_side_mode(trim(v));
       }},
      {"eval.side",
       [](RunConfig& c, const std::string& v, const fs::path&) {
         c.eval.side = parse_side_mode(trim(v));
       }},
      {"eval.hits",
       [](RunConfig& c, const std::string& v, const fs::path&) {
         c.eval.hits = parse_sizes("eval.hits", v);
       }},
      {"eval.split",
       [](RunConfig& c, const std::string& v, const fs::path&) {
         const auto split = trim(v);
         if (split != "valid" && split != "test") {
           throw ConfigError("eval.split: expected valid or test, got '" + split + "'");
         }
         c.eval.split = split;
       }},
      {"rules.min_confidence",
       [](RunConfig& c, const std::string& v, const fs::path&) {
         c.rules.min_confidence = parse_number<double>("rules.min_confidence", v);
       }},
      {"rules.max_length",
       [](RunConfig& c, const std::string& v, const fs::path&) {
         c.rules.max_length = parse_number<std::size_t>("rules.max_length", v);
       }},
      {"rules.strict",
       [](RunConfig& c, const std::string& v, const fs::path&) {
         c.rules.strict = parse_bool("rules.strict", v);
       }},
      {"fewshot.task_relations",
       [](RunConfig& c, const std::string& v, const fs::path&) {
         c.fewshot.task_relations = parse_number<std::size_t>("fewshot.task_relations", v);
       }},
      {"fewshot.shots",
       [](RunConfig& c, const std::string& v, const fs::path&) {
         c.fewshot.shots = parse_sizes("fewshot.shots", v);
       }},
      {"fewshot.eligible",
       [](RunConfig& c, const std::string& v, const fs::path&) { c.fewshot.eligible = parse_names(v); }},
      {"fewshot.seed",
       [](RunConfig& c, const std::string& v, const fs::path&) {
         c.fewshot.seed = parse_number<std::uint64_t>("fewshot.seed", v);
       }},
      {"verify.ks",
       [](RunConfig& c, const std::string& v, const fs::path&) { c.verify.ks = parse_sizes("verify.ks", v); }},
      {"verify.dims",
       [](RunConfig& c, const std::string& v, const fs::path&) {
         c.verify.dims = parse_sizes("verify.dims", v);
       }},
      {"verify.bound",
       [](RunConfig& c, const std::string& v, const fs::path&) {
         c.verify.bound = parse_number<double>("verify.bound", v);
       }},
      {"verify.trials",
       [](RunConfig& c, const std::string& v, const fs::path&) {
         c.verify.trials = parse_number<std::size_t>("verify.trials", v);
       }},
      {"verify.seed",
       [](RunConfig& c, const std::string& v, const fs::path&) {
         c.verify.seed = parse_number<std::uint64_t>("verify.seed", v);
       }},
      {"synth.entities",
       [](RunConfig& c, const std::string& v, const fs::path&) {
         c.synth.entities = parse_number<std::size_t>("synth.entities", v);
       }},
      {"synth.cluster_size",
       [](RunConfig& c, const std::string& v, const fs::path&) {
         c.synth.cluster_size = parse_number<std::size_t>("synth.cluster_size", v);
       }},
      {"synth.facts_per_base_relation",
       [](RunConfig& c, const std::string& v, const fs::path&) {
         c.synth.facts_per_base_relation = parse_number<std::size_t>("synth.facts_per_base_relation", v);
       }},
      {"synth.seed",
       [](RunConfig& c, const std::string& v, const fs::path&) {
         c.synth.seed = parse_number<std::uint64_t>("synth.seed", v);
       }},
      {"run.threads",
       [](RunConfig& c, const std::string& v, const fs::path&) {
         c.threads = parse_number<int>("run.threads", v);
       }},
  };
  return table;
}

void assign(RunConfig& config, const std::string& key, const std::string& value, const fs::path& base) {
  const auto it = setters().find(key);
  if (it == setters().end()) throw ConfigError("unknown config key '" + key + "'");
  try {
    it->second(config, value, base);
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(key + ": " + e.what());
  }
}

fs::path prepare_output(const RunConfig& config) {
  const auto& dir = config.paths.output;
  fs::create_directories(dir);
  std::ofstream out(dir / "resolved_config.json");
  if (!out) throw std::runtime_error("cannot write to output directory " + dir.string());
  out << Json::parse(config_echo(config)).dump(2) << '\n';
  return dir;
}

void require_file(const fs::path& path, const std::string& what) {
  if (path.empty()) throw ConfigError(what + " path is not set");
  if (!fs::is_regular_file(path)) throw ConfigError(what + " file not found: " + path.string());
}

KnowledgeGraph load_kg(const RunConfig& config) {
  require_file(config.paths.train, "train");
  Dictionaries dicts;
  auto train = load_triples(config.paths.train, dicts);
  std::vector<Triple> valid, test;
  if (!config.paths.valid.empty()) {
    require_file(config.paths.valid, "valid");
    valid = load_triples(config.paths.valid, dicts);
  }
  if (!config.paths.test.empty()) {
    require_file(config.paths.test, "test");
    test = load_triples(config.paths.test, dicts);
  }
  return build_graph(std::move(dicts), std::move(train), std::move(valid), std::move(test));
}

std::vector<HornRule> load_rules(const RunConfig& config, const KnowledgeGraph& kg) {
  require_file(config.paths.rules, "rules");
  const auto parsed = parse_rules(config.paths.rules, kg.dicts().relations);
  return filter_rules(parsed, config.rules);
}

fs::path checkpoint_path(const RunConfig& config) {
  return config.paths.checkpoint.empty() ? config.paths.output / "checkpoint.bin" : config.paths.checkpoint;
}

Checkpoint load_matching_checkpoint(const RunConfig& config, const KnowledgeGraph& kg) {
  const auto path = checkpoint_path(config);
  require_file(path, "checkpoint");
  auto ckpt = load_checkpoint(path);
  if (ckpt.embeddings.num_entities() != kg.num_entities() ||
      ckpt.embeddings.num_relations() != kg.num_relations()) {
    throw ConfigError("checkpoint " + path.string() + " has " +
                      std::to_string(ckpt.embeddings.num_entities()) + " entities and " +
                      std::to_string(ckpt.embeddings.num_relations()) + " relations, graph has " +
                      std::to_string(kg.num_entities()) + " and " + std::to_string(kg.num_relations()));
  }
  return ckpt;
}

Json metrics_json(const RankingReport& report, const std::string& split, const std::string& echo) {
  Json j;
  j["split"] = split;
  j["mrr"] = report.mrr;
  for (const auto& [k, v] : report.hits_at) j["hits@" + std::to_string(k)] = v;
  j["count"] = report.count();
  j["config"] = Json::parse(echo);
  return j;
}

void write_json(const fs::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << j.dump(2) << '\n';
}

void print_metrics(std::ostream& log, const RankingReport& report, const std::string& split) {
  log << split << ": mrr " << report.mrr;
  for (const auto& [k, v] : report.hits_at) log << "  hits@" << k << ' ' << v;
  log << "  (" << report.count() << " ranks)\n";
}

}  // namespace

RunConfig load_config(const fs::path& path, const Overrides& overrides) {
  RunConfig config;
  if (!path.empty()) {
    if (!fs::is_regular_file(path)) throw ConfigError("config file not found: " + path.string());
    boost::property_tree::ptree tree;
    try {
      boost::property_tree::ini_parser::read_ini(path.string(), tree);
    } catch (const boost::property_tree::ini_parser_error& e) {
      throw ConfigError(e.what());
    }
    const auto base = path.parent_path();
    for (const auto& [section, body] : tree) {
      if (body.empty()) throw ConfigError("config key '" + section + "' is outside any section");
      for (const auto& [key, value] : body) assign(config, section + "." + key, value.data(), base);
    }
  }
  for (const auto& a : overrides.assignments) {
    const auto eq = a.find('=');
    if (eq == std::string::npos) throw ConfigError("--set expects section.key=value, got '" + a + "'");
    assign(config, trim(a.substr(0, eq)), a.substr(eq + 1), {});
  }
  if (overrides.seed) {
    config.train.seed = *overrides.seed;
    config.fewshot.seed = *overrides.seed;
    config.verify.seed = *overrides.seed;
    config.synth.seed = *overrides.seed;
  }
  if (overrides.threads) config.threads = *overrides.threads;
  if (overrides.output_dir) config.paths.output = *overrides.output_dir;
  return config;
}

std::string config_echo(const RunConfig& c) {
  Json j;
  j["paths"] = {{"train", c.paths.train.string()},   {"valid", c.paths.valid.string()},
                {"test", c.paths.test.string()},     {"rules", c.paths.rules.string()},
                {"output", c.paths.output.string()}, {"checkpoint", c.paths.checkpoint.string()}};
  j["train"] = {{"learning_rate", c.train.learning_rate},
                {"batch_size", c.train.batch_size},
                {"epochs", c.train.epochs},
                {"validate_every", c.train.validate_every},
                {"mu", c.train.mu},
                {"eta", c.train.eta},
                {"negatives", c.train.negatives_per_positive},
                {"bound", c.train.bound_r},
                {"dim", c.train.dim},
                {"seed", c.train.seed},
                {"validation_side", to_string(c.train.validation_side)}};
  j["eval"] = {{"side", to_string(c.eval.side)}, {"hits", join(c.eval.hits)}, {"split", c.eval.split}};
  j["rules"] = {{"min_confidence", c.rules.min_confidence},
                {"max_length", c.rules.max_length},
                {"strict", c.rules.strict}};
  std::string eligible;
  for (std::size_t i = 0; i < c.fewshot.eligible.size(); ++i) eligible += (i ? "," : "") + c.fewshot.eligible[i];
  j["fewshot"] = {{"task_relations", c.fewshot.task_relations},
                  {"shots", join(c.fewshot.shots)},
                  {"eligible", eligible},
                  {"seed", c.fewshot.seed}};
  j["verify"] = {{"ks", join(c.verify.ks)},
                 {"dims", join(c.verify.dims)},
                 {"bound", c.verify.bound},
                 {"trials", c.verify.trials},
                 {"seed", c.verify.seed}};
  j["synth"] = {{"entities", c.synth.entities},
                {"cluster_size", c.synth.cluster_size},
                {"facts_per_base_relation", c.synth.facts_per_base_relation},
                {"seed", c.synth.seed}};
  j["run"] = {{"threads", c.threads}};
  return j.dump();
}

int cmd_train(const RunConfig& config, std::ostream& log) {
  validate(config.train);
  const auto kg = load_kg(config);
  std::vector<HornRule> rules;
  if (config.train.mu > 0.0) {
    if (config.paths.rules.empty()) throw ConfigError("train.mu > 0 needs paths.rules");
    rules = load_rules(config, kg);
  }
  const auto out = prepare_output(config);
  const auto echo = config_echo(config);
  log << "training on " << kg.train().size() << " triples, " << kg.num_entities() << " entities, "
      << kg.num_relations() << " relations, " << rules.size() << " rules\n";

  const auto result = train(kg, rules, config.train);
  save_checkpoint(out / "checkpoint.bin", result.embeddings, result.optimizer, echo);
  kg.dicts().entities.write(out / "entities.dict");
  kg.dicts().relations.write(out / "relations.dict");

  std::ofstream train_log(out / "train_log.jsonl");
  train_log << Json{{"config", Json::parse(echo)}}.dump() << '\n';
  for (const auto& rec : result.log) {
    Json j{{"epoch", rec.epoch},
           {"logistic", rec.logistic},
           {"rule_penalty", rec.rule_penalty},
           {"n3", rec.n3},
           {"total", rec.total}};
    if (rec.valid_mrr) j["valid_mrr"] = *rec.valid_mrr;
    train_log << j.dump() << '\n';
  }
  if (!result.log.empty()) log << "final epoch loss " << result.log.back().total << '\n';

  if (!kg.valid().empty()) {
    const auto report = evaluate(result.embeddings, kg, kg.valid(), config.train.validation_side,
                                 config.eval.hits);
    write_json(out / "metrics_valid.json", metrics_json(report, "valid", echo));
    print_metrics(log, report, "valid");
  }
  log << "wrote " << (out / "checkpoint.bin").string() << '\n';
  return 0;
}

int cmd_eval(const RunConfig& config, std::ostream& log) {
  const auto kg = load_kg(config);
  const auto ckpt = load_matching_checkpoint(config, kg);
  const auto& split = config.eval.split == "valid" ? kg.valid() : kg.test();
  if (split.empty()) throw ConfigError("the " + config.eval.split + " split is empty");
  const auto out = prepare_output(config);
  const auto echo = config_echo(config);

  const auto report = evaluate(ckpt.embeddings, kg, split, config.eval.side, config.eval.hits);
  write_json(out / ("metrics_" + config.eval.split + ".json"), metrics_json(report, config.eval.split, echo));

  std::ofstream ranks(out / ("ranks_" + config.eval.split + ".tsv"));
  ranks.precision(17);
  const auto& d = kg.dicts();
  for (const auto& r : report.ranks) {
    ranks << d.entities.name(r.triple.head.value) << '\t' << d.relations.name(r.triple.relation.value)
          << '\t' << d.entities.name(r.triple.tail.value) << '\t' << to_string(r.side) << '\t' << r.rank
          << '\n';
  }
  print_metrics(log, report, config.eval.split);
  return 0;
}

int cmd_rules_filter(const RunConfig& config, std::ostream& log) {
  const auto kg = load_kg(config);
  require_file(config.paths.rules, "rules");
  const auto parsed = parse_rules(config.paths.rules, kg.dicts().relations);
  const auto kept = filter_rules(parsed, config.rules);
  const auto out = prepare_output(config);
  write_rules(out / "rules_filtered.tsv", kept, kg.dicts().relations);

  std::map<std::string, std::size_t> by_kind;
  for (const auto& r : kept) ++by_kind[to_string(r.kind())];
  log << "kept " << kept.size() << " of " << parsed.size() << " rules";
  for (const auto& [kind, count] : by_kind) log << "  " << kind << ' ' << count;
  log << '\n';
  return 0;
}

int cmd_rules_confidence(const RunConfig& config, std::ostream& log) {
  const auto kg = load_kg(config);
  require_file(config.paths.rules, "rules");
  const auto parsed = parse_rules(config.paths.rules, kg.dicts().relations);
  const auto out = prepare_output(config);
  const auto& rel = kg.dicts().relations;

  std::ofstream report(out / "rule_confidence.tsv");
  report.precision(17);
  report << "stated\tground\tbody_groundings\tsupported\thead\tbody\n";
  std::vector<HornRule> rescored;
  std::size_t unsupported = 0;
  for (const auto& rule : parsed) {
    const auto counts = count_groundings(kg, rule);
    report << rule.confidence << '\t';
    if (counts.body == 0) {
      report << "NA";
      ++unsupported;
    } else {
      const double conf = static_cast<double>(counts.supported) / static_cast<double>(counts.body);
      report << conf;
      if (conf > 0.0) rescored.push_back({rule.body, rule.head, conf});
    }
    report << '\t' << counts.body << '\t' << counts.supported << '\t' << rel.name(rule.head.value) << '\t';
    for (std::size_t i = 0; i < rule.body.size(); ++i) report << (i ? "," : "") << rel.name(rule.body[i].value);
    report << '\n';
  }
  write_rules(out / "rules_rescored.tsv", rescored, rel);
  log << "scored " << parsed.size() << " rules, " << unsupported << " without body groundings\n";
  return 0;
}

int cmd_fewshot(const RunConfig& config, std::ostream& log) {
  const auto kg = load_kg(config);
  FewShotSpec spec;
  spec.num_task_relations = config.fewshot.task_relations;
  spec.seed = config.fewshot.seed;
  for (const auto& name : config.fewshot.eligible) {
    const auto id = kg.dicts().relations.find(name);
    if (!id) throw ConfigError("fewshot.eligible: unknown relation '" + name + "'");
    spec.eligible.push_back(RelationId{*id});
  }
  const auto out = prepare_output(config);
  const auto echo = config_echo(config);
  for (const auto shots : config.fewshot.shots) {
    spec.shots = shots;
    const auto split = make_fewshot_split(kg, spec);
    const auto dir = out / ("shots_" + std::to_string(shots));
    write_fewshot_split(dir, split, spec, echo);
    log << shots << "-shot split: " << split.graph.train().size() << " train, "
        << split.graph.valid().size() << " valid, " << split.graph.test().size() << " test -> "
        << dir.string() << '\n';
  }
  return 0;
}

int cmd_verify(const RunConfig& config, std::ostream& log) {
  const auto& v = config.verify;
  const auto out = prepare_output(config);
  const auto echo = config_echo(config);
  const auto suite = run_theorem_suite(v.ks, v.dims, v.bound, v.trials, v.seed);

  std::ofstream reports(out / "theorem_reports.jsonl");
  reports << Json{{"config", Json::parse(echo)}}.dump() << '\n';
  bool ok = true;
  for (const auto& entry : suite) {
    const auto& r = entry.report;
    Json j{{"check", r.check},
           {"role", to_string(entry.role)},
           {"k", r.k},
           {"dim", r.dim},
           {"bound", r.bound},
           {"seed", r.seed},
           {"regime", r.regime},
           {"construction", r.construction},
           {"tolerance", r.tolerance},
           {"trials", r.trials},
           {"violations", r.violations},
           {"skipped", r.skipped},
           {"max_violation_magnitude", r.max_violation_magnitude}};
    if (r.aligned_violations) j["aligned_violations"] = *r.aligned_violations;
    j["passed"] = entry.passed();
    reports << j.dump() << '\n';

    log << (entry.passed() ? "ok   " : "FAIL ") << to_string(entry.role) << ' ' << r.check << " k=" << r.k
        << " d=" << r.dim << ' ' << r.regime << ' ' << r.construction << ": " << r.violations << '/'
        << r.trials << " violations, max " << r.max_violation_magnitude;
    if (r.aligned_violations) log << ", aligned " << *r.aligned_violations;
    log << '\n';
    if (entry.role != SuiteEntry::Role::kInformational && !entry.passed()) ok = false;
  }
  log << (ok ? "all acceptance checks and controls passed\n" : "verification FAILED\n");
  return ok ? 0 : 1;
}

int cmd_diagnostics(const RunConfig& config, std::ostream& log) {
  const auto kg = load_kg(config);
  const auto ckpt = load_matching_checkpoint(config, kg);
  const auto rules = load_rules(config, kg);
  const auto out = prepare_output(config);

  const auto diag = relation_rule_diagnostics(ckpt.embeddings, rules);
  write_diagnostics_csv(out / "rule_diagnostics.csv", diag);
  write_summary_csv(out / "rule_summary.csv", diag);
  export_csv(out / "entity_embeddings.csv", ckpt.embeddings.entities);
  export_csv(out / "relation_embeddings.csv", ckpt.embeddings.relations);
  log << rules.size() << " rules, mean hinge violation " << diag.mean_hinge() << '\n';
  return 0;
}

int cmd_synth(const RunConfig& config, std::ostream& log) {
  SyntheticSpec spec;
  spec.num_entities = config.synth.entities;
  spec.cluster_size = config.synth.cluster_size;
  spec.facts_per_base_relation = config.synth.facts_per_base_relation;
  spec.seed = config.synth.seed;
  const auto syn = make_planted_graph(spec);
  const auto out = prepare_output(config);
  const auto& g = syn.graph;
  write_triples(out / "train.txt", g.train(), g.dicts());
  write_triples(out / "valid.txt", g.valid(), g.dicts());
  write_triples(out / "test.txt", g.test(), g.dicts());
  write_rules(out / "rules.tsv", syn.rules, g.dicts().relations);
  log << "planted graph: " << g.train().size() << " train, " << g.valid().size() << " valid, "
      << g.test().size() << " test, " << syn.rules.size() << " rules -> " << out.string() << '\n';
  return 0;
}

}  // namespace hornex::cli
