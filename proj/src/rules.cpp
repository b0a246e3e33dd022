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

#include "hornex/rules.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <unordered_map>

namespace hornex {

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, '\t')) fields.push_back(field);
  return fields;
}

}  // namespace

const char* to_string(RuleKind kind) {
  switch (kind) {
    case RuleKind::kHierarchy:
      return "hierarchy";
    case RuleKind::kComposition:
      return "composition";
    case RuleKind::kGeneral:
      return "general";
  }
  return "unknown";
}

void validate(const HornRule& rule) {
  if (rule.body.empty()) throw std::invalid_argument("rule body must be non-empty");
  if (!(rule.confidence > 0.0 && rule.confidence <= 1.0)) {
    throw std::invalid_argument("rule confidence " + std::to_string(rule.confidence) +
                                " outside (0, 1]");
  }
}

std::vector<HornRule> parse_rules(const std::filesystem::path& path, const Dictionary& relations) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open rule file " + path.string());

  std::vector<HornRule> rules;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto fields = split_tabs(line);
    if (fields.size() < 3) {
      throw ParseError(path.string(), lineno, "expected confidence, head and at least one body relation");
    }

    HornRule rule;
    const auto& conf = fields[0];
    const auto [ptr, ec] = std::from_chars(conf.data(), conf.data() + conf.size(), rule.confidence);
    if (ec != std::errc() || ptr != conf.data() + conf.size()) {
      throw ParseError(path.string(), lineno, "invalid confidence '" + conf + "'");
    }
    if (!(rule.confidence > 0.0 && rule.confidence <= 1.0)) {
      throw ParseError(path.string(), lineno, "confidence " + conf + " outside (0, 1]");
    }

    auto resolve = [&](const std::string& name) {
      const auto id = relations.find(name);
      if (!id) {
        throw LookupError(path.string() + ":" + std::to_string(lineno) + ": unknown relation '" +
                          name + "'");
      }
      return RelationId{*id};
    };
    rule.head = resolve(fields[1]);
    for (std::size_t i = 2; i < fields.size(); ++i) rule.body.push_back(resolve(fields[i]));
    rules.push_back(std::move(rule));
  }
  return rules;
}

void write_rules(const std::filesystem::path& path, std::span<const HornRule> rules,
                 const Dictionary& relations) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out.precision(17);
  for (const auto& rule : rules) {
    out << rule.confidence << '\t' << relations.name(rule.head.value);
    for (const auto r : rule.body) out << '\t' << relations.name(r.value);
    out << '\n';
  }
}

std::vector<HornRule> filter_rules(std::span<const HornRule> rules, const RuleFilter& filter) {
  std::vector<HornRule> kept;
  for (const auto& rule : rules) {
    const bool confident = filter.strict ? rule.confidence > filter.min_confidence
                                         : rule.confidence >= filter.min_confidence;
    if (confident && rule.length() <= filter.max_length) kept.push_back(rule);
  }
  return kept;
}

GroundingCounts count_groundings(const KnowledgeGraph& kg, const HornRule& rule) {
  if (rule.body.empty()) return {};
  const auto first = kg.pairs(rule.body.front());

  // Start offsets of each distinct head in the (sorted) first-relation pairs.
  std::vector<std::size_t> starts;
  for (std::size_t i = 0; i < first.size(); ++i) {
    if (i == 0 || first[i].first != first[i - 1].first) starts.push_back(i);
  }
  starts.push_back(first.size());

  std::uint64_t body = 0;
  std::uint64_t supported = 0;
  const auto groups = static_cast<std::ptrdiff_t>(starts.size()) - 1;

#pragma omp parallel for schedule(dynamic) reduction(+ : body, supported)
  for (std::ptrdiff_t g = 0; g < groups; ++g) {
    const EntityId x = first[starts[g]].first;
    std::unordered_map<std::uint32_t, std::uint64_t> frontier;
    for (std::size_t i = starts[g]; i < starts[g + 1]; ++i) frontier[first[i].second.value] += 1;

    for (std::size_t step = 1; step < rule.body.size() && !frontier.empty(); ++step) {
      std::unordered_map<std::uint32_t, std::uint64_t> next;
      for (const auto& [z, paths] : frontier) {
        for (const auto y : kg.tails_of(EntityId{z}, rule.body[step])) next[y.value] += paths;
      }
      frontier = std::move(next);
    }

    for (const auto& [y, paths] : frontier) {
      body += paths;
      if (kg.contains(Triple{x, rule.head, EntityId{y}})) supported += paths;
    }
  }
  return {body, supported};
}

std::optional<double> ground_confidence(const KnowledgeGraph& kg, const HornRule& rule) {
  const auto counts = count_groundings(kg, rule);
  if (counts.body == 0) return std::nullopt;
  return static_cast<double>(counts.supported) / static_cast<double>(counts.body);
}

}  // namespace hornex
