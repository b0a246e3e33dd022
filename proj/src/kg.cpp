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

#include "hornex/kg.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace hornex {

namespace {

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find('\t', start);
    if (pos == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

std::uint64_t pair_key(std::uint64_t a, std::uint64_t b) { return (a << 32) | b; }

}  // namespace

ParseError::ParseError(const std::string& source, std::size_t line, const std::string& what)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

std::optional<std::uint32_t> Dictionary::find(std::string_view name) const {
  const auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::uint32_t Dictionary::intern(std::string_view name) {
  auto [it, inserted] =
      index_.try_emplace(std::string(name), static_cast<std::uint32_t>(names_.size()));
  if (inserted) names_.emplace_back(name);
  return it->second;
}

void Dictionary::write(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  for (std::size_t i = 0; i < names_.size(); ++i) out << i << '\t' << names_[i] << '\n';
}

Dictionary Dictionary::read(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  Dictionary dict;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split_tabs(line);
    if (fields.size() != 2) throw ParseError(path.string(), lineno, "expected 2 fields");
    std::size_t expected = dict.size();
    if (fields[0] != std::to_string(expected)) {
      throw ParseError(path.string(), lineno, "indices must be dense and ascending");
    }
    dict.intern(fields[1]);
  }
  return dict;
}

std::vector<Triple> load_triples(const std::filesystem::path& path, Dictionaries& dicts,
                                 DictionaryMode mode) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open triple file " + path.string());

  auto resolve = [&](Dictionary& dict, std::string_view name, std::size_t lineno,
                     const char* kind) -> std::uint32_t {
    if (mode == DictionaryMode::kExtend) return dict.intern(name);
    if (auto id = dict.find(name)) return *id;
    throw LookupError(path.string() + ":" + std::to_string(lineno) + ": unknown " + kind +
                      " '" + std::string(name) + "'");
  };

  std::vector<Triple> triples;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split_tabs(line);
    if (fields.size() != 3) {
      throw ParseError(path.string(), lineno,
                       "expected 3 tab-separated fields, got " + std::to_string(fields.size()));
    }
    Triple t;
    t.head = EntityId{resolve(dicts.entities, fields[0], lineno, "entity")};
    t.relation = RelationId{resolve(dicts.relations, fields[1], lineno, "relation")};
    t.tail = EntityId{resolve(dicts.entities, fields[2], lineno, "entity")};
    triples.push_back(t);
  }
  return triples;
}

void write_triples(const std::filesystem::path& path, std::span<const Triple> triples,
                   const Dictionaries& dicts) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  for (const auto& t : triples) {
    out << dicts.entities.name(t.head.value) << '\t' << dicts.relations.name(t.relation.value)
        << '\t' << dicts.entities.name(t.tail.value) << '\n';
  }
}

KnowledgeGraph::KnowledgeGraph(Dictionaries dicts, std::vector<Triple> train,
                               std::vector<Triple> valid, std::vector<Triple> test)
    : dicts_(std::move(dicts)),
      train_(std::move(train)),
      valid_(std::move(valid)),
      test_(std::move(test)) {
  const auto n = num_entities();
  const auto m = num_relations();
  by_relation_.assign(m, {});
  for (const auto* split : {&train_, &valid_, &test_}) {
    for (const auto& t : *split) {
      if (t.head.value >= n || t.tail.value >= n || t.relation.value >= m) {
        throw std::out_of_range("triple index outside dictionary bounds");
      }
      if (filter_.insert(key(t)).second) {
        by_relation_[t.relation.value].emplace_back(t.head, t.tail);
        tails_[pair_key(t.head.value, t.relation.value)].push_back(t.tail);
        heads_[pair_key(t.relation.value, t.tail.value)].push_back(t.head);
      }
    }
  }
  for (auto& group : by_relation_) std::sort(group.begin(), group.end());
  for (auto& [k, v] : tails_) std::sort(v.begin(), v.end());
  for (auto& [k, v] : heads_) std::sort(v.begin(), v.end());
}

std::uint64_t KnowledgeGraph::key(const Triple& t) const {
  const std::uint64_t n = num_entities();
  const std::uint64_t m = num_relations();
  return (static_cast<std::uint64_t>(t.head.value) * m + t.relation.value) * n + t.tail.value;
}

bool KnowledgeGraph::contains(const Triple& t) const {
  if (t.head.value >= num_entities() || t.tail.value >= num_entities() ||
      t.relation.value >= num_relations()) {
    return false;
  }
  return filter_.contains(key(t));
}

std::span<const EntityId> KnowledgeGraph::tails_of(EntityId head, RelationId r) const {
  const auto it = tails_.find(pair_key(head.value, r.value));
  if (it == tails_.end()) return {};
  return it->second;
}

std::span<const EntityId> KnowledgeGraph::heads_of(RelationId r, EntityId tail) const {
  const auto it = heads_.find(pair_key(r.value, tail.value));
  if (it == heads_.end()) return {};
  return it->second;
}

KnowledgeGraph build_graph(Dictionaries dicts, std::vector<Triple> train,
                           std::vector<Triple> valid, std::vector<Triple> test) {
  return KnowledgeGraph(std::move(dicts), std::move(train), std::move(valid), std::move(test));
}

KnowledgeGraph load_graph(const std::filesystem::path& train, const std::filesystem::path& valid,
                          const std::filesystem::path& test) {
  Dictionaries dicts;
  auto tr = load_triples(train, dicts);
  auto va = load_triples(valid, dicts);
  auto te = load_triples(test, dicts);
  return build_graph(std::move(dicts), std::move(tr), std::move(va), std::move(te));
}

}  // namespace hornex
