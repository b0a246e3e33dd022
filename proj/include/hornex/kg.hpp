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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace hornex {

struct EntityId {
  std::uint32_t value = 0;
  friend auto operator<=>(const EntityId&, const EntityId&) = default;
};

struct RelationId {
  std::uint32_t value = 0;
  friend auto operator<=>(const RelationId&, const RelationId&) = default;
};

struct Triple {
  EntityId head;
  RelationId relation;
  EntityId tail;
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class LookupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Dense string <-> index map. Indices are assigned in first-seen order.
class Dictionary {
 public:
  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }

  std::optional<std::uint32_t> find(std::string_view name) const;
  // Returns the existing index or appends a new one.
  std::uint32_t intern(std::string_view name);
  const std::string& name(std::uint32_t index) const { return names_.at(index); }
  std::span<const std::string> names() const { return names_; }

  // `<index>\t<surface>` per line.
  void write(const std::filesystem::path& path) const;
  static Dictionary read(const std::filesystem::path& path);

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::uint32_t> index_;
};

struct Dictionaries {
  Dictionary entities;
  Dictionary relations;
};

// Controls whether unseen names extend the dictionaries or raise LookupError.
enum class DictionaryMode { kExtend, kFrozen };

// Reads `head<TAB>relation<TAB>tail` lines. Line order is preserved and
// duplicate lines are kept.
std::vector<Triple> load_triples(const std::filesystem::path& path, Dictionaries& dicts,
                                 DictionaryMode mode = DictionaryMode::kExtend);

void write_triples(const std::filesystem::path& path, std::span<const Triple> triples,
                   const Dictionaries& dicts);

using EntityPair = std::pair<EntityId, EntityId>;

class KnowledgeGraph {
 public:
  KnowledgeGraph() = default;
  KnowledgeGraph(Dictionaries dicts, std::vector<Triple> train, std::vector<Triple> valid,
                 std::vector<Triple> test);

  const Dictionaries& dicts() const { return dicts_; }
  std::size_t num_entities() const { return dicts_.entities.size(); }
  std::size_t num_relations() const { return dicts_.relations.size(); }

  const std::vector<Triple>& train() const { return train_; }
  const std::vector<Triple>& valid() const { return valid_; }
  const std::vector<Triple>& test() const { return test_; }

  // Set membership over the union of all three splits.
  bool contains(const Triple& t) const;
  std::size_t filter_size() const { return filter_.size(); }

  // Deduplicated (head, tail) pairs of a relation over all splits, sorted by
  // head then tail.
  std::span<const EntityPair> pairs(RelationId r) const { return by_relation_.at(r.value); }
  // Tails t with (head, r, t) known, sorted ascending.
  std::span<const EntityId> tails_of(EntityId head, RelationId r) const;
  // Heads h with (h, r, tail) known, sorted ascending.
  std::span<const EntityId> heads_of(RelationId r, EntityId tail) const;

 private:
  std::uint64_t key(const Triple& t) const;

  Dictionaries dicts_;
  std::vector<Triple> train_, valid_, test_;
  std::unordered_set<std::uint64_t> filter_;
  std::vector<std::vector<EntityPair>> by_relation_;
  std::unordered_map<std::uint64_t, std::vector<EntityId>> tails_;
  std::unordered_map<std::uint64_t, std::vector<EntityId>> heads_;
};

KnowledgeGraph build_graph(Dictionaries dicts, std::vector<Triple> train,
                           std::vector<Triple> valid, std::vector<Triple> test);

// Loads train, then valid, then test, extending one set of dictionaries.
KnowledgeGraph load_graph(const std::filesystem::path& train, const std::filesystem::path& valid,
                          const std::filesystem::path& test);

}  // namespace hornex
