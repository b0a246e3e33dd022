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

#include "hornex/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

namespace hornex {

namespace {

using Pair = std::pair<std::uint32_t, std::uint32_t>;

std::set<Pair> compose(const std::set<Pair>& first, const std::set<Pair>& second) {
  std::multimap<std::uint32_t, std::uint32_t> by_head;
  for (const auto& [h, t] : second) by_head.emplace(h, t);
  std::set<Pair> out;
  for (const auto& [x, z] : first) {
    auto [lo, hi] = by_head.equal_range(z);
    for (auto it = lo; it != hi; ++it) out.emplace(x, it->second);
  }
  return out;
}

HornRule planted(std::initializer_list<std::uint32_t> body, std::uint32_t head) {
  HornRule rule;
  for (const auto r : body) rule.body.push_back(RelationId{r});
  rule.head = RelationId{head};
  rule.confidence = 1.0;
  return rule;
}

}  // namespace

SyntheticGraph make_planted_graph(const SyntheticSpec& spec) {
  const std::size_t n = spec.num_entities;
  const std::size_t c = spec.cluster_size;
  if (c < 2 || n < c) throw std::invalid_argument("synthetic graph needs 2 <= cluster_size <= num_entities");
  // Pairs (h, t), h != t, inside complete clusters plus the trailing partial one.
  const std::size_t full = n / c;
  const std::size_t rest = n % c;
  const std::size_t capacity = full * c * (c - 1) + rest * (rest > 0 ? rest - 1 : 0);
  if (spec.facts_per_base_relation > capacity) {
    throw std::invalid_argument("facts_per_base_relation exceeds the number of within-cluster pairs");
  }
  if (spec.test_fraction < 0 || spec.valid_fraction < 0 || spec.test_fraction + spec.valid_fraction >= 1) {
    throw std::invalid_argument("test_fraction + valid_fraction must lie in [0, 1)");
  }

  std::seed_seq seq{spec.seed, std::uint64_t{0x5719}};
  std::mt19937_64 rng(seq);

  Dictionaries dicts;
  for (std::size_t e = 0; e < n; ++e) dicts.entities.intern("e" + std::to_string(e));
  for (std::size_t r = 0; r < kSyntheticRelations; ++r) dicts.relations.intern("r" + std::to_string(r));

  std::vector<std::set<Pair>> facts(kSyntheticRelations);
  std::uniform_int_distribution<std::uint32_t> entity(0, static_cast<std::uint32_t>(n - 1));
  std::uniform_int_distribution<std::uint32_t> member(0, static_cast<std::uint32_t>(c - 1));
  for (std::size_t r = 0; r < kSyntheticBaseRelations; ++r) {
    while (facts[r].size() < spec.facts_per_base_relation) {
      const auto h = entity(rng);
      const auto t = static_cast<std::uint32_t>(h / c * c) + member(rng);
      if (t < n && t != h) facts[r].emplace(h, t);
    }
  }

  SyntheticGraph out;
  out.rules = {planted({0, 1}, 4), planted({1, 2}, 5), planted({2, 3}, 6), planted({3, 0}, 7),
               planted({0}, 8),    planted({1}, 9),    planted({2}, 10),   planted({3}, 11)};
  for (const auto& rule : out.rules) {
    const auto& body = rule.body;
    const auto implied =
        body.size() == 1 ? facts[body[0].value] : compose(facts[body[0].value], facts[body[1].value]);
    facts[rule.head.value].insert(implied.begin(), implied.end());
  }

  std::vector<Triple> train, valid, test;
  for (std::size_t r = 0; r < kSyntheticRelations; ++r) {
    std::vector<Pair> pairs(facts[r].begin(), facts[r].end());
    std::size_t n_test = 0;
    std::size_t n_valid = 0;
    if (r >= kSyntheticBaseRelations) {
      std::shuffle(pairs.begin(), pairs.end(), rng);
      const auto size = static_cast<double>(pairs.size());
      n_test = static_cast<std::size_t>(std::llround(spec.test_fraction * size));
      n_valid = static_cast<std::size_t>(std::llround(spec.valid_fraction * size));
    }
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      auto& dest = i < n_test ? test : (i < n_test + n_valid ? valid : train);
      dest.push_back({EntityId{pairs[i].first}, RelationId{static_cast<std::uint32_t>(r)}, EntityId{pairs[i].second}});
    }
  }
  std::shuffle(train.begin(), train.end(), rng);

  out.graph = build_graph(std::move(dicts), std::move(train), std::move(valid), std::move(test));
  return out;
}

}  // namespace hornex
