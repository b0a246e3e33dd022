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

#include "hornex/fewshot.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace hornex {

FewShotSplit make_fewshot_split(const KnowledgeGraph& kg, const FewShotSpec& spec) {
  if (spec.num_task_relations < 1) throw std::invalid_argument("fewshot: need at least one task relation");

  std::vector<RelationId> pool = spec.eligible;
  if (pool.empty()) {
    for (std::uint32_t r = 0; r < kg.num_relations(); ++r) pool.push_back(RelationId{r});
  }
  if (spec.num_task_relations > pool.size()) {
    throw std::invalid_argument("fewshot: asked for " + std::to_string(spec.num_task_relations) +
                                " task relations but only " + std::to_string(pool.size()) +
                                " are eligible");
  }

  std::seed_seq seq{spec.seed, std::uint64_t{0xfe75}};
  std::mt19937_64 rng(seq);
  std::shuffle(pool.begin(), pool.end(), rng);
  FewShotSplit out;
  out.task_relations.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(spec.num_task_relations));

  std::vector<bool> is_task(kg.num_relations(), false);
  for (const auto r : out.task_relations) is_task[r.value] = true;

  std::set<Triple> support;
  for (const auto r : out.task_relations) {
    // Distinct triples of the relation in split order.
    std::vector<Triple> distinct;
    std::set<Triple> seen;
    for (const auto* split : {&kg.train(), &kg.valid(), &kg.test()}) {
      for (const auto& t : *split) {
        if (t.relation == r && seen.insert(t).second) distinct.push_back(t);
      }
    }
    std::shuffle(distinct.begin(), distinct.end(), rng);
    if (distinct.size() <= spec.shots) {
      throw std::invalid_argument("fewshot: task relation '" + kg.dicts().relations.name(r.value) +
                                  "' has " + std::to_string(distinct.size()) +
                                  " triples, need more than " + std::to_string(spec.shots));
    }
    for (std::size_t i = 0; i < spec.shots; ++i) {
      support.insert(distinct[i]);
      out.support.push_back(distinct[i]);
    }
  }

  std::vector<Triple> train, valid, test;
  auto route = [&](const Triple& t, std::vector<Triple>& home) {
    if (!is_task[t.relation.value]) {
      home.push_back(t);
    } else if (support.contains(t)) {
      train.push_back(t);
    } else {
      test.push_back(t);
    }
  };
  for (const auto& t : kg.train()) route(t, train);
  for (const auto& t : kg.valid()) route(t, valid);
  for (const auto& t : kg.test()) route(t, test);

  out.graph = build_graph(kg.dicts(), std::move(train), std::move(valid), std::move(test));
  return out;
}

void write_fewshot_split(const std::filesystem::path& dir, const FewShotSplit& split,
                         const FewShotSpec& spec, const std::string& config_echo) {
  std::filesystem::create_directories(dir);
  const auto& dicts = split.graph.dicts();
  write_triples(dir / "train.txt", split.graph.train(), dicts);
  write_triples(dir / "valid.txt", split.graph.valid(), dicts);
  write_triples(dir / "test.txt", split.graph.test(), dicts);

  nlohmann::ordered_json manifest;
  manifest["shots"] = spec.shots;
  manifest["seed"] = spec.seed;
  manifest["task_relations"] = nlohmann::json::array();
  for (const auto r : split.task_relations) manifest["task_relations"].push_back(dicts.relations.name(r.value));
  manifest["support"] = nlohmann::json::array();
  for (const auto& t : split.support) {
    manifest["support"].push_back({dicts.entities.name(t.head.value), dicts.relations.name(t.relation.value),
                                   dicts.entities.name(t.tail.value)});
  }
  if (!config_echo.empty()) manifest["config"] = nlohmann::json::parse(config_echo);

  std::ofstream out(dir / "manifest.json");
  if (!out) throw std::runtime_error("cannot write manifest in " + dir.string());
  out << manifest.dump(2) << '\n';
}

}  // namespace hornex
