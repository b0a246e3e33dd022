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
#include <string>
#include <vector>

#include "hornex/kg.hpp"

namespace hornex {

struct FewShotSpec {
  std::size_t num_task_relations = 1;
  std::size_t shots = 0;
  std::uint64_t seed = 0;
  // Relations that may be drawn as tasks; empty means all relations.
  std::vector<RelationId> eligible;
};

struct FewShotSplit {
  KnowledgeGraph graph;
  std::vector<RelationId> task_relations;
  std::vector<Triple> support;  // distinct support triples, task order then prefix order
};

// Task relations are drawn without replacement; each gets a seeded
// permutation of its distinct triples whose first `shots` entries stay in
// train. Everything else of a task relation (train, valid and test) moves to
// test. The draws do not depend on `shots`, so support sets nest across shot
// counts under one seed.
FewShotSplit make_fewshot_split(const KnowledgeGraph& kg, const FewShotSpec& spec);

// train.txt, valid.txt, test.txt and manifest.json (task relations, support
// triples, plus `config_echo` as a raw JSON value when non-empty).
void write_fewshot_split(const std::filesystem::path& dir, const FewShotSplit& split,
                         const FewShotSpec& spec, const std::string& config_echo = {});

}  // namespace hornex
