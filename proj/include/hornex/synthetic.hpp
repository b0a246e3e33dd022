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
#include <vector>

#include "hornex/kg.hpp"
#include "hornex/rules.hpp"

namespace hornex {

// Clustered random graph with planted rules. Relations r0..r3 carry random
// facts between entities of the same cluster; r4..r11 are rule heads whose
// facts are exactly what the rules imply:
//   r0.r1 => r4, r1.r2 => r5, r2.r3 => r6, r3.r0 => r7
//   r0 => r8, r1 => r9, r2 => r10, r3 => r11
struct SyntheticSpec {
  std::size_t num_entities = 200;
  std::size_t cluster_size = 10;
  std::size_t facts_per_base_relation = 400;
  double test_fraction = 0.2;
  double valid_fraction = 0.1;
  std::uint64_t seed = 0;
};

inline constexpr std::size_t kSyntheticBaseRelations = 4;
inline constexpr std::size_t kSyntheticRelations = 12;

struct SyntheticGraph {
  // Base facts are all in train; implied facts are split train/valid/test,
  // so test holds only rule-implied facts.
  KnowledgeGraph graph;
  std::vector<HornRule> rules;
};

SyntheticGraph make_planted_graph(const SyntheticSpec& spec);

}  // namespace hornex
