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
#include <filesystem>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "hornex/kg.hpp"

namespace hornex {

enum class RuleKind { kHierarchy, kComposition, kGeneral };

// Definite Horn rule over a forward relation chain:
//   body[0](x, z1) & body[1](z1, z2) & ... & body[k-1](z_{k-1}, y) => head(x, y)
struct HornRule {
  std::vector<RelationId> body;
  RelationId head;
  double confidence = 1.0;

  std::size_t length() const { return body.size(); }
  RuleKind kind() const {
    if (body.size() == 1) return RuleKind::kHierarchy;
    if (body.size() == 2) return RuleKind::kComposition;
    return RuleKind::kGeneral;
  }

  friend bool operator==(const HornRule&, const HornRule&) = default;
};

const char* to_string(RuleKind kind);

// Throws std::invalid_argument for an empty body or confidence outside (0, 1].
void validate(const HornRule& rule);

// `confidence<TAB>head<TAB>body_1[<TAB>body_2...]`, `#` lines are comments.
std::vector<HornRule> parse_rules(const std::filesystem::path& path, const Dictionary& relations);
void write_rules(const std::filesystem::path& path, std::span<const HornRule> rules,
                 const Dictionary& relations);

struct RuleFilter {
  double min_confidence = 0.0;
  std::size_t max_length = std::numeric_limits<std::size_t>::max();
  bool strict = false;  // compare with > instead of >=
};

std::vector<HornRule> filter_rules(std::span<const HornRule> rules, const RuleFilter& filter);

struct GroundingCounts {
  std::uint64_t body = 0;       // body groundings (paths)
  std::uint64_t supported = 0;  // paths whose head triple is known
};

// Exhaustive path count of the rule body over the graph. Paths through
// distinct intermediate entities count separately.
GroundingCounts count_groundings(const KnowledgeGraph& kg, const HornRule& rule);

// supported / body, or nullopt when the body has no groundings.
std::optional<double> ground_confidence(const KnowledgeGraph& kg, const HornRule& rule);

}  // namespace hornex
