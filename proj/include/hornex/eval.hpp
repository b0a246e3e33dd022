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
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hornex/kg.hpp"
#include "hornex/model.hpp"
#include "hornex/rules.hpp"

namespace hornex {

enum class Side { kHead, kTail };
enum class SideMode { kBoth, kHead, kTail };

const char* to_string(Side side);
const char* to_string(SideMode mode);
SideMode parse_side_mode(std::string_view text);

// Filtered rank of `t` among all entities substituted into `side`. Known
// triples other than `t` are skipped. Ties count half:
//   rank = 1 + #{c : s_c > s_t} + #{c : s_c == s_t} / 2
// Throws std::invalid_argument if `t` is not a known triple.
double filtered_rank(const EmbeddingTable& emb, const KnowledgeGraph& kg, const Triple& t,
                     Side side);

struct RankedTriple {
  Triple triple;
  Side side;
  double rank;
};

struct RankingReport {
  std::vector<RankedTriple> ranks;
  double mrr = 0.0;
  std::map<std::size_t, double> hits_at;  // k -> fraction with rank <= k
  std::size_t count() const { return ranks.size(); }
};

inline const std::vector<std::size_t> kDefaultHits = {1, 3, 10};

// Aggregates precomputed ranks; exposed so that callers can check the
// reduction separately from the ranking.
RankingReport aggregate(std::vector<RankedTriple> ranks, std::span<const std::size_t> hits);

// Ranks every triple of `split` on the requested sides, in split order
// (head before tail for each triple). Throws on an empty split.
RankingReport evaluate(const EmbeddingTable& emb, const KnowledgeGraph& kg,
                       std::span<const Triple> split, SideMode mode = SideMode::kBoth,
                       std::span<const std::size_t> hits = kDefaultHits);

namespace serial {
RankingReport evaluate(const EmbeddingTable& emb, const KnowledgeGraph& kg,
                       std::span<const Triple> split, SideMode mode = SideMode::kBoth,
                       std::span<const std::size_t> hits = kDefaultHits);
}  // namespace serial

struct RuleDimDelta {
  std::size_t rule_id;
  std::size_t dim;
  double delta_re;  // Re(body product)/R^k - Re(head)/R
  double delta_im;  // Im(body product)/R^k - Im(head)/R
};

struct RuleSummary {
  std::size_t rule_id;
  std::size_t length;
  double max_delta_re;
  double mean_delta_im_sq;
  double hinge_sum;  // sum_l max(0, delta_re)
};

struct RuleDiagnostics {
  std::vector<RuleDimDelta> deltas;
  std::vector<RuleSummary> summaries;

  // Mean over rules of hinge_sum; 0 for an empty rule set.
  double mean_hinge() const;
};

RuleDiagnostics relation_rule_diagnostics(const EmbeddingTable& emb,
                                          std::span<const HornRule> rules);

// Columns rule_id,dim,delta_re,delta_im.
void write_diagnostics_csv(const std::filesystem::path& path, const RuleDiagnostics& diag);
// Columns rule_id,length,max_delta_re,mean_delta_im_sq,hinge_sum.
void write_summary_csv(const std::filesystem::path& path, const RuleDiagnostics& diag);

}  // namespace hornex
