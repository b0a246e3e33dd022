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

#include "hornex/eval.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace hornex {

namespace {

double rank_with(const EmbeddingTable& emb, const KnowledgeGraph& kg, const Triple& t, Side side,
                 bool parallel_kernel) {
  if (!kg.contains(t)) throw std::invalid_argument("filtered_rank: triple is not a known fact");

  std::vector<double> scores;
  std::span<const EntityId> known;
  std::uint32_t target = 0;
  if (side == Side::kTail) {
    scores = parallel_kernel ? score_all_tails(emb, t.head, t.relation)
                             : serial::score_all_tails(emb, t.head, t.relation);
    known = kg.tails_of(t.head, t.relation);
    target = t.tail.value;
  } else {
    scores = parallel_kernel ? score_all_heads(emb, t.relation, t.tail)
                             : serial::score_all_heads(emb, t.relation, t.tail);
    known = kg.heads_of(t.relation, t.tail);
    target = t.head.value;
  }

  const double s_t = scores[target];
  std::int64_t greater = 0;
  std::int64_t equal = 0;
  for (std::size_t c = 0; c < scores.size(); ++c) {
    if (c == target) continue;
    if (scores[c] > s_t) {
      ++greater;
    } else if (scores[c] == s_t) {
      ++equal;
    }
  }
  // Remove the known (filtered) candidates again.
  for (const auto c : known) {
    if (c.value == target) continue;
    if (scores[c.value] > s_t) {
      --greater;
    } else if (scores[c.value] == s_t) {
      --equal;
    }
  }
  return 1.0 + static_cast<double>(greater) + static_cast<double>(equal) / 2.0;
}

std::vector<RankedTriple> rank_slots(std::span<const Triple> split, SideMode mode) {
  if (split.empty()) throw std::invalid_argument("evaluate: empty split");
  std::vector<RankedTriple> slots;
  slots.reserve(split.size() * 2);
  for (const auto& t : split) {
    if (mode != SideMode::kTail) slots.push_back({t, Side::kHead, 0.0});
    if (mode != SideMode::kHead) slots.push_back({t, Side::kTail, 0.0});
  }
  return slots;
}

}  // namespace

const char* to_string(Side side) { return side == Side::kHead ? "head" : "tail"; }

const char* to_string(SideMode mode) {
  switch (mode) {
    case SideMode::kBoth:
      return "both";
    case SideMode::kHead:
      return "head";
    case SideMode::kTail:
      return "tail";
  }
  return "both";
}

SideMode parse_side_mode(std::string_view text) {
  if (text == "both") return SideMode::kBoth;
  if (text == "head") return SideMode::kHead;
  if (text == "tail") return SideMode::kTail;
  throw std::invalid_argument("side must be one of both|head|tail, got '" + std::string(text) + "'");
}

double filtered_rank(const EmbeddingTable& emb, const KnowledgeGraph& kg, const Triple& t,
                     Side side) {
  return rank_with(emb, kg, t, side, /*parallel_kernel=*/true);
}

RankingReport aggregate(std::vector<RankedTriple> ranks, std::span<const std::size_t> hits) {
  RankingReport report;
  report.ranks = std::move(ranks);
  if (report.ranks.empty()) return report;
  double reciprocal = 0.0;
  for (const auto& r : report.ranks) reciprocal += 1.0 / r.rank;
  const auto count = static_cast<double>(report.ranks.size());
  report.mrr = reciprocal / count;
  for (const auto k : hits) {
    const auto within = std::count_if(report.ranks.begin(), report.ranks.end(),
                                      [k](const RankedTriple& r) { return r.rank <= static_cast<double>(k); });
    report.hits_at[k] = static_cast<double>(within) / count;
  }
  return report;
}

RankingReport evaluate(const EmbeddingTable& emb, const KnowledgeGraph& kg,
                       std::span<const Triple> split, SideMode mode,
                       std::span<const std::size_t> hits) {
  auto slots = rank_slots(split, mode);
  const auto count = static_cast<std::ptrdiff_t>(slots.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    slots[i].rank = rank_with(emb, kg, slots[i].triple, slots[i].side, /*parallel_kernel=*/false);
  }
  return aggregate(std::move(slots), hits);
}

namespace serial {

RankingReport evaluate(const EmbeddingTable& emb, const KnowledgeGraph& kg,
                       std::span<const Triple> split, SideMode mode,
                       std::span<const std::size_t> hits) {
  auto slots = rank_slots(split, mode);
  for (auto& slot : slots) slot.rank = rank_with(emb, kg, slot.triple, slot.side, false);
  return aggregate(std::move(slots), hits);
}

}  // namespace serial

double RuleDiagnostics::mean_hinge() const {
  if (summaries.empty()) return 0.0;
  double sum = 0.0;
  for (const auto& s : summaries) sum += s.hinge_sum;
  return sum / static_cast<double>(summaries.size());
}

RuleDiagnostics relation_rule_diagnostics(const EmbeddingTable& emb,
                                          std::span<const HornRule> rules) {
  RuleDiagnostics diag;
  const std::size_t d = emb.dim();
  const double bound = emb.bound;
  for (std::size_t id = 0; id < rules.size(); ++id) {
    const auto& rule = rules[id];
    const double bound_k = std::pow(bound, static_cast<double>(rule.length()));
    const auto head = emb.relation(rule.head);
    RuleSummary summary{id, rule.length(), -std::numeric_limits<double>::infinity(), 0.0, 0.0};
    for (std::size_t l = 0; l < d; ++l) {
      std::complex<double> hb(1.0, 0.0);
      for (const auto r : rule.body) hb *= emb.relation(r)[l];
      const double dre = hb.real() / bound_k - head.re[l] / bound;
      const double dim = hb.imag() / bound_k - head.im[l] / bound;
      diag.deltas.push_back({id, l, dre, dim});
      summary.max_delta_re = std::max(summary.max_delta_re, dre);
      summary.mean_delta_im_sq += dim * dim;
      summary.hinge_sum += std::max(0.0, dre);
    }
    summary.mean_delta_im_sq /= static_cast<double>(d);
    diag.summaries.push_back(summary);
  }
  return diag;
}

void write_diagnostics_csv(const std::filesystem::path& path, const RuleDiagnostics& diag) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out.precision(17);
  out << "rule_id,dim,delta_re,delta_im\n";
  for (const auto& row : diag.deltas) {
    out << row.rule_id << ',' << row.dim << ',' << row.delta_re << ',' << row.delta_im << '\n';
  }
}

void write_summary_csv(const std::filesystem::path& path, const RuleDiagnostics& diag) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out.precision(17);
  out << "rule_id,length,max_delta_re,mean_delta_im_sq,hinge_sum\n";
  for (const auto& s : diag.summaries) {
    out << s.rule_id << ',' << s.length << ',' << s.max_delta_re << ',' << s.mean_delta_im_sq
        << ',' << s.hinge_sum << '\n';
  }
}

}  // namespace hornex
