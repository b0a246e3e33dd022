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

#include <gtest/gtest.h>

#include "test_util.hpp"

namespace hornex {
namespace {

Triple T(std::uint32_t h, std::uint32_t r, std::uint32_t t) { return {EntityId{h}, RelationId{r}, EntityId{t}}; }

std::vector<RankedTriple> ranks_of(std::initializer_list<double> values) {
  std::vector<RankedTriple> out;
  for (const double v : values) out.push_back({T(0, 0, 0), Side::kTail, v});
  return out;
}

TEST(Aggregate, MeanReciprocalRank) {
  const std::vector<std::size_t> hits = {1, 3, 10};
  const auto report = aggregate(ranks_of({1.0, 2.0, 4.0}), hits);
  EXPECT_DOUBLE_EQ(report.mrr, 7.0 / 12.0);
  EXPECT_EQ(report.count(), 3u);
  EXPECT_DOUBLE_EQ(report.hits_at.at(1), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(report.hits_at.at(3), 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(report.hits_at.at(10), 1.0);
}

TEST(Aggregate, HitsAtTen) {
  const std::vector<std::size_t> hits = {1, 3, 10};
  const auto report = aggregate(ranks_of({3.0, 11.0}), hits);
  EXPECT_DOUBLE_EQ(report.hits_at.at(10), 0.5);
  EXPECT_DOUBLE_EQ(report.hits_at.at(3), 0.5);
  EXPECT_DOUBLE_EQ(report.hits_at.at(1), 0.0);
}

TEST(Aggregate, HalfRanksCompareAgainstK) {
  const std::vector<std::size_t> hits = {1, 3};
  const auto report = aggregate(ranks_of({1.5, 3.5}), hits);
  EXPECT_DOUBLE_EQ(report.hits_at.at(1), 0.0);
  EXPECT_DOUBLE_EQ(report.hits_at.at(3), 0.5);
}

TEST(SideMode, ParseAndPrint) {
  EXPECT_EQ(parse_side_mode("both"), SideMode::kBoth);
  EXPECT_EQ(parse_side_mode("head"), SideMode::kHead);
  EXPECT_EQ(parse_side_mode("tail"), SideMode::kTail);
  EXPECT_THROW(parse_side_mode("sideways"), std::invalid_argument);
  EXPECT_STREQ(to_string(SideMode::kTail), "tail");
  EXPECT_STREQ(to_string(Side::kHead), "head");
}

TEST(FilteredRank, AllScoresTiedGivesMidRank) {
  // Zero embeddings score everything 0; no other known triples share (h, r).
  Dictionaries d;
  for (int i = 0; i < 9; ++i) d.entities.intern("e" + std::to_string(i));
  d.relations.intern("r");
  const auto kg = build_graph(d, {T(0, 0, 1)}, {}, {T(2, 0, 3)});
  EmbeddingTable emb(9, 1, 4, 1.0);
  EXPECT_DOUBLE_EQ(filtered_rank(emb, kg, T(2, 0, 3), Side::kTail), 1.0 + 8.0 / 2.0);
  // Head side for (0, r, 1): candidates are 9 entities, none filtered.
  EXPECT_DOUBLE_EQ(filtered_rank(emb, kg, T(0, 0, 1), Side::kHead), 5.0);
}

TEST(FilteredRank, KnownTriplesAreRemovedFromCandidates) {
  Dictionaries d;
  for (int i = 0; i < 4; ++i) d.entities.intern("e" + std::to_string(i));
  d.relations.intern("r");
  const auto kg = build_graph(d, {T(0, 0, 1), T(0, 0, 2)}, {}, {T(0, 0, 3)});
  EmbeddingTable emb(4, 1, 1, 1.0);
  // Scores for tail t are proportional to the tail's real part.
  emb.entities.re() = {1.0, 0.9, 0.8, 0.1};
  emb.relations.re() = {1.0};
  // Unfiltered, e3 would trail e0, e1 and e2; e1 and e2 are known and skipped.
  EXPECT_DOUBLE_EQ(filtered_rank(emb, kg, T(0, 0, 3), Side::kTail), 2.0);
}

TEST(FilteredRank, UnknownTripleThrows) {
  Dictionaries d;
  for (int i = 0; i < 3; ++i) d.entities.intern("e" + std::to_string(i));
  d.relations.intern("r");
  const auto kg = build_graph(d, {T(0, 0, 1)}, {}, {});
  EmbeddingTable emb(3, 1, 1, 1.0);
  EXPECT_THROW(filtered_rank(emb, kg, T(1, 0, 2), Side::kTail), std::invalid_argument);
}

TEST(FilteredRank, MatchesBruteForceWithTies) {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const auto kg = testing::random_graph(18, 3, 0.06, 200 + seed);
    const auto emb = testing::quantized_embeddings(18, 3, 2, 2, 300 + seed);
    auto score_fn = [&](const Triple& t) { return score(emb, t); };
    for (const auto& t : kg.test()) {
      EXPECT_EQ(filtered_rank(emb, kg, t, Side::kTail), testing::brute_force_rank(kg, t, true, score_fn));
      EXPECT_EQ(filtered_rank(emb, kg, t, Side::kHead), testing::brute_force_rank(kg, t, false, score_fn));
    }
  }
}

TEST(FilteredRank, WithinBounds) {
  const auto kg = testing::random_graph(25, 2, 0.05, 400);
  const auto emb = init_embeddings(25, 2, 4, 1.0, 401);
  for (const auto& t : kg.test()) {
    for (const auto side : {Side::kHead, Side::kTail}) {
      const double r = filtered_rank(emb, kg, t, side);
      EXPECT_GE(r, 1.0);
      EXPECT_LE(r, 25.0);
    }
  }
}

TEST(Evaluate, OrderAndSides) {
  const auto kg = testing::random_graph(12, 2, 0.1, 500);
  const auto emb = init_embeddings(12, 2, 4, 1.0, 501);
  const auto both = evaluate(emb, kg, kg.test(), SideMode::kBoth);
  ASSERT_EQ(both.count(), 2 * kg.test().size());
  for (std::size_t i = 0; i < kg.test().size(); ++i) {
    EXPECT_EQ(both.ranks[2 * i].side, Side::kHead);
    EXPECT_EQ(both.ranks[2 * i + 1].side, Side::kTail);
    EXPECT_EQ(both.ranks[2 * i].triple, kg.test()[i]);
  }
  const auto tail = evaluate(emb, kg, kg.test(), SideMode::kTail);
  ASSERT_EQ(tail.count(), kg.test().size());
  for (std::size_t i = 0; i < tail.count(); ++i) EXPECT_EQ(tail.ranks[i].rank, both.ranks[2 * i + 1].rank);
}

TEST(Evaluate, ParallelEqualsSerial) {
  const auto kg = testing::random_graph(60, 3, 0.02, 502);
  const auto emb = init_embeddings(60, 3, 8, 1.0, 503);
  const auto a = evaluate(emb, kg, kg.test());
  const auto b = serial::evaluate(emb, kg, kg.test());
  EXPECT_EQ(a.mrr, b.mrr);
  EXPECT_EQ(a.hits_at, b.hits_at);
  ASSERT_EQ(a.count(), b.count());
  for (std::size_t i = 0; i < a.count(); ++i) EXPECT_EQ(a.ranks[i].rank, b.ranks[i].rank);
}

TEST(Evaluate, InvariantUnderPositiveScoreScaling) {
  // Halving every entity component halves every score exactly.
  const auto kg = testing::random_graph(20, 2, 0.05, 504);
  const auto emb = testing::quantized_embeddings(20, 2, 3, 4, 505);
  auto halved = emb;
  for (auto& x : halved.entities.re()) x *= 0.5;
  for (auto& x : halved.entities.im()) x *= 0.5;
  const auto a = evaluate(emb, kg, kg.test());
  const auto b = evaluate(halved, kg, kg.test());
  for (std::size_t i = 0; i < a.count(); ++i) EXPECT_EQ(a.ranks[i].rank, b.ranks[i].rank);
}

TEST(Evaluate, EmptySplitThrows) {
  const auto kg = testing::random_graph(5, 1, 0.2, 506);
  const auto emb = init_embeddings(5, 1, 2, 1.0, 507);
  EXPECT_THROW(evaluate(emb, kg, std::span<const Triple>{}), std::invalid_argument);
}

HornRule rule(std::vector<std::uint32_t> body, std::uint32_t head) {
  HornRule r;
  for (const auto b : body) r.body.push_back(RelationId{b});
  r.head = RelationId{head};
  r.confidence = 1.0;
  return r;
}

TEST(Diagnostics, HierarchyDeltas) {
  EmbeddingTable emb(1, 2, 2, 1.0);
  emb.relations.re() = {0.8, 0.2, 0.5, 0.4};
  emb.relations.im() = {0.1, 0.3, 0.1, 0.5};
  const std::vector<HornRule> rules = {rule({0}, 1)};
  const auto diag = relation_rule_diagnostics(emb, rules);
  ASSERT_EQ(diag.deltas.size(), 2u);
  EXPECT_NEAR(diag.deltas[0].delta_re, 0.3, 1e-15);
  EXPECT_NEAR(diag.deltas[0].delta_im, 0.0, 1e-15);
  EXPECT_NEAR(diag.deltas[1].delta_re, -0.2, 1e-15);
  EXPECT_NEAR(diag.deltas[1].delta_im, -0.2, 1e-15);
  ASSERT_EQ(diag.summaries.size(), 1u);
  EXPECT_NEAR(diag.summaries[0].max_delta_re, 0.3, 1e-15);
  EXPECT_NEAR(diag.summaries[0].hinge_sum, 0.3, 1e-15);
  EXPECT_NEAR(diag.summaries[0].mean_delta_im_sq, 0.02, 1e-15);
  EXPECT_NEAR(diag.mean_hinge(), 0.3, 1e-15);
  EXPECT_EQ(RuleDiagnostics{}.mean_hinge(), 0.0);
}

TEST(Diagnostics, CompositionUsesBodyProduct) {
  EmbeddingTable emb(1, 3, 1, 1.0);
  emb.relations.re() = {0.6, 0.6, 0.1};
  emb.relations.im() = {0.0, 0.5, 0.3};
  const std::vector<HornRule> rules = {rule({0, 1}, 2)};
  const auto d = relation_rule_diagnostics(emb, rules).deltas.at(0);
  EXPECT_NEAR(d.delta_re, 0.36 - 0.1, 1e-15);
  EXPECT_NEAR(d.delta_im, 0.3 - 0.3, 1e-15);
}

TEST(Diagnostics, CsvColumns) {
  const auto emb = init_embeddings(2, 3, 2, 1.0, 600);
  const std::vector<HornRule> rules = {rule({0}, 1), rule({1, 2}, 0)};
  const auto diag = relation_rule_diagnostics(emb, rules);
  testing::TempDir dir;
  write_diagnostics_csv(dir / "d.csv", diag);
  write_summary_csv(dir / "s.csv", diag);
  const auto d = testing::read_file(dir / "d.csv");
  const auto s = testing::read_file(dir / "s.csv");
  EXPECT_EQ(d.substr(0, d.find('\n')), "rule_id,dim,delta_re,delta_im");
  EXPECT_EQ(s.substr(0, s.find('\n')), "rule_id,length,max_delta_re,mean_delta_im_sq,hinge_sum");
  EXPECT_EQ(std::count(d.begin(), d.end(), '\n'), 1 + 4);
  EXPECT_EQ(std::count(s.begin(), s.end(), '\n'), 1 + 2);
}

}  // namespace
}  // namespace hornex
