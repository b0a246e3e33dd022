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

// Serial vs OpenMP versions of the three parallel kernels. Set
// OMP_NUM_THREADS to control the parallel side.

#include <benchmark/benchmark.h>

#include <random>

#include "hornex/eval.hpp"
#include "hornex/model.hpp"
#include "hornex/verify.hpp"

namespace {

using namespace hornex;

// Entities, relations, dim; `test_size` random distinct-ish triples in test.
KnowledgeGraph bench_graph(std::size_t n, std::size_t m, std::size_t train_size, std::size_t test_size) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::uint32_t> e(0, static_cast<std::uint32_t>(n - 1));
  std::uniform_int_distribution<std::uint32_t> r(0, static_cast<std::uint32_t>(m - 1));
  Dictionaries d;
  for (std::size_t i = 0; i < n; ++i) d.entities.intern("e" + std::to_string(i));
  for (std::size_t i = 0; i < m; ++i) d.relations.intern("r" + std::to_string(i));
  std::vector<Triple> train, test;
  for (std::size_t i = 0; i < train_size; ++i) train.push_back({EntityId{e(rng)}, RelationId{r(rng)}, EntityId{e(rng)}});
  for (std::size_t i = 0; i < test_size; ++i) test.push_back({EntityId{e(rng)}, RelationId{r(rng)}, EntityId{e(rng)}});
  return build_graph(std::move(d), std::move(train), {}, std::move(test));
}

void BM_ScoreAllTails(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto emb = init_embeddings(n, 4, 64, 1.0, 0);
  const bool parallel = state.range(1) != 0;
  for (auto _ : state) {
    auto s = parallel ? score_all_tails(emb, EntityId{0}, RelationId{1})
                      : serial::score_all_tails(emb, EntityId{0}, RelationId{1});
    benchmark::DoNotOptimize(s.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_ScoreAllTails)->ArgNames({"entities", "omp"})->ArgsProduct({{1000, 20000}, {0, 1}});

void BM_Evaluate(benchmark::State& state) {
  const auto kg = bench_graph(2000, 10, 20000, static_cast<std::size_t>(state.range(0)));
  const auto emb = init_embeddings(kg.num_entities(), kg.num_relations(), 64, 1.0, 0);
  const bool parallel = state.range(1) != 0;
  for (auto _ : state) {
    const auto report = parallel ? evaluate(emb, kg, kg.test()) : serial::evaluate(emb, kg, kg.test());
    benchmark::DoNotOptimize(report.mrr);
  }
}
BENCHMARK(BM_Evaluate)->ArgNames({"test", "omp"})->ArgsProduct({{200}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_HornCheck(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const bool parallel = state.range(1) != 0;
  for (auto _ : state) {
    const auto r = parallel ? check_sufficient_condition_horn(k, 32, 1.0, 2000, 0)
                            : serial::check_sufficient_condition_horn(k, 32, 1.0, 2000, 0);
    benchmark::DoNotOptimize(r.violations);
  }
}
BENCHMARK(BM_HornCheck)->ArgNames({"k", "omp"})->ArgsProduct({{1, 3}, {0, 1}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
