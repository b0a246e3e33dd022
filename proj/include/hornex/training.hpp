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
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hornex/eval.hpp"
#include "hornex/kg.hpp"
#include "hornex/model.hpp"
#include "hornex/rules.hpp"

namespace hornex {

struct TrainConfig {
  double learning_rate = 0.1;
  std::size_t batch_size = 1000;
  std::size_t epochs = 100;
  std::size_t validate_every = 20;  // 0 disables validation
  double mu = 0.0;                  // rule penalty weight
  double eta = 0.0;                 // N3 weight
  std::size_t negatives_per_positive = 1;
  double bound_r = 1.0;
  std::size_t dim = 64;
  std::uint64_t seed = 0;
  SideMode validation_side = SideMode::kBoth;
};

// Throws std::invalid_argument naming the offending field.
void validate(const TrainConfig& config);

struct LabeledBatch {
  std::vector<Triple> triples;
  std::vector<int> labels;  // +1 or -1
};

// Gradient rows for one ComplexMatrix. Only rows that were touched are
// stored; `touched()` lists them in first-touch order.
class SparseGrad {
 public:
  SparseGrad() = default;
  SparseGrad(std::size_t rows, std::size_t dim);

  std::size_t dim() const { return dim_; }
  // Zero-initialised on first access. Touching a new row may reallocate, which
  // invalidates spans returned earlier.
  ComplexRow row(std::size_t i);
  ConstComplexRow row(std::size_t i) const;
  bool has(std::size_t i) const { return slot_[i] >= 0; }
  std::span<const std::uint32_t> touched() const { return touched_; }

  void add_scaled(const SparseGrad& other, double scale);

 private:
  std::size_t dim_ = 0;
  std::vector<std::int32_t> slot_;
  std::vector<std::uint32_t> touched_;
  std::vector<double> re_, im_;
};

struct Gradients {
  SparseGrad entities;
  SparseGrad relations;

  Gradients() = default;
  explicit Gradients(const EmbeddingTable& shape)
      : entities(shape.num_entities(), shape.dim()),
        relations(shape.num_relations(), shape.dim()) {}

  void add_scaled(const Gradients& other, double scale) {
    entities.add_scaled(other.entities, scale);
    relations.add_scaled(other.relations, scale);
  }
};

struct LossAndGrad {
  double loss = 0.0;
  Gradients grad;
};

// Uniform head-or-tail corruption, resampled while the corruption is a known
// triple (at most 100 attempts, after which the last draw is kept).
std::vector<Triple> sample_negatives(const KnowledgeGraph& kg, const Triple& positive,
                                     std::size_t count, std::mt19937_64& rng);

// sum log(1 + exp(-y * score)) over the batch.
LossAndGrad logistic_loss(const EmbeddingTable& emb, const LabeledBatch& batch);

// Unweighted rule penalty (the caller applies mu). For each rule with body
// product hb and head r:
//   conf * sum_l max(0, Re(hb_l)/R^k - Re(r_l)/R)
// + conf * sum_l (Im(hb_l)/R^k - Im(r_l)/R)^2
LossAndGrad rule_penalty(const EmbeddingTable& emb, std::span<const HornRule> rules);

// Rows a training step reads: the batch's entities and relations, then every
// relation of `rules` (pass an empty span when the rule penalty is off).
struct ObjectiveRows {
  std::vector<std::uint32_t> entities;
  std::vector<std::uint32_t> relations;
};
ObjectiveRows objective_rows(const EmbeddingTable& emb, const LabeledBatch& batch,
                             std::span<const HornRule> rules);

// sum over the listed rows of sum_l |c_l|^3 (the caller applies eta).
LossAndGrad n3_regularization(const EmbeddingTable& emb, std::span<const std::uint32_t> entity_rows,
                              std::span<const std::uint32_t> relation_rows);

struct AdagradState {
  ComplexMatrix entities;
  ComplexMatrix relations;
  double epsilon = 1e-10;

  AdagradState() = default;
  explicit AdagradState(const EmbeddingTable& shape)
      : entities(shape.num_entities(), shape.dim()),
        relations(shape.num_relations(), shape.dim()) {}

  friend bool operator==(const AdagradState&, const AdagradState&) = default;
};

// acc += g^2; p -= lr * g / (sqrt(acc) + eps), on touched rows only.
void adagrad_step(EmbeddingTable& params, const Gradients& grads, AdagradState& state,
                  double learning_rate);

struct EpochRecord {
  std::size_t epoch = 0;
  double logistic = 0.0;
  double rule_penalty = 0.0;  // already multiplied by mu
  double n3 = 0.0;            // already multiplied by eta
  double total = 0.0;
  std::optional<double> valid_mrr;
};

class TrainingDiverged : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TrainHooks {
  // Called after every optimizer step and projection.
  std::function<void(std::size_t epoch, std::size_t batch, const EmbeddingTable&)> after_step;
};

struct TrainResult {
  EmbeddingTable embeddings;
  AdagradState optimizer;
  std::vector<EpochRecord> log;
};

TrainResult train(const KnowledgeGraph& kg, std::span<const HornRule> rules,
                  const TrainConfig& config, const TrainHooks& hooks = {});

// Embedding dump followed by an "HXADA001" section with the AdaGrad
// accumulators and an "HXCFG001" section with a length-prefixed config echo.
void save_checkpoint(const std::filesystem::path& path, const EmbeddingTable& emb,
                     const AdagradState& state, const std::string& config_echo);

struct Checkpoint {
  EmbeddingTable embeddings;
  std::optional<AdagradState> optimizer;
  std::string config_echo;
};

// Also accepts a bare embedding dump.
Checkpoint load_checkpoint(const std::filesystem::path& path);

}  // namespace hornex
