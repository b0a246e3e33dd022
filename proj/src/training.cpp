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

#include "hornex/training.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <fstream>
#include <numeric>
#include <sstream>

namespace hornex {

namespace {

constexpr std::size_t kMaxNegativeAttempts = 100;

// log(1 + exp(x)) without overflow.
double softplus(double x) { return std::max(x, 0.0) + std::log1p(std::exp(-std::abs(x))); }

double sigmoid(double x) {
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double z = std::exp(x);
  return z / (1.0 + z);
}

}  // namespace

void validate(const TrainConfig& c) {
  auto fail = [](const std::string& what) { throw std::invalid_argument("train config: " + what); };
  if (!(c.learning_rate > 0.0) || !std::isfinite(c.learning_rate)) fail("learning_rate must be > 0");
  if (c.batch_size < 1) fail("batch_size must be >= 1");
  if (!(c.mu >= 0.0) || !std::isfinite(c.mu)) fail("mu must be >= 0");
  if (!(c.eta >= 0.0) || !std::isfinite(c.eta)) fail("eta must be >= 0");
  if (c.negatives_per_positive < 1) fail("negatives_per_positive must be >= 1");
  if (!(c.bound_r > 0.0) || !std::isfinite(c.bound_r)) fail("bound_r must be > 0");
  if (c.dim < 1) fail("dim must be >= 1");
}

SparseGrad::SparseGrad(std::size_t rows, std::size_t dim) : dim_(dim), slot_(rows, -1) {}

ComplexRow SparseGrad::row(std::size_t i) {
  if (slot_[i] < 0) {
    slot_[i] = static_cast<std::int32_t>(touched_.size());
    touched_.push_back(static_cast<std::uint32_t>(i));
    re_.resize(re_.size() + dim_, 0.0);
    im_.resize(im_.size() + dim_, 0.0);
  }
  const auto offset = static_cast<std::size_t>(slot_[i]) * dim_;
  return {std::span<double>(re_).subspan(offset, dim_), std::span<double>(im_).subspan(offset, dim_)};
}

ConstComplexRow SparseGrad::row(std::size_t i) const {
  if (slot_.at(i) < 0) throw std::out_of_range("gradient row not touched");
  const auto offset = static_cast<std::size_t>(slot_[i]) * dim_;
  return {std::span<const double>(re_).subspan(offset, dim_),
          std::span<const double>(im_).subspan(offset, dim_)};
}

void SparseGrad::add_scaled(const SparseGrad& other, double scale) {
  for (const auto i : other.touched()) {
    const auto src = other.row(i);
    auto dst = row(i);
    for (std::size_t l = 0; l < dim_; ++l) {
      dst.re[l] += scale * src.re[l];
      dst.im[l] += scale * src.im[l];
    }
  }
}

std::vector<Triple> sample_negatives(const KnowledgeGraph& kg, const Triple& positive,
                                     std::size_t count, std::mt19937_64& rng) {
  const auto n = kg.num_entities();
  std::uniform_int_distribution<std::uint32_t> entity(0, static_cast<std::uint32_t>(n - 1));
  std::bernoulli_distribution corrupt_head(0.5);

  std::vector<Triple> negatives;
  negatives.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    Triple candidate = positive;
    for (std::size_t attempt = 0; attempt < kMaxNegativeAttempts; ++attempt) {
      candidate = positive;
      if (corrupt_head(rng)) {
        candidate.head = EntityId{entity(rng)};
      } else {
        candidate.tail = EntityId{entity(rng)};
      }
      if (!kg.contains(candidate)) break;
    }
    negatives.push_back(candidate);
  }
  return negatives;
}

LossAndGrad logistic_loss(const EmbeddingTable& emb, const LabeledBatch& batch) {
  if (batch.triples.size() != batch.labels.size()) {
    throw std::invalid_argument("batch triples and labels differ in length");
  }
  const auto size = static_cast<std::ptrdiff_t>(batch.triples.size());
  std::vector<double> losses(size), coefs(size);

  // Scores are independent per example; the reduction below runs in batch
  // order so results do not depend on the thread count.
#pragma omp parallel for schedule(static) if (size >= 256)
  for (std::ptrdiff_t i = 0; i < size; ++i) {
    const double y = batch.labels[i];
    const double phi = score(emb, batch.triples[i]);
    losses[i] = softplus(-y * phi);
    coefs[i] = -y * sigmoid(-y * phi);
  }

  LossAndGrad out{0.0, Gradients(emb)};
  const std::size_t d = emb.dim();
  for (std::ptrdiff_t i = 0; i < size; ++i) {
    out.loss += losses[i];
    const auto& t = batch.triples[i];
    const double g = coefs[i];
    const auto h = emb.entity(t.head);
    const auto r = emb.relation(t.relation);
    const auto e = emb.entity(t.tail);
    // Touch both entity rows before taking spans: a new slot may reallocate.
    out.grad.entities.row(t.head.value);
    auto ge = out.grad.entities.row(t.tail.value);
    auto gh = out.grad.entities.row(t.head.value);
    auto gr = out.grad.relations.row(t.relation.value);
    for (std::size_t l = 0; l < d; ++l) {
      const double a = h.re[l], b = h.im[l];
      const double c = r.re[l], dd = r.im[l];
      const double te = e.re[l], tf = e.im[l];
      gh.re[l] += g * (c * te + dd * tf);
      gh.im[l] += g * (-dd * te + c * tf);
      gr.re[l] += g * (a * te + b * tf);
      gr.im[l] += g * (-b * te + a * tf);
      ge.re[l] += g * (a * c - b * dd);
      ge.im[l] += g * (a * dd + b * c);
    }
  }
  return out;
}

LossAndGrad rule_penalty(const EmbeddingTable& emb, std::span<const HornRule> rules) {
  using cplx = std::complex<double>;
  LossAndGrad out{0.0, Gradients(emb)};
  const std::size_t d = emb.dim();
  const double bound = emb.bound;

  std::vector<cplx> prefix, suffix;
  for (const auto& rule : rules) {
    const std::size_t k = rule.body.size();
    if (k == 0) continue;
    for (const auto r : rule.body) {
      if (r.value >= emb.num_relations()) throw std::out_of_range("rule relation outside table");
    }
    if (rule.head.value >= emb.num_relations()) throw std::out_of_range("rule relation outside table");

    const double lambda = rule.confidence;
    const double bound_k = std::pow(bound, static_cast<double>(k));
    const auto head = emb.relation(rule.head);
    prefix.assign(k + 1, cplx(1.0, 0.0));
    suffix.assign(k + 1, cplx(1.0, 0.0));

    for (std::size_t l = 0; l < d; ++l) {
      for (std::size_t j = 0; j < k; ++j) prefix[j + 1] = prefix[j] * emb.relation(rule.body[j])[l];
      for (std::size_t j = k; j-- > 0;) suffix[j] = emb.relation(rule.body[j])[l] * suffix[j + 1];
      const cplx hb = prefix[k];

      const double diff_re = hb.real() / bound_k - head.re[l] / bound;
      const double diff_im = hb.imag() / bound_k - head.im[l] / bound;

      // Subgradient of the hinge at 0 is taken as 0.
      double d_hb_re = 0.0;
      if (diff_re > 0.0) {
        out.loss += lambda * diff_re;
        d_hb_re = lambda / bound_k;
        out.grad.relations.row(rule.head.value).re[l] -= lambda / bound;
      }
      out.loss += lambda * diff_im * diff_im;
      const double d_hb_im = 2.0 * lambda * diff_im / bound_k;
      out.grad.relations.row(rule.head.value).im[l] -= 2.0 * lambda * diff_im / bound;

      for (std::size_t j = 0; j < k; ++j) {
        const cplx others = prefix[j] * suffix[j + 1];
        auto g = out.grad.relations.row(rule.body[j].value);
        g.re[l] += d_hb_re * others.real() + d_hb_im * others.imag();
        g.im[l] += -d_hb_re * others.imag() + d_hb_im * others.real();
      }
    }
  }
  return out;
}

ObjectiveRows objective_rows(const EmbeddingTable& emb, const LabeledBatch& batch,
                             std::span<const HornRule> rules) {
  ObjectiveRows out;
  std::vector<bool> seen_e(emb.num_entities(), false);
  std::vector<bool> seen_r(emb.num_relations(), false);
  auto mark = [](std::vector<bool>& seen, std::vector<std::uint32_t>& rows, std::uint32_t i) {
    if (!seen[i]) {
      seen[i] = true;
      rows.push_back(i);
    }
  };
  for (const auto& t : batch.triples) {
    mark(seen_e, out.entities, t.head.value);
    mark(seen_r, out.relations, t.relation.value);
    mark(seen_e, out.entities, t.tail.value);
  }
  for (const auto& rule : rules) {
    for (const auto r : rule.body) mark(seen_r, out.relations, r.value);
    mark(seen_r, out.relations, rule.head.value);
  }
  return out;
}

LossAndGrad n3_regularization(const EmbeddingTable& emb, std::span<const std::uint32_t> entity_rows,
                              std::span<const std::uint32_t> relation_rows) {
  LossAndGrad out{0.0, Gradients(emb)};
  const std::size_t d = emb.dim();
  auto accumulate = [&](const ComplexMatrix& params, SparseGrad& grad,
                        std::span<const std::uint32_t> rows) {
    for (const auto i : rows) {
      const auto p = params.row(i);
      auto g = grad.row(i);
      for (std::size_t l = 0; l < d; ++l) {
        const double mod = modulus(p.re[l], p.im[l]);
        out.loss += mod * mod * mod;
        // d|c|^3 = 3|c| c, which is 0 at the origin.
        g.re[l] += 3.0 * mod * p.re[l];
        g.im[l] += 3.0 * mod * p.im[l];
      }
    }
  };
  accumulate(emb.entities, out.grad.entities, entity_rows);
  accumulate(emb.relations, out.grad.relations, relation_rows);
  return out;
}

void adagrad_step(EmbeddingTable& params, const Gradients& grads, AdagradState& state,
                  double learning_rate) {
  const double eps = state.epsilon;
  auto update = [&](ComplexMatrix& p, ComplexMatrix& acc, const SparseGrad& g) {
    for (const auto i : g.touched()) {
      const auto gi = g.row(i);
      auto pi = p.row(i);
      auto ai = acc.row(i);
      for (std::size_t l = 0; l < g.dim(); ++l) {
        ai.re[l] += gi.re[l] * gi.re[l];
        pi.re[l] -= learning_rate * gi.re[l] / (std::sqrt(ai.re[l]) + eps);
        ai.im[l] += gi.im[l] * gi.im[l];
        pi.im[l] -= learning_rate * gi.im[l] / (std::sqrt(ai.im[l]) + eps);
      }
    }
  };
  update(params.entities, state.entities, grads.entities);
  update(params.relations, state.relations, grads.relations);
}

TrainResult train(const KnowledgeGraph& kg, std::span<const HornRule> rules,
                  const TrainConfig& config, const TrainHooks& hooks) {
  validate(config);
  TrainResult result;
  result.embeddings = init_embeddings(kg.num_entities(), kg.num_relations(), config.dim,
                                      config.bound_r, config.seed);
  result.optimizer = AdagradState(result.embeddings);
  auto& emb = result.embeddings;

  std::seed_seq sampling_seed{config.seed, std::uint64_t{0x5eed}};
  std::mt19937_64 rng(sampling_seed);

  const auto& positives = kg.train();
  std::vector<std::size_t> order(positives.size());
  std::iota(order.begin(), order.end(), 0);
  const bool use_rules = config.mu > 0.0 && !rules.empty();

  for (std::size_t epoch = 1; epoch <= config.epochs; ++epoch) {
    std::shuffle(order.begin(), order.end(), rng);
    EpochRecord record;
    record.epoch = epoch;

    std::size_t batch_index = 0;
    for (std::size_t begin = 0; begin < order.size(); begin += config.batch_size, ++batch_index) {
      const std::size_t end = std::min(order.size(), begin + config.batch_size);
      LabeledBatch batch;
      for (std::size_t i = begin; i < end; ++i) {
        const auto& pos = positives[order[i]];
        batch.triples.push_back(pos);
        batch.labels.push_back(+1);
        for (const auto& neg : sample_negatives(kg, pos, config.negatives_per_positive, rng)) {
          batch.triples.push_back(neg);
          batch.labels.push_back(-1);
        }
      }

      auto step = logistic_loss(emb, batch);
      const double logistic = step.loss;
      double penalty = 0.0;
      double n3 = 0.0;
      if (use_rules) {
        const auto rp = rule_penalty(emb, rules);
        penalty = config.mu * rp.loss;
        step.grad.add_scaled(rp.grad, config.mu);
      }
      if (config.eta > 0.0) {
        const auto rows =
            objective_rows(emb, batch, use_rules ? rules : std::span<const HornRule>{});
        const auto reg = n3_regularization(emb, rows.entities, rows.relations);
        n3 = config.eta * reg.loss;
        step.grad.add_scaled(reg.grad, config.eta);
      }
      const double total = logistic + penalty + n3;
      if (!std::isfinite(total)) {
        std::ostringstream msg;
        msg << "non-finite loss at epoch " << epoch << " batch " << batch_index
            << ": logistic=" << logistic << " rule_penalty=" << penalty << " n3=" << n3;
        throw TrainingDiverged(msg.str());
      }

      adagrad_step(emb, step.grad, result.optimizer, config.learning_rate);
      project(emb);
      if (hooks.after_step) hooks.after_step(epoch, batch_index, emb);

      record.logistic += logistic;
      record.rule_penalty += penalty;
      record.n3 += n3;
      record.total += total;
    }

    if (config.validate_every > 0 && epoch % config.validate_every == 0 && !kg.valid().empty()) {
      record.valid_mrr = evaluate(emb, kg, kg.valid(), config.validation_side).mrr;
    }
    result.log.push_back(record);
  }
  return result;
}

namespace {

constexpr std::array<char, 8> kAdagradMagic = {'H', 'X', 'A', 'D', 'A', '0', '0', '1'};
constexpr std::array<char, 8> kConfigMagic = {'H', 'X', 'C', 'F', 'G', '0', '0', '1'};

void write_matrix(std::ostream& out, const ComplexMatrix& m) {
  for (const auto* v : {&m.re(), &m.im()}) {
    out.write(reinterpret_cast<const char*>(v->data()),
              static_cast<std::streamsize>(v->size() * sizeof(double)));
  }
}

void read_matrix(std::istream& in, ComplexMatrix& m) {
  for (auto* v : {&m.re(), &m.im()}) {
    if (!in.read(reinterpret_cast<char*>(v->data()),
                 static_cast<std::streamsize>(v->size() * sizeof(double)))) {
      throw std::runtime_error("truncated checkpoint");
    }
  }
}

}  // namespace

void save_checkpoint(const std::filesystem::path& path, const EmbeddingTable& emb,
                     const AdagradState& state, const std::string& config_echo) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  write_embeddings(out, emb);
  out.write(kAdagradMagic.data(), kAdagradMagic.size());
  out.write(reinterpret_cast<const char*>(&state.epsilon), sizeof(double));
  write_matrix(out, state.entities);
  write_matrix(out, state.relations);
  out.write(kConfigMagic.data(), kConfigMagic.size());
  const std::uint64_t len = config_echo.size();
  out.write(reinterpret_cast<const char*>(&len), sizeof(len));
  out.write(config_echo.data(), static_cast<std::streamsize>(len));
}

Checkpoint load_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open checkpoint " + path.string());
  Checkpoint ckpt{read_embeddings(in), std::nullopt, {}};

  std::array<char, 8> magic{};
  while (in.read(magic.data(), magic.size())) {
    if (magic == kAdagradMagic) {
      AdagradState state(ckpt.embeddings);
      if (!in.read(reinterpret_cast<char*>(&state.epsilon), sizeof(double))) {
        throw std::runtime_error("truncated checkpoint");
      }
      read_matrix(in, state.entities);
      read_matrix(in, state.relations);
      ckpt.optimizer = std::move(state);
    } else if (magic == kConfigMagic) {
      std::uint64_t len = 0;
      if (!in.read(reinterpret_cast<char*>(&len), sizeof(len))) {
        throw std::runtime_error("truncated checkpoint");
      }
      ckpt.config_echo.resize(len);
      if (!in.read(ckpt.config_echo.data(), static_cast<std::streamsize>(len))) {
        throw std::runtime_error("truncated checkpoint");
      }
    } else {
      throw std::runtime_error("unknown checkpoint section in " + path.string());
    }
  }
  return ckpt;
}

}  // namespace hornex
