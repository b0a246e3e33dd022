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

#include "hornex/model.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace hornex {

namespace {

void check_bounds(const EmbeddingTable& emb, const Triple& t) {
  if (t.head.value >= emb.num_entities() || t.tail.value >= emb.num_entities() ||
      t.relation.value >= emb.num_relations()) {
    throw std::out_of_range("triple index outside embedding table");
  }
}

// Below this many candidates the OpenMP fork costs more than it saves.
constexpr std::ptrdiff_t kParallelCandidates = 2048;

template <bool kParallel>
std::vector<double> tails_kernel(const EmbeddingTable& emb, EntityId head, RelationId rel) {
  if (head.value >= emb.num_entities() || rel.value >= emb.num_relations()) {
    throw std::out_of_range("index outside embedding table");
  }
  const std::size_t d = emb.dim();
  const auto h = emb.entity(head);
  const auto r = emb.relation(rel);
  std::vector<double> hr_re(d), hr_im(d);
  for (std::size_t l = 0; l < d; ++l) {
    hr_re[l] = h.re[l] * r.re[l] - h.im[l] * r.im[l];
    hr_im[l] = h.re[l] * r.im[l] + h.im[l] * r.re[l];
  }

  const auto n = static_cast<std::ptrdiff_t>(emb.num_entities());
  const double* ent_re = emb.entities.re().data();
  const double* ent_im = emb.entities.im().data();
  std::vector<double> scores(n);
#pragma omp parallel for if (kParallel && n >= kParallelCandidates) schedule(static)
  for (std::ptrdiff_t j = 0; j < n; ++j) {
    const double* e = ent_re + j * d;
    const double* f = ent_im + j * d;
    double s = 0.0;
    for (std::size_t l = 0; l < d; ++l) s += hr_re[l] * e[l] + hr_im[l] * f[l];
    scores[j] = s;
  }
  return scores;
}

template <bool kParallel>
std::vector<double> heads_kernel(const EmbeddingTable& emb, RelationId rel, EntityId tail) {
  if (tail.value >= emb.num_entities() || rel.value >= emb.num_relations()) {
    throw std::out_of_range("index outside embedding table");
  }
  const std::size_t d = emb.dim();
  const auto r = emb.relation(rel);
  const auto t = emb.entity(tail);
  const auto n = static_cast<std::ptrdiff_t>(emb.num_entities());
  const double* ent_re = emb.entities.re().data();
  const double* ent_im = emb.entities.im().data();
  std::vector<double> scores(n);
#pragma omp parallel for if (kParallel && n >= kParallelCandidates) schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const double* a = ent_re + i * d;
    const double* b = ent_im + i * d;
    double s = 0.0;
    for (std::size_t l = 0; l < d; ++l) s += dim_score(a[l], b[l], r.re[l], r.im[l], t.re[l], t.im[l]);
    scores[i] = s;
  }
  return scores;
}

}  // namespace

double score(const EmbeddingTable& emb, const Triple& t) {
  check_bounds(emb, t);
  const auto h = emb.entity(t.head);
  const auto r = emb.relation(t.relation);
  const auto e = emb.entity(t.tail);
  double s = 0.0;
  for (std::size_t l = 0; l < emb.dim(); ++l) {
    s += dim_score(h.re[l], h.im[l], r.re[l], r.im[l], e.re[l], e.im[l]);
  }
  return s;
}

double score_dim(const EmbeddingTable& emb, const Triple& t, std::size_t l) {
  check_bounds(emb, t);
  if (l >= emb.dim()) throw std::out_of_range("dimension index outside embedding table");
  const auto h = emb.entity(t.head);
  const auto r = emb.relation(t.relation);
  const auto e = emb.entity(t.tail);
  return dim_score(h.re[l], h.im[l], r.re[l], r.im[l], e.re[l], e.im[l]);
}

std::vector<double> score_all_tails(const EmbeddingTable& emb, EntityId head, RelationId rel) {
  return tails_kernel<true>(emb, head, rel);
}

std::vector<double> score_all_heads(const EmbeddingTable& emb, RelationId rel, EntityId tail) {
  return heads_kernel<true>(emb, rel, tail);
}

namespace serial {

std::vector<double> score_all_tails(const EmbeddingTable& emb, EntityId head, RelationId rel) {
  return tails_kernel<false>(emb, head, rel);
}

std::vector<double> score_all_heads(const EmbeddingTable& emb, RelationId rel, EntityId tail) {
  return heads_kernel<false>(emb, rel, tail);
}

}  // namespace serial

void project_relation_dim(double& re, double& im, double bound) {
  double x = std::clamp(re, 0.0, bound);
  double y = std::clamp(im, 0.0, bound);
  const double mod = modulus(x, y);
  if (mod > bound) {
    const double s = bound / mod;
    x *= s;
    y *= s;
    // The rescale can overshoot by an ulp; walk inward until the bound holds.
    while (modulus(x, y) > bound) {
      x = std::nextafter(x, 0.0);
      y = std::nextafter(y, 0.0);
    }
  }
  re = x;
  im = y;
}

void project(EmbeddingTable& emb) {
  for (auto* values : {&emb.entities.re(), &emb.entities.im()}) {
    for (auto& v : *values) v = std::clamp(v, 0.0, 1.0);
  }
  auto& re = emb.relations.re();
  auto& im = emb.relations.im();
  for (std::size_t i = 0; i < re.size(); ++i) project_relation_dim(re[i], im[i], emb.bound);
}

std::optional<std::string> find_violation(const EmbeddingTable& emb) {
  const auto d = emb.dim();
  const auto& ere = emb.entities.re();
  const auto& eim = emb.entities.im();
  for (std::size_t i = 0; i < ere.size(); ++i) {
    for (const double v : {ere[i], eim[i]}) {
      if (!(v >= 0.0 && v <= 1.0)) {
        std::ostringstream msg;
        msg << "entity " << i / d << " dim " << i % d << " component " << v << " outside [0, 1]";
        return msg.str();
      }
    }
  }
  const auto& rre = emb.relations.re();
  const auto& rim = emb.relations.im();
  for (std::size_t i = 0; i < rre.size(); ++i) {
    if (!(rre[i] >= 0.0 && rim[i] >= 0.0 && modulus(rre[i], rim[i]) <= emb.bound)) {
      std::ostringstream msg;
      msg << "relation " << i / d << " dim " << i % d << " value (" << rre[i] << ", " << rim[i]
          << ") infeasible for R=" << emb.bound;
      return msg.str();
    }
  }
  return std::nullopt;
}

EmbeddingTable init_embeddings(std::size_t num_entities, std::size_t num_relations,
                               std::size_t dim, double bound_r, std::uint64_t seed) {
  if (num_entities == 0 || num_relations == 0 || dim == 0) {
    throw std::invalid_argument("embedding table sizes must be positive");
  }
  if (!(bound_r > 0.0)) throw std::invalid_argument("relation bound R must be positive");

  EmbeddingTable emb(num_entities, num_relations, dim, bound_r);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> rel(0.0, bound_r / std::sqrt(2.0));

  for (std::size_t i = 0; i < num_entities; ++i) {
    auto row = emb.entities.row(i);
    for (auto& v : row.re) v = unit(rng);
    for (auto& v : row.im) v = unit(rng);
  }
  for (std::size_t i = 0; i < num_relations; ++i) {
    auto row = emb.relations.row(i);
    for (auto& v : row.re) v = rel(rng);
    for (auto& v : row.im) v = rel(rng);
  }
  return emb;
}

}  // namespace hornex
