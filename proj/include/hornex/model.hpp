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

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hornex/kg.hpp"

namespace hornex {

// One complex-valued row viewed as split real/imaginary spans of length d.
template <typename T>
struct ComplexSpan {
  std::span<T> re;
  std::span<T> im;

  std::size_t size() const { return re.size(); }
  std::complex<double> operator[](std::size_t l) const { return {re[l], im[l]}; }
};

using ComplexRow = ComplexSpan<double>;
using ConstComplexRow = ComplexSpan<const double>;

// rows x d complex matrix stored as two row-major real arrays.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t dim)
      : rows_(rows), dim_(dim), re_(rows * dim, 0.0), im_(rows * dim, 0.0) {}

  std::size_t rows() const { return rows_; }
  std::size_t dim() const { return dim_; }

  ComplexRow row(std::size_t i) {
    return {std::span<double>(re_).subspan(i * dim_, dim_),
            std::span<double>(im_).subspan(i * dim_, dim_)};
  }
  ConstComplexRow row(std::size_t i) const {
    return {std::span<const double>(re_).subspan(i * dim_, dim_),
            std::span<const double>(im_).subspan(i * dim_, dim_)};
  }

  std::vector<double>& re() { return re_; }
  std::vector<double>& im() { return im_; }
  const std::vector<double>& re() const { return re_; }
  const std::vector<double>& im() const { return im_; }

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t dim_ = 0;
  std::vector<double> re_;
  std::vector<double> im_;
};

// Entity and relation embeddings plus the relation modulus bound R.
//
// Feasible tables satisfy, for every dimension l:
//   entities:  0 <= re_l <= 1, 0 <= im_l <= 1
//   relations: re_l >= 0, im_l >= 0, sqrt(re_l^2 + im_l^2) <= R
struct EmbeddingTable {
  ComplexMatrix entities;
  ComplexMatrix relations;
  double bound = 1.0;

  EmbeddingTable() = default;
  EmbeddingTable(std::size_t num_entities, std::size_t num_relations, std::size_t dim,
                 double bound_r)
      : entities(num_entities, dim), relations(num_relations, dim), bound(bound_r) {}

  std::size_t num_entities() const { return entities.rows(); }
  std::size_t num_relations() const { return relations.rows(); }
  std::size_t dim() const { return entities.dim(); }

  ComplexRow entity(EntityId e) { return entities.row(e.value); }
  ConstComplexRow entity(EntityId e) const { return entities.row(e.value); }
  ComplexRow relation(RelationId r) { return relations.row(r.value); }
  ConstComplexRow relation(RelationId r) const { return relations.row(r.value); }

  friend bool operator==(const EmbeddingTable&, const EmbeddingTable&) = default;
};

// Per-dimension modulus used everywhere a relation bound is tested.
inline double modulus(double re, double im) { return std::sqrt(re * re + im * im); }

// Re(h * r * conj(t)) for a single dimension, h = a+bi, r = c+di, t = e+fi.
// Every scoring path goes through this expression so that batched and scalar
// scores agree bit for bit.
inline double dim_score(double a, double b, double c, double d, double e, double f) {
  const double hr_re = a * c - b * d;
  const double hr_im = a * d + b * c;
  return hr_re * e + hr_im * f;
}

// Throws std::out_of_range for indices outside the table.
double score(const EmbeddingTable& emb, const Triple& t);
double score_dim(const EmbeddingTable& emb, const Triple& t, std::size_t l);

// entry j == score(emb, (head, rel, j)) exactly.
std::vector<double> score_all_tails(const EmbeddingTable& emb, EntityId head, RelationId rel);
// entry i == score(emb, (i, rel, tail)) exactly.
std::vector<double> score_all_heads(const EmbeddingTable& emb, RelationId rel, EntityId tail);

namespace serial {
std::vector<double> score_all_tails(const EmbeddingTable& emb, EntityId head, RelationId rel);
std::vector<double> score_all_heads(const EmbeddingTable& emb, RelationId rel, EntityId tail);
}  // namespace serial

// Clamps one relation dimension to [0, R]^2, then rescales it onto the
// modulus-R circle if it lies outside. The result satisfies
// modulus(re, im) <= bound exactly.
void project_relation_dim(double& re, double& im, double bound);

// Clamps entity components to [0, 1], relation components to [0, R], then
// rescales any relation dimension with modulus above R back onto the circle.
// Idempotent.
void project(EmbeddingTable& emb);

// Description of the first violated feasibility constraint, if any.
std::optional<std::string> find_violation(const EmbeddingTable& emb);

// Entities uniform on [0,1], relations uniform on [0, R/sqrt(2)].
EmbeddingTable init_embeddings(std::size_t num_entities, std::size_t num_relations,
                               std::size_t dim, double bound_r, std::uint64_t seed);

// Binary dump: magic "HXEMB001", u64 n, u64 m, u64 d, f64 R, then entity re,
// entity im, relation re, relation im as row-major f64 arrays (host byte
// order).
void write_embeddings(std::ostream& out, const EmbeddingTable& emb);
EmbeddingTable read_embeddings(std::istream& in);
void save_embeddings(const std::filesystem::path& path, const EmbeddingTable& emb);
EmbeddingTable load_embeddings(const std::filesystem::path& path);

// One row per entity (or relation), header re_0..re_{d-1},im_0..im_{d-1}.
void export_csv(const std::filesystem::path& path, const ComplexMatrix& rows);

}  // namespace hornex
