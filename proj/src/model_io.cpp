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

#include <array>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include "hornex/model.hpp"

namespace hornex {

namespace {

constexpr std::array<char, 8> kMagic = {'H', 'X', 'E', 'M', 'B', '0', '0', '1'};

template <typename T>
void put(std::ostream& out, const T& value) {
  out.write(reinterpret_cast<const char*>(&value), sizeof(T));
}

template <typename T>
T get(std::istream& in) {
  T value{};
  if (!in.read(reinterpret_cast<char*>(&value), sizeof(T))) {
    throw std::runtime_error("truncated embedding dump");
  }
  return value;
}

void put_array(std::ostream& out, const std::vector<double>& values) {
  out.write(reinterpret_cast<const char*>(values.data()),
            static_cast<std::streamsize>(values.size() * sizeof(double)));
}

void get_array(std::istream& in, std::vector<double>& values) {
  if (!in.read(reinterpret_cast<char*>(values.data()),
               static_cast<std::streamsize>(values.size() * sizeof(double)))) {
    throw std::runtime_error("truncated embedding dump");
  }
}

}  // namespace

void write_embeddings(std::ostream& out, const EmbeddingTable& emb) {
  out.write(kMagic.data(), kMagic.size());
  put<std::uint64_t>(out, emb.num_entities());
  put<std::uint64_t>(out, emb.num_relations());
  put<std::uint64_t>(out, emb.dim());
  put<double>(out, emb.bound);
  put_array(out, emb.entities.re());
  put_array(out, emb.entities.im());
  put_array(out, emb.relations.re());
  put_array(out, emb.relations.im());
}

EmbeddingTable read_embeddings(std::istream& in) {
  std::array<char, 8> magic{};
  if (!in.read(magic.data(), magic.size()) || magic != kMagic) {
    throw std::runtime_error("not an embedding dump (bad magic)");
  }
  const auto n = get<std::uint64_t>(in);
  const auto m = get<std::uint64_t>(in);
  const auto d = get<std::uint64_t>(in);
  const auto bound = get<double>(in);
  if (d == 0) throw std::runtime_error("embedding dump has zero dimension");
  EmbeddingTable emb(n, m, d, bound);
  get_array(in, emb.entities.re());
  get_array(in, emb.entities.im());
  get_array(in, emb.relations.re());
  get_array(in, emb.relations.im());
  return emb;
}

void save_embeddings(const std::filesystem::path& path, const EmbeddingTable& emb) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  write_embeddings(out, emb);
}

EmbeddingTable load_embeddings(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open embedding dump " + path.string());
  return read_embeddings(in);
}

void export_csv(const std::filesystem::path& path, const ComplexMatrix& rows) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out.precision(17);
  const auto d = rows.dim();
  for (std::size_t l = 0; l < d; ++l) out << (l ? "," : "") << "re_" << l;
  for (std::size_t l = 0; l < d; ++l) out << ",im_" << l;
  out << '\n';
  for (std::size_t i = 0; i < rows.rows(); ++i) {
    const auto row = rows.row(i);
    for (std::size_t l = 0; l < d; ++l) out << (l ? "," : "") << row.re[l];
    for (std::size_t l = 0; l < d; ++l) out << ',' << row.im[l];
    out << '\n';
  }
}

}  // namespace hornex
