/* Copyright 2026 The drelkit Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "drelkit/embeddings.hpp"

#include <cmath>

#include "drelkit/binio.hpp"
#include "drelkit/error.hpp"

namespace drelkit {
namespace {

constexpr std::string_view kMagic = "EMB1";

}  // namespace

std::string_view to_string(ArgSlot slot) { return slot == ArgSlot::Arg1 ? "arg1" : "arg2"; }

std::string embedding_key(std::string_view relation_id, ArgSlot slot) {
  std::string key(relation_id);
  key += ':';
  key += to_string(slot);
  return key;
}

EmbeddingStore::EmbeddingStore(std::uint32_t dim, std::vector<Entry> entries) : dim_(dim) {
  if (dim == 0) throw DataError("embedding dimension must be positive");
  keys_.reserve(entries.size());
  data_.reserve(entries.size() * dim);
  index_.reserve(entries.size());
  for (auto& entry : entries) {
    if (entry.vector.size() != dim) {
      throw DataError("embedding \"" + entry.key + "\" has " + std::to_string(entry.vector.size()) +
                      " components, expected " + std::to_string(dim));
    }
    for (float v : entry.vector) {
      if (!std::isfinite(v)) throw DataError("embedding \"" + entry.key + "\" has a non-finite component");
    }
    if (!index_.emplace(entry.key, keys_.size()).second) {
      throw DataError("duplicate embedding key \"" + entry.key + "\"");
    }
    keys_.push_back(std::move(entry.key));
    data_.insert(data_.end(), entry.vector.begin(), entry.vector.end());
  }
}

bool EmbeddingStore::contains(std::string_view key) const {
  return index_.find(std::string(key)) != index_.end();
}

std::span<const float> EmbeddingStore::lookup(std::string_view key) const {
  const auto it = index_.find(std::string(key));
  if (it == index_.end()) throw CoverageError({std::string(key)});
  return vector_at(it->second);
}

std::span<const float> EmbeddingStore::lookup(std::string_view relation_id, ArgSlot slot) const {
  return lookup(embedding_key(relation_id, slot));
}

std::span<const float> EmbeddingStore::vector_at(std::size_t i) const {
  return std::span<const float>(data_).subspan(i * dim_, dim_);
}

EmbeddingStore EmbeddingStore::l2_normalized() const {
  EmbeddingStore out = *this;
  for (std::size_t i = 0; i < out.keys_.size(); ++i) {
    float* v = out.data_.data() + i * dim_;
    double norm = 0.0;
    for (std::uint32_t k = 0; k < dim_; ++k) norm += static_cast<double>(v[k]) * v[k];
    norm = std::sqrt(norm);
    if (norm == 0.0) continue;
    for (std::uint32_t k = 0; k < dim_; ++k) v[k] = static_cast<float>(v[k] / norm);
  }
  return out;
}

EmbeddingStore read_embedding_file(std::string_view bytes) {
  binio::Reader in(bytes);
  if (in.remaining() < kMagic.size() || in.bytes(kMagic.size(), "magic") != kMagic) {
    throw ParseError("not an EMB1 file (bad magic)");
  }
  const auto version = in.u16("version");
  if (version != kEmbeddingFormatVersion) {
    throw ParseError("unsupported EMB1 version " + std::to_string(version));
  }
  const auto dim = in.u32("dim");
  if (dim == 0) throw ParseError("EMB1 header declares dim = 0");
  const auto count = in.u64("count");

  // Each record needs at least 2 + 4*dim bytes; reject absurd counts before allocating.
  const std::uint64_t min_record = 2 + 4ULL * dim;
  if (count > in.remaining() / min_record) {
    throw ParseError("truncated EMB1 payload: header declares " + std::to_string(count) + " records");
  }

  std::vector<EmbeddingStore::Entry> entries;
  entries.reserve(count);
  for (std::uint64_t r = 0; r < count; ++r) {
    const auto key_len = in.u16("key length");
    EmbeddingStore::Entry entry;
    entry.key = std::string(in.bytes(key_len, "key"));
    entry.vector.resize(dim);
    for (std::uint32_t k = 0; k < dim; ++k) {
      const float v = in.f32("vector component");
      if (!std::isfinite(v)) {
        throw ParseError("non-finite component " + std::to_string(k) + " in \"" + entry.key + "\"");
      }
      entry.vector[k] = v;
    }
    entries.push_back(std::move(entry));
  }
  if (in.remaining() != 0) {
    throw ParseError(std::to_string(in.remaining()) + " trailing bytes after the last EMB1 record");
  }
  try {
    return EmbeddingStore(dim, std::move(entries));
  } catch (const DataError& e) {
    throw ParseError(e.what());
  }
}

std::string write_embedding_file(const EmbeddingStore& store) {
  if (store.dim() == 0) throw DataError("cannot serialize an embedding store without a dimension");
  binio::Writer out;
  out.bytes(kMagic);
  out.u16(kEmbeddingFormatVersion);
  out.u32(store.dim());
  out.u64(store.size());
  for (std::size_t i = 0; i < store.size(); ++i) {
    const auto& key = store.key_at(i);
    if (key.size() > 0xFFFF) throw DataError("embedding key longer than 65535 bytes");
    out.u16(static_cast<std::uint16_t>(key.size()));
    out.bytes(key);
    for (float v : store.vector_at(i)) out.f32(v);
  }
  return std::move(out).str();
}

CoverageReport coverage(std::span<const DiscourseRelation> relations, const EmbeddingStore& store) {
  CoverageReport report;
  for (const auto& rel : relations) {
    if (!rel.rel_type.is_implicit()) continue;
    for (auto slot : {ArgSlot::Arg1, ArgSlot::Arg2}) {
      ++report.required;
      auto key = embedding_key(rel.id, slot);
      if (!store.contains(key)) report.missing.push_back(std::move(key));
    }
  }
  return report;
}

void require_coverage(std::span<const DiscourseRelation> relations, const EmbeddingStore& store) {
  auto report = coverage(relations, store);
  if (!report.complete()) throw CoverageError(std::move(report.missing));
}

}  // namespace drelkit
