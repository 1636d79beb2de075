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

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "drelkit/corpus.hpp"

namespace drelkit {

enum class ArgSlot { Arg1, Arg2 };

std::string_view to_string(ArgSlot slot);

// "<relation-id>:arg1" / "<relation-id>:arg2".
std::string embedding_key(std::string_view relation_id, ArgSlot slot);

// Immutable map from argument key to a dim-length float vector. Entry order is
// the insertion (file) order, so serialization is byte-stable.
class EmbeddingStore {
 public:
  struct Entry {
    std::string key;
    std::vector<float> vector;
  };

  EmbeddingStore() = default;

  // Validates dim > 0, vector lengths, finiteness and key uniqueness.
  EmbeddingStore(std::uint32_t dim, std::vector<Entry> entries);

  std::uint32_t dim() const { return dim_; }
  std::size_t size() const { return keys_.size(); }
  bool contains(std::string_view key) const;

  // Throws CoverageError naming the key when absent.
  std::span<const float> lookup(std::string_view key) const;
  std::span<const float> lookup(std::string_view relation_id, ArgSlot slot) const;

  const std::string& key_at(std::size_t i) const { return keys_[i]; }
  std::span<const float> vector_at(std::size_t i) const;

  // Copy with every vector scaled to unit L2 norm (zero vectors are left as is).
  EmbeddingStore l2_normalized() const;

 private:
  std::uint32_t dim_ = 0;
  std::vector<std::string> keys_;
  std::vector<float> data_;
  std::unordered_map<std::string, std::size_t> index_;
};

inline constexpr std::uint16_t kEmbeddingFormatVersion = 1;

// EMB1 layout, little-endian: "EMB1" | version u16 | dim u32 | count u64 |
// count x (key_len u16 | key bytes | dim x f32).
EmbeddingStore read_embedding_file(std::string_view bytes);
std::string write_embedding_file(const EmbeddingStore& store);

// Missing argument keys of the implicit relations in `relations`, in corpus order.
struct CoverageReport {
  std::size_t required = 0;
  std::vector<std::string> missing;

  bool complete() const { return missing.empty(); }
};

CoverageReport coverage(std::span<const DiscourseRelation> relations, const EmbeddingStore& store);

// Throws CoverageError listing every missing key.
void require_coverage(std::span<const DiscourseRelation> relations, const EmbeddingStore& store);

}  // namespace drelkit
