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
#include <vector>

#include "drelkit/corpus.hpp"
#include "drelkit/embeddings.hpp"

namespace drelkit {

// One implicit relation resolved against an embedding store and labeled for a
// one-vs-other target. The argument spans borrow from the store.
struct LabeledInstance {
  std::string id;
  std::span<const float> arg1;
  std::span<const float> arg2;
  int label = 0;
};

struct LabeledSet {
  std::uint32_t arg_dim = 0;
  std::vector<LabeledInstance> items;

  std::size_t size() const { return items.size(); }
  bool empty() const { return items.empty(); }
  std::size_t positives() const;
};

// Labels every implicit relation 1 iff its top sense is `target`. Non-implicit
// relations are skipped. Throws CoverageError listing all missing keys.
LabeledSet make_labeled_set(std::span<const DiscourseRelation> relations, const EmbeddingStore& store,
                            SenseTop target);

}  // namespace drelkit
