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

#include "drelkit/dataset.hpp"

#include <algorithm>

namespace drelkit {

std::size_t LabeledSet::positives() const {
  return static_cast<std::size_t>(
      std::count_if(items.begin(), items.end(), [](const LabeledInstance& i) { return i.label == 1; }));
}

LabeledSet make_labeled_set(std::span<const DiscourseRelation> relations, const EmbeddingStore& store,
                            SenseTop target) {
  require_coverage(relations, store);
  LabeledSet set;
  set.arg_dim = store.dim();
  for (const auto& rel : relations) {
    if (!rel.rel_type.is_implicit()) continue;
    set.items.push_back({rel.id, store.lookup(rel.id, ArgSlot::Arg1), store.lookup(rel.id, ArgSlot::Arg2),
                         top_sense(rel) == target ? 1 : 0});
  }
  return set;
}

}  // namespace drelkit
