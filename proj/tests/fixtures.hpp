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

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "drelkit/corpus.hpp"
#include "drelkit/embeddings.hpp"

namespace drelkit::testing {

std::string data_path(std::string_view name);

// Implicit relations with the given per-sense counts (Comparison, Contingency,
// Expansion, Temporal). Ids are "<prefix>-<n>"; doc ids cycle through doc_ids.
std::vector<DiscourseRelation> corpus_with_counts(const std::array<std::size_t, 4>& counts,
                                                  const std::string& prefix,
                                                  const std::vector<std::string>& doc_ids = {"doc_0001"},
                                                  const std::string& corpus = "synthetic",
                                                  const std::string& lang = "en");

// A PDTB-shaped corpus: implicit relations placed in wsj documents whose
// sections fall in the standard train, dev and test buckets, plus
// `noise_per_bucket` Explicit and EntRel relations per bucket.
std::vector<DiscourseRelation> pdtb_like(const std::array<std::size_t, 4>& train,
                                         const std::array<std::size_t, 4>& dev,
                                         const std::array<std::size_t, 4>& test,
                                         std::size_t noise_per_bucket = 25);

// Random standard-normal vectors for both arguments of every implicit relation.
EmbeddingStore random_store(std::span<const DiscourseRelation> relations, std::uint32_t dim,
                            std::uint64_t seed);

struct GaussianFixture {
  std::vector<DiscourseRelation> train, dev, test;
  EmbeddingStore store;
};

// Relations whose argument vectors come from two unit-variance Gaussian
// clusters `separation` apart: positives (sense = target) around +u*sep/2,
// negatives around -u*sep/2 for a random unit direction u. Negatives cycle
// through the other three senses. Split 60/20/20 into train/dev/test.
GaussianFixture gaussian_clusters(std::size_t relations, std::uint32_t dim, double separation,
                                  std::uint64_t seed, SenseTop target, double positive_fraction = 0.5);

}  // namespace drelkit::testing
