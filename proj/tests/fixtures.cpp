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

#include "fixtures.hpp"

#include <cmath>

#include "drelkit/rng.hpp"

namespace drelkit::testing {
namespace {

const char* second_level(SenseTop s) {
  switch (s) {
    case SenseTop::Comparison: return "Comparison.Contrast";
    case SenseTop::Contingency: return "Contingency.Cause.Reason";
    case SenseTop::Expansion: return "Expansion.Conjunction";
    case SenseTop::Temporal: return "Temporal.Asynchronous.Precedence";
  }
  return "";
}

DiscourseRelation make_relation(std::string id, std::string doc_id, RelationType type, std::vector<std::string> senses,
                                const std::string& corpus, const std::string& lang) {
  DiscourseRelation r;
  r.arg1 = id + " first argument";
  r.arg2 = id + " second argument";
  r.id = std::move(id);
  r.corpus = corpus;
  r.lang = lang;
  r.doc_id = std::move(doc_id);
  r.rel_type = std::move(type);
  r.senses = std::move(senses);
  return r;
}

}  // namespace

std::string data_path(std::string_view name) { return std::string(DRELKIT_TEST_DATA) + "/" + std::string(name); }

std::vector<DiscourseRelation> corpus_with_counts(const std::array<std::size_t, 4>& counts, const std::string& prefix,
                                                  const std::vector<std::string>& doc_ids, const std::string& corpus,
                                                  const std::string& lang) {
  std::vector<DiscourseRelation> out;
  std::size_t n = 0;
  for (auto sense : kAllSenses) {
    for (std::size_t i = 0; i < counts[static_cast<std::size_t>(sense)]; ++i, ++n) {
      out.push_back(make_relation(prefix + "-" + std::to_string(n), doc_ids[n % doc_ids.size()],
                                  RelationType::implicit(), {second_level(sense)}, corpus, lang));
    }
  }
  return out;
}

std::vector<DiscourseRelation> pdtb_like(const std::array<std::size_t, 4>& train, const std::array<std::size_t, 4>& dev,
                                         const std::array<std::size_t, 4>& test, std::size_t noise_per_bucket) {
  auto docs = [](std::initializer_list<int> sections) {
    std::vector<std::string> ids;
    for (int s : sections) {
      for (int d = 0; d < 3; ++d) {
        char buf[16];
        std::snprintf(buf, sizeof buf, "wsj_%02d%02d", s, d);
        ids.emplace_back(buf);
      }
    }
    return ids;
  };
  const auto train_docs = docs({2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20});
  const auto dev_docs = docs({0, 1, 23, 24});
  const auto test_docs = docs({21, 22});

  std::vector<DiscourseRelation> out;
  auto add_bucket = [&](const std::array<std::size_t, 4>& counts, const std::vector<std::string>& doc_ids,
                        const std::string& name) {
    auto rels = corpus_with_counts(counts, "pdtb-" + name, doc_ids, "PDTB3", "en");
    out.insert(out.end(), rels.begin(), rels.end());
    for (std::size_t i = 0; i < noise_per_bucket; ++i) {
      const bool explicit_rel = i % 2 == 0;
      out.push_back(make_relation("pdtb-" + name + "-noise-" + std::to_string(i), doc_ids[i % doc_ids.size()],
                                  RelationType::parse(explicit_rel ? "Explicit" : "EntRel"),
                                  explicit_rel ? std::vector<std::string>{"Contingency.Cause.Result"}
                                               : std::vector<std::string>{},
                                  "PDTB3", "en"));
    }
  };
  add_bucket(train, train_docs, "train");
  add_bucket(dev, dev_docs, "dev");
  add_bucket(test, test_docs, "test");
  return out;
}

EmbeddingStore random_store(std::span<const DiscourseRelation> relations, std::uint32_t dim, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<EmbeddingStore::Entry> entries;
  for (const auto& r : relations) {
    if (!r.rel_type.is_implicit()) continue;
    for (auto slot : {ArgSlot::Arg1, ArgSlot::Arg2}) {
      EmbeddingStore::Entry e{embedding_key(r.id, slot), std::vector<float>(dim)};
      for (auto& v : e.vector) v = static_cast<float>(rng.normal());
      entries.push_back(std::move(e));
    }
  }
  return EmbeddingStore(dim, std::move(entries));
}

GaussianFixture gaussian_clusters(std::size_t relations, std::uint32_t dim, double separation, std::uint64_t seed,
                                  SenseTop target, double positive_fraction) {
  Rng rng(seed);
  std::vector<double> direction(dim);
  double norm = 0.0;
  for (auto& d : direction) {
    d = rng.normal();
    norm += d * d;
  }
  for (auto& d : direction) d /= std::sqrt(norm);

  std::vector<SenseTop> others;
  for (auto s : kAllSenses) {
    if (s != target) others.push_back(s);
  }

  GaussianFixture fx;
  std::vector<EmbeddingStore::Entry> entries;
  const std::size_t positives = static_cast<std::size_t>(std::lround(positive_fraction * relations));
  std::vector<int> labels(relations, 0);
  for (std::size_t i = 0; i < positives; ++i) labels[i] = 1;
  rng.shuffle(std::span<int>(labels));

  for (std::size_t i = 0; i < relations; ++i) {
    const int label = labels[i];
    const SenseTop sense = label ? target : others[i % others.size()];
    const std::string id = "g" + std::to_string(seed) + "-" + std::to_string(i);
    DiscourseRelation r = make_relation(id, "synthetic_0001", RelationType::implicit(), {second_level(sense)},
                                        "synthetic", "en");
    const double sign = label ? 0.5 : -0.5;
    for (auto slot : {ArgSlot::Arg1, ArgSlot::Arg2}) {
      EmbeddingStore::Entry e{embedding_key(id, slot), std::vector<float>(dim)};
      for (std::uint32_t k = 0; k < dim; ++k) {
        e.vector[k] = static_cast<float>(sign * separation * direction[k] + rng.normal());
      }
      entries.push_back(std::move(e));
    }
    const double u = static_cast<double>(i) / static_cast<double>(relations);
    (u < 0.6 ? fx.train : u < 0.8 ? fx.dev : fx.test).push_back(std::move(r));
  }
  fx.store = EmbeddingStore(dim, std::move(entries));
  return fx;
}

}  // namespace drelkit::testing
