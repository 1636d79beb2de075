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

#include <doctest.h>

#include <bit>
#include <cmath>
#include <cstring>
#include <limits>

#include "drelkit/binio.hpp"
#include "drelkit/embeddings.hpp"
#include "drelkit/error.hpp"
#include "drelkit/rng.hpp"
#include "fixtures.hpp"

using namespace drelkit;

namespace {

EmbeddingStore small_store() {
  return EmbeddingStore(3, {{"r1:arg1", {1.5f, -2.0f, 0.1f}},
                            {"r1:arg2", {0.0f, 3.25f, -1e-7f}},
                            {"r2:arg1", {7.0f, 8.0f, 9.0f}}});
}

// Hand-assembled EMB1 bytes, independent of write_embedding_file.
std::string raw_file(std::uint32_t dim, std::uint64_t count,
                     const std::vector<std::pair<std::string, std::vector<float>>>& records,
                     std::uint16_t version = 1, std::string magic = "EMB1") {
  std::string out = magic;
  auto put = [&](std::uint64_t v, int n) {
    for (int i = 0; i < n; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
  };
  put(version, 2);
  put(dim, 4);
  put(count, 8);
  for (const auto& [key, vec] : records) {
    put(key.size(), 2);
    out += key;
    for (float f : vec) put(std::bit_cast<std::uint32_t>(f), 4);
  }
  return out;
}

}  // namespace

TEST_CASE("EMB1 layout is little-endian and matches a hand-built file") {
  const auto store = small_store();
  const auto bytes = write_embedding_file(store);
  const auto expected = raw_file(3, 3,
                                 {{"r1:arg1", {1.5f, -2.0f, 0.1f}},
                                  {"r1:arg2", {0.0f, 3.25f, -1e-7f}},
                                  {"r2:arg1", {7.0f, 8.0f, 9.0f}}});
  CHECK(bytes == expected);
  CHECK(bytes.substr(0, 4) == "EMB1");
  CHECK(static_cast<unsigned char>(bytes[4]) == 1);  // version low byte
  CHECK(static_cast<unsigned char>(bytes[6]) == 3);  // dim low byte
}

TEST_CASE("read_embedding_file basics") {
  SUBCASE("empty store keeps its dimension") {
    const auto store = read_embedding_file(raw_file(1024, 0, {}));
    CHECK(store.size() == 0);
    CHECK(store.dim() == 1024);
  }
  SUBCASE("lookup is bit exact") {
    const auto store = read_embedding_file(write_embedding_file(small_store()));
    const auto v = store.lookup("r1", ArgSlot::Arg2);
    REQUIRE(v.size() == 3);
    CHECK(std::bit_cast<std::uint32_t>(v[2]) == std::bit_cast<std::uint32_t>(-1e-7f));
    CHECK(v[1] == 3.25f);
  }
  SUBCASE("missing key names the key") {
    const auto store = small_store();
    try {
      store.lookup("r2", ArgSlot::Arg2);
      FAIL("expected CoverageError");
    } catch (const CoverageError& e) {
      REQUIRE(e.missing().size() == 1);
      CHECK(e.missing()[0] == "r2:arg2");
    }
  }
}

TEST_CASE("read_embedding_file rejects invalid files") {
  CHECK_THROWS_AS(read_embedding_file(raw_file(2, 0, {}, 1, "EMB2")), ParseError);
  CHECK_THROWS_AS(read_embedding_file("EM"), ParseError);
  CHECK_THROWS_AS(read_embedding_file(raw_file(2, 0, {}, 2)), ParseError);
  CHECK_THROWS_AS(read_embedding_file(raw_file(0, 0, {})), ParseError);
  // Declared count larger than the payload.
  CHECK_THROWS_AS(read_embedding_file(raw_file(2, 2, {{"a", {1, 2}}})), ParseError);
  // Truncated vector.
  auto truncated = raw_file(2, 1, {{"a", {1, 2}}});
  truncated.pop_back();
  CHECK_THROWS_AS(read_embedding_file(truncated), ParseError);
  // Trailing garbage.
  CHECK_THROWS_AS(read_embedding_file(raw_file(2, 1, {{"a", {1, 2}}}) + "x"), ParseError);
  CHECK_THROWS_AS(read_embedding_file(raw_file(2, 1, {{"a", {1, std::numeric_limits<float>::quiet_NaN()}}})),
                  ParseError);
  CHECK_THROWS_AS(read_embedding_file(raw_file(2, 1, {{"a", {std::numeric_limits<float>::infinity(), 0}}})),
                  ParseError);
  CHECK_THROWS_AS(read_embedding_file(raw_file(2, 2, {{"a", {1, 2}}, {"a", {3, 4}}})), ParseError);
  // Absurd count must not allocate.
  CHECK_THROWS_AS(read_embedding_file(raw_file(4, 1ULL << 60, {})), ParseError);
}

TEST_CASE("store construction validates") {
  CHECK_THROWS_AS(EmbeddingStore(0, {}), DataError);
  CHECK_THROWS_AS(EmbeddingStore(2, {{"a", {1}}}), DataError);
  CHECK_THROWS_AS(EmbeddingStore(1, {{"a", {1}}, {"a", {2}}}), DataError);
  CHECK_THROWS_AS(EmbeddingStore(1, {{"a", {std::nanf("")}}}), DataError);
}

TEST_CASE("EMB1 round trips over random stores") {
  Rng rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    const auto dim = static_cast<std::uint32_t>(1 + rng.index(12));
    std::vector<EmbeddingStore::Entry> entries;
    const std::size_t n = rng.index(20);
    for (std::size_t i = 0; i < n; ++i) {
      EmbeddingStore::Entry e{"rel-" + std::to_string(trial) + "/" + std::to_string(i) + (i % 2 ? ":arg1" : ":arg2"),
                              std::vector<float>(dim)};
      for (auto& v : e.vector) v = static_cast<float>(rng.normal() * 100.0);
      entries.push_back(std::move(e));
    }
    const EmbeddingStore store(dim, entries);
    const auto bytes = write_embedding_file(store);
    const auto back = read_embedding_file(bytes);
    CHECK(write_embedding_file(back) == bytes);
    REQUIRE(back.size() == entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const auto v = back.lookup(entries[i].key);
      CHECK(std::memcmp(v.data(), entries[i].vector.data(), dim * sizeof(float)) == 0);
    }
  }
}

TEST_CASE("coverage report lists exactly the missing keys") {
  auto rels = testing::corpus_with_counts({1, 1, 1, 0}, "c");
  DiscourseRelation entrel;
  entrel.id = "no-vectors-needed";
  entrel.rel_type = RelationType::parse("EntRel");
  rels.push_back(entrel);

  std::vector<EmbeddingStore::Entry> entries;
  for (const auto& r : rels) {
    if (!r.rel_type.is_implicit()) continue;
    for (auto slot : {ArgSlot::Arg1, ArgSlot::Arg2}) {
      if (r.id == "c-1" && slot == ArgSlot::Arg2) continue;
      entries.push_back({embedding_key(r.id, slot), {0.5f, 0.5f}});
    }
  }
  const EmbeddingStore store(2, std::move(entries));
  const auto report = coverage(rels, store);
  CHECK(report.required == 6);
  REQUIRE(report.missing.size() == 1);
  CHECK(report.missing[0] == "c-1:arg2");
  CHECK_THROWS_AS(require_coverage(rels, store), CoverageError);
}

TEST_CASE("l2 normalization") {
  const EmbeddingStore store(2, {{"a", {3.0f, 4.0f}}, {"z", {0.0f, 0.0f}}});
  const auto unit = store.l2_normalized();
  CHECK(unit.lookup("a")[0] == doctest::Approx(0.6));
  CHECK(unit.lookup("a")[1] == doctest::Approx(0.8));
  CHECK(unit.lookup("z")[0] == 0.0f);
  // The source is untouched.
  CHECK(store.lookup("a")[0] == 3.0f);
}
