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
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace drelkit {

// Top level of the PDTB sense hierarchy.
enum class SenseTop { Comparison = 0, Contingency = 1, Expansion = 2, Temporal = 3 };

inline constexpr std::array<SenseTop, 4> kAllSenses = {
    SenseTop::Comparison, SenseTop::Contingency, SenseTop::Expansion, SenseTop::Temporal};

std::string_view to_string(SenseTop sense);

// Parses one of the four top-level names exactly. Throws DataError otherwise.
SenseTop parse_sense_top(std::string_view name);

// Relation type as annotated. Unknown labels are kept verbatim as Other.
class RelationType {
 public:
  enum class Kind { Implicit, Explicit, EntRel, AltLex, Hypophora, Other };

  RelationType() = default;
  static RelationType parse(std::string_view label);
  static RelationType implicit() { return RelationType(Kind::Implicit, "Implicit"); }

  Kind kind() const { return kind_; }
  const std::string& label() const { return label_; }
  bool is_implicit() const { return kind_ == Kind::Implicit; }

  friend bool operator==(const RelationType&, const RelationType&) = default;

 private:
  RelationType(Kind kind, std::string label) : kind_(kind), label_(std::move(label)) {}

  Kind kind_ = Kind::Other;
  std::string label_;
};

struct DiscourseRelation {
  std::string id;
  std::string corpus;
  std::string lang;
  std::string doc_id;
  RelationType rel_type;
  std::vector<std::string> senses;  // source order; senses[0] is authoritative
  std::string arg1;
  std::string arg2;

  friend bool operator==(const DiscourseRelation&, const DiscourseRelation&) = default;
};

// Field indices (0-based) of a '|'-separated annotation file.
struct PipeColumnMap {
  std::size_t field_count_min = 0;
  std::size_t rel_type_idx = 0;
  std::vector<std::size_t> sense_idxs;
  std::size_t arg1_idx = 0;
  std::size_t arg2_idx = 0;

  // Parses the JSON form {field_count_min, rel_type_idx, sense_idxs, arg1_idx, arg2_idx}.
  static PipeColumnMap from_json(std::string_view json_text);

  // Minimum number of fields a line must carry.
  std::size_t required_fields() const;
};

// Provenance attached to every relation of one pipe file.
struct PipeSource {
  std::string doc_id;
  std::string corpus;
  std::string lang;
};

// One relation per non-empty line, ids "<doc_id>#<line>". Throws ParseError
// with the line number for short or invalid lines.
std::vector<DiscourseRelation> parse_pipe_file(std::string_view text, const PipeColumnMap& columns,
                                               const PipeSource& source);

struct JsonlOptions {
  // Reject objects carrying keys beyond the eight canonical ones.
  bool strict = false;
};

// Canonical interchange format: one object per line with keys
// id, corpus, lang, doc_id, rel_type, senses, arg1, arg2.
std::vector<DiscourseRelation> parse_jsonl(std::string_view text, JsonlOptions options = {});
std::string write_jsonl(std::span<const DiscourseRelation> relations);
std::string to_jsonl_line(const DiscourseRelation& relation);

// Top-level sense of the first annotated label.
SenseTop top_sense(const DiscourseRelation& relation);

std::vector<DiscourseRelation> select_implicit(std::span<const DiscourseRelation> relations);

// Per-sense counts of implicit relations, indexed by SenseTop.
std::array<std::size_t, 4> sense_histogram(std::span<const DiscourseRelation> relations);

enum class SplitBucket { Train, Dev, Test, Excluded };

std::string_view to_string(SplitBucket bucket);

class SplitScheme {
 public:
  // Throws DataError when the section sets overlap.
  SplitScheme(std::string name, std::set<int> train, std::set<int> dev, std::set<int> test);

  // Sections 2-20 train, 0-1 and 23-24 dev, 21-22 test.
  static SplitScheme pdtb_standard();

  const std::string& name() const { return name_; }
  SplitBucket bucket_of_section(int section) const;

 private:
  std::string name_;
  std::set<int> train_, dev_, test_;
};

// Section number of a PDTB document id ("wsj_2102" -> 21). nullopt when the
// id has no "wsj_" prefix; DataError when the prefix is present but the
// digits are not.
std::optional<int> wsj_section(std::string_view doc_id);

// Non-PDTB documents fall into Excluded; their split comes from configuration.
SplitBucket assign_split(const DiscourseRelation& relation, const SplitScheme& scheme);

}  // namespace drelkit
