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

#include "drelkit/corpus.hpp"

#include <algorithm>
#include <unordered_set>

#include <json.hpp>

#include "drelkit/error.hpp"

namespace drelkit {
namespace {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

constexpr std::array<std::string_view, 8> kJsonlKeys = {"id",       "corpus", "lang", "doc_id",
                                                        "rel_type", "senses", "arg1", "arg2"};

std::vector<std::string_view> split_fields(std::string_view line, char sep) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

// Calls fn(line_number, line) for every line, stripping a trailing '\r'.
template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    fn(++line_no, line);
    start = end + 1;
  }
}

bool is_blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return c == ' ' || c == '\t'; });
}

void check_relation(const DiscourseRelation& rel, std::size_t line) {
  if (rel.id.empty()) throw ParseError("empty relation id", line);
  if (!rel.rel_type.is_implicit()) return;
  if (rel.senses.empty()) throw ParseError("implicit relation " + rel.id + " has no sense", line);
  if (rel.arg1.empty()) throw ParseError("implicit relation " + rel.id + " has empty arg1", line);
  if (rel.arg2.empty()) throw ParseError("implicit relation " + rel.id + " has empty arg2", line);
}

std::string required_string(const Json& obj, const char* key, std::size_t line) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(std::string("missing key \"") + key + "\"", line);
  if (!it->is_string()) throw ParseError(std::string("key \"") + key + "\" must be a string", line);
  return it->get<std::string>();
}

}  // namespace

std::string_view to_string(SenseTop sense) {
  switch (sense) {
    case SenseTop::Comparison: return "Comparison";
    case SenseTop::Contingency: return "Contingency";
    case SenseTop::Expansion: return "Expansion";
    case SenseTop::Temporal: return "Temporal";
  }
  return "?";
}

SenseTop parse_sense_top(std::string_view name) {
  for (auto sense : kAllSenses) {
    if (to_string(sense) == name) return sense;
  }
  throw DataError("not a top-level sense: \"" + std::string(name) + "\"");
}

RelationType RelationType::parse(std::string_view label) {
  std::string text(label);
  if (label == "Implicit") return {Kind::Implicit, text};
  if (label == "Explicit") return {Kind::Explicit, text};
  if (label == "EntRel") return {Kind::EntRel, text};
  if (label == "AltLex" || label == "AltLexC") return {Kind::AltLex, text};
  if (label == "Hypophora") return {Kind::Hypophora, text};
  return {Kind::Other, text};
}

PipeColumnMap PipeColumnMap::from_json(std::string_view json_text) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("column map is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("column map must be a JSON object");
  PipeColumnMap map;
  try {
    map.field_count_min = j.value("field_count_min", std::size_t{0});
    map.rel_type_idx = j.at("rel_type_idx").get<std::size_t>();
    map.sense_idxs = j.at("sense_idxs").get<std::vector<std::size_t>>();
    map.arg1_idx = j.at("arg1_idx").get<std::size_t>();
    map.arg2_idx = j.at("arg2_idx").get<std::size_t>();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("invalid column map: ") + e.what());
  }
  if (map.sense_idxs.empty()) throw ParseError("column map needs at least one sense index");
  return map;
}

std::size_t PipeColumnMap::required_fields() const {
  std::size_t max_idx = std::max({rel_type_idx, arg1_idx, arg2_idx});
  for (auto idx : sense_idxs) max_idx = std::max(max_idx, idx);
  return std::max(field_count_min, max_idx + 1);
}

std::vector<DiscourseRelation> parse_pipe_file(std::string_view text, const PipeColumnMap& columns,
                                               const PipeSource& source) {
  std::vector<DiscourseRelation> out;
  const std::size_t needed = columns.required_fields();
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    if (is_blank(line)) return;
    const auto fields = split_fields(line, '|');
    if (fields.size() < needed) {
      throw ParseError("expected at least " + std::to_string(needed) + " fields, found " +
                           std::to_string(fields.size()),
                       line_no);
    }
    DiscourseRelation rel;
    rel.id = source.doc_id + "#" + std::to_string(line_no);
    rel.corpus = source.corpus;
    rel.lang = source.lang;
    rel.doc_id = source.doc_id;
    rel.rel_type = RelationType::parse(fields[columns.rel_type_idx]);
    if (rel.rel_type.label().empty()) throw ParseError("empty relation type", line_no);
    for (auto idx : columns.sense_idxs) {
      if (!fields[idx].empty()) rel.senses.emplace_back(fields[idx]);
    }
    rel.arg1 = std::string(fields[columns.arg1_idx]);
    rel.arg2 = std::string(fields[columns.arg2_idx]);
    check_relation(rel, line_no);
    out.push_back(std::move(rel));
  });
  return out;
}

std::vector<DiscourseRelation> parse_jsonl(std::string_view text, JsonlOptions options) {
  std::vector<DiscourseRelation> out;
  std::unordered_set<std::string> seen;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    if (is_blank(line)) return;
    Json obj;
    try {
      obj = Json::parse(line);
    } catch (const Json::parse_error& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what(), line_no);
    }
    if (!obj.is_object()) throw ParseError("expected a JSON object", line_no);
    if (options.strict) {
      for (const auto& item : obj.items()) {
        if (std::find(kJsonlKeys.begin(), kJsonlKeys.end(), item.key()) == kJsonlKeys.end()) {
          throw ParseError("unknown key \"" + item.key() + "\"", line_no);
        }
      }
    }
    DiscourseRelation rel;
    rel.id = required_string(obj, "id", line_no);
    rel.corpus = required_string(obj, "corpus", line_no);
    rel.lang = required_string(obj, "lang", line_no);
    rel.doc_id = required_string(obj, "doc_id", line_no);
    rel.rel_type = RelationType::parse(required_string(obj, "rel_type", line_no));
    const auto senses = obj.find("senses");
    if (senses == obj.end()) throw ParseError("missing key \"senses\"", line_no);
    if (!senses->is_array()) throw ParseError("key \"senses\" must be an array", line_no);
    for (const auto& s : *senses) {
      if (!s.is_string()) throw ParseError("senses must be strings", line_no);
      rel.senses.push_back(s.get<std::string>());
    }
    rel.arg1 = required_string(obj, "arg1", line_no);
    rel.arg2 = required_string(obj, "arg2", line_no);
    check_relation(rel, line_no);
    if (!seen.insert(rel.id).second) throw ParseError("duplicate id \"" + rel.id + "\"", line_no);
    out.push_back(std::move(rel));
  });
  return out;
}

std::string to_jsonl_line(const DiscourseRelation& rel) {
  OrderedJson obj;
  obj["id"] = rel.id;
  obj["corpus"] = rel.corpus;
  obj["lang"] = rel.lang;
  obj["doc_id"] = rel.doc_id;
  obj["rel_type"] = rel.rel_type.label();
  obj["senses"] = rel.senses;
  obj["arg1"] = rel.arg1;
  obj["arg2"] = rel.arg2;
  return obj.dump();
}

std::string write_jsonl(std::span<const DiscourseRelation> relations) {
  std::string out;
  for (const auto& rel : relations) {
    out += to_jsonl_line(rel);
    out += '\n';
  }
  return out;
}

SenseTop top_sense(const DiscourseRelation& rel) {
  if (!rel.rel_type.is_implicit()) {
    throw DataError("relation " + rel.id + " is " + rel.rel_type.label() + ", not Implicit");
  }
  if (rel.senses.empty()) throw DataError("relation " + rel.id + " has no sense");
  const std::string& first = rel.senses.front();
  const auto head = std::string_view(first).substr(0, first.find('.'));
  try {
    return parse_sense_top(head);
  } catch (const DataError&) {
    throw DataError("relation " + rel.id + ": unknown top-level sense in \"" + first + "\"");
  }
}

std::vector<DiscourseRelation> select_implicit(std::span<const DiscourseRelation> relations) {
  std::vector<DiscourseRelation> out;
  std::copy_if(relations.begin(), relations.end(), std::back_inserter(out),
               [](const DiscourseRelation& r) { return r.rel_type.is_implicit(); });
  return out;
}

std::array<std::size_t, 4> sense_histogram(std::span<const DiscourseRelation> relations) {
  std::array<std::size_t, 4> counts{};
  for (const auto& rel : relations) {
    if (rel.rel_type.is_implicit()) ++counts[static_cast<std::size_t>(top_sense(rel))];
  }
  return counts;
}

std::string_view to_string(SplitBucket bucket) {
  switch (bucket) {
    case SplitBucket::Train: return "train";
    case SplitBucket::Dev: return "dev";
    case SplitBucket::Test: return "test";
    case SplitBucket::Excluded: return "excluded";
  }
  return "?";
}

SplitScheme::SplitScheme(std::string name, std::set<int> train, std::set<int> dev,
                         std::set<int> test)
    : name_(std::move(name)), train_(std::move(train)), dev_(std::move(dev)), test_(std::move(test)) {
  auto overlaps = [](const std::set<int>& a, const std::set<int>& b) {
    return std::any_of(a.begin(), a.end(), [&](int s) { return b.count(s) > 0; });
  };
  if (overlaps(train_, dev_) || overlaps(train_, test_) || overlaps(dev_, test_)) {
    throw DataError("split scheme " + name_ + ": section sets overlap");
  }
}

SplitScheme SplitScheme::pdtb_standard() {
  std::set<int> train;
  for (int s = 2; s <= 20; ++s) train.insert(s);
  return SplitScheme("pdtb-standard", std::move(train), {0, 1, 23, 24}, {21, 22});
}

SplitBucket SplitScheme::bucket_of_section(int section) const {
  if (train_.count(section)) return SplitBucket::Train;
  if (dev_.count(section)) return SplitBucket::Dev;
  if (test_.count(section)) return SplitBucket::Test;
  return SplitBucket::Excluded;
}

std::optional<int> wsj_section(std::string_view doc_id) {
  constexpr std::string_view prefix = "wsj_";
  const auto pos = doc_id.rfind(prefix);
  if (pos == std::string_view::npos) return std::nullopt;
  const auto digits = doc_id.substr(pos + prefix.size(), 2);
  auto is_digit = [](char c) { return c >= '0' && c <= '9'; };
  if (digits.size() != 2 || !is_digit(digits[0]) || !is_digit(digits[1])) {
    throw DataError("no section number in document id \"" + std::string(doc_id) + "\"");
  }
  return (digits[0] - '0') * 10 + (digits[1] - '0');
}

SplitBucket assign_split(const DiscourseRelation& relation, const SplitScheme& scheme) {
  const auto section = wsj_section(relation.doc_id);
  if (!section) return SplitBucket::Excluded;
  return scheme.bucket_of_section(*section);
}

}  // namespace drelkit
