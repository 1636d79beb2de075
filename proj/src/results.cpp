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

#include "drelkit/results.hpp"

#include "drelkit/error.hpp"

namespace drelkit {

using nlohmann::ordered_json;

std::string RunResults::setup() const {
  std::string out;
  for (const auto& c : training_corpora) {
    if (!out.empty()) out += '+';
    out += c;
  }
  return out;
}

const TargetScores& RunResults::target(std::string_view name) const {
  for (const auto& t : targets) {
    if (t.target == name) return t;
  }
  throw DataError("run results have no test target \"" + std::string(name) + "\"");
}

RunResults make_run_results(std::span<const RunDistribution> distributions, const ordered_json& config) {
  if (distributions.empty()) throw DataError("no distributions to record");
  RunResults out;
  const auto& first = distributions.front();
  out.task = first.task;
  out.training_corpora = first.training_corpora;
  out.seeds = first.seeds;
  out.config = config;
  for (const auto& d : distributions) {
    if (d.task != first.task || d.training_corpora != first.training_corpora || d.seeds != first.seeds) {
      throw DataError("distributions come from different experiments");
    }
    out.targets.push_back({d.test_target, d.scores, d.baseline, d.test_size});
  }
  return out;
}

std::string write_run_results(const RunResults& r) {
  ordered_json j;
  j["schema_version"] = r.schema_version;
  j["task"] = std::string(to_string(r.task));
  j["training_corpora"] = r.training_corpora;
  j["runs"] = r.runs();
  j["seeds"] = r.seeds;
  ordered_json scores = ordered_json::object();
  ordered_json baselines = ordered_json::object();
  ordered_json sizes = ordered_json::object();
  for (const auto& t : r.targets) {
    scores[t.target] = t.scores;
    baselines[t.target] = t.baseline;
    sizes[t.target] = t.test_size;
  }
  j["scores_per_target"] = std::move(scores);
  j["baseline_per_target"] = std::move(baselines);
  j["test_size_per_target"] = std::move(sizes);
  j["config"] = r.config;
  j["toolkit_version"] = r.toolkit_version;
  return j.dump(2) + "\n";
}

RunResults parse_run_results(std::string_view json_text) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const ordered_json::parse_error& e) {
    throw DataError(std::string("run results are not valid JSON: ") + e.what());
  }
  RunResults r;
  try {
    r.schema_version = j.at("schema_version").get<int>();
    if (r.schema_version != kRunResultsSchemaVersion) {
      throw DataError("run results schema version " + std::to_string(r.schema_version) +
                      " does not match " + std::to_string(kRunResultsSchemaVersion));
    }
    r.task = parse_sense_top(j.at("task").get<std::string>());
    r.training_corpora = j.at("training_corpora").get<std::vector<std::string>>();
    r.seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
    const auto runs = j.at("runs").get<std::size_t>();
    if (runs != r.seeds.size()) throw DataError("run results: runs does not match the seed count");
    const auto& baselines = j.at("baseline_per_target");
    const auto& sizes = j.at("test_size_per_target");
    for (const auto& [name, scores] : j.at("scores_per_target").items()) {
      TargetScores t;
      t.target = name;
      t.scores = scores.get<std::vector<double>>();
      t.baseline = baselines.at(name).get<double>();
      t.test_size = sizes.at(name).get<std::size_t>();
      if (t.scores.size() != runs) {
        throw DataError("run results: target \"" + name + "\" has " + std::to_string(t.scores.size()) +
                        " scores for " + std::to_string(runs) + " runs");
      }
      for (double s : t.scores) {
        if (!(s >= 0.0 && s <= 100.0)) throw DataError("run results: score outside [0, 100]");
      }
      r.targets.push_back(std::move(t));
    }
    r.config = j.at("config");
    r.toolkit_version = j.at("toolkit_version").get<std::string>();
  } catch (const ordered_json::exception& e) {
    throw DataError(std::string("run results do not match the schema: ") + e.what());
  }
  return r;
}

}  // namespace drelkit
