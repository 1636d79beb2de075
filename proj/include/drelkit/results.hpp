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
#include <vector>

#include <json.hpp>

#include "drelkit/corpus.hpp"
#include "drelkit/training.hpp"

namespace drelkit {

inline constexpr int kRunResultsSchemaVersion = 1;
inline constexpr std::string_view kToolkitVersion = "0.1.0";

struct TargetScores {
  std::string target;
  std::vector<double> scores;
  double baseline = 0.0;
  std::size_t test_size = 0;
};

// Contents of a run-results file: every score of a repeated experiment for one
// sense, plus the resolved configuration that produced it.
struct RunResults {
  int schema_version = kRunResultsSchemaVersion;
  SenseTop task = SenseTop::Comparison;
  std::vector<std::string> training_corpora;
  std::vector<std::uint64_t> seeds;
  std::vector<TargetScores> targets;
  nlohmann::ordered_json config = nlohmann::ordered_json::object();
  std::string toolkit_version = std::string(kToolkitVersion);

  std::size_t runs() const { return seeds.size(); }
  // "PDTB3+TDB"
  std::string setup() const;
  // Throws DataError when the target is absent.
  const TargetScores& target(std::string_view name) const;
};

// All distributions must share task, training corpora and seeds.
RunResults make_run_results(std::span<const RunDistribution> distributions,
                            const nlohmann::ordered_json& config);

// JSON object with keys schema_version, task, training_corpora, runs, seeds,
// scores_per_target, baseline_per_target, test_size_per_target, config,
// toolkit_version. Output is deterministic for equal inputs.
std::string write_run_results(const RunResults& results);

// Throws DataError on schema mismatch or inconsistent lengths.
RunResults parse_run_results(std::string_view json_text);

}  // namespace drelkit
