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

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "drelkit/evaluation.hpp"
#include "drelkit/results.hpp"

namespace drelkit {

struct ReportOptions {
  double alpha = 0.001;
  Sidedness sidedness = Sidedness::Greater;
};

struct ReportTables {
  std::string markdown;
  std::string tsv;
};

// Per-setup tables of mean (±std) F1 by test target and sense with a macro
// average column, the always-positive baseline, and, when several training
// setups are present, comparison tables where the best setup is bolded if it
// is significantly higher than the runner-up. TSV columns: language, sense,
// mean, std, n_runs, baseline, training.
ReportTables make_report(std::span<const RunResults> results, const ReportOptions& options = {});

struct LabeledResults {
  std::string label;
  RunResults results;
};

struct PairwiseComparison {
  std::string first;
  std::string second;
  double first_mean = 0.0;
  double second_mean = 0.0;
  std::string higher;  // label of the setup tested as greater
  SignificanceResult test;
  bool significant = false;
};

// Every unordered pair of setups on one test target. For each pair the setup
// with the higher mean is tested against the other. Throws DataError when the
// inputs cover different senses or lack the target.
std::vector<PairwiseComparison> compare_setups(std::span<const LabeledResults> setups,
                                               std::string_view target, const ReportOptions& options);

std::string format_comparison(std::span<const LabeledResults> setups, std::string_view target,
                              std::span<const PairwiseComparison> rows, const ReportOptions& options);

}  // namespace drelkit
