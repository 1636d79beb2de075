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
#include <span>
#include <string>
#include <string_view>

#include "drelkit/dataset.hpp"
#include "drelkit/model.hpp"

namespace drelkit {

struct ConfusionCounts {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  std::size_t tn = 0;

  std::size_t total() const { return tp + fp + fn + tn; }
  void add(int predicted, int label);

  friend bool operator==(const ConfusionCounts&, const ConfusionCounts&) = default;
};

// Positive-class F1 in percent. When tp+fp+fn == 0 the score is 0 and
// `degenerate` is set.
struct F1Score {
  double percent = 0.0;
  bool degenerate = false;
};

F1Score f1(const ConfusionCounts& counts);

// F1 of the predictor that always answers positive: 200p / (100 + p) for a
// positive rate of p percent. Throws DataError on an empty set.
double always_positive_baseline(std::size_t positives, std::size_t total);
double always_positive_baseline(const LabeledSet& test);

// Arithmetic mean of exactly four per-sense scores.
double macro_average(std::span<const double> per_sense);

// Mean and sample standard deviation (0 for a single value).
struct Summary {
  double mean = 0.0;
  double stddev = 0.0;
};

Summary summarize(std::span<const double> values);

// "28.19 (±0.83)".
std::string format_mean_std(double mean, double stddev);

enum class Sidedness { Greater, TwoSided };
enum class TestMethod { Exact, NormalApprox };

// Which p-value computation to use; Auto picks Exact when min(n, m) <= 12,
// there are no ties, and the null distribution fits in 64-bit counts.
enum class MethodChoice { Auto, Exact, NormalApprox };

std::string_view to_string(Sidedness sidedness);
std::string_view to_string(TestMethod method);

struct SignificanceResult {
  double u_statistic = 0.0;  // U of sample a (pairs with a > b, ties count one half)
  double p_value = 1.0;
  Sidedness sidedness = Sidedness::Greater;
  TestMethod method = TestMethod::NormalApprox;
};

// Mann-Whitney U test of a against b. Greater tests whether a tends to be
// larger. Exact p-values enumerate the null distribution of U; the normal
// approximation uses the tie-corrected variance and a 0.5 continuity
// correction. Throws DataError on empty samples, or when Exact is forced on
// tied or oversized samples.
SignificanceResult mann_whitney_u(std::span<const double> a, std::span<const double> b,
                                  Sidedness sidedness = Sidedness::Greater,
                                  MethodChoice method = MethodChoice::Auto);

// Predicts every instance of the test set (never subsampled).
ConfusionCounts evaluate_model(const MlpClassifier& model, const LabeledSet& test);

}  // namespace drelkit
