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

#include "drelkit/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <numeric>
#include <optional>
#include <vector>

#include "drelkit/error.hpp"

namespace drelkit {
namespace {

constexpr std::size_t kExactMaxMinSize = 12;

// C(n+m, n), or nullopt when it does not fit below 2^63.
std::optional<std::uint64_t> arrangements(std::size_t n, std::size_t m) {
  const std::size_t k = std::min(n, m);
  unsigned __int128 c = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    c = c * (n + m - k + i) / i;
    if (c >= (static_cast<unsigned __int128>(1) << 63)) return std::nullopt;
  }
  return static_cast<std::uint64_t>(c);
}

// Number of arrangements of n a's and m b's producing each U value, where U
// counts (a, b) pairs with a ranked above b. Built with the recurrence
// N(i, j, u) = N(i-1, j, u-j) + N(i, j-1, u) by rows of i.
std::vector<std::uint64_t> u_null_counts(std::size_t n, std::size_t m) {
  // prev[j] holds the distribution for (i-1, j); cur[j] for (i, j).
  std::vector<std::vector<std::uint64_t>> prev(m + 1), cur(m + 1);
  for (std::size_t j = 0; j <= m; ++j) prev[j] = {1};  // i = 0: U is always 0
  for (std::size_t i = 1; i <= n; ++i) {
    cur[0] = {1};
    for (std::size_t j = 1; j <= m; ++j) {
      std::vector<std::uint64_t> dist(i * j + 1, 0);
      const auto& top_is_a = prev[j];   // shift by j
      const auto& top_is_b = cur[j - 1];
      for (std::size_t u = 0; u < top_is_a.size(); ++u) dist[u + j] += top_is_a[u];
      for (std::size_t u = 0; u < top_is_b.size(); ++u) dist[u] += top_is_b[u];
      cur[j] = std::move(dist);
    }
    std::swap(prev, cur);
  }
  return prev[m];
}

double normal_sf(double z) { return 0.5 * std::erfc(z / std::sqrt(2.0)); }

}  // namespace

void ConfusionCounts::add(int predicted, int label) {
  if (predicted == 1) {
    label == 1 ? ++tp : ++fp;
  } else {
    label == 1 ? ++fn : ++tn;
  }
}

F1Score f1(const ConfusionCounts& c) {
  const std::size_t denom = 2 * c.tp + c.fp + c.fn;
  if (denom == 0) return {0.0, true};
  return {100.0 * static_cast<double>(2 * c.tp) / static_cast<double>(denom), false};
}

double always_positive_baseline(std::size_t positives, std::size_t total) {
  if (total == 0) throw DataError("baseline on an empty test set");
  if (positives > total) throw DataError("more positives than instances");
  ConfusionCounts c;
  c.tp = positives;
  c.fp = total - positives;
  return f1(c).percent;
}

double always_positive_baseline(const LabeledSet& test) {
  return always_positive_baseline(test.positives(), test.size());
}

double macro_average(std::span<const double> per_sense) {
  if (per_sense.size() != 4) {
    throw DataError("macro average needs exactly four per-sense scores, got " +
                    std::to_string(per_sense.size()));
  }
  return std::accumulate(per_sense.begin(), per_sense.end(), 0.0) / 4.0;
}

Summary summarize(std::span<const double> values) {
  Summary s;
  if (values.empty()) return s;
  s.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
  if (values.size() < 2) return s;
  double ss = 0.0;
  for (double v : values) ss += (v - s.mean) * (v - s.mean);
  s.stddev = std::sqrt(ss / static_cast<double>(values.size() - 1));
  return s;
}

std::string format_mean_std(double mean, double stddev) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f (±%.2f)", mean, stddev);
  return buf;
}

std::string_view to_string(Sidedness sidedness) {
  return sidedness == Sidedness::Greater ? "one-sided-greater" : "two-sided";
}

std::string_view to_string(TestMethod method) {
  return method == TestMethod::Exact ? "exact" : "normal-approx-tie-corrected";
}

SignificanceResult mann_whitney_u(std::span<const double> a, std::span<const double> b,
                                  Sidedness sidedness, MethodChoice choice) {
  if (a.empty() || b.empty()) throw DataError("Mann-Whitney U needs two non-empty samples");
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  const std::size_t total = n + m;

  // Pool, sort, and assign average ranks to tied runs.
  std::vector<std::pair<double, bool>> pooled;  // (value, from_a)
  pooled.reserve(total);
  for (double v : a) pooled.emplace_back(v, true);
  for (double v : b) pooled.emplace_back(v, false);
  std::sort(pooled.begin(), pooled.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  double rank_sum_a = 0.0;
  double tie_term = 0.0;
  bool has_ties = false;
  for (std::size_t i = 0; i < total;) {
    std::size_t j = i;
    while (j < total && pooled[j].first == pooled[i].first) ++j;
    const double t = static_cast<double>(j - i);
    const double avg_rank = 0.5 * static_cast<double>(i + 1 + j);  // ranks i+1..j
    for (std::size_t k = i; k < j; ++k) {
      if (pooled[k].second) rank_sum_a += avg_rank;
    }
    if (t > 1) {
      has_ties = true;
      tie_term += t * t * t - t;
    }
    i = j;
  }

  SignificanceResult result;
  result.sidedness = sidedness;
  result.u_statistic = rank_sum_a - 0.5 * static_cast<double>(n * (n + 1));
  const double nm = static_cast<double>(n * m);

  const auto count = arrangements(n, m);
  const bool exact_ok = !has_ties && std::min(n, m) <= kExactMaxMinSize && count.has_value();
  if (choice == MethodChoice::Exact && !exact_ok) {
    throw DataError("exact Mann-Whitney p-value needs tie-free samples with min(n, m) <= 12");
  }
  const bool use_exact = choice == MethodChoice::Exact || (choice == MethodChoice::Auto && exact_ok);

  if (use_exact) {
    result.method = TestMethod::Exact;
    const auto dist = u_null_counts(n, m);
    const auto u_obs = static_cast<std::size_t>(std::llround(result.u_statistic));
    std::uint64_t at_least = 0;
    std::uint64_t at_most = 0;
    for (std::size_t u = 0; u < dist.size(); ++u) {
      if (u >= u_obs) at_least += dist[u];
      if (u <= u_obs) at_most += dist[u];
    }
    const double denom = static_cast<double>(*count);
    if (sidedness == Sidedness::Greater) {
      result.p_value = static_cast<double>(at_least) / denom;
    } else {
      result.p_value = std::min(1.0, 2.0 * static_cast<double>(std::min(at_least, at_most)) / denom);
    }
    return result;
  }

  result.method = TestMethod::NormalApprox;
  const double big_n = static_cast<double>(total);
  const double variance = nm / 12.0 * ((big_n + 1.0) - tie_term / (big_n * (big_n - 1.0)));
  if (!(variance > 0.0)) {
    result.p_value = 1.0;
    return result;
  }
  const double sd = std::sqrt(variance);
  const double mu = nm / 2.0;
  if (sidedness == Sidedness::Greater) {
    result.p_value = normal_sf((result.u_statistic - mu - 0.5) / sd);
  } else {
    result.p_value = std::min(1.0, 2.0 * normal_sf((std::abs(result.u_statistic - mu) - 0.5) / sd));
  }
  return result;
}

ConfusionCounts evaluate_model(const MlpClassifier& model, const LabeledSet& test) {
  if (test.empty()) throw DataError("evaluation on an empty test set");
  if (static_cast<std::size_t>(test.arg_dim) * RelationFeature::kBlocks != model.input_dim()) {
    throw DataError("test set embedding dimension does not match the model");
  }
  ConfusionCounts counts;
  std::vector<double> x(model.input_dim());
  for (const auto& item : test.items) {
    compose_into(item.arg1, item.arg2, x);
    counts.add(model.predict(x), item.label);
  }
  return counts;
}

}  // namespace drelkit
