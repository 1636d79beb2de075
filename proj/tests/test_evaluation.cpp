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

#include <algorithm>
#include <cmath>

#include "drelkit/error.hpp"
#include "drelkit/evaluation.hpp"
#include "drelkit/rng.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace drelkit;

namespace {

// Published tables print two decimals; every value checked against one is
// expected within 0.01 of it.
bool near_published(double value, double published) { return std::abs(value - published) <= 0.01; }

// The published baselines are the exact scores cut (not rounded) to two decimals.
double truncate2(double v) { return std::floor(v * 100.0 + 1e-9) / 100.0; }

std::vector<double> tie_free_sample(Rng& rng, std::size_t n, double shift) {
  std::vector<double> v(n);
  for (auto& x : v) x = rng.normal() + shift;
  return v;
}

LabeledSet labeled(std::size_t positives, std::size_t negatives) {
  LabeledSet set;
  set.arg_dim = 1;
  static const std::vector<float> kVector = {1.0f};
  for (std::size_t i = 0; i < positives + negatives; ++i) {
    set.items.push_back({"r" + std::to_string(i), kVector, kVector, i < positives ? 1 : 0});
  }
  return set;
}

}  // namespace

TEST_CASE("f1 in percent") {
  const auto s = f1({146, 900, 0, 0});
  CHECK(near_published(s.percent, 24.49));
  CHECK(s.percent == doctest::Approx(100.0 * 292.0 / 1192.0));
  CHECK_FALSE(s.degenerate);

  const auto none = f1({0, 0, 5, 0});
  CHECK(none.percent == 0.0);
  CHECK_FALSE(none.degenerate);
  const auto empty = f1({0, 0, 0, 12});
  CHECK(empty.percent == 0.0);
  CHECK(empty.degenerate);

  CHECK(f1({37, 0, 0, 100}).percent == 100.0);
}

TEST_CASE("confusion counts") {
  ConfusionCounts c;
  c.add(1, 1);
  c.add(1, 0);
  c.add(0, 1);
  c.add(0, 0);
  c.add(0, 0);
  CHECK(c == ConfusionCounts{1, 1, 1, 2});
  CHECK(c.total() == 5);
}

TEST_CASE("always-positive baseline") {
  // PDTB 2.0 test set, 1046 implicit relations.
  CHECK(near_published(always_positive_baseline(146, 1046), 24.49));
  CHECK(truncate2(always_positive_baseline(146, 1046)) == doctest::Approx(24.49));
  CHECK(near_published(always_positive_baseline(276, 1046), 41.75));
  CHECK(truncate2(always_positive_baseline(276, 1046)) == doctest::Approx(41.75));
  CHECK(near_published(always_positive_baseline(556, 1046), 69.41));
  CHECK(truncate2(always_positive_baseline(556, 1046)) == doctest::Approx(69.41));
  CHECK(near_published(always_positive_baseline(68, 1046), 12.20));
  CHECK(truncate2(always_positive_baseline(68, 1046)) == doctest::Approx(12.20));
  // PDTB 3.0 test set, 1471 implicit relations.
  CHECK(near_published(always_positive_baseline(153, 1471), 18.84));
  CHECK(truncate2(always_positive_baseline(153, 1471)) == doctest::Approx(18.84));
  CHECK(near_published(always_positive_baseline(527, 1471), 52.75));
  CHECK(truncate2(always_positive_baseline(527, 1471)) == doctest::Approx(52.75));
  CHECK(near_published(always_positive_baseline(643, 1471), 60.83));
  CHECK(truncate2(always_positive_baseline(643, 1471)) == doctest::Approx(60.83));
  CHECK(near_published(always_positive_baseline(148, 1471), 18.28));
  CHECK(truncate2(always_positive_baseline(148, 1471)) == doctest::Approx(18.28));

  CHECK(always_positive_baseline(10, 10) == 100.0);
  CHECK(always_positive_baseline(0, 10) == 0.0);
  CHECK_THROWS_AS(always_positive_baseline(0, 0), DataError);
  CHECK_THROWS_AS(always_positive_baseline(3, 2), DataError);

  // Closed form 200p / (100 + p) agrees with the constant-true confusion counts.
  for (std::size_t total = 1; total <= 60; ++total) {
    for (std::size_t pos = 0; pos <= total; ++pos) {
      const double p = 100.0 * static_cast<double>(pos) / static_cast<double>(total);
      const double closed = 200.0 * p / (100.0 + p);
      const double counted = f1({pos, total - pos, 0, 0}).percent;
      CHECK(always_positive_baseline(pos, total) == doctest::Approx(closed).epsilon(1e-12));
      CHECK(always_positive_baseline(pos, total) == doctest::Approx(counted).epsilon(1e-12));
    }
  }

  const auto set = labeled(4, 6);
  CHECK(always_positive_baseline(set) == always_positive_baseline(4, 10));
  CHECK_THROWS_AS(always_positive_baseline(LabeledSet{}), DataError);
}

TEST_CASE("macro average") {
  const std::vector<double> baseline = {18.84, 52.75, 60.83, 18.28};
  CHECK(macro_average(baseline) == doctest::Approx(37.675));
  CHECK(near_published(macro_average(baseline), 37.67));
  const std::vector<double> exact = {always_positive_baseline(153, 1471), always_positive_baseline(527, 1471),
                                     always_positive_baseline(643, 1471), always_positive_baseline(148, 1471)};
  CHECK(near_published(macro_average(exact), 37.67));
  const std::vector<double> system = {24.90, 59.18, 60.10, 36.73};
  CHECK(near_published(macro_average(system), 45.23));
  const std::vector<double> equal(4, 12.5);
  CHECK(macro_average(equal) == 12.5);
  CHECK_THROWS_AS(macro_average(std::vector<double>{1, 2, 3}), DataError);
}

TEST_CASE("summaries and formatting") {
  const std::vector<double> v = {2, 4, 4, 4, 5, 5, 7, 9};
  const auto s = summarize(v);
  CHECK(s.mean == 5.0);
  CHECK(s.stddev == doctest::Approx(std::sqrt(32.0 / 7.0)));
  CHECK(summarize(std::vector<double>{3.5}).stddev == 0.0);
  CHECK(format_mean_std(28.19, 0.83) == "28.19 (±0.83)");
  CHECK(format_mean_std(28.194, 0.826) == "28.19 (±0.83)");
  CHECK(format_mean_std(0.0, 0.0) == "0.00 (±0.00)");
}

TEST_CASE("Mann-Whitney U reference cases") {
  const std::vector<double> hi = {4, 5, 6};
  const std::vector<double> lo = {1, 2, 3};
  const auto r = mann_whitney_u(hi, lo);
  CHECK(r.u_statistic == 9.0);
  CHECK(r.p_value == doctest::Approx(0.05).epsilon(1e-12));
  CHECK(r.method == TestMethod::Exact);
  CHECK(r.sidedness == Sidedness::Greater);
  CHECK(to_string(r.method) == "exact");
  CHECK(to_string(r.sidedness) == "one-sided-greater");

  const auto two = mann_whitney_u(hi, lo, Sidedness::TwoSided);
  CHECK(two.p_value == doctest::Approx(0.1).epsilon(1e-12));

  const auto same = mann_whitney_u(hi, hi);
  CHECK(same.u_statistic == 4.5);
  CHECK(same.p_value >= 0.5);
  CHECK(same.method == TestMethod::NormalApprox);
  CHECK(to_string(same.method) == "normal-approx-tie-corrected");

  const std::vector<double> constant(5, 3.0);
  CHECK(mann_whitney_u(constant, constant).p_value == 1.0);

  CHECK_THROWS_AS(mann_whitney_u(std::vector<double>{}, lo), DataError);
  CHECK_THROWS_AS(mann_whitney_u(hi, hi, Sidedness::Greater, MethodChoice::Exact), DataError);
}

TEST_CASE("Mann-Whitney U agrees with brute-force enumeration") {
  Rng rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng.index(6);
    const std::size_t m = 1 + rng.index(6);
    const auto a = tie_free_sample(rng, n, rng.uniform(-1.5, 1.5));
    const auto b = tie_free_sample(rng, m, 0.0);
    for (bool two_sided : {false, true}) {
      const auto r = mann_whitney_u(a, b, two_sided ? Sidedness::TwoSided : Sidedness::Greater);
      CHECK(r.method == TestMethod::Exact);
      CHECK(r.u_statistic == testing::pairwise_u(a, b));
      CHECK(r.p_value == doctest::Approx(testing::brute_force_mwu_p(a, b, two_sided)).epsilon(1e-12));
    }
  }
}

TEST_CASE("Mann-Whitney U properties") {
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng.index(30);
    const std::size_t m = 1 + rng.index(30);
    // Rounded values so ties occur.
    std::vector<double> a(n), b(m);
    for (auto& x : a) x = std::round(rng.normal() * 3.0);
    for (auto& x : b) x = std::round(rng.normal() * 3.0);
    const auto ra = mann_whitney_u(a, b);
    const auto rb = mann_whitney_u(b, a);
    CHECK(ra.u_statistic + rb.u_statistic == doctest::Approx(static_cast<double>(n * m)));
    CHECK(ra.u_statistic == testing::pairwise_u(a, b));
    CHECK((ra.p_value >= 0.0 && ra.p_value <= 1.0));

    // Order of the observations does not matter.
    auto shuffled = a;
    rng.shuffle(std::span<double>(shuffled));
    CHECK(mann_whitney_u(shuffled, b).p_value == ra.p_value);

    // Two-sided p is symmetric in the samples.
    CHECK(mann_whitney_u(a, b, Sidedness::TwoSided).p_value ==
          doctest::Approx(mann_whitney_u(b, a, Sidedness::TwoSided).p_value));
  }
}

TEST_CASE("exact and normal approximation agree at n = m = 12") {
  Rng rng(13);
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = tie_free_sample(rng, 12, rng.uniform(0.0, 1.5));
    const auto b = tie_free_sample(rng, 12, 0.0);
    const auto exact = mann_whitney_u(a, b, Sidedness::Greater, MethodChoice::Exact);
    const auto approx = mann_whitney_u(a, b, Sidedness::Greater, MethodChoice::NormalApprox);
    CHECK(exact.method == TestMethod::Exact);
    CHECK(approx.method == TestMethod::NormalApprox);
    CHECK(exact.u_statistic == approx.u_statistic);
    worst = std::max(worst, std::abs(exact.p_value - approx.p_value));
  }
  CHECK(worst < 0.01);
}

TEST_CASE("large shifted samples are highly significant") {
  Rng rng(21);
  const auto a = tie_free_sample(rng, 100, 2.0);
  const auto b = tie_free_sample(rng, 100, 0.0);
  const auto r = mann_whitney_u(a, b);
  CHECK(r.method == TestMethod::NormalApprox);
  CHECK(r.p_value < 0.001);
  CHECK(mann_whitney_u(b, a).p_value > 0.999);
}

TEST_CASE("evaluate_model scores every instance") {
  Hyperparameters h;
  h.input_dim = 5;
  h.hidden = 2;
  MlpClassifier always_yes(h, MlpClassifier::Init::Zero);  // p = 0.5 -> positive
  const auto set = labeled(3, 7);
  const auto counts = evaluate_model(always_yes, set);
  CHECK(counts == ConfusionCounts{3, 7, 0, 0});
  CHECK(f1(counts).percent == always_positive_baseline(set));

  MlpClassifier always_no(h, MlpClassifier::Init::Zero);
  always_no.output_bias() = -5.0;
  CHECK(evaluate_model(always_no, set) == ConfusionCounts{0, 0, 3, 7});
  CHECK_THROWS_AS(evaluate_model(always_no, LabeledSet{}), DataError);
}
