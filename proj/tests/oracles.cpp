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

#include "oracles.hpp"

#include <algorithm>
#include <cmath>

namespace drelkit::testing {
namespace {

double batch_loss(const MlpClassifier& model, std::span<const TrainExample> batch, std::uint64_t rng_seed) {
  Rng rng(rng_seed);
  double total = 0.0;
  for (const auto& ex : batch) {
    const double p = model.forward(ex.feature.values(), rng);
    total += ex.label == 1 ? -std::log(p) : -std::log(1.0 - p);
  }
  return total / static_cast<double>(batch.size());
}

}  // namespace

GradientCheck check_gradient(const MlpClassifier& model, std::span<const TrainExample> batch, std::uint64_t rng_seed,
                             double step) {
  Rng rng(rng_seed);
  const auto analytic = model.backward(batch, rng).values;
  MlpClassifier probe = model;
  const double base = batch_loss(probe, batch, rng_seed);

  GradientCheck result;
  for (std::size_t k = 0; k < probe.parameter_count(); ++k) {
    const double original = probe.parameters()[k];
    probe.parameters()[k] = original + step;
    const double up = batch_loss(probe, batch, rng_seed);
    probe.parameters()[k] = original - step;
    const double down = batch_loss(probe, batch, rng_seed);
    probe.parameters()[k] = original;

    const double right = (up - base) / step;
    const double left = (base - down) / step;
    const double scale = std::max({std::abs(left), std::abs(right), 1e-6});
    if (std::abs(right - left) / scale > 1e-2) {
      ++result.skipped;
      continue;
    }
    const double numeric = (up - down) / (2.0 * step);
    const double denom = std::max({std::abs(numeric), std::abs(analytic[k]), 1e-6});
    result.max_relative_error = std::max(result.max_relative_error, std::abs(numeric - analytic[k]) / denom);
    ++result.checked;
  }
  return result;
}

double pairwise_u(std::span<const double> a, std::span<const double> b) {
  double u = 0.0;
  for (double x : a) {
    for (double y : b) u += x > y ? 1.0 : x == y ? 0.5 : 0.0;
  }
  return u;
}

double brute_force_mwu_p(std::span<const double> a, std::span<const double> b, bool two_sided) {
  std::vector<double> pooled(a.begin(), a.end());
  pooled.insert(pooled.end(), b.begin(), b.end());
  const std::size_t n = a.size();
  const double observed = pairwise_u(a, b);

  // Every choice of n positions as "group a" is equally likely under the null.
  std::vector<bool> pick(pooled.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(n), true);
  std::size_t total = 0;
  std::size_t upper = 0;
  std::size_t lower = 0;
  std::vector<double> ga, gb;
  do {
    ga.clear();
    gb.clear();
    for (std::size_t i = 0; i < pooled.size(); ++i) (pick[i] ? ga : gb).push_back(pooled[i]);
    const double u = pairwise_u(ga, gb);
    ++total;
    if (u >= observed) ++upper;
    if (u <= observed) ++lower;
  } while (std::prev_permutation(pick.begin(), pick.end()));

  const double p_upper = static_cast<double>(upper) / static_cast<double>(total);
  const double p_lower = static_cast<double>(lower) / static_cast<double>(total);
  if (!two_sided) return p_upper;
  return std::min(1.0, 2.0 * std::min(p_upper, p_lower));
}

CountBand binomial_band(int trials, double p, double tail) {
  std::vector<double> pmf(static_cast<std::size_t>(trials) + 1);
  for (int k = 0; k <= trials; ++k) {
    pmf[k] = std::exp(std::lgamma(trials + 1.0) - std::lgamma(k + 1.0) - std::lgamma(trials - k + 1.0) +
                      k * std::log(p) + (trials - k) * std::log1p(-p));
  }
  CountBand band{0, trials};
  for (double cdf = pmf[0]; cdf <= tail;) cdf += pmf[++band.lo];
  for (double sf = pmf[trials]; sf <= tail;) sf += pmf[--band.hi];
  return band;
}

CountBand simultaneous_binomial_band(int trials, double p, int cells, double confidence) {
  const double per_cell = 1.0 - std::pow(confidence, 1.0 / cells);
  return binomial_band(trials, p, per_cell / 2.0);
}

double chi_square_critical(int dof, double alpha) {
  // Inverse standard normal by bisection on erfc.
  double lo = -10.0, hi = 10.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (0.5 * std::erfc(mid / std::sqrt(2.0)) > alpha ? lo : hi) = mid;
  }
  const double z = 0.5 * (lo + hi);
  const double k = dof;
  const double c = 2.0 / (9.0 * k);
  return k * std::pow(1.0 - c + z * std::sqrt(c), 3.0);
}

}  // namespace drelkit::testing
