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

#include "drelkit/features.hpp"
#include "drelkit/rng.hpp"

namespace drelkit {

struct Hyperparameters {
  std::uint32_t input_dim = 0;  // 5 * embedding dim
  std::uint32_t hidden = 100;
  double lr = 0.01;
  double dropout = 0.3;  // on the input features, inverted scaling
  double eps = 1e-8;     // AdaGrad denominator offset
  std::uint64_t seed = 0;

  friend bool operator==(const Hyperparameters&, const Hyperparameters&) = default;
};

struct TrainExample {
  RelationFeature feature;
  int label = 0;  // 1 positive, 0 negative
};

inline constexpr double kProbabilityClamp = 1e-12;

// -[y ln p + (1-y) ln(1-p)] with p clamped to [1e-12, 1-1e-12].
double bce_loss(double p, int y);

// Gradient with the parameter layout of MlpClassifier::parameters().
struct Gradients {
  std::vector<double> values;
  double mean_loss = 0.0;
};

// relu hidden layer followed by a sigmoid output unit:
//   h = relu(W_h x + b_h),  p = sigmoid(W_o . h + b_o)
// Parameters live in one flat buffer ordered W_h (row-major, hidden x input),
// b_h, W_o, b_o; the AdaGrad accumulators share that layout.
class MlpClassifier {
 public:
  enum class Init { Glorot, Zero };

  explicit MlpClassifier(const Hyperparameters& hyper, Init init = Init::Glorot);

  const Hyperparameters& hyper() const { return hyper_; }
  std::size_t input_dim() const { return hyper_.input_dim; }
  std::size_t hidden() const { return hyper_.hidden; }
  std::size_t parameter_count() const { return params_.size(); }

  std::span<double> parameters() { return params_; }
  std::span<const double> parameters() const { return params_; }
  std::span<const double> accumulators() const { return accum_; }

  std::span<double> hidden_weights() { return block(0, hidden() * input_dim()); }
  std::span<double> hidden_bias() { return block(hidden() * input_dim(), hidden()); }
  std::span<double> output_weights() { return block((input_dim() + 1) * hidden(), hidden()); }
  double& output_bias() { return params_.back(); }

  // Eval mode: no dropout.
  double forward(std::span<const double> x) const;
  // Train mode: inverted dropout on x drawn from rng.
  double forward(std::span<const double> x, Rng& rng) const;

  // Mean gradient of bce_loss over the batch. Dropout masks are drawn from rng
  // in example order; relu'(0) = 0.
  Gradients backward(std::span<const TrainExample> batch, Rng& rng) const;

  // Per component: G += g^2; theta -= lr * g / (sqrt(G) + eps).
  // Throws NumericError on non-finite gradients or parameters.
  void adagrad_step(const Gradients& grads);

  // 1 iff eval-mode probability >= 0.5.
  int predict(std::span<const double> x) const { return forward(x) >= 0.5 ? 1 : 0; }

  bool all_finite() const;

  friend bool operator==(const MlpClassifier&, const MlpClassifier&) = default;

 private:
  friend MlpClassifier load_model(std::string_view bytes);

  std::span<double> block(std::size_t offset, std::size_t n) {
    return std::span<double>(params_).subspan(offset, n);
  }
  void check_input(std::span<const double> x) const;
  double forward_impl(std::span<const double> x, std::span<double> hidden_out) const;

  Hyperparameters hyper_;
  std::vector<double> params_;
  std::vector<double> accum_;
};

inline constexpr std::uint16_t kModelFormatVersion = 1;

// "DRM1" | version u16 | input_dim u32 | hidden u32 | lr f64 | dropout f64 |
// eps f64 | seed u64 | parameters f64... | accumulators f64...  (little-endian)
std::string save_model(const MlpClassifier& model);
MlpClassifier load_model(std::string_view bytes);

}  // namespace drelkit
