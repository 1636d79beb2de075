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

#include "drelkit/model.hpp"

#include <algorithm>
#include <cmath>

#include "drelkit/binio.hpp"
#include "drelkit/error.hpp"

namespace drelkit {
namespace {

constexpr std::string_view kMagic = "DRM1";

double sigmoid(double s) {
  if (s >= 0) return 1.0 / (1.0 + std::exp(-s));
  const double e = std::exp(s);
  return e / (1.0 + e);
}

void validate(const Hyperparameters& h) {
  if (h.input_dim == 0) throw DataError("model input dimension must be positive");
  if (h.hidden == 0) throw DataError("model needs at least one hidden unit");
  if (!(h.dropout >= 0.0 && h.dropout < 1.0)) throw DataError("dropout must lie in [0, 1)");
  if (!(h.lr > 0.0) || !std::isfinite(h.lr)) throw DataError("learning rate must be positive");
  if (!(h.eps >= 0.0) || !std::isfinite(h.eps)) throw DataError("AdaGrad eps must be non-negative");
}

// Inverted dropout: survivors are scaled by 1/(1-p). p == 0 draws nothing.
void apply_dropout(std::span<const double> x, double p, Rng& rng, std::span<double> out) {
  if (p == 0.0) {
    std::copy(x.begin(), x.end(), out.begin());
    return;
  }
  const double keep_scale = 1.0 / (1.0 - p);
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = rng.bernoulli(p) ? 0.0 : x[i] * keep_scale;
}

}  // namespace

double bce_loss(double p, int y) {
  p = std::clamp(p, kProbabilityClamp, 1.0 - kProbabilityClamp);
  return y == 1 ? -std::log(p) : -std::log(1.0 - p);
}

MlpClassifier::MlpClassifier(const Hyperparameters& hyper, Init init) : hyper_(hyper) {
  validate(hyper_);
  const std::size_t n = hidden() * input_dim() + 2 * hidden() + 1;
  params_.assign(n, 0.0);
  accum_.assign(n, 0.0);
  if (init == Init::Zero) return;

  // Glorot uniform weights, zero biases.
  Rng rng(hyper_.seed);
  const double hidden_limit = std::sqrt(6.0 / static_cast<double>(input_dim() + hidden()));
  for (double& w : hidden_weights()) w = rng.uniform(-hidden_limit, hidden_limit);
  const double output_limit = std::sqrt(6.0 / static_cast<double>(hidden() + 1));
  for (double& w : output_weights()) w = rng.uniform(-output_limit, output_limit);
}

void MlpClassifier::check_input(std::span<const double> x) const {
  if (x.size() != input_dim()) {
    throw DataError("feature has " + std::to_string(x.size()) + " components, model expects " +
                    std::to_string(input_dim()));
  }
}

double MlpClassifier::forward_impl(std::span<const double> x, std::span<double> hidden_out) const {
  const std::size_t in = input_dim();
  const double* w = params_.data();
  const double* b = w + hidden() * in;
  const double* wo = b + hidden();
  double s = params_.back();
  for (std::size_t j = 0; j < hidden(); ++j) {
    const double* row = w + j * in;
    double z = b[j];
    for (std::size_t i = 0; i < in; ++i) z += row[i] * x[i];
    hidden_out[j] = z;
    if (z > 0.0) s += wo[j] * z;
  }
  return sigmoid(s);
}

double MlpClassifier::forward(std::span<const double> x) const {
  check_input(x);
  std::vector<double> z(hidden());
  return forward_impl(x, z);
}

double MlpClassifier::forward(std::span<const double> x, Rng& rng) const {
  check_input(x);
  std::vector<double> dropped(x.size());
  apply_dropout(x, hyper_.dropout, rng, dropped);
  std::vector<double> z(hidden());
  return forward_impl(dropped, z);
}

Gradients MlpClassifier::backward(std::span<const TrainExample> batch, Rng& rng) const {
  if (batch.empty()) throw DataError("backward on an empty batch");
  const std::size_t in = input_dim();
  const std::size_t hid = hidden();
  const double* wo = params_.data() + hid * in + hid;

  Gradients g;
  g.values.assign(params_.size(), 0.0);
  double* gw = g.values.data();
  double* gb = gw + hid * in;
  double* gwo = gb + hid;
  double& gbo = g.values.back();

  std::vector<double> x(in);
  std::vector<double> z(hid);
  for (const auto& ex : batch) {
    check_input(ex.feature.values());
    apply_dropout(ex.feature.values(), hyper_.dropout, rng, x);
    const double p = forward_impl(x, z);
    g.mean_loss += bce_loss(p, ex.label);

    // d loss / d s for sigmoid + cross-entropy.
    const double delta = p - static_cast<double>(ex.label);
    gbo += delta;
    for (std::size_t j = 0; j < hid; ++j) {
      if (z[j] <= 0.0) continue;
      gwo[j] += delta * z[j];
      const double dz = delta * wo[j];
      gb[j] += dz;
      double* row = gw + j * in;
      for (std::size_t i = 0; i < in; ++i) row[i] += dz * x[i];
    }
  }
  const double scale = 1.0 / static_cast<double>(batch.size());
  for (double& v : g.values) v *= scale;
  g.mean_loss *= scale;
  return g;
}

void MlpClassifier::adagrad_step(const Gradients& grads) {
  if (grads.values.size() != params_.size()) throw DataError("gradient shape does not match model");
  for (std::size_t k = 0; k < params_.size(); ++k) {
    if (!std::isfinite(grads.values[k])) {
      throw NumericError("non-finite gradient at parameter " + std::to_string(k));
    }
  }
  for (std::size_t k = 0; k < params_.size(); ++k) {
    const double gk = grads.values[k];
    if (gk == 0.0) continue;
    accum_[k] += gk * gk;
    params_[k] -= hyper_.lr * gk / (std::sqrt(accum_[k]) + hyper_.eps);
    if (!std::isfinite(params_[k]) || !std::isfinite(accum_[k])) {
      throw NumericError("parameter " + std::to_string(k) + " became non-finite after an AdaGrad step");
    }
  }
}

bool MlpClassifier::all_finite() const {
  auto finite = [](double v) { return std::isfinite(v); };
  return std::all_of(params_.begin(), params_.end(), finite) &&
         std::all_of(accum_.begin(), accum_.end(), finite);
}

std::string save_model(const MlpClassifier& model) {
  const auto& h = model.hyper();
  binio::Writer out;
  out.bytes(kMagic);
  out.u16(kModelFormatVersion);
  out.u32(h.input_dim);
  out.u32(h.hidden);
  out.f64(h.lr);
  out.f64(h.dropout);
  out.f64(h.eps);
  out.u64(h.seed);
  for (double v : model.parameters()) out.f64(v);
  for (double v : model.accumulators()) out.f64(v);
  return std::move(out).str();
}

MlpClassifier load_model(std::string_view bytes) {
  binio::Reader in(bytes);
  if (in.remaining() < kMagic.size() || in.bytes(kMagic.size(), "magic") != kMagic) {
    throw ParseError("not a DRM1 model file (bad magic)");
  }
  const auto version = in.u16("version");
  if (version != kModelFormatVersion) {
    throw ParseError("unsupported model format version " + std::to_string(version));
  }
  Hyperparameters h;
  h.input_dim = in.u32("input_dim");
  h.hidden = in.u32("hidden");
  h.lr = in.f64("lr");
  h.dropout = in.f64("dropout");
  h.eps = in.f64("eps");
  h.seed = in.u64("seed");

  const std::uint64_t n = static_cast<std::uint64_t>(h.hidden) * h.input_dim + 2ULL * h.hidden + 1;
  if (n > in.remaining() / 16) throw ParseError("truncated model payload");

  MlpClassifier model = [&] {
    try {
      return MlpClassifier(h, MlpClassifier::Init::Zero);
    } catch (const DataError& e) {
      throw ParseError(std::string("invalid model header: ") + e.what());
    }
  }();
  for (double& v : model.params_) v = in.f64("parameters");
  for (double& v : model.accum_) v = in.f64("accumulators");
  if (in.remaining() != 0) throw ParseError("trailing bytes after model payload");
  if (!model.all_finite()) throw ParseError("model file contains non-finite values");
  return model;
}

}  // namespace drelkit
