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

#include "drelkit/features.hpp"

#include <string>

#include "drelkit/error.hpp"

namespace drelkit {
namespace {

template <typename T>
void compose_impl(std::span<const T> a, std::span<const T> b, std::span<double> out) {
  if (a.size() != b.size()) {
    throw DataError("argument vectors differ in length: " + std::to_string(a.size()) + " vs " +
                    std::to_string(b.size()));
  }
  const std::size_t n = a.size();
  if (out.size() != RelationFeature::kBlocks * n) {
    throw DataError("relation feature buffer has the wrong length");
  }
  for (std::size_t i = 0; i < n; ++i) {
    const double x = a[i];
    const double y = b[i];
    out[i] = x;
    out[n + i] = y;
    out[2 * n + i] = 0.5 * (x + y);
    out[3 * n + i] = x - y;
    out[4 * n + i] = x * y;
  }
}

}  // namespace

RelationFeature::RelationFeature(std::vector<double> values) : values_(std::move(values)) {
  if (values_.size() % kBlocks != 0) throw DataError("relation feature length is not a multiple of 5");
}

RelationFeature compose(std::span<const double> arg1, std::span<const double> arg2) {
  std::vector<double> out(RelationFeature::kBlocks * arg1.size());
  compose_impl(arg1, arg2, std::span<double>(out));
  return RelationFeature(std::move(out));
}

RelationFeature compose(std::span<const float> arg1, std::span<const float> arg2) {
  std::vector<double> out(RelationFeature::kBlocks * arg1.size());
  compose_impl(arg1, arg2, std::span<double>(out));
  return RelationFeature(std::move(out));
}

void compose_into(std::span<const float> arg1, std::span<const float> arg2, std::span<double> out) {
  compose_impl(arg1, arg2, out);
}

}  // namespace drelkit
