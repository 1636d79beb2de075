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
#include <vector>

namespace drelkit {

// Relation vector of 5*dim components laid out as
// [arg1 | arg2 | (arg1+arg2)/2 | arg1-arg2 | arg1*arg2].
class RelationFeature {
 public:
  static constexpr std::size_t kBlocks = 5;

  RelationFeature() = default;
  explicit RelationFeature(std::vector<double> values);

  std::size_t arg_dim() const { return values_.size() / kBlocks; }
  std::size_t size() const { return values_.size(); }
  std::span<const double> values() const { return values_; }
  operator std::span<const double>() const { return values_; }

  std::span<const double> arg1() const { return block(0); }
  std::span<const double> arg2() const { return block(1); }
  std::span<const double> avg() const { return block(2); }
  std::span<const double> sub() const { return block(3); }
  std::span<const double> mul() const { return block(4); }

 private:
  std::span<const double> block(std::size_t b) const {
    return std::span<const double>(values_).subspan(b * arg_dim(), arg_dim());
  }

  std::vector<double> values_;
};

// Throws DataError on length mismatch.
RelationFeature compose(std::span<const double> arg1, std::span<const double> arg2);
RelationFeature compose(std::span<const float> arg1, std::span<const float> arg2);

// Writes the composed vector into `out` (length 5*dim) without allocating.
void compose_into(std::span<const float> arg1, std::span<const float> arg2, std::span<double> out);

}  // namespace drelkit
