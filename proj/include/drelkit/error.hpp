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
#include <stdexcept>
#include <string>
#include <vector>

namespace drelkit {

// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input data. `line` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        detail_(what),
        line_(line) {}

  std::size_t line() const { return line_; }
  // Message without the line prefix.
  const std::string& detail() const { return detail_; }

 private:
  std::string detail_;
  std::size_t line_;
};

// Data that parses but violates a domain rule (unknown sense, empty task...).
class DataError : public Error {
 public:
  using Error::Error;
};

// One or more embedding keys required by a corpus are absent from the store.
class CoverageError : public Error {
 public:
  explicit CoverageError(std::vector<std::string> missing)
      : Error(describe(missing)), missing_(std::move(missing)) {}

  const std::vector<std::string>& missing() const { return missing_; }

 private:
  static std::string describe(const std::vector<std::string>& missing) {
    std::string msg = "missing embedding key";
    msg += missing.size() == 1 ? ": " : "s (" + std::to_string(missing.size()) + "): ";
    for (std::size_t i = 0; i < missing.size() && i < 5; ++i) {
      if (i) msg += ", ";
      msg += missing[i];
    }
    if (missing.size() > 5) msg += ", ...";
    return msg;
  }

  std::vector<std::string> missing_;
};

// A parameter or gradient became NaN or infinite.
class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace drelkit
