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

#include <iosfwd>
#include <string>
#include <vector>

namespace drelkit::cli {

// Process exit codes; a stable contract for scripts.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDataError = 2;
inline constexpr int kExitCoverageError = 3;
inline constexpr int kExitUsage = 64;

// Runs the drelkit command line. `args` excludes the program name.
// Subcommands: ingest, emb {import, inspect, coverage}, train, eval, compare, report.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace drelkit::cli
