// Copyright 2026 The Credible Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CREDIBLE_SELFTEST_H_
#define CREDIBLE_SELFTEST_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace credible {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double seconds = 0;
  double limit_seconds = 0;  // 0 when untimed
  std::string detail;
};

struct SelftestOptions {
  std::uint64_t seed = 20261016;
  std::filesystem::path fixtures = CREDIBLE_FIXTURE_DIR;
  // Where generated game files are written; a fresh temporary directory
  // when empty.
  std::filesystem::path scratch;
};

// Runs every acceptance criterion through the command-line entry point and
// returns one result per criterion, in order. A criterion with a time limit
// fails when it runs over.
std::vector<CriterionResult> RunAcceptance(const SelftestOptions& options);

// "PASS  1  name  (0.012 s, limit 1 s)" style line.
std::string FormatResult(const CriterionResult& r);

}  // namespace credible

#endif  // CREDIBLE_SELFTEST_H_
