// Copyright 2026 The assocform Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Randomized property suites behind `assocform verify`. Each trial draws
// fresh samples from a Sampler seeded by (seed, suite, d) and checks one
// family of identities exactly.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace assocform {

struct SuiteReport {
  std::string suite;
  int d = 0;
  int n = 2;
  int trials = 0;
  int passed = 0;
  int failed = 0;
  std::size_t rejections = 0;
  std::optional<std::string> first_counterexample;

  bool ok() const { return failed == 0; }
};

const std::vector<std::string>& suite_names();

/// Runs `trials` trials of a suite at degree d. Throws std::invalid_argument
/// for unknown suites or unsupported (n, d).
SuiteReport run_suite(const std::string& suite, int d, int trials, std::uint64_t seed, int n = 2);

}  // namespace assocform
