// Copyright 2026 The hamprobe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hamprobe {

/// Outcome of one named verification suite.
struct SuiteReport {
  std::string name;
  bool passed = true;
  uint64_t checks = 0;
  /// Empty when passed; otherwise the first failed inequality.
  std::string first_violation;
  /// Measured quantities worth reporting (slopes, worst margins, rates).
  std::map<std::string, double> metrics;
};

/// taylor, locality_dichotomy, sparsity_dichotomy, mub_design, hashing_props,
/// bucket_energy, twirl_identity, channel_dichotomy.
const std::vector<std::string>& lemma_suites();

/// Runs one suite at fixed small n. Throws ParameterError for unknown names.
SuiteReport verify_lemmas(const std::string& suite, uint64_t seed = 1);

/// Every t-dimensional subspace of F_2^m, as row-reduced bases (bit masks).
std::vector<std::vector<uint64_t>> enumerate_subspaces(int m, int t);

}  // namespace hamprobe
