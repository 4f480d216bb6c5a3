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

#include "hamprobe/evolution.hpp"
#include "hamprobe/pauli.hpp"

namespace hamprobe {

enum class Verdict { close, far, undecided };

std::string to_string(Verdict v);

/// Outcome of a property tester.
struct Decision {
  std::string protocol;
  Verdict verdict = Verdict::undecided;
  /// The test statistic (a weight, a top energy or a bucket-energy sum).
  double gamma = 0.0;
  std::map<std::string, double> thresholds;
  /// Subgroup generators for hashing-based testers; empty otherwise.
  std::vector<PauliString> generators;
  QueryLedger ledger;
  uint64_t seed = 0;
  bool budget_clamped = false;
  /// Samples, rounds or shots per estimate, after clamping.
  uint64_t samples = 0;
  /// Evolution time used per query (0 for channels).
  double evolution_time = 0.0;
};

}  // namespace hamprobe
