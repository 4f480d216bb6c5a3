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
#include <iosfwd>
#include <string>
#include <vector>

#include "hamprobe/hamiltonian.hpp"
#include "hamprobe/rng.hpp"

namespace hamprobe {

/// Everything that determines an experiment. Serialized as flat "key = value" text.
struct ExperimentConfig {
  std::string protocol = "test-locality";
  int n = 4;
  int k = 1;
  int64_t s = 1;
  double eps1 = 0.05;
  double eps2 = 0.5;
  /// Target error of the learners.
  double eps = 0.15;
  double delta = 0.1;
  std::string mode = "shots";  // exact | shots
  uint64_t seed_start = 1;
  uint64_t seed_count = 10;
  std::string instance = "alternate";  // close | far | alternate (even seeds close)
  bool memory = true;
  double c_T = 1.0;
  /// Evolution-time constant; a negative value selects the protocol default.
  double c_t = -1.0;
  double C_BH = 2.0;
  double taylor_c = 1.0;
  /// Hashing-budget constant.
  double c = 1.0;
  double max_shots = 1e10;
  int workers = 1;
  std::string csv_path;
  std::string json_path;
};

const std::vector<std::string>& experiment_protocols();

/// Reads "key = value" lines; '#' starts a comment; unknown keys are errors.
ExperimentConfig parse_config(std::istream& in);
ExperimentConfig load_config(const std::string& path);
std::string format_config(const ExperimentConfig& cfg);

struct ExperimentRow {
  uint64_t seed = 0;
  /// "close" or "far" for testers (joined with '|' for several supports),
  /// empty for learners.
  std::string verdict;
  /// ||H - H'||_2 for learners.
  double err = 0.0;
  double gamma = 0.0;
  /// Exact distance of the instance to the tested class.
  double exact_distance = 0.0;
  uint64_t queries = 0;
  double evolution_time = 0.0;
  bool clamped = false;
  /// "close" or "far": the ground truth for testers.
  std::string expected;
  bool success = false;
  /// Set when the seed could not be run (e.g. infeasible instance).
  std::string error;
};

struct ExperimentReport {
  ExperimentConfig config;
  std::vector<ExperimentRow> rows;  // sorted by seed
  uint64_t successes = 0;
  uint64_t failures = 0;
  uint64_t errors = 0;
  /// successes / (successes + failures); 1 for an empty run.
  double success_rate = 1.0;
};

/// Runs every seed of the grid on a worker pool and writes the CSV and JSON
/// outputs named in the config. Deterministic given the config.
ExperimentReport run_experiment(const ExperimentConfig& cfg);

/// CSV columns: seed, verdict (testers) or err (learners), gamma,
/// exact_distance, queries, evolution_time, clamped.
void write_experiment_csv(std::ostream& out, const ExperimentReport& report);

/// Instances for the junta tester, certified by exact Pauli weights of
/// U = exp(-iHt): close ones have a k-set carrying weight >= 1 - eps^2,
/// far ones have every k-set at most 1 - eps^2/4.
Hamiltonian generate_junta_instance(bool close, int n, int k, double eps, double t, Rng& rng);

}  // namespace hamprobe
