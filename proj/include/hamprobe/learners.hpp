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

#include <optional>
#include <string>
#include <vector>

#include "hamprobe/evolution.hpp"
#include "hamprobe/hamiltonian.hpp"

namespace hamprobe {

struct LearnerConstants {
  /// Leading constant on stage-1 sample counts.
  double c_T = 1.0;
  /// Bohnenblust-Hille constant in t = eps^{k+1} C_BH^{-k(k+1)/2}.
  double C_BH = 2.0;
  /// Evolution-time constant of the sparse learner, t = c_t eps / sqrt(s).
  double c_t = 0.5;
  /// Hoeffding constant used by the coefficient estimators.
  double c_coef = 2.0;
};

struct LearnReport {
  std::string protocol;
  Hamiltonian learned;
  double target_eps = 0.0;
  /// ||H - H'||_2, filled in by a verifier that knows H.
  std::optional<double> achieved_error;
  std::vector<PauliString> detected;
  QueryLedger ledger;
  std::string branch;
  bool budget_clamped = false;
  double evolution_time = 0.0;
  uint64_t stage1_samples = 0;
  uint64_t stage2_shots = 0;
};

/// Local learner. With t = eps^{k+1} C_BH^{-k(k+1)/2}, gamma = t^2 and beta = t^3 eps:
///  stage 1 keeps non-identity strings of weight <= k with |alpha_x|^2 > gamma^2;
///  stage 2 estimates each U_x to beta and outputs Re(i alpha'_x / t).
/// Without memory, stage 1 uses MUB sampling over the weight <= k strings and
/// stage 2 the ancilla-free coefficient estimator.
LearnReport learn_local(EvolutionOracle& oracle, int k, double eps, double delta, bool memory,
                        const LearnerConstants& c = {});

/// Sparse learner. t = c_t eps / sqrt(s); stage 1 keeps x != 0 with
/// |alpha_x|^2 > 2 eps^4 / s^2 from ceil(c_T s^4 / eps^8 ln(1/delta)) samples;
/// stage 2 estimates U_x to t eps / sqrt(s).
LearnReport learn_sparse(EvolutionOracle& oracle, int64_t s, double eps, double delta, bool memory,
                         const LearnerConstants& c = {});

struct BranchCosts {
  double local = 0.0;   // exp(k^2 + k ln(1/eps)) ln(1/delta)
  double sparse = 0.0;  // s^4 / eps^8 ln(1/delta)
};
BranchCosts branch_costs(int k, int64_t s, double eps, double delta);

/// Runs whichever of the two learners has the smaller cost.
LearnReport learn_local_sparse(EvolutionOracle& oracle, int k, int64_t s, double eps, double delta, bool memory,
                               const LearnerConstants& c = {});

}  // namespace hamprobe
