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
#include <functional>
#include <string>
#include <vector>

#include "hamprobe/hamiltonian.hpp"
#include "hamprobe/rng.hpp"

namespace hamprobe {

enum class InstanceKind {
  k_local,
  s_sparse,
  k_local_s_sparse,
  close_to_k_local,
  far_from_k_local,
  close_to_s_sparse,
  far_from_s_sparse,
};

std::string to_string(InstanceKind kind);
InstanceKind parse_instance_kind(const std::string& name);

struct InstanceParams {
  int k = 1;
  int64_t s = 1;
  /// epsilon_1 for close kinds, epsilon_2 for far kinds.
  double eps = 0.0;
  /// Number of structured terms; 0 picks a default (s, or 2n for local kinds).
  int terms = 0;
  /// Number of residual terms in close kinds; 0 picks 2n.
  int residual_terms = 0;
  double coef_lo = 0.2;
  double coef_hi = 1.0;
  /// Relative weight of the structured part in close/far kinds.
  double structured_weight = 0.7;
  /// Far kinds aim for eps + far_margin * (1 - eps).
  double far_margin = 0.05;
};

/// Draws a traceless instance with ||H||_inf <= 1 (rescaled by the operator
/// norm when needed). Close kinds are within eps of the structure class, far
/// kinds at least eps away; both are verified exactly before returning.
/// Throws GenerationError when the requested distance is not reachable.
Hamiltonian generate_instance(InstanceKind kind, int n, const InstanceParams& params, Rng& rng);

/// Traceless H with Gaussian coefficients on `terms` random strings (all
/// non-identity strings when terms <= 0), scaled to ||H||_inf = 1.
Hamiltonian random_normalized_hamiltonian(int n, int terms, Rng& rng);

/// Up to 2n+1 mutually anticommuting strings (a randomly relabelled Majorana
/// family). Any real combination has operator norm equal to its 2-norm.
std::vector<PauliString> anticommuting_family(int n, Rng& rng);

/// `count` distinct non-identity strings drawn uniformly from those satisfying pred.
std::vector<PauliString> random_distinct_strings(int n, int count,
                                                 const std::function<bool(const PauliString&)>& pred,
                                                 Rng& rng);

}  // namespace hamprobe
