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
#include <span>
#include <vector>

#include "hamprobe/pauli.hpp"

namespace hamprobe {

/// ceil(c * ln(2/delta) / eps^2). With c = 2 this is the Hoeffding count for
/// the mean of [-1, 1]-valued samples to additive error eps.
uint64_t hoeffding_count(double eps, double delta, double c = 2.0);

/// ceil(c * 2 (variance + eps/3) ln(2/delta) / eps^2), Bernstein for samples in [0, 1].
uint64_t bernstein_count(double eps, double delta, double variance, double c = 1.0);

/// Sample count rounded up from a real request, saturating at UINT64_MAX.
uint64_t ceil_count(double requested);

/// Relative frequencies of each string, keyed in canonical order.
std::map<PauliString, double> empirical_distribution(std::span<const PauliString> samples);

/// Same, as a dense vector of length 4^n in index() layout.
std::vector<double> empirical_dense(std::span<const PauliString> samples, int n);

}  // namespace hamprobe
