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
#include <random>
#include <span>
#include <vector>

namespace hamprobe {

/// All randomness in the library flows through explicitly seeded engines.
using Rng = std::mt19937_64;

/// Uniform double in [0, 1) built from the top 53 bits of one draw.
double uniform01(Rng& rng);

/// Uniform integer in [0, n).
uint64_t uniform_below(Rng& rng, uint64_t n);

/// Uniform word with the low `bits` bits random and the rest zero.
uint64_t uniform_bits(Rng& rng, int bits);

/// Number of successes in `trials` Bernoulli(p) draws.
uint64_t binomial(Rng& rng, uint64_t trials, double p);

/// Multinomial counts via sequential conditional binomials.
/// Cost is linear in the number of outcomes and independent of `trials`.
std::vector<uint64_t> multinomial(Rng& rng, uint64_t trials, std::span<const double> probs);

/// Derives an independent stream seed from a base seed and a salt.
uint64_t derive_seed(uint64_t base, uint64_t salt);

}  // namespace hamprobe
