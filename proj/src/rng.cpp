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

#include "hamprobe/rng.hpp"

#include <algorithm>

namespace hamprobe {

double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

uint64_t uniform_below(Rng& rng, uint64_t n) {
  std::uniform_int_distribution<uint64_t> dist(0, n - 1);
  return dist(rng);
}

uint64_t uniform_bits(Rng& rng, int bits) {
  if (bits <= 0) return 0;
  uint64_t v = rng();
  return bits >= 64 ? v : (v & ((uint64_t{1} << bits) - 1));
}

uint64_t binomial(Rng& rng, uint64_t trials, double p) {
  if (trials == 0 || p <= 0.0) return 0;
  if (p >= 1.0) return trials;
  std::binomial_distribution<uint64_t> dist(trials, p);
  return dist(rng);
}

std::vector<uint64_t> multinomial(Rng& rng, uint64_t trials, std::span<const double> probs) {
  std::vector<uint64_t> counts(probs.size(), 0);
  double mass = 0.0;
  for (double p : probs) mass += std::max(p, 0.0);
  uint64_t left = trials;
  for (size_t i = 0; i < probs.size() && left > 0; ++i) {
    double p = std::max(probs[i], 0.0);
    if (i + 1 == probs.size() || mass <= 0.0) {
      counts[i] = left;
      break;
    }
    double q = std::min(1.0, p / mass);
    uint64_t c = binomial(rng, left, q);
    counts[i] = c;
    left -= c;
    mass -= p;
  }
  return counts;
}

uint64_t derive_seed(uint64_t base, uint64_t salt) {
  // splitmix64 finaliser
  uint64_t z = base + 0x9E3779B97F4A7C15ull * (salt + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace hamprobe
