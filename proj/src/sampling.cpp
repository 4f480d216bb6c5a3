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

#include "hamprobe/sampling.hpp"

#include <cmath>
#include <limits>

#include "hamprobe/error.hpp"

namespace hamprobe {

namespace {
void check(double eps, double delta) {
  if (!(eps > 0) || !(delta > 0) || !(delta < 1)) throw ParameterError("need eps > 0 and 0 < delta < 1");
}
}  // namespace

uint64_t ceil_count(double requested) {
  if (!(requested > 0)) return 0;
  if (requested >= 1.8e19) return std::numeric_limits<uint64_t>::max();
  return static_cast<uint64_t>(std::ceil(requested));
}

uint64_t hoeffding_count(double eps, double delta, double c) {
  check(eps, delta);
  return ceil_count(c * std::log(2.0 / delta) / (eps * eps));
}

uint64_t bernstein_count(double eps, double delta, double variance, double c) {
  check(eps, delta);
  return ceil_count(c * 2.0 * (variance + eps / 3.0) * std::log(2.0 / delta) / (eps * eps));
}

std::map<PauliString, double> empirical_distribution(std::span<const PauliString> samples) {
  if (samples.empty()) throw ParameterError("empirical_distribution: no samples");
  std::map<PauliString, double> out;
  for (const auto& s : samples) out[s] += 1.0;
  for (auto& [x, v] : out) v /= static_cast<double>(samples.size());
  return out;
}

std::vector<double> empirical_dense(std::span<const PauliString> samples, int n) {
  if (samples.empty()) throw ParameterError("empirical_dense: no samples");
  std::vector<double> out(size_t{1} << (2 * n), 0.0);
  for (const auto& s : samples) {
    if (s.num_qubits() != n) throw DimensionError("empirical_dense: sample on wrong qubit count");
    out[s.index()] += 1.0;
  }
  for (double& v : out) v /= static_cast<double>(samples.size());
  return out;
}

}  // namespace hamprobe
