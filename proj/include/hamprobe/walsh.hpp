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

#include <complex>
#include <span>
#include <vector>

namespace hamprobe {

/// In-place Walsh-Hadamard transform: v[u] <- sum_w (-1)^{u.w} v[w]. Unnormalised.
void walsh_hadamard(std::span<double> v);
void walsh_hadamard(std::span<std::complex<double>> v);

/// Symplectic Fourier transform on F_2^{2n} in index() layout:
///   out[alpha] = 4^{-n} sum_x (-1)^{[alpha, x]} f[x].
/// Applying it twice and multiplying by 4^n returns the input.
std::vector<double> symplectic_fourier(std::span<const double> f, int n);

/// Characteristic sum: out[y] = sum_x (-1)^{[x, y]} p[x]. This is the map from
/// Pauli error rates to Pauli fidelities.
std::vector<double> symplectic_character_sum(std::span<const double> p, int n);

}  // namespace hamprobe
