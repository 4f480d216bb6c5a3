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

#include "hamprobe/walsh.hpp"

#include <bit>

#include "hamprobe/error.hpp"

namespace hamprobe {

namespace {

template <typename T>
void wht(std::span<T> v) {
  size_t n = v.size();
  if (!std::has_single_bit(n)) throw DimensionError("walsh_hadamard: length must be a power of two");
  for (size_t h = 1; h < n; h <<= 1) {
    for (size_t i = 0; i < n; i += 2 * h) {
      for (size_t j = i; j < i + h; ++j) {
        T a = v[j], b = v[j + h];
        v[j] = a + b;
        v[j + h] = a - b;
      }
    }
  }
}

// [alpha, x] = swap(alpha) . x where swap exchanges the X and Z halves of index().
std::vector<double> swapped_transform(std::span<const double> f, int n) {
  size_t size = size_t{1} << (2 * n);
  if (f.size() != size) throw DimensionError("symplectic transform: length must be 4^n");
  std::vector<double> w(f.begin(), f.end());
  wht(std::span<double>(w));
  std::vector<double> out(size);
  const size_t mask = (size_t{1} << n) - 1;
  for (size_t a = 0; a < size; ++a) {
    size_t swapped = ((a & mask) << n) | (a >> n);
    out[a] = w[swapped];
  }
  return out;
}

}  // namespace

void walsh_hadamard(std::span<double> v) { wht(v); }
void walsh_hadamard(std::span<std::complex<double>> v) { wht(v); }

std::vector<double> symplectic_fourier(std::span<const double> f, int n) {
  auto out = swapped_transform(f, n);
  double scale = 1.0 / static_cast<double>(size_t{1} << (2 * n));
  for (double& v : out) v *= scale;
  return out;
}

std::vector<double> symplectic_character_sum(std::span<const double> p, int n) {
  return swapped_transform(p, n);
}

}  // namespace hamprobe
