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
#include <vector>

#include "hamprobe/pauli.hpp"
#include "hamprobe/rng.hpp"

namespace hamprobe {

/// Row-reduced basis of a subspace of F_2^64 with pivots at the highest set bit.
/// reduce() returns the smallest element (as an integer) of the coset v + span.
class F2Basis {
 public:
  /// Returns false when v is already in the span.
  bool insert(uint64_t v);
  uint64_t reduce(uint64_t v) const;
  bool contains(uint64_t v) const { return reduce(v) == 0; }
  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<uint64_t>& rows() const { return rows_; }

 private:
  std::vector<uint64_t> rows_;  // sorted by pivot, descending
};

/// The span V of t independent generators g_1..g_t in F_2^{2n}.
///
/// Bucket labels are b in F_2^t with b_j = [x, g_j]; the bucket with label b is
/// the coset C(b) = a + C(V) of the symplectic complement C(V), |C(b)| = 2^{2n-t}.
class SymplecticSubgroup {
 public:
  SymplecticSubgroup(int n, std::vector<PauliString> generators);

  int num_qubits() const { return n_; }
  int dim() const { return static_cast<int>(gens_.size()); }
  const std::vector<PauliString>& generators() const { return gens_; }

  /// Bit j of the result is [x, g_j].
  uint64_t bucket_index(const PauliString& x) const;

  /// sum_j c_j g_j for c in [0, 2^t).
  PauliString element(uint64_t c) const;
  std::vector<PauliString> elements() const;
  bool contains(const PauliString& x) const;
  bool in_complement(const PauliString& x) const { return bucket_index(x) == 0; }

  /// Smallest member, in key order, of the bucket with label b.
  PauliString coset_representative(uint64_t b) const;

 private:
  int n_;
  std::vector<PauliString> gens_;
  F2Basis span_keys_;
  F2Basis complement_keys_;
  std::vector<uint64_t> unit_preimage_keys_;  // bucket_index(pre_j) = e_j
};

/// t uniform generators, redrawn as a set until linearly independent.
SymplecticSubgroup random_subgroup(int n, int t, Rng& rng);

}  // namespace hamprobe
