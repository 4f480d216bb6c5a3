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

#include "hamprobe/subgroup.hpp"

#include <bit>
#include <utility>

#include "hamprobe/error.hpp"

namespace hamprobe {

bool F2Basis::insert(uint64_t v) {
  v = reduce(v);
  if (v == 0) return false;
  int p = std::bit_width(v) - 1;
  // keep rows fully reduced so reduce() yields the minimum
  for (uint64_t& r : rows_) {
    if ((r >> p) & 1) r ^= v;
  }
  auto it = rows_.begin();
  while (it != rows_.end() && std::bit_width(*it) > std::bit_width(v)) ++it;
  rows_.insert(it, v);
  return true;
}

uint64_t F2Basis::reduce(uint64_t v) const {
  for (uint64_t r : rows_) {
    int p = std::bit_width(r) - 1;
    if ((v >> p) & 1) v ^= r;
  }
  return v;
}

SymplecticSubgroup::SymplecticSubgroup(int n, std::vector<PauliString> generators)
    : n_(n), gens_(std::move(generators)) {
  if (static_cast<int>(gens_.size()) > 2 * n) throw ParameterError("more generators than 2n");
  for (const auto& g : gens_) {
    if (g.num_qubits() != n) throw DimensionError("generator on wrong qubit count");
    if (!span_keys_.insert(g.key())) throw ParameterError("subgroup generators are linearly dependent");
  }
  const int t = dim();
  // Gaussian elimination of the images of the 2n unit vectors under x -> bucket_index(x),
  // tracking preimages; leftover rows with zero image span the complement.
  struct Row {
    uint64_t image;
    uint64_t pre;  // key
  };
  std::vector<Row> rows;
  for (int bit = 0; bit < 2 * n; ++bit) {
    PauliString e = PauliString::from_key(n, uint64_t{1} << bit);
    rows.push_back({bucket_index(e), e.key()});
  }
  std::vector<Row> pivots(static_cast<size_t>(t), Row{0, 0});
  std::vector<bool> have(static_cast<size_t>(t), false);
  for (Row r : rows) {
    for (int j = 0; j < t; ++j) {
      if (!((r.image >> j) & 1)) continue;
      if (have[j]) {
        r.image ^= pivots[j].image;
        r.pre ^= pivots[j].pre;
      } else {
        pivots[j] = r;
        have[j] = true;
        r.image = 0;
        r.pre = 0;
        break;
      }
    }
    if (r.pre != 0 && r.image == 0) complement_keys_.insert(r.pre);
  }
  for (int j = 0; j < t; ++j) {
    if (!have[j]) throw ParameterError("bucket map is not surjective");
  }
  // back-substitute so that pivot j has image exactly e_j
  for (int j = t - 1; j >= 0; --j) {
    for (int i = 0; i < j; ++i) {
      if ((pivots[i].image >> j) & 1) {
        pivots[i].image ^= pivots[j].image;
        pivots[i].pre ^= pivots[j].pre;
      }
    }
  }
  unit_preimage_keys_.resize(static_cast<size_t>(t));
  for (int j = 0; j < t; ++j) unit_preimage_keys_[j] = pivots[j].pre;
  if (complement_keys_.rank() != 2 * n - t) throw ParameterError("complement has wrong dimension");
}

uint64_t SymplecticSubgroup::bucket_index(const PauliString& x) const {
  uint64_t b = 0;
  for (size_t j = 0; j < gens_.size(); ++j) {
    b |= static_cast<uint64_t>(symplectic_inner(x, gens_[j])) << j;
  }
  return b;
}

PauliString SymplecticSubgroup::element(uint64_t c) const {
  PauliString r(n_);
  for (size_t j = 0; j < gens_.size(); ++j) {
    if ((c >> j) & 1) r ^= gens_[j];
  }
  return r;
}

std::vector<PauliString> SymplecticSubgroup::elements() const {
  std::vector<PauliString> out;
  uint64_t size = uint64_t{1} << dim();
  out.reserve(size);
  for (uint64_t c = 0; c < size; ++c) out.push_back(element(c));
  return out;
}

bool SymplecticSubgroup::contains(const PauliString& x) const {
  if (x.num_qubits() != n_) throw DimensionError("contains: wrong qubit count");
  return span_keys_.contains(x.key());
}

PauliString SymplecticSubgroup::coset_representative(uint64_t b) const {
  uint64_t key = 0;
  for (int j = 0; j < dim(); ++j) {
    if ((b >> j) & 1) key ^= unit_preimage_keys_[j];
  }
  return PauliString::from_key(n_, complement_keys_.reduce(key));
}

SymplecticSubgroup random_subgroup(int n, int t, Rng& rng) {
  if (t < 0 || t > 2 * n) throw ParameterError("subgroup dimension must lie in [0, 2n]");
  for (;;) {
    std::vector<PauliString> gens;
    F2Basis basis;
    bool independent = true;
    for (int j = 0; j < t; ++j) {
      PauliString g = PauliString::from_index(n, uniform_bits(rng, 2 * n));
      if (!basis.insert(g.key())) {
        independent = false;
        break;
      }
      gens.push_back(g);
    }
    if (independent) return SymplecticSubgroup(n, std::move(gens));
  }
}

}  // namespace hamprobe
