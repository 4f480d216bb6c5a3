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

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace hamprobe {

/// A Pauli string on n qubits, stored as the point (a, b) of F_2^{2n}.
///
/// The operator is sigma_(a,b) = i^{a.b} X^{a_1}Z^{b_1} (x) ... (x) X^{a_n}Z^{b_n},
/// so (1,1) on a qubit is Y and every string is Hermitian. Qubit q lives in bit q
/// of both words. Up to 32 qubits are supported.
///
/// Two integer encodings are exposed:
///  - index() = a | (b << n), used to address dense arrays of length 4^n;
///  - key(), a per-qubit interleaving with qubit 0 most significant and the
///    per-qubit code I=0, X=1, Z=2, Y=3. key() is F_2-linear and defines the
///    canonical total order (ties in rankings, coset representatives).
class PauliString {
 public:
  static constexpr int kMaxQubits = 32;

  PauliString() = default;
  explicit PauliString(int n);
  PauliString(int n, uint64_t x_bits, uint64_t z_bits);

  static PauliString from_label(std::string_view label);
  static PauliString from_index(int n, uint64_t index);
  static PauliString from_key(int n, uint64_t key);
  /// Parses the "X:Z" hex form produced by hex().
  static PauliString from_hex(int n, std::string_view text);
  /// Single-qubit Pauli `p` in {'I','X','Y','Z'} on qubit q.
  static PauliString single(int n, int q, char p);

  int num_qubits() const { return n_; }
  uint64_t x_bits() const { return x_; }
  uint64_t z_bits() const { return z_; }
  uint64_t support_mask() const { return x_ | z_; }
  uint64_t index() const;
  uint64_t key() const;

  int weight() const;
  bool is_identity() const { return (x_ | z_) == 0; }
  /// 'I', 'X', 'Y' or 'Z' on qubit q.
  char at(int q) const;
  std::string label() const;
  std::string hex() const;

  /// Group addition in F_2^{2n}, i.e. the product up to phase.
  PauliString operator^(const PauliString& other) const;
  PauliString& operator^=(const PauliString& other);

  friend bool operator==(const PauliString& a, const PauliString& b) {
    return a.n_ == b.n_ && a.x_ == b.x_ && a.z_ == b.z_;
  }
  friend std::strong_ordering operator<=>(const PauliString& a, const PauliString& b) {
    if (a.n_ != b.n_) return a.n_ <=> b.n_;
    return a.key() <=> b.key();
  }

 private:
  int n_ = 0;
  uint64_t x_ = 0;
  uint64_t z_ = 0;
};

/// i^{phase_exp} times a Pauli string.
struct PhasedPauli {
  int phase_exp = 0;  // in {0,1,2,3}
  PauliString pauli;
};

/// [x, y] = a_x.b_y + b_x.a_y mod 2; zero iff the operators commute.
int symplectic_inner(const PauliString& x, const PauliString& y);

inline bool commutes(const PauliString& x, const PauliString& y) {
  return symplectic_inner(x, y) == 0;
}

/// sigma_x sigma_y = i^{phase_exp} sigma_{x+y}.
PhasedPauli pauli_product(const PauliString& x, const PauliString& y);

/// Number of strings of weight at most k on n qubits.
uint64_t count_weight_at_most(int n, int k);

/// Calls f on every string of weight at most k, in index order.
void for_each_weight_at_most(int n, int k, const std::function<void(const PauliString&)>& f);

/// Validates that two operands share a qubit count.
void require_same_n(const PauliString& a, const PauliString& b, const char* what);

}  // namespace hamprobe

template <>
struct std::hash<hamprobe::PauliString> {
  size_t operator()(const hamprobe::PauliString& p) const noexcept {
    return std::hash<uint64_t>()(p.x_bits() * 0x9E3779B97F4A7C15ull ^ p.z_bits() ^
                                 (static_cast<uint64_t>(p.num_qubits()) << 58));
  }
};
