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

#include "hamprobe/pauli.hpp"

#include <bit>
#include <cctype>
#include <cstdio>

#include "hamprobe/error.hpp"

namespace hamprobe {

namespace {

uint64_t low_mask(int n) { return n >= 64 ? ~uint64_t{0} : ((uint64_t{1} << n) - 1); }

void check_n(int n) {
  if (n < 0 || n > PauliString::kMaxQubits) {
    throw ParameterError("qubit count " + std::to_string(n) + " outside [0, 32]");
  }
}

uint64_t parse_hex_word(std::string_view s) {
  if (s.starts_with("0x") || s.starts_with("0X")) s.remove_prefix(2);
  if (s.empty() || s.size() > 16) throw ValidationError("bad hex word");
  uint64_t v = 0;
  for (char c : s) {
    int d;
    if (c >= '0' && c <= '9') d = c - '0';
    else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
    else throw ValidationError(std::string("bad hex digit '") + c + "'");
    v = (v << 4) | static_cast<uint64_t>(d);
  }
  return v;
}

}  // namespace

PauliString::PauliString(int n) : n_(n) { check_n(n); }

PauliString::PauliString(int n, uint64_t x_bits, uint64_t z_bits) : n_(n), x_(x_bits), z_(z_bits) {
  check_n(n);
  if ((x_bits | z_bits) & ~low_mask(n)) throw DimensionError("Pauli bits exceed qubit count");
}

PauliString PauliString::from_label(std::string_view label) {
  int n = static_cast<int>(label.size());
  check_n(n);
  uint64_t x = 0, z = 0;
  for (int q = 0; q < n; ++q) {
    switch (std::toupper(static_cast<unsigned char>(label[q]))) {
      case 'I': break;
      case 'X': x |= uint64_t{1} << q; break;
      case 'Z': z |= uint64_t{1} << q; break;
      case 'Y':
        x |= uint64_t{1} << q;
        z |= uint64_t{1} << q;
        break;
      default:
        throw ValidationError("invalid Pauli character '" + std::string(1, label[q]) + "' in '" +
                              std::string(label) + "'");
    }
  }
  return PauliString(n, x, z);
}

PauliString PauliString::from_index(int n, uint64_t index) {
  check_n(n);
  uint64_t m = low_mask(n);
  if (n < 32 && (index >> (2 * n)) != 0) throw DimensionError("index out of range");
  return PauliString(n, index & m, (index >> n) & m);
}

PauliString PauliString::from_key(int n, uint64_t key) {
  check_n(n);
  uint64_t x = 0, z = 0;
  for (int q = 0; q < n; ++q) {
    uint64_t code = (key >> (2 * (n - 1 - q))) & 3;
    x |= (code & 1) << q;
    z |= ((code >> 1) & 1) << q;
  }
  return PauliString(n, x, z);
}

PauliString PauliString::from_hex(int n, std::string_view text) {
  size_t colon = text.find(':');
  if (colon == std::string_view::npos) throw ValidationError("hex Pauli must look like X:Z");
  return PauliString(n, parse_hex_word(text.substr(0, colon)), parse_hex_word(text.substr(colon + 1)));
}

PauliString PauliString::single(int n, int q, char p) {
  if (q < 0 || q >= n) throw DimensionError("qubit index out of range");
  std::string label(static_cast<size_t>(n), 'I');
  label[static_cast<size_t>(q)] = p;
  return from_label(label);
}

uint64_t PauliString::index() const { return x_ | (z_ << n_); }

uint64_t PauliString::key() const {
  uint64_t key = 0;
  for (int q = 0; q < n_; ++q) {
    uint64_t code = ((x_ >> q) & 1) | (((z_ >> q) & 1) << 1);
    key |= code << (2 * (n_ - 1 - q));
  }
  return key;
}

int PauliString::weight() const { return std::popcount(x_ | z_); }

char PauliString::at(int q) const {
  int a = static_cast<int>((x_ >> q) & 1), b = static_cast<int>((z_ >> q) & 1);
  return "IXZY"[a | (b << 1)];
}

std::string PauliString::label() const {
  std::string s(static_cast<size_t>(n_), 'I');
  for (int q = 0; q < n_; ++q) s[static_cast<size_t>(q)] = at(q);
  return s;
}

std::string PauliString::hex() const {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%llx:%llx", static_cast<unsigned long long>(x_),
                static_cast<unsigned long long>(z_));
  return buf;
}

PauliString PauliString::operator^(const PauliString& other) const {
  require_same_n(*this, other, "pauli xor");
  return PauliString(n_, x_ ^ other.x_, z_ ^ other.z_);
}

PauliString& PauliString::operator^=(const PauliString& other) {
  require_same_n(*this, other, "pauli xor");
  x_ ^= other.x_;
  z_ ^= other.z_;
  return *this;
}

int symplectic_inner(const PauliString& x, const PauliString& y) {
  require_same_n(x, y, "symplectic_inner");
  return std::popcount((x.x_bits() & y.z_bits()) ^ (x.z_bits() & y.x_bits())) & 1;
}

PhasedPauli pauli_product(const PauliString& x, const PauliString& y) {
  require_same_n(x, y, "pauli_product");
  PauliString r = x ^ y;
  // i^{a1.b1} X^a1 Z^b1 i^{a2.b2} X^a2 Z^b2 = i^{a1.b1 + a2.b2 + 2 b1.a2} X^a3 Z^b3
  int e = std::popcount(x.x_bits() & x.z_bits()) + std::popcount(y.x_bits() & y.z_bits()) +
          2 * std::popcount(x.z_bits() & y.x_bits()) - std::popcount(r.x_bits() & r.z_bits());
  return PhasedPauli{((e % 4) + 4) % 4, r};
}

uint64_t count_weight_at_most(int n, int k) {
  uint64_t total = 0, binom = 1, pow3 = 1;
  for (int w = 0; w <= k && w <= n; ++w) {
    total += binom * pow3;
    binom = binom * static_cast<uint64_t>(n - w) / static_cast<uint64_t>(w + 1);
    pow3 *= 3;
  }
  return total;
}

void for_each_weight_at_most(int n, int k, const std::function<void(const PauliString&)>& f) {
  uint64_t total = uint64_t{1} << (2 * n);
  for (uint64_t idx = 0; idx < total; ++idx) {
    PauliString p = PauliString::from_index(n, idx);
    if (p.weight() <= k) f(p);
  }
}

void require_same_n(const PauliString& a, const PauliString& b, const char* what) {
  if (a.num_qubits() != b.num_qubits()) {
    throw DimensionError(std::string(what) + ": qubit counts differ (" +
                         std::to_string(a.num_qubits()) + " vs " + std::to_string(b.num_qubits()) + ")");
  }
}

}  // namespace hamprobe
