// Copyright 2026 The tcsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace tcsim {

/// Fixed-length bit vector packed into 64-bit words.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }
  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  void set(std::size_t i, bool v) {
    std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (v) {
      words_[i >> 6] |= mask;
    } else {
      words_[i >> 6] &= ~mask;
    }
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }
  void xor_in(const BitVec& other);
  bool none() const;
  std::size_t count() const;
  /// Parity of the bitwise AND with another vector of the same length.
  bool and_parity(const BitVec& other) const;

  bool operator==(const BitVec&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Single-qubit Pauli factor, encoded as x + 2z.
enum class PauliKind : std::uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

char pauli_kind_char(PauliKind kind);
PauliKind pauli_kind_from_char(char c);

/// An n-qubit Pauli group element: i^phase times a tensor product of
/// {I, X, Y, Z} factors. Y is stored literally, so every element of the
/// group has an exact 2-bit phase. Values are immutable in spirit; all
/// algebra returns new values.
class PauliOp {
 public:
  PauliOp() = default;
  explicit PauliOp(std::size_t n) : x_(n), z_(n) {}

  /// Weight-1 operator with `kind` on `qubit` (1-based, matching the
  /// user-facing convention) and identity elsewhere.
  static PauliOp single(std::size_t n, std::size_t qubit, PauliKind kind);

  /// Parses "XZZXI" style strings, with an optional leading phase among
  /// {+, +i, -, -i, i}. Leftmost character is qubit 1.
  static PauliOp from_string(std::string_view text);

  std::size_t num_qubits() const { return x_.size(); }
  std::uint8_t phase() const { return phase_; }
  void set_phase(std::uint8_t phase) { phase_ = phase & 3; }

  bool x_bit(std::size_t q) const { return x_.get(q); }  // 0-based
  bool z_bit(std::size_t q) const { return z_.get(q); }
  const BitVec& x_bits() const { return x_; }
  const BitVec& z_bits() const { return z_; }

  PauliKind factor(std::size_t q) const {
    return static_cast<PauliKind>(int(x_.get(q)) + 2 * int(z_.get(q)));
  }
  void set_factor(std::size_t q, PauliKind kind) {
    auto k = static_cast<int>(kind);
    x_.set(q, k & 1);
    z_.set(q, (k >> 1) & 1);
  }

  /// Exact group product; phases accumulate per-qubit commutation factors.
  PauliOp operator*(const PauliOp& rhs) const;

  /// True iff the symplectic inner product vanishes; ignores phases.
  bool commutes_with(const PauliOp& other) const;

  /// Number of non-identity tensor factors.
  std::size_t weight() const;

  bool is_identity() const { return phase_ == 0 && has_identity_bits(); }
  bool has_identity_bits() const { return x_.none() && z_.none(); }

  PauliOp without_phase() const;

  /// Same operator acting on a larger register; new qubits carry identity.
  PauliOp embedded(std::size_t total_qubits) const;

  /// "+XZZXI" style rendering with phase prefix in {+, +i, -, -i}.
  std::string str() const;

  bool operator==(const PauliOp&) const = default;

 private:
  BitVec x_, z_;
  std::uint8_t phase_ = 0;
};

}  // namespace tcsim
