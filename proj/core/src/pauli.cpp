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

#include "tcsim/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace tcsim {

void BitVec::xor_in(const BitVec& other) {
  if (other.n_ != n_) {
    throw std::invalid_argument("BitVec size mismatch");
  }
  for (std::size_t w = 0; w < words_.size(); ++w) {
    words_[w] ^= other.words_[w];
  }
}

bool BitVec::none() const {
  for (auto w : words_) {
    if (w != 0) {
      return false;
    }
  }
  return true;
}

std::size_t BitVec::count() const {
  std::size_t total = 0;
  for (auto w : words_) {
    total += std::popcount(w);
  }
  return total;
}

bool BitVec::and_parity(const BitVec& other) const {
  if (other.n_ != n_) {
    throw std::invalid_argument("BitVec size mismatch");
  }
  std::uint64_t acc = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    acc ^= words_[w] & other.words_[w];
  }
  return std::popcount(acc) & 1;
}

char pauli_kind_char(PauliKind kind) {
  return "IXZY"[static_cast<int>(kind)];
}

PauliKind pauli_kind_from_char(char c) {
  switch (c) {
    case 'I':
      return PauliKind::I;
    case 'X':
      return PauliKind::X;
    case 'Z':
      return PauliKind::Z;
    case 'Y':
      return PauliKind::Y;
    default:
      throw std::invalid_argument(std::string("not a Pauli letter: ") + c);
  }
}

PauliOp PauliOp::single(std::size_t n, std::size_t qubit, PauliKind kind) {
  if (qubit < 1 || qubit > n) {
    throw std::out_of_range("qubit index out of range");
  }
  PauliOp op(n);
  op.set_factor(qubit - 1, kind);
  return op;
}

PauliOp PauliOp::from_string(std::string_view text) {
  std::uint8_t phase = 0;
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    phase = text[pos] == '-' ? 2 : 0;
    ++pos;
  }
  if (pos < text.size() && text[pos] == 'i') {
    phase = (phase + 1) & 3;
    ++pos;
  }
  if (pos == text.size()) {
    throw std::invalid_argument("empty Pauli string");
  }
  PauliOp op(text.size() - pos);
  for (std::size_t q = 0; pos < text.size(); ++q, ++pos) {
    op.set_factor(q, pauli_kind_from_char(text[pos]));
  }
  op.phase_ = phase;
  return op;
}

// Exponent of i in the product of two single-qubit factors, indexed by
// x + 2z. The cycle X -> Y -> Z -> X picks up +i, the reverse -i.
namespace {
constexpr int kProductPhase[4][4] = {
    {0, 0, 0, 0},
    {0, 0, 3, 1},
    {0, 1, 0, 3},
    {0, 3, 1, 0},
};
}  // namespace

PauliOp PauliOp::operator*(const PauliOp& rhs) const {
  if (rhs.num_qubits() != num_qubits()) {
    throw std::invalid_argument("PauliOp size mismatch");
  }
  PauliOp out(num_qubits());
  int phase = phase_ + rhs.phase_;
  for (std::size_t q = 0; q < num_qubits(); ++q) {
    int a = static_cast<int>(factor(q));
    int b = static_cast<int>(rhs.factor(q));
    phase += kProductPhase[a][b];
  }
  out.x_ = x_;
  out.z_ = z_;
  out.x_.xor_in(rhs.x_);
  out.z_.xor_in(rhs.z_);
  out.phase_ = static_cast<std::uint8_t>(phase & 3);
  return out;
}

bool PauliOp::commutes_with(const PauliOp& other) const {
  if (other.num_qubits() != num_qubits()) {
    throw std::invalid_argument("PauliOp size mismatch");
  }
  return !(x_.and_parity(other.z_) ^ z_.and_parity(other.x_));
}

std::size_t PauliOp::weight() const {
  std::size_t w = 0;
  for (std::size_t q = 0; q < num_qubits(); ++q) {
    if (factor(q) != PauliKind::I) {
      ++w;
    }
  }
  return w;
}

PauliOp PauliOp::without_phase() const {
  PauliOp out = *this;
  out.phase_ = 0;
  return out;
}

PauliOp PauliOp::embedded(std::size_t total_qubits) const {
  if (total_qubits < num_qubits()) {
    throw std::invalid_argument("embedding target smaller than operator");
  }
  PauliOp out(total_qubits);
  for (std::size_t q = 0; q < num_qubits(); ++q) {
    out.set_factor(q, factor(q));
  }
  out.phase_ = phase_;
  return out;
}

std::string PauliOp::str() const {
  static const char* kPrefix[4] = {"+", "+i", "-", "-i"};
  std::string out = kPrefix[phase_];
  for (std::size_t q = 0; q < num_qubits(); ++q) {
    out += pauli_kind_char(factor(q));
  }
  return out;
}

}  // namespace tcsim
