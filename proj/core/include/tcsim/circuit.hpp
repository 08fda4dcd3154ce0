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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tcsim {

enum class GateKind { H, X, Y, Z, CNOT, CZ, Measure };

/// One gate of the circuit IR. Operands are 0-based; q0 is the control of
/// two-qubit gates and q1 is unused for single-qubit gates.
struct Gate {
  GateKind kind;
  std::uint32_t q0 = 0;
  std::uint32_t q1 = 0;

  static Gate h(std::uint32_t q) { return {GateKind::H, q}; }
  static Gate x(std::uint32_t q) { return {GateKind::X, q}; }
  static Gate y(std::uint32_t q) { return {GateKind::Y, q}; }
  static Gate z(std::uint32_t q) { return {GateKind::Z, q}; }
  static Gate measure(std::uint32_t q) { return {GateKind::Measure, q}; }
  static Gate cnot(std::uint32_t c, std::uint32_t t) {
    return {GateKind::CNOT, c, t};
  }
  static Gate cz(std::uint32_t a, std::uint32_t b) {
    return {GateKind::CZ, a, b};
  }

  bool is_two_qubit() const {
    return kind == GateKind::CNOT || kind == GateKind::CZ;
  }

  bool operator==(const Gate&) const = default;
};

struct Circuit {
  std::size_t num_qubits = 0;
  std::vector<Gate> gates;

  /// Validates operands against num_qubits before appending.
  void append(const Gate& g);

  bool operator==(const Circuit&) const = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Parses the line-oriented circuit DSL. The first non-comment line must be
/// `qubits N`; each following line is one gate with 1-based operands.
/// Comments start with '#'. Errors carry line numbers.
Circuit parse_circuit(std::string_view text);

/// Canonical text form: lowercase mnemonics, 1-based indices, one gate per
/// line. parse_circuit(emit_circuit(c)) == c.
std::string emit_circuit(const Circuit& c);

/// The Hadamard-CNOT-Hadamard sequence that copies the control in the X
/// basis: [H(control), CNOT(control, target), H(control)]. 0-based operands.
std::vector<Gate> hcnot(std::uint32_t control, std::uint32_t target);

}  // namespace tcsim
