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

#include "tcsim/circuit.hpp"

#include <charconv>
#include <sstream>

namespace tcsim {

void Circuit::append(const Gate& g) {
  if (g.q0 >= num_qubits || (g.is_two_qubit() && g.q1 >= num_qubits)) {
    throw std::out_of_range("gate operand out of range");
  }
  if (g.is_two_qubit() && g.q0 == g.q1) {
    throw std::invalid_argument("two-qubit gate with equal operands");
  }
  gates.push_back(g);
}

namespace {

const char* mnemonic(GateKind kind) {
  switch (kind) {
    case GateKind::H:
      return "h";
    case GateKind::X:
      return "x";
    case GateKind::Y:
      return "y";
    case GateKind::Z:
      return "z";
    case GateKind::CNOT:
      return "cnot";
    case GateKind::CZ:
      return "cz";
    case GateKind::Measure:
      return "measure";
  }
  return "?";
}

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) {
    out.push_back(tok);
  }
  return out;
}

std::uint32_t parse_index(const std::string& tok, std::size_t num_qubits,
                          std::size_t line_no) {
  std::uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(line_no, "not a qubit index: '" + tok + "'");
  }
  if (value < 1 || value > num_qubits) {
    throw ParseError(line_no, "qubit index out of range: " + tok);
  }
  return value - 1;
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  Circuit circuit;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    auto tokens = split_ws(line);
    if (tokens.empty()) {
      continue;
    }
    if (!have_header) {
      if (tokens[0] != "qubits" || tokens.size() != 2) {
        throw ParseError(line_no, "expected 'qubits N' header");
      }
      std::uint32_t n = 0;
      auto& tok = tokens[1];
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), n);
      if (ec != std::errc{} || ptr != tok.data() + tok.size() || n == 0) {
        throw ParseError(line_no, "bad qubit count: '" + tok + "'");
      }
      circuit.num_qubits = n;
      have_header = true;
      continue;
    }
    const std::string& op = tokens[0];
    GateKind kind;
    std::size_t arity;
    if (op == "h") {
      kind = GateKind::H, arity = 1;
    } else if (op == "x") {
      kind = GateKind::X, arity = 1;
    } else if (op == "y") {
      kind = GateKind::Y, arity = 1;
    } else if (op == "z") {
      kind = GateKind::Z, arity = 1;
    } else if (op == "measure") {
      kind = GateKind::Measure, arity = 1;
    } else if (op == "cnot") {
      kind = GateKind::CNOT, arity = 2;
    } else if (op == "cz") {
      kind = GateKind::CZ, arity = 2;
    } else {
      throw ParseError(line_no, "unknown gate '" + op + "'");
    }
    if (tokens.size() != arity + 1) {
      throw ParseError(line_no, "gate '" + op + "' takes " +
                                    std::to_string(arity) + " operand(s)");
    }
    Gate g{kind};
    g.q0 = parse_index(tokens[1], circuit.num_qubits, line_no);
    if (arity == 2) {
      g.q1 = parse_index(tokens[2], circuit.num_qubits, line_no);
      if (g.q0 == g.q1) {
        throw ParseError(line_no, "two-qubit gate with equal operands");
      }
    }
    circuit.gates.push_back(g);
  }
  if (!have_header) {
    throw ParseError(line_no, "missing 'qubits N' header");
  }
  return circuit;
}

std::string emit_circuit(const Circuit& c) {
  std::string out = "qubits " + std::to_string(c.num_qubits);
  for (const auto& g : c.gates) {
    out += '\n';
    out += mnemonic(g.kind);
    out += ' ';
    out += std::to_string(g.q0 + 1);
    if (g.is_two_qubit()) {
      out += ' ';
      out += std::to_string(g.q1 + 1);
    }
  }
  return out;
}

std::vector<Gate> hcnot(std::uint32_t control, std::uint32_t target) {
  if (control == target) {
    throw std::invalid_argument("hcnot with equal operands");
  }
  return {Gate::h(control), Gate::cnot(control, target), Gate::h(control)};
}

}  // namespace tcsim
