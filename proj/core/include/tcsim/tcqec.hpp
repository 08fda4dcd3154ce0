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

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tcsim/codes.hpp"
#include "tcsim/tableau.hpp"

namespace tcsim {

/// Extends the code generators onto two ancilla slots appended after the
/// codeword: a generator with an X component on tracked qubit j (1-based)
/// gains X on ancilla A, a Z component gains X on ancilla B, a Y component
/// gains both. Returns operators on n + 2 qubits.
std::vector<PauliOp> extended_generators(const StabilizerCode& code, int j);

/// The correction protocol for one time-correlated error on the tracked
/// qubit plus one new error: the tracked qubit is duplicated onto ancilla A
/// in the Z basis (CNOT) and onto ancilla B in the X basis (HCNOT) before
/// the cycle, the extended syndrome is measured, and the ancillas are
/// disentangled and read out to reveal the relapse type.
struct ExtendedProtocol {
  StabilizerCode code;
  int tracked_qubit = 0;        // 1-based j
  std::size_t slot_a = 0;       // 0-based ancilla slots, n and n + 1
  std::size_t slot_b = 0;
  Circuit entangle;             // on n + 2 qubits
  Circuit disentangle;          // same gates in reverse order
  std::vector<PauliOp> extended;
  SingleErrorDecoder decoder;
  Syndrome sigma_x_j, sigma_z_j, sigma_y_j;

  std::size_t data_qubits() const { return code.n; }
  /// Data + two protocol ancillas + one measurement ancilla per generator.
  std::size_t total_qubits() const {
    return code.n + 2 + code.generators.size();
  }
};

ExtendedProtocol build_protocol(const StabilizerCode& code, int j);

struct CycleOutcome {
  Syndrome sigma;
  int ancilla_a = 0;
  int ancilla_b = 0;
};

enum class Verdict { no_error, single, double_error, uncorrectable };

struct CorrectionDecision {
  Verdict verdict = Verdict::no_error;
  PauliOp correction;  // on the n data qubits; identity when nothing to do
  std::optional<PauliOp> correlated;  // component on the tracked qubit
  std::optional<PauliOp> fresh;       // the new error component
  std::string describe() const;       // e.g. "correct Z on qubit 3"
};

struct FullCycleResult {
  CycleOutcome outcome;
  CorrectionDecision decision;
};

/// Builds an injected error on the n + 2 protocol qubits from a slot spec:
/// 1..n for data qubits, "A"/"B" for the protocol ancillas.
PauliOp protocol_error(const ExtendedProtocol& protocol, std::string_view slot,
                       PauliKind kind);

/// One protocol cycle on a prepared state (total_qubits()-sized tableau,
/// codeword on the data qubits, ancillas in |0>): entangle, inject the
/// given errors, measure every extended generator non-demolition style via
/// a fresh measurement ancilla, disentangle, and read A then B. Measurement
/// ancillas are reset for reuse.
CycleOutcome run_cycle(const ExtendedProtocol& protocol, Tableau& state,
                       const std::vector<PauliOp>& injected,
                       std::mt19937_64& rng);

/// The decision procedure: a syndrome matching an error on the tracked
/// qubit wins outright; otherwise ancilla outcome 00 means decode a single
/// new error, and a nonzero ancilla outcome names the relapse type
/// (10 bit-flip, 01 phase-flip, 11 both), whose syndrome is peeled off
/// before decoding the new error.
CorrectionDecision decide(const ExtendedProtocol& protocol,
                          const Syndrome& sigma, int ancilla_a, int ancilla_b);

/// run_cycle, decide, then apply the correction to the state.
FullCycleResult full_cycle(const ExtendedProtocol& protocol, Tableau& state,
                           const std::vector<PauliOp>& injected,
                           std::mt19937_64& rng);

/// True when every original generator has expectation +1 on the state.
bool codeword_valid(const ExtendedProtocol& protocol, const Tableau& state);

}  // namespace tcsim
