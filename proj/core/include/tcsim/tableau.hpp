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

#include <random>
#include <string>
#include <vector>

#include "tcsim/circuit.hpp"
#include "tcsim/pauli.hpp"

namespace tcsim {

/// Conjugates a Pauli operator through a unitary gate: returns g p g^dagger
/// with the exact sign. Throws on Measure gates.
PauliOp conjugated(const PauliOp& p, const Gate& g);

/// Conjugates through a whole circuit (first gate applied first).
PauliOp conjugated(const PauliOp& p, const Circuit& c);

struct MeasureResult {
  int outcome = 0;
  bool deterministic = false;
};

/// Stabilizer-state simulator: n destabilizer plus n stabilizer generator
/// rows with exact signs, conjugated gate by gate. A Tableau is mutable and
/// single-threaded; independent instances may run on different threads.
class Tableau {
 public:
  /// State |0...0> (stabilizers Z_1 ... Z_n).
  explicit Tableau(std::size_t n);

  std::size_t num_qubits() const { return n_; }

  void apply(const Gate& g);  // throws on Measure; use measure()
  void apply(const Circuit& c);
  void apply_h(std::size_t q);
  void apply_x(std::size_t q);
  void apply_y(std::size_t q);
  void apply_z(std::size_t q);
  void apply_cnot(std::size_t c, std::size_t t);
  void apply_cz(std::size_t a, std::size_t b);
  /// Phase gate; not part of the circuit DSL, used by syndrome extraction
  /// when a generator carries a Y factor.
  void apply_s(std::size_t q);
  void apply_s_dag(std::size_t q);

  /// Multiplies the state by a Pauli error; only row signs change.
  void apply_error(const PauliOp& e);

  /// Z-basis measurement of one qubit (0-based).
  MeasureResult measure(std::size_t q, std::mt19937_64& rng);

  /// Measurement of an arbitrary Hermitian Pauli (phase must be 0 or 2).
  MeasureResult measure_pauli(const PauliOp& p, std::mt19937_64& rng);

  /// +1 / -1 when p is (up to sign) in the stabilizer group, else 0.
  int expectation(const PauliOp& p) const;

  /// Measures p and, on outcome -1, applies the fixup that flips it, so p
  /// stabilizes the state afterwards.
  void force_stabilizer(const PauliOp& p, std::mt19937_64& rng);

  PauliOp stabilizer_row(std::size_t i) const { return stab_[i]; }
  PauliOp destabilizer_row(std::size_t i) const { return destab_[i]; }

  /// Stabilizer rows in reduced row echelon form over GF(2) with a fixed
  /// pivot order; two tableaus describe the same state iff these match.
  std::vector<PauliOp> canonical_stabilizers() const;
  bool same_state_as(const Tableau& other) const;

  /// Throws std::logic_error when the commutation structure is broken.
  void check_invariants() const;

  /// Stabilizer rows as signed Pauli strings, one per line.
  std::string dump() const;

 private:
  std::size_t n_;
  std::vector<PauliOp> destab_;
  std::vector<PauliOp> stab_;
};

}  // namespace tcsim
