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

#include <complex>
#include <vector>

#include "tcsim/circuit.hpp"
#include "tcsim/pauli.hpp"

namespace tcsim {

/// Dense state-vector oracle for desk-scale verification. Hard-capped at
/// kMaxQubits qubits; construction beyond that throws. Basis index bit
/// order: qubit 1 is the most significant bit, so |10010> is index 18 on
/// five qubits.
class DenseState {
 public:
  static constexpr std::size_t kMaxQubits = 12;

  explicit DenseState(std::size_t n);  // |0...0>
  static DenseState from_amplitudes(std::size_t n,
                                    std::vector<std::complex<double>> amps);

  std::size_t num_qubits() const { return n_; }
  const std::vector<std::complex<double>>& amplitudes() const { return amps_; }

  void apply(const Gate& g);  // throws on Measure
  void run(const Circuit& c);  // circuit may act on a prefix of the qubits
  void apply_pauli(const PauliOp& p);

  /// <psi| P |psi>; real for Hermitian P.
  double expectation(const PauliOp& p) const;

  /// |<this|other>|^2.
  double fidelity(const DenseState& other) const;

  /// Probability that a Z-basis measurement of qubit q (0-based) gives 1.
  double probability_of_one(std::size_t q) const;

  double norm() const;

 private:
  std::size_t n_;
  std::vector<std::complex<double>> amps_;
};

}  // namespace tcsim
