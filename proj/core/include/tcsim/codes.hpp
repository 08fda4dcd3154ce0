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

#include <array>
#include <complex>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "tcsim/circuit.hpp"
#include "tcsim/pauli.hpp"
#include "tcsim/statevec.hpp"
#include "tcsim/tableau.hpp"

namespace tcsim {

struct StabilizerCode {
  std::string name;
  std::size_t n = 0;  // codeword length
  std::size_t k = 0;  // logical qubits
  std::vector<PauliOp> generators;  // n - k entries
  std::optional<int> declared_distance;
  /// Logical |0_L> and |1_L> amplitude tables, when the code is defined by
  /// amplitudes instead of an encoding circuit.
  std::optional<std::array<std::vector<std::complex<double>>, 2>>
      logical_amplitudes;
  std::optional<Circuit> encoding_circuit;
};

/// Ordered syndrome bits (f_M1, ..., f_M(n-k)); rendered leftmost = f_M1.
struct Syndrome {
  std::vector<std::uint8_t> bits;

  static Syndrome zeros(std::size_t count) { return {std::vector<std::uint8_t>(count, 0)}; }
  static Syndrome from_string(std::string_view text);

  std::size_t size() const { return bits.size(); }
  bool is_zero() const;
  Syndrome operator^(const Syndrome& other) const;
  std::string str() const;
  bool operator==(const Syndrome&) const = default;
  bool operator<(const Syndrome& other) const { return bits < other.bits; }
};

/// Builtin codes: "five_qubit" (perfect [[5,1,3]] code with logical
/// amplitude tables) and "steane" (the [[7,1,3]] code with its encoding
/// circuit). Throws on unknown names.
StabilizerCode builtin_code(std::string_view name);

struct ValidationReport {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
  std::string str() const;
};

/// Checks the stabilizer conditions: pairwise commuting generators,
/// GF(2)-independence, and -I not generated.
ValidationReport validate(const StabilizerCode& code);

Syndrome syndrome_of(const StabilizerCode& code, const PauliOp& e);

/// 1-based indices of the generators that anti-commute with e.
std::vector<int> anticommuting_generators(const StabilizerCode& code,
                                          const PauliOp& e);

struct SyndromeTable {
  /// Collision-free entries only; errors stored as unsigned Paulis.
  std::map<Syndrome, PauliOp> entries;
  /// Pairs of enumerated errors that produced the same syndrome.
  std::vector<std::pair<PauliOp, PauliOp>> collisions;
};

/// Enumerates all errors of weight 1..max_weight (plus identity at weight 0
/// handling left to the decoder).
SyndromeTable build_syndrome_table(const StabilizerCode& code,
                                   int max_weight = 1);

enum class DecodeStatus { none, corrected, uncorrectable };

struct DecodeResult {
  DecodeStatus status = DecodeStatus::none;
  PauliOp error;  // identity unless status == corrected
};

/// Weight-1 lookup decoder with the table prebuilt once.
class SingleErrorDecoder {
 public:
  explicit SingleErrorDecoder(const StabilizerCode& code);
  DecodeResult decode(const Syndrome& s) const;
  const SyndromeTable& table() const { return table_; }

 private:
  std::size_t n_;
  SyndromeTable table_;
};

DecodeResult decode_single(const StabilizerCode& code, const Syndrome& s);

/// Decoding with a known prior error: returns F with weight <= 1 such that
/// syndrome_of(prior * F) == s, by decoding s xor syndrome_of(prior).
DecodeResult decode_with_prior(const StabilizerCode& code, const Syndrome& s,
                               const PauliOp& prior);

/// GF(2) membership test against the generator span (phases ignored).
class StabilizerBasis {
 public:
  explicit StabilizerBasis(const StabilizerCode& code);
  bool contains(const PauliOp& p) const;

 private:
  std::size_t n_;
  std::vector<PauliOp> basis_;  // reduced rows
};

/// Brute-force distance: minimum weight over all unsigned Paulis that
/// commute with every generator but are not in the stabilizer group.
/// Capped at n <= 8 (4^n enumeration).
int distance(const StabilizerCode& code);

/// Smallest n with 2(3n + 1) <= 2^n.
int hamming_bound_min_n();

/// Code definition file: `name:`, `n:`, `k:` headers then one generator
/// Pauli string per line; '#' comments.
StabilizerCode parse_code_file(std::string_view text);

/// Logical state (which = 0 or 1) as a dense oracle state, from the
/// amplitude tables or by running the encoding circuit (which = 0 only).
DenseState logical_state(const StabilizerCode& code, int which);

/// Codeword preparation in a tableau of total_qubits >= n, acting on the
/// first n qubits: runs the encoding circuit when the code has one,
/// otherwise measures each generator and applies a destabilizer fixup on a
/// -1 outcome.
Tableau prepare_codeword(const StabilizerCode& code, std::size_t total_qubits,
                         std::mt19937_64& rng);

/// One line per weight-1 error: label, syndrome, anti-commuting generators.
std::string render_syndrome_table(const StabilizerCode& code);

}  // namespace tcsim
