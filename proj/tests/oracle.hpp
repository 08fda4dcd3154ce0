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
#include <cstddef>
#include <random>
#include <vector>

#include "tcsim/circuit.hpp"
#include "tcsim/pauli.hpp"

namespace tcsim::oracle {

using cd = std::complex<double>;
/// Row-major dim x dim complex matrix; an independent check on the packed
/// symplectic algebra.
using Matrix = std::vector<cd>;

/// Explicit 2^n x 2^n matrix of a PauliOp, including its i^phase factor.
/// Qubit 1 is the leftmost Kronecker factor (most significant index bit).
Matrix pauli_matrix(const PauliOp& p);

Matrix matmul(const Matrix& a, const Matrix& b, std::size_t dim);
double max_abs_diff(const Matrix& a, const Matrix& b);

/// True when AB = -BA at matrix level.
bool matrices_anticommute(const Matrix& a, const Matrix& b, std::size_t dim);

/// Random measurement-free Clifford circuit from {H, X, Y, Z, CNOT, CZ}.
Circuit random_clifford(std::size_t n, std::size_t depth,
                        std::mt19937_64& rng);

/// Random unsigned Pauli bit pattern with a random phase.
PauliOp random_pauli(std::size_t n, std::mt19937_64& rng);

}  // namespace tcsim::oracle
