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

#include "oracle.hpp"

#include <algorithm>
#include <cmath>

namespace tcsim::oracle {

namespace {

Matrix factor_matrix(PauliKind kind) {
  const cd o{1, 0}, z{0, 0}, i{0, 1};
  switch (kind) {
    case PauliKind::I:
      return {o, z, z, o};
    case PauliKind::X:
      return {z, o, o, z};
    case PauliKind::Y:
      return {z, -i, i, z};
    case PauliKind::Z:
      return {o, z, z, -o};
  }
  return {};
}

Matrix kron(const Matrix& a, std::size_t da, const Matrix& b, std::size_t db) {
  std::size_t dim = da * db;
  Matrix out(dim * dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      out[r * dim + c] =
          a[(r / db) * da + (c / db)] * b[(r % db) * db + (c % db)];
    }
  }
  return out;
}

}  // namespace

Matrix pauli_matrix(const PauliOp& p) {
  Matrix out = {cd{1, 0}};
  std::size_t dim = 1;
  for (std::size_t q = 0; q < p.num_qubits(); ++q) {
    out = kron(out, dim, factor_matrix(p.factor(q)), 2);
    dim *= 2;
  }
  const cd phases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  cd scale = phases[p.phase()];
  for (auto& v : out) {
    v *= scale;
  }
  return out;
}

Matrix matmul(const Matrix& a, const Matrix& b, std::size_t dim) {
  Matrix out(dim * dim, cd{0, 0});
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t k = 0; k < dim; ++k) {
      cd v = a[r * dim + k];
      if (v == cd{0, 0}) {
        continue;
      }
      for (std::size_t c = 0; c < dim; ++c) {
        out[r * dim + c] += v * b[k * dim + c];
      }
    }
  }
  return out;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::abs(a[i] - b[i]));
  }
  return worst;
}

bool matrices_anticommute(const Matrix& a, const Matrix& b, std::size_t dim) {
  Matrix ab = matmul(a, b, dim);
  Matrix ba = matmul(b, a, dim);
  for (auto& v : ba) {
    v = -v;
  }
  return max_abs_diff(ab, ba) < 1e-9;
}

Circuit random_clifford(std::size_t n, std::size_t depth,
                        std::mt19937_64& rng) {
  Circuit c;
  c.num_qubits = n;
  std::uniform_int_distribution<int> pick_kind(0, 5);
  std::uniform_int_distribution<std::uint32_t> pick_qubit(
      0, static_cast<std::uint32_t>(n - 1));
  for (std::size_t i = 0; i < depth; ++i) {
    int kind = n > 1 ? pick_kind(rng) : pick_kind(rng) % 4;
    std::uint32_t a = pick_qubit(rng);
    if (kind <= 3) {
      Gate g[] = {Gate::h(a), Gate::x(a), Gate::y(a), Gate::z(a)};
      c.append(g[kind]);
    } else {
      std::uint32_t b = pick_qubit(rng);
      while (b == a) {
        b = pick_qubit(rng);
      }
      c.append(kind == 4 ? Gate::cnot(a, b) : Gate::cz(a, b));
    }
  }
  return c;
}

PauliOp random_pauli(std::size_t n, std::mt19937_64& rng) {
  PauliOp p(n);
  for (std::size_t q = 0; q < n; ++q) {
    p.set_factor(q, static_cast<PauliKind>(rng() & 3));
  }
  p.set_phase(static_cast<std::uint8_t>(rng() & 3));
  return p;
}

}  // namespace tcsim::oracle
