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

#include "tcsim/tableau.hpp"

#include <stdexcept>

namespace tcsim {

namespace {

struct PairImage {
  PauliKind a, b;
  std::uint8_t phase_delta;  // 0 or 2
};

constexpr PauliKind I = PauliKind::I;
constexpr PauliKind X = PauliKind::X;
constexpr PauliKind Z = PauliKind::Z;
constexpr PauliKind Y = PauliKind::Y;

// Conjugation images for (control, target) factor pairs, indexed by
// 4*control + target with the x + 2z encoding.
constexpr PairImage kCnotImage[16] = {
    /* I I */ {I, I, 0}, /* I X */ {I, X, 0}, /* I Z */ {Z, Z, 0},
    /* I Y */ {Z, Y, 0},
    /* X I */ {X, X, 0}, /* X X */ {X, I, 0}, /* X Z */ {Y, Y, 2},
    /* X Y */ {Y, Z, 0},
    /* Z I */ {Z, I, 0}, /* Z X */ {Z, X, 0}, /* Z Z */ {I, Z, 0},
    /* Z Y */ {I, Y, 0},
    /* Y I */ {Y, X, 0}, /* Y X */ {Y, I, 0}, /* Y Z */ {X, Y, 0},
    /* Y Y */ {X, Z, 2},
};

constexpr PairImage kCzImage[16] = {
    /* I I */ {I, I, 0}, /* I X */ {Z, X, 0}, /* I Z */ {I, Z, 0},
    /* I Y */ {Z, Y, 0},
    /* X I */ {X, Z, 0}, /* X X */ {Y, Y, 0}, /* X Z */ {X, I, 0},
    /* X Y */ {Y, X, 2},
    /* Z I */ {Z, I, 0}, /* Z X */ {I, X, 0}, /* Z Z */ {Z, Z, 0},
    /* Z Y */ {I, Y, 0},
    /* Y I */ {Y, Z, 0}, /* Y X */ {X, Y, 2}, /* Y Z */ {Y, I, 0},
    /* Y Y */ {X, X, 0},
};

void conj_h(PauliOp& p, std::size_t q) {
  switch (p.factor(q)) {
    case PauliKind::X:
      p.set_factor(q, PauliKind::Z);
      break;
    case PauliKind::Z:
      p.set_factor(q, PauliKind::X);
      break;
    case PauliKind::Y:
      p.set_phase((p.phase() + 2) & 3);
      break;
    default:
      break;
  }
}

void conj_s(PauliOp& p, std::size_t q) {
  switch (p.factor(q)) {
    case PauliKind::X:
      p.set_factor(q, PauliKind::Y);
      break;
    case PauliKind::Y:
      p.set_factor(q, PauliKind::X);
      p.set_phase((p.phase() + 2) & 3);
      break;
    default:
      break;
  }
}

void conj_pair(PauliOp& p, std::size_t a, std::size_t b,
               const PairImage (&table)[16]) {
  int idx = 4 * static_cast<int>(p.factor(a)) + static_cast<int>(p.factor(b));
  const PairImage& img = table[idx];
  p.set_factor(a, img.a);
  p.set_factor(b, img.b);
  p.set_phase((p.phase() + img.phase_delta) & 3);
}

// Sign flip when conjugating by a Pauli gate: flip iff the row's factor at q
// anti-commutes with the gate's Pauli.
void conj_pauli_gate(PauliOp& p, std::size_t q, PauliKind gate) {
  PauliKind f = p.factor(q);
  if (f == PauliKind::I || f == gate) {
    return;
  }
  p.set_phase((p.phase() + 2) & 3);
}

void conj_gate(PauliOp& p, const Gate& g) {
  switch (g.kind) {
    case GateKind::H:
      conj_h(p, g.q0);
      break;
    case GateKind::X:
      conj_pauli_gate(p, g.q0, PauliKind::X);
      break;
    case GateKind::Y:
      conj_pauli_gate(p, g.q0, PauliKind::Y);
      break;
    case GateKind::Z:
      conj_pauli_gate(p, g.q0, PauliKind::Z);
      break;
    case GateKind::CNOT:
      conj_pair(p, g.q0, g.q1, kCnotImage);
      break;
    case GateKind::CZ:
      conj_pair(p, g.q0, g.q1, kCzImage);
      break;
    case GateKind::Measure:
      throw std::invalid_argument("cannot conjugate through a measurement");
  }
}

}  // namespace

PauliOp conjugated(const PauliOp& p, const Gate& g) {
  PauliOp out = p;
  conj_gate(out, g);
  return out;
}

PauliOp conjugated(const PauliOp& p, const Circuit& c) {
  PauliOp out = p;
  for (const auto& g : c.gates) {
    conj_gate(out, g);
  }
  return out;
}

Tableau::Tableau(std::size_t n) : n_(n) {
  if (n == 0) {
    throw std::invalid_argument("tableau needs at least one qubit");
  }
  destab_.reserve(n);
  stab_.reserve(n);
  for (std::size_t q = 0; q < n; ++q) {
    destab_.push_back(PauliOp::single(n, q + 1, PauliKind::X));
    stab_.push_back(PauliOp::single(n, q + 1, PauliKind::Z));
  }
}

void Tableau::apply(const Gate& g) {
  if (g.kind == GateKind::Measure) {
    throw std::invalid_argument("Measure gate passed to apply; use measure()");
  }
  for (auto& row : destab_) {
    conj_gate(row, g);
  }
  for (auto& row : stab_) {
    conj_gate(row, g);
  }
}

void Tableau::apply(const Circuit& c) {
  if (c.num_qubits > n_) {
    throw std::invalid_argument("circuit larger than tableau");
  }
  for (const auto& g : c.gates) {
    apply(g);
  }
}

void Tableau::apply_h(std::size_t q) { apply(Gate::h(q)); }
void Tableau::apply_x(std::size_t q) { apply(Gate::x(q)); }
void Tableau::apply_y(std::size_t q) { apply(Gate::y(q)); }
void Tableau::apply_z(std::size_t q) { apply(Gate::z(q)); }
void Tableau::apply_cnot(std::size_t c, std::size_t t) {
  apply(Gate::cnot(c, t));
}
void Tableau::apply_cz(std::size_t a, std::size_t b) { apply(Gate::cz(a, b)); }

void Tableau::apply_s(std::size_t q) {
  for (auto& row : destab_) {
    conj_s(row, q);
  }
  for (auto& row : stab_) {
    conj_s(row, q);
  }
}

void Tableau::apply_s_dag(std::size_t q) {
  apply_s(q);
  apply_s(q);
  apply_s(q);
}

void Tableau::apply_error(const PauliOp& e) {
  if (e.num_qubits() != n_) {
    throw std::invalid_argument("error size mismatch");
  }
  for (auto& row : destab_) {
    if (!row.commutes_with(e)) {
      row.set_phase((row.phase() + 2) & 3);
    }
  }
  for (auto& row : stab_) {
    if (!row.commutes_with(e)) {
      row.set_phase((row.phase() + 2) & 3);
    }
  }
}

MeasureResult Tableau::measure(std::size_t q, std::mt19937_64& rng) {
  if (q >= n_) {
    throw std::out_of_range("measured qubit out of range");
  }
  return measure_pauli(PauliOp::single(n_, q + 1, PauliKind::Z), rng);
}

MeasureResult Tableau::measure_pauli(const PauliOp& p, std::mt19937_64& rng) {
  if (p.num_qubits() != n_) {
    throw std::invalid_argument("measured operator size mismatch");
  }
  if (p.phase() & 1) {
    throw std::invalid_argument("measured operator must be Hermitian");
  }
  std::size_t pivot = n_;
  for (std::size_t i = 0; i < n_; ++i) {
    if (!stab_[i].commutes_with(p)) {
      pivot = i;
      break;
    }
  }
  if (pivot == n_) {
    // Deterministic: p is (up to sign) a product of stabilizer rows.
    int sign = expectation(p);
    if (sign == 0) {
      throw std::logic_error("operator commutes with all rows but is not in "
                             "the stabilizer group");
    }
    return {sign == 1 ? 0 : 1, true};
  }
  PauliOp old_pivot = stab_[pivot];
  for (std::size_t i = 0; i < n_; ++i) {
    if (i != pivot && !destab_[i].commutes_with(p)) {
      destab_[i] = old_pivot * destab_[i];
    }
    if (i != pivot && !stab_[i].commutes_with(p)) {
      stab_[i] = old_pivot * stab_[i];
    }
  }
  destab_[pivot] = old_pivot;
  int outcome = static_cast<int>(rng() & 1);
  stab_[pivot] = p;
  stab_[pivot].set_phase((p.phase() + 2 * outcome) & 3);
  return {outcome, false};
}

int Tableau::expectation(const PauliOp& p) const {
  if (p.num_qubits() != n_) {
    throw std::invalid_argument("operator size mismatch");
  }
  for (const auto& row : stab_) {
    if (!row.commutes_with(p)) {
      return 0;
    }
  }
  PauliOp acc(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (!destab_[i].commutes_with(p)) {
      acc = acc * stab_[i];
    }
  }
  if (acc.x_bits() != p.x_bits() || acc.z_bits() != p.z_bits()) {
    return 0;
  }
  return ((acc.phase() - p.phase()) & 3) == 0 ? 1 : -1;
}

void Tableau::force_stabilizer(const PauliOp& p, std::mt19937_64& rng) {
  for (std::size_t i = 0; i < n_; ++i) {
    if (!stab_[i].commutes_with(p)) {
      auto result = measure_pauli(p, rng);
      if (result.outcome == 1) {
        apply_error(destabilizer_row(i));
      }
      return;
    }
  }
  if (expectation(p) != 1) {
    throw std::logic_error("cannot force a deterministically violated "
                           "stabilizer");
  }
}

std::vector<PauliOp> Tableau::canonical_stabilizers() const {
  std::vector<PauliOp> rows = stab_;
  std::size_t rank = 0;
  auto column_bit = [&](const PauliOp& row, std::size_t col) {
    return col < n_ ? row.x_bit(col) : row.z_bit(col - n_);
  };
  for (std::size_t col = 0; col < 2 * n_ && rank < n_; ++col) {
    std::size_t found = rows.size();
    for (std::size_t i = rank; i < rows.size(); ++i) {
      if (column_bit(rows[i], col)) {
        found = i;
        break;
      }
    }
    if (found == rows.size()) {
      continue;
    }
    std::swap(rows[rank], rows[found]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != rank && column_bit(rows[i], col)) {
        rows[i] = rows[rank] * rows[i];
      }
    }
    ++rank;
  }
  return rows;
}

bool Tableau::same_state_as(const Tableau& other) const {
  return n_ == other.n_ &&
         canonical_stabilizers() == other.canonical_stabilizers();
}

void Tableau::check_invariants() const {
  for (std::size_t i = 0; i < n_; ++i) {
    if (stab_[i].phase() & 1) {
      throw std::logic_error("stabilizer row with imaginary sign");
    }
    if (destab_[i].commutes_with(stab_[i])) {
      throw std::logic_error("destabilizer commutes with its stabilizer");
    }
    for (std::size_t j = 0; j < n_; ++j) {
      if (i != j && !stab_[i].commutes_with(stab_[j])) {
        throw std::logic_error("stabilizer rows anti-commute");
      }
      if (i != j && !destab_[i].commutes_with(stab_[j])) {
        throw std::logic_error("destabilizer anti-commutes with foreign "
                               "stabilizer");
      }
      if (i != j && !destab_[i].commutes_with(destab_[j])) {
        throw std::logic_error("destabilizer rows anti-commute");
      }
    }
  }
}

std::string Tableau::dump() const {
  std::string out;
  for (const auto& row : stab_) {
    out += row.str();
    out += '\n';
  }
  return out;
}

}  // namespace tcsim
