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

#include "tcsim/statevec.hpp"

#include <cmath>
#include <stdexcept>

namespace tcsim {

namespace {
constexpr std::complex<double> kI{0.0, 1.0};
constexpr double kInvSqrt2 = 0.7071067811865475244;
}  // namespace

DenseState::DenseState(std::size_t n) : n_(n) {
  if (n == 0 || n > kMaxQubits) {
    throw std::invalid_argument("dense oracle supports 1 to 12 qubits");
  }
  amps_.assign(std::size_t{1} << n, 0.0);
  amps_[0] = 1.0;
}

DenseState DenseState::from_amplitudes(std::size_t n,
                                       std::vector<std::complex<double>> amps) {
  DenseState state(n);
  if (amps.size() != state.amps_.size()) {
    throw std::invalid_argument("amplitude count must be 2^n");
  }
  state.amps_ = std::move(amps);
  if (std::abs(state.norm() - 1.0) > 1e-12) {
    throw std::invalid_argument("amplitudes are not normalized");
  }
  return state;
}

void DenseState::apply(const Gate& g) {
  const std::size_t dim = amps_.size();
  // Qubit k (0-based) corresponds to bit n-1-k of the basis index.
  auto bit_of = [&](std::uint32_t q) {
    return std::size_t{1} << (n_ - 1 - q);
  };
  switch (g.kind) {
    case GateKind::H: {
      std::size_t b = bit_of(g.q0);
      for (std::size_t i = 0; i < dim; ++i) {
        if (i & b) {
          continue;
        }
        auto a0 = amps_[i];
        auto a1 = amps_[i | b];
        amps_[i] = kInvSqrt2 * (a0 + a1);
        amps_[i | b] = kInvSqrt2 * (a0 - a1);
      }
      break;
    }
    case GateKind::X: {
      std::size_t b = bit_of(g.q0);
      for (std::size_t i = 0; i < dim; ++i) {
        if (!(i & b)) {
          std::swap(amps_[i], amps_[i | b]);
        }
      }
      break;
    }
    case GateKind::Y: {
      std::size_t b = bit_of(g.q0);
      for (std::size_t i = 0; i < dim; ++i) {
        if (!(i & b)) {
          auto a0 = amps_[i];
          auto a1 = amps_[i | b];
          amps_[i] = -kI * a1;
          amps_[i | b] = kI * a0;
        }
      }
      break;
    }
    case GateKind::Z: {
      std::size_t b = bit_of(g.q0);
      for (std::size_t i = 0; i < dim; ++i) {
        if (i & b) {
          amps_[i] = -amps_[i];
        }
      }
      break;
    }
    case GateKind::CNOT: {
      std::size_t c = bit_of(g.q0);
      std::size_t t = bit_of(g.q1);
      for (std::size_t i = 0; i < dim; ++i) {
        if ((i & c) && !(i & t)) {
          std::swap(amps_[i], amps_[i | t]);
        }
      }
      break;
    }
    case GateKind::CZ: {
      std::size_t a = bit_of(g.q0);
      std::size_t b = bit_of(g.q1);
      for (std::size_t i = 0; i < dim; ++i) {
        if ((i & a) && (i & b)) {
          amps_[i] = -amps_[i];
        }
      }
      break;
    }
    case GateKind::Measure:
      throw std::invalid_argument(
          "oracle has no measurement collapse; use probability_of_one");
  }
}

void DenseState::run(const Circuit& c) {
  if (c.num_qubits > n_) {
    throw std::invalid_argument("circuit larger than state");
  }
  for (const auto& g : c.gates) {
    apply(g);
  }
}

void DenseState::apply_pauli(const PauliOp& p) {
  if (p.num_qubits() != n_) {
    throw std::invalid_argument("operator size mismatch");
  }
  for (std::size_t q = 0; q < n_; ++q) {
    switch (p.factor(q)) {
      case PauliKind::X:
        apply(Gate::x(static_cast<std::uint32_t>(q)));
        break;
      case PauliKind::Y:
        apply(Gate::y(static_cast<std::uint32_t>(q)));
        break;
      case PauliKind::Z:
        apply(Gate::z(static_cast<std::uint32_t>(q)));
        break;
      default:
        break;
    }
  }
  static const std::complex<double> kPhases[4] = {1.0, kI, -1.0, -kI};
  auto scale = kPhases[p.phase()];
  if (scale != std::complex<double>{1.0, 0.0}) {
    for (auto& a : amps_) {
      a *= scale;
    }
  }
}

double DenseState::expectation(const PauliOp& p) const {
  DenseState transformed = *this;
  transformed.apply_pauli(p);
  std::complex<double> inner = 0.0;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    inner += std::conj(amps_[i]) * transformed.amps_[i];
  }
  return inner.real();
}

double DenseState::fidelity(const DenseState& other) const {
  if (other.n_ != n_) {
    throw std::invalid_argument("state size mismatch");
  }
  std::complex<double> inner = 0.0;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    inner += std::conj(amps_[i]) * other.amps_[i];
  }
  return std::norm(inner);
}

double DenseState::probability_of_one(std::size_t q) const {
  if (q >= n_) {
    throw std::out_of_range("qubit out of range");
  }
  std::size_t b = std::size_t{1} << (n_ - 1 - q);
  double total = 0.0;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if (i & b) {
      total += std::norm(amps_[i]);
    }
  }
  return total;
}

double DenseState::norm() const {
  double total = 0.0;
  for (const auto& a : amps_) {
    total += std::norm(a);
  }
  return std::sqrt(total);
}

}  // namespace tcsim
