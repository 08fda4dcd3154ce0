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

#include "tcsim/tcqec.hpp"

#include <stdexcept>

namespace tcsim {

std::vector<PauliOp> extended_generators(const StabilizerCode& code, int j) {
  if (j < 1 || j > static_cast<int>(code.n)) {
    throw std::out_of_range("tracked qubit out of range");
  }
  std::size_t j0 = static_cast<std::size_t>(j) - 1;
  std::size_t slot_a = code.n;
  std::size_t slot_b = code.n + 1;
  std::vector<PauliOp> out;
  out.reserve(code.generators.size());
  for (const auto& g : code.generators) {
    PauliOp ext = g.embedded(code.n + 2);
    if (g.x_bit(j0)) {
      ext.set_factor(slot_a, PauliKind::X);
    }
    if (g.z_bit(j0)) {
      ext.set_factor(slot_b, PauliKind::X);
    }
    out.push_back(ext);
  }
  return out;
}

ExtendedProtocol build_protocol(const StabilizerCode& code, int j) {
  auto report = validate(code);
  if (!report.ok()) {
    throw std::invalid_argument("invalid code: " + report.str());
  }
  if (j < 1 || j > static_cast<int>(code.n)) {
    throw std::out_of_range("tracked qubit out of range");
  }
  ExtendedProtocol protocol{
      .code = code,
      .tracked_qubit = j,
      .slot_a = code.n,
      .slot_b = code.n + 1,
      .entangle = {},
      .disentangle = {},
      .extended = extended_generators(code, j),
      .decoder = SingleErrorDecoder(code),
      .sigma_x_j = syndrome_of(code, PauliOp::single(code.n, j, PauliKind::X)),
      .sigma_z_j = syndrome_of(code, PauliOp::single(code.n, j, PauliKind::Z)),
      .sigma_y_j = syndrome_of(code, PauliOp::single(code.n, j, PauliKind::Y)),
  };
  auto j0 = static_cast<std::uint32_t>(j - 1);
  auto a = static_cast<std::uint32_t>(protocol.slot_a);
  auto b = static_cast<std::uint32_t>(protocol.slot_b);
  protocol.entangle.num_qubits = code.n + 2;
  protocol.entangle.append(Gate::cnot(j0, a));
  for (const auto& g : hcnot(j0, b)) {
    protocol.entangle.append(g);
  }
  protocol.disentangle.num_qubits = code.n + 2;
  for (auto it = protocol.entangle.gates.rbegin();
       it != protocol.entangle.gates.rend(); ++it) {
    protocol.disentangle.append(*it);
  }
  return protocol;
}

PauliOp protocol_error(const ExtendedProtocol& protocol, std::string_view slot,
                       PauliKind kind) {
  std::size_t q;
  if (slot == "A" || slot == "a") {
    q = protocol.slot_a;
  } else if (slot == "B" || slot == "b") {
    q = protocol.slot_b;
  } else {
    std::size_t value = 0;
    for (char c : slot) {
      if (c < '0' || c > '9') {
        throw std::invalid_argument("bad error slot: " + std::string(slot));
      }
      value = value * 10 + static_cast<std::size_t>(c - '0');
    }
    if (value < 1 || value > protocol.code.n) {
      throw std::out_of_range("error qubit out of range");
    }
    q = value - 1;
  }
  return PauliOp::single(protocol.code.n + 2, q + 1, kind);
}

namespace {

// Non-demolition readout of one Hermitian generator: ancilla in |+>,
// controlled application of each factor, then H and a Z measurement. The
// controlled-Y realized as CNOT then CZ equals controlled-(iY); the extra
// phase is undone with S-dagger on the ancilla.
int extract_generator_bit(Tableau& state, const PauliOp& g, std::size_t anc,
                          std::mt19937_64& rng) {
  auto a = static_cast<std::uint32_t>(anc);
  state.apply_h(a);
  for (std::size_t q = 0; q < g.num_qubits(); ++q) {
    auto t = static_cast<std::uint32_t>(q);
    switch (g.factor(q)) {
      case PauliKind::X:
        state.apply_cnot(a, t);
        break;
      case PauliKind::Z:
        state.apply_cz(a, t);
        break;
      case PauliKind::Y:
        state.apply_cnot(a, t);
        state.apply_cz(a, t);
        state.apply_s_dag(a);
        break;
      default:
        break;
    }
  }
  state.apply_h(a);
  auto result = state.measure(anc, rng);
  if (result.outcome == 1) {
    state.apply_x(a);  // reset for the next cycle
  }
  return result.outcome;
}

}  // namespace

CycleOutcome run_cycle(const ExtendedProtocol& protocol, Tableau& state,
                       const std::vector<PauliOp>& injected,
                       std::mt19937_64& rng) {
  if (state.num_qubits() != protocol.total_qubits()) {
    throw std::invalid_argument("state size does not match the protocol");
  }
  std::size_t total = protocol.total_qubits();
  state.apply(protocol.entangle);
  for (const auto& e : injected) {
    state.apply_error(e.embedded(total));
  }
  CycleOutcome out;
  out.sigma.bits.reserve(protocol.extended.size());
  for (std::size_t i = 0; i < protocol.extended.size(); ++i) {
    std::size_t anc = protocol.code.n + 2 + i;
    out.sigma.bits.push_back(static_cast<std::uint8_t>(
        extract_generator_bit(state, protocol.extended[i].embedded(total), anc,
                              rng)));
  }
  state.apply(protocol.disentangle);
  auto read_and_reset = [&](std::size_t slot) {
    auto result = state.measure(slot, rng);
    if (result.outcome == 1) {
      state.apply_x(slot);
    }
    return result.outcome;
  };
  out.ancilla_a = read_and_reset(protocol.slot_a);
  out.ancilla_b = read_and_reset(protocol.slot_b);
  return out;
}

std::string CorrectionDecision::describe() const {
  auto name_one = [](const PauliOp& e) {
    for (std::size_t q = 0; q < e.num_qubits(); ++q) {
      if (e.factor(q) != PauliKind::I) {
        return std::string(1, pauli_kind_char(e.factor(q))) + " on qubit " +
               std::to_string(q + 1);
      }
    }
    return std::string("identity");
  };
  switch (verdict) {
    case Verdict::no_error:
      return "no error";
    case Verdict::uncorrectable:
      return "uncorrectable";
    case Verdict::single:
      return "correct " + name_one(correction);
    case Verdict::double_error:
      return "correct " + name_one(*correlated) + " and " + name_one(*fresh);
  }
  return "?";
}

CorrectionDecision decide(const ExtendedProtocol& protocol,
                          const Syndrome& sigma, int ancilla_a,
                          int ancilla_b) {
  const auto& code = protocol.code;
  int j = protocol.tracked_qubit;
  CorrectionDecision decision;
  decision.correction = PauliOp(code.n);

  // Step 1: a syndrome naming the tracked qubit wins regardless of the
  // ancilla readout.
  const std::pair<const Syndrome*, PauliKind> tracked[] = {
      {&protocol.sigma_x_j, PauliKind::X},
      {&protocol.sigma_z_j, PauliKind::Z},
      {&protocol.sigma_y_j, PauliKind::Y},
  };
  for (const auto& [s, kind] : tracked) {
    if (!s->is_zero() && sigma == *s) {
      decision.verdict = Verdict::single;
      decision.correction = PauliOp::single(code.n, j, kind);
      return decision;
    }
  }

  if (ancilla_a == 0 && ancilla_b == 0) {
    auto result = protocol.decoder.decode(sigma);
    switch (result.status) {
      case DecodeStatus::none:
        decision.verdict = Verdict::no_error;
        return decision;
      case DecodeStatus::corrected:
        decision.verdict = Verdict::single;
        decision.correction = result.error;
        return decision;
      case DecodeStatus::uncorrectable:
        decision.verdict = Verdict::uncorrectable;
        return decision;
    }
  }

  // Relapse type: 10 bit-flip, 01 phase-flip, 11 bit-and-phase flip.
  PauliKind type = ancilla_a && ancilla_b ? PauliKind::Y
                   : ancilla_a           ? PauliKind::X
                                         : PauliKind::Z;
  PauliOp correlated = PauliOp::single(code.n, j, type);
  Syndrome sigma_new = sigma ^ syndrome_of(code, correlated);
  if (sigma_new.is_zero()) {
    decision.verdict = Verdict::single;
    decision.correction = correlated;
    return decision;
  }
  auto result = protocol.decoder.decode(sigma_new);
  if (result.status != DecodeStatus::corrected) {
    decision.verdict = Verdict::uncorrectable;
    return decision;
  }
  decision.verdict = Verdict::double_error;
  decision.correlated = correlated;
  decision.fresh = result.error;
  decision.correction = correlated * result.error;
  return decision;
}

FullCycleResult full_cycle(const ExtendedProtocol& protocol, Tableau& state,
                           const std::vector<PauliOp>& injected,
                           std::mt19937_64& rng) {
  FullCycleResult result;
  result.outcome = run_cycle(protocol, state, injected, rng);
  result.decision = decide(protocol, result.outcome.sigma,
                           result.outcome.ancilla_a, result.outcome.ancilla_b);
  if (result.decision.verdict != Verdict::uncorrectable &&
      !result.decision.correction.is_identity()) {
    state.apply_error(
        result.decision.correction.embedded(protocol.total_qubits()));
  }
  return result;
}

bool codeword_valid(const ExtendedProtocol& protocol, const Tableau& state) {
  for (const auto& g : protocol.code.generators) {
    if (state.expectation(g.embedded(protocol.total_qubits())) != 1) {
      return false;
    }
  }
  return true;
}

}  // namespace tcsim
