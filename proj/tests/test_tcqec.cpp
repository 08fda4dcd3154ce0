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

#include <doctest.h>

#include <random>

#include "tcsim/statevec.hpp"
#include "tcsim/tcqec.hpp"

using namespace tcsim;

namespace {

Tableau prepared(const ExtendedProtocol& protocol, std::mt19937_64& rng) {
  return prepare_codeword(protocol.code, protocol.total_qubits(), rng);
}

}  // namespace

TEST_CASE("extended generators for the Steane code, tracked qubit 3") {
  auto code = builtin_code("steane");
  auto ext = extended_generators(code, 3);
  REQUIRE(ext.size() == 6);
  // slots: A = qubit 8, B = qubit 9 (1-based)
  CHECK(ext[0].str() == "+IIIXXXXII");  // M1 has no support on qubit 3
  CHECK(ext[1].str() == "+IXXIIXXXI");  // X on 3 -> X_A
  CHECK(ext[2].str() == "+XIXIXIXXI");
  CHECK(ext[3].str() == "+IIIZZZZII");
  CHECK(ext[4].str() == "+IZZIIZZIX");  // Z on 3 -> X_B
  CHECK(ext[5].str() == "+ZIZIZIZIX");
  for (std::size_t i = 0; i < ext.size(); ++i) {
    for (std::size_t j = i + 1; j < ext.size(); ++j) {
      CHECK(ext[i].commutes_with(ext[j]));
    }
  }
  CHECK_THROWS(extended_generators(code, 0));
  CHECK_THROWS(extended_generators(code, 8));
}

TEST_CASE("a tracked qubit outside every generator leaves them unchanged") {
  StabilizerCode code;
  code.name = "toy";
  code.n = 3;
  code.k = 2;
  code.generators = {PauliOp::from_string("ZZI")};
  auto ext = extended_generators(code, 3);
  CHECK(ext[0] == PauliOp::from_string("ZZI").embedded(5));
}

TEST_CASE("protocol circuits wire the tracked qubit to both ancillas") {
  auto protocol = build_protocol(builtin_code("steane"), 3);
  REQUIRE(protocol.entangle.gates.size() == 4);
  CHECK(protocol.entangle.gates[0] == Gate::cnot(2, 7));
  CHECK(protocol.entangle.gates[1] == Gate::h(2));
  CHECK(protocol.entangle.gates[2] == Gate::cnot(2, 8));
  CHECK(protocol.entangle.gates[3] == Gate::h(2));
  REQUIRE(protocol.disentangle.gates.size() == 4);
  for (int i = 0; i < 4; ++i) {
    CHECK(protocol.disentangle.gates[i] == protocol.entangle.gates[3 - i]);
  }
}

TEST_CASE("CNOT and HCNOT propagate errors as advertised") {
  // X on the control copies onto the CNOT target.
  Circuit plain{2, {Gate::cnot(0, 1)}};
  CHECK(conjugated(PauliOp::from_string("XI"), plain) ==
        PauliOp::from_string("XX"));
  // Z on the control copies onto the HCNOT target as X.
  Circuit hc{2, {}};
  for (const auto& g : hcnot(0, 1)) {
    hc.append(g);
  }
  CHECK(conjugated(PauliOp::from_string("ZI"), hc) ==
        PauliOp::from_string("ZX"));
}

TEST_CASE("error-free cycle is non-demolition") {
  std::mt19937_64 rng(61);
  auto protocol = build_protocol(builtin_code("steane"), 3);
  auto state = prepared(protocol, rng);
  auto before = state.canonical_stabilizers();
  auto result = full_cycle(protocol, state, {}, rng);
  CHECK(result.outcome.sigma.is_zero());
  CHECK(result.outcome.ancilla_a == 0);
  CHECK(result.outcome.ancilla_b == 0);
  CHECK(result.decision.verdict == Verdict::no_error);
  CHECK(state.canonical_stabilizers() == before);
  CHECK(codeword_valid(protocol, state));
}

TEST_CASE("a phase-flip relapse alone") {
  std::mt19937_64 rng(62);
  auto protocol = build_protocol(builtin_code("steane"), 3);
  auto state = prepared(protocol, rng);
  auto z3 = protocol_error(protocol, "3", PauliKind::Z);
  auto result = full_cycle(protocol, state, {z3}, rng);
  CHECK(result.outcome.sigma.str() == "011000");
  CHECK(result.outcome.ancilla_a == 0);
  CHECK(result.outcome.ancilla_b == 1);
  CHECK(result.decision.verdict == Verdict::single);
  CHECK(result.decision.correction ==
        PauliOp::single(7, 3, PauliKind::Z));
  CHECK(result.decision.describe() == "correct Z on qubit 3");
  CHECK(codeword_valid(protocol, state));
}

TEST_CASE("a bit-flip relapse raises ancilla A") {
  std::mt19937_64 rng(63);
  auto protocol = build_protocol(builtin_code("steane"), 3);
  auto state = prepared(protocol, rng);
  auto x3 = protocol_error(protocol, "3", PauliKind::X);
  auto result = full_cycle(protocol, state, {x3}, rng);
  CHECK(result.outcome.sigma.str() == "000011");
  CHECK(result.outcome.ancilla_a == 1);
  CHECK(result.outcome.ancilla_b == 0);
  CHECK(result.decision.verdict == Verdict::single);
  CHECK(codeword_valid(protocol, state));
}

TEST_CASE("a bit-phase-flip relapse raises both ancillas") {
  std::mt19937_64 rng(64);
  auto protocol = build_protocol(builtin_code("steane"), 3);
  auto state = prepared(protocol, rng);
  auto y3 = protocol_error(protocol, "3", PauliKind::Y);
  auto result = full_cycle(protocol, state, {y3}, rng);
  CHECK(result.outcome.sigma.str() == "011011");
  CHECK(result.outcome.ancilla_a == 1);
  CHECK(result.outcome.ancilla_b == 1);
  CHECK(result.decision.verdict == Verdict::single);
  CHECK(result.decision.correction == PauliOp::single(7, 3, PauliKind::Y));
  CHECK(codeword_valid(protocol, state));
}

TEST_CASE("a lone new error away from the tracked qubit") {
  std::mt19937_64 rng(65);
  auto protocol = build_protocol(builtin_code("steane"), 3);
  auto state = prepared(protocol, rng);
  auto z6 = protocol_error(protocol, "6", PauliKind::Z);
  auto result = full_cycle(protocol, state, {z6}, rng);
  CHECK(result.outcome.sigma.str() == "110000");
  CHECK(result.outcome.ancilla_a == 0);
  CHECK(result.outcome.ancilla_b == 0);
  CHECK(result.decision.verdict == Verdict::single);
  CHECK(result.decision.correction == PauliOp::single(7, 6, PauliKind::Z));
  CHECK(result.decision.describe() == "correct Z on qubit 6");
  CHECK(codeword_valid(protocol, state));
}

TEST_CASE("a relapse combined with a new error") {
  std::mt19937_64 rng(66);
  auto protocol = build_protocol(builtin_code("steane"), 3);
  auto state = prepared(protocol, rng);
  auto z3 = protocol_error(protocol, "3", PauliKind::Z);
  auto z5 = protocol_error(protocol, "5", PauliKind::Z);
  auto result = full_cycle(protocol, state, {z3, z5}, rng);
  CHECK(result.outcome.sigma.str() == "110000");
  CHECK(result.outcome.ancilla_a == 0);
  CHECK(result.outcome.ancilla_b == 1);
  CHECK(result.decision.verdict == Verdict::double_error);
  CHECK(result.decision.describe() ==
        "correct Z on qubit 3 and Z on qubit 5");
  CHECK(codeword_valid(protocol, state));
}

TEST_CASE("decide on its own reproduces the three canonical outcomes") {
  auto protocol = build_protocol(builtin_code("steane"), 3);
  auto one = decide(protocol, Syndrome::from_string("011000"), 1, 1);
  CHECK(one.verdict == Verdict::single);
  CHECK(one.correction == PauliOp::single(7, 3, PauliKind::Z));

  auto two = decide(protocol, Syndrome::from_string("110000"), 0, 0);
  CHECK(two.verdict == Verdict::single);
  CHECK(two.correction == PauliOp::single(7, 6, PauliKind::Z));

  auto three = decide(protocol, Syndrome::from_string("110000"), 0, 1);
  CHECK(three.verdict == Verdict::double_error);
  CHECK(*three.correlated == PauliOp::single(7, 3, PauliKind::Z));
  CHECK(*three.fresh == PauliOp::single(7, 5, PauliKind::Z));

  auto nothing = decide(protocol, Syndrome::zeros(6), 0, 0);
  CHECK(nothing.verdict == Verdict::no_error);
}

TEST_CASE("scenario 4: phase error on ancilla A backpropagates to qubit j") {
  std::mt19937_64 rng(67);
  auto protocol = build_protocol(builtin_code("steane"), 3);
  auto state = prepared(protocol, rng);
  auto za = protocol_error(protocol, "A", PauliKind::Z);
  auto result = full_cycle(protocol, state, {za}, rng);
  CHECK(result.decision.verdict == Verdict::single);
  CHECK(result.decision.correction == PauliOp::single(7, 3, PauliKind::Z));
  CHECK(codeword_valid(protocol, state));
}

TEST_CASE("scenario 5: relapse plus ancilla error collapses to one error") {
  std::mt19937_64 rng(68);
  auto protocol = build_protocol(builtin_code("steane"), 3);
  auto state = prepared(protocol, rng);
  auto x3 = protocol_error(protocol, "3", PauliKind::X);
  auto za = protocol_error(protocol, "A", PauliKind::Z);
  auto result = full_cycle(protocol, state, {x3, za}, rng);
  CHECK(result.outcome.sigma.str() == "011011");
  CHECK(result.decision.verdict == Verdict::single);
  CHECK(result.decision.correction == PauliOp::single(7, 3, PauliKind::Y));
  CHECK(codeword_valid(protocol, state));
}

TEST_CASE("ancilla readouts are deterministic given the error") {
  auto protocol = build_protocol(builtin_code("steane"), 3);
  auto y3 = protocol_error(protocol, "3", PauliKind::Y);
  CycleOutcome first;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    std::mt19937_64 rng(seed);
    auto state = prepared(protocol, rng);
    auto out = run_cycle(protocol, state, {y3}, rng);
    if (seed == 1) {
      first = out;
    } else {
      CHECK(out.sigma == first.sigma);
      CHECK(out.ancilla_a == first.ancilla_a);
      CHECK(out.ancilla_b == first.ancilla_b);
    }
  }
}

TEST_CASE("exhaustive Steane double-error suite, extended vs baseline") {
  auto code = builtin_code("steane");
  SingleErrorDecoder baseline(code);
  StabilizerBasis basis(code);
  std::mt19937_64 rng(70);
  int cases = 0, corrected = 0, baseline_failures = 0;
  for (int j = 1; j <= 7; ++j) {
    auto protocol = build_protocol(code, j);
    for (auto tc : {PauliKind::X, PauliKind::Z, PauliKind::Y}) {
      for (int i = 1; i <= 7; ++i) {
        if (i == j) {
          continue;
        }
        for (auto nk : {PauliKind::X, PauliKind::Z, PauliKind::Y}) {
          ++cases;
          auto state = prepared(protocol, rng);
          auto relapse = protocol_error(protocol, std::to_string(j), tc);
          auto fresh = protocol_error(protocol, std::to_string(i), nk);
          auto result = full_cycle(protocol, state, {relapse, fresh}, rng);
          bool ok = result.decision.verdict == Verdict::double_error &&
                    *result.decision.correlated ==
                        PauliOp::single(7, j, tc) &&
                    *result.decision.fresh == PauliOp::single(7, i, nk) &&
                    codeword_valid(protocol, state);
          if (ok) {
            ++corrected;
          } else {
            CAPTURE(j);
            CAPTURE(i);
            FAIL_CHECK("extended protocol missed a double error");
          }

          // Baseline: a plain weight-1 decoder facing the same pair.
          auto pair = PauliOp::single(7, j, tc) * PauliOp::single(7, i, nk);
          auto decoded = baseline.decode(syndrome_of(code, pair));
          bool failed = decoded.status != DecodeStatus::corrected;
          if (!failed) {
            auto residual = pair * decoded.error;
            failed = !basis.contains(residual);
          }
          if (failed) {
            ++baseline_failures;
          }
        }
      }
    }
  }
  CHECK(cases == 378);
  CHECK(corrected == 378);
  CHECK(baseline_failures == 378);
}

TEST_CASE("regression: relapse X3 with new error Z4") {
  std::mt19937_64 rng(71);
  auto code = builtin_code("steane");
  auto protocol = build_protocol(code, 3);
  auto state = prepared(protocol, rng);
  auto x3 = protocol_error(protocol, "3", PauliKind::X);
  auto z4 = protocol_error(protocol, "4", PauliKind::Z);
  auto result = full_cycle(protocol, state, {x3, z4}, rng);
  CHECK(result.outcome.sigma.str() == "100011");
  CHECK(result.outcome.ancilla_a == 1);
  CHECK(result.outcome.ancilla_b == 0);
  CHECK(result.decision.verdict == Verdict::double_error);
  CHECK(*result.decision.correlated == PauliOp::single(7, 3, PauliKind::X));
  CHECK(*result.decision.fresh == PauliOp::single(7, 4, PauliKind::Z));
  CHECK(codeword_valid(protocol, state));
  // after correction the plain syndrome is trivial again
  for (const auto& g : code.generators) {
    CHECK(state.expectation(g.embedded(protocol.total_qubits())) == 1);
  }
}

TEST_CASE("oracle check: entangle and disentangle cancel exactly") {
  auto code = builtin_code("steane");
  auto protocol = build_protocol(code, 3);
  DenseState state(9);
  state.run(*code.encoding_circuit);
  DenseState reference = state;
  state.run(protocol.entangle);
  // Every extended generator stabilizes the entangled state, so the
  // syndrome extraction is non-demolition by construction.
  for (const auto& g : protocol.extended) {
    CHECK(std::abs(state.expectation(g.embedded(9)) - 1.0) < 1e-10);
  }
  state.run(protocol.disentangle);
  CHECK(std::abs(state.fidelity(reference) - 1.0) < 1e-10);
}

TEST_CASE("five-qubit protocol handles a plain double error") {
  std::mt19937_64 rng(73);
  auto code = builtin_code("five_qubit");
  auto protocol = build_protocol(code, 2);
  auto state = prepared(protocol, rng);
  auto relapse = protocol_error(protocol, "2", PauliKind::X);
  auto fresh = protocol_error(protocol, "4", PauliKind::Z);
  auto result = full_cycle(protocol, state, {relapse, fresh}, rng);
  CHECK(result.decision.verdict != Verdict::uncorrectable);
  CHECK(codeword_valid(protocol, state));
}
