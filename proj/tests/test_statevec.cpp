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

#include <cmath>
#include <random>

#include "oracle.hpp"
#include "tcsim/codes.hpp"
#include "tcsim/statevec.hpp"

using namespace tcsim;

TEST_CASE("H on |0> gives uniform amplitudes") {
  DenseState s(1);
  s.apply(Gate::h(0));
  CHECK(std::abs(s.amplitudes()[0] - oracle::cd{std::sqrt(0.5), 0}) < 1e-12);
  CHECK(std::abs(s.amplitudes()[1] - oracle::cd{std::sqrt(0.5), 0}) < 1e-12);
  CHECK(std::abs(s.probability_of_one(0) - 0.5) < 1e-12);
}

TEST_CASE("CNOT maps |10> to |11>") {
  DenseState s(2);
  s.apply(Gate::x(0));
  s.apply(Gate::cnot(0, 1));
  CHECK(std::abs(s.amplitudes()[3] - oracle::cd{1, 0}) < 1e-12);
}

TEST_CASE("qubit 1 is the most significant index bit") {
  DenseState s(5);
  s.apply(Gate::x(0));  // |10000>
  CHECK(std::abs(s.amplitudes()[16] - oracle::cd{1, 0}) < 1e-12);
}

TEST_CASE("the oracle refuses more than 12 qubits") {
  CHECK_THROWS(DenseState(13));
  CHECK_NOTHROW(DenseState(12));
}

TEST_CASE("measure gates are rejected") {
  DenseState s(1);
  CHECK_THROWS(s.apply(Gate::measure(0)));
}

TEST_CASE("unitarity preserves the norm") {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 30; ++i) {
    std::size_t n = 1 + rng() % 6;
    DenseState s(n);
    s.run(oracle::random_clifford(n, 40, rng));
    CHECK(std::abs(s.norm() - 1.0) < 1e-12);
  }
}

TEST_CASE("five-qubit logical states are stabilized by all generators") {
  auto code = builtin_code("five_qubit");
  for (int which : {0, 1}) {
    auto s = logical_state(code, which);
    CHECK(std::abs(s.norm() - 1.0) < 1e-12);
    for (const auto& g : code.generators) {
      CHECK(std::abs(s.expectation(g) - 1.0) < 1e-12);
    }
  }
  // The logical Z distinguishes them.
  auto zl = PauliOp::from_string("ZZZZZ");
  CHECK(std::abs(logical_state(code, 0).expectation(zl) - 1.0) < 1e-12);
  CHECK(std::abs(logical_state(code, 1).expectation(zl) + 1.0) < 1e-12);
}

TEST_CASE("Z1 expectation on |+>|0> is zero") {
  DenseState s(2);
  s.apply(Gate::h(0));
  CHECK(std::abs(s.expectation(PauliOp::from_string("ZI"))) < 1e-12);
  CHECK(std::abs(s.expectation(PauliOp::from_string("XI")) - 1.0) < 1e-12);
}

TEST_CASE("fidelity endpoints") {
  DenseState zero(1), one(1);
  one.apply(Gate::x(0));
  CHECK(std::abs(zero.fidelity(zero) - 1.0) < 1e-12);
  CHECK(std::abs(zero.fidelity(one)) < 1e-12);
}

TEST_CASE("apply_pauli matches the dense matrix") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 40; ++i) {
    std::size_t n = 1 + rng() % 3;
    auto c = oracle::random_clifford(n, 10, rng);
    auto p = oracle::random_pauli(n, rng);
    DenseState s(n);
    s.run(c);
    auto before = s.amplitudes();
    s.apply_pauli(p);
    auto m = oracle::pauli_matrix(p);
    std::size_t dim = std::size_t{1} << n;
    for (std::size_t r = 0; r < dim; ++r) {
      oracle::cd want{0, 0};
      for (std::size_t k = 0; k < dim; ++k) {
        want += m[r * dim + k] * before[k];
      }
      CHECK(std::abs(s.amplitudes()[r] - want) < 1e-12);
    }
  }
}

TEST_CASE("run accepts circuits on a prefix of the register") {
  Circuit c{2, {Gate::x(1)}};
  DenseState s(3);
  s.run(c);
  CHECK(std::abs(s.probability_of_one(1) - 1.0) < 1e-12);
  CHECK(std::abs(s.probability_of_one(2)) < 1e-12);
}
