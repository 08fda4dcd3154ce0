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

#include <benchmark/benchmark.h>

#include <random>

#include "tcsim/noise.hpp"
#include "tcsim/tcqec.hpp"

namespace {

tcsim::Circuit random_circuit(std::size_t n, std::size_t depth,
                              std::mt19937_64& rng) {
  tcsim::Circuit c;
  c.num_qubits = n;
  for (std::size_t i = 0; i < depth; ++i) {
    auto a = static_cast<std::uint32_t>(rng() % n);
    switch (rng() % 3) {
      case 0:
        c.append(tcsim::Gate::h(a));
        break;
      case 1: {
        auto b = static_cast<std::uint32_t>(rng() % n);
        while (b == a) {
          b = static_cast<std::uint32_t>(rng() % n);
        }
        c.append(tcsim::Gate::cnot(a, b));
        break;
      }
      default:
        c.append(tcsim::Gate::z(a));
        break;
    }
  }
  return c;
}

void BM_TableauRandomCircuit(benchmark::State& state) {
  std::mt19937_64 rng(1);
  auto n = static_cast<std::size_t>(state.range(0));
  auto circuit = random_circuit(n, 200, rng);
  for (auto _ : state) {
    tcsim::Tableau t(n);
    t.apply(circuit);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_TableauRandomCircuit)->Arg(16)->Arg(64)->Arg(256);

void BM_SyndromeTable(benchmark::State& state) {
  auto code = tcsim::builtin_code("steane");
  for (auto _ : state) {
    auto table = tcsim::build_syndrome_table(code);
    benchmark::DoNotOptimize(table);
  }
}
BENCHMARK(BM_SyndromeTable);

void BM_FullCycle(benchmark::State& state) {
  auto code = tcsim::builtin_code("steane");
  auto protocol = tcsim::build_protocol(code, 3);
  std::mt19937_64 rng(2);
  auto relapse = tcsim::protocol_error(protocol, "3", tcsim::PauliKind::Z);
  auto fresh = tcsim::protocol_error(protocol, "5", tcsim::PauliKind::Z);
  for (auto _ : state) {
    auto t = tcsim::prepare_codeword(code, protocol.total_qubits(), rng);
    auto result = tcsim::full_cycle(protocol, t, {relapse, fresh}, rng);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_FullCycle);

void BM_Distance(benchmark::State& state) {
  auto code = tcsim::builtin_code("steane");
  for (auto _ : state) {
    benchmark::DoNotOptimize(tcsim::distance(code));
  }
}
BENCHMARK(BM_Distance);

void BM_MonteCarlo(benchmark::State& state) {
  auto code = tcsim::builtin_code("steane");
  tcsim::NoiseParams params;
  params.epsilon = 0.1;
  params.lambda = 1.2;
  for (auto _ : state) {
    auto stats = tcsim::monte_carlo(code, params, 20, 5, 3);
    benchmark::DoNotOptimize(stats);
  }
}
BENCHMARK(BM_MonteCarlo);

}  // namespace

BENCHMARK_MAIN();
