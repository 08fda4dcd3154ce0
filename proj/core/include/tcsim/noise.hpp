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

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tcsim/codes.hpp"

namespace tcsim {

enum class RelapsePolicy { same_type, uniform_xyz };

struct NoiseParams {
  double epsilon = 0.0;  // per-cycle new-error probability
  double lambda = 0.0;   // qubit-bath coupling
  double delta = 1.0;    // error-correction cycle period
  RelapsePolicy policy = RelapsePolicy::same_type;
  double cap = 1.0;      // probability ceiling
};

struct CorrelatedProbability {
  double uncorrelated = 0.0;  // (epsilon / 2)^2
  double correlated = 0.0;    // lambda^4 delta^4 / (8 (t1 - t2)^4)
  double total = 0.0;         // sum, capped
};

/// The two-cycle error probability: the constant-rate term plus the
/// algebraically decaying correlation term. Throws when t1 == t2.
CorrelatedProbability correlated_probability(const NoiseParams& params,
                                             double t1, double t2);

struct DecoherenceBudget {
  double tau_dch = 0.0;
  double tau_gate = 0.0;
  double n_gates = 0.0;  // tau_dch / tau_gate
};

DecoherenceBudget gate_budget(double tau_dch, double tau_gate);

/// Gate-budget reference rows (nuclear spin through optical cavity),
/// rendered with power-of-ten columns.
std::string render_budget_table();

struct CycleRecord {
  int cycle = 0;   // cycle index the correction happened in
  int qubit = 0;   // 1-based
  PauliKind type = PauliKind::I;
};

/// Append-only per-trial record of which qubit was corrected when; only the
/// immediately preceding cycle matters for relapse.
struct CycleHistory {
  std::vector<CycleRecord> records;
  void add(int cycle, int qubit, PauliKind type) {
    records.push_back({cycle, qubit, type});
  }
  std::optional<CycleRecord> corrected_in(int cycle) const;
};

struct InjectedError {
  int qubit = 0;  // 1-based data qubit
  PauliKind type = PauliKind::I;
  bool relapse = false;
};

/// Per-cycle draw: with probability epsilon one new error on a uniformly
/// random (qubit, type); independently, if the previous cycle corrected a
/// qubit, that qubit relapses with the correlation term at a one-cycle gap
/// (lambda^4 / 8, capped), with the type chosen per policy.
std::vector<InjectedError> sample_cycle(const NoiseParams& params,
                                        const CycleHistory& history,
                                        std::size_t num_qubits,
                                        int cycle_index, std::mt19937_64& rng);

struct MonteCarloStats {
  std::string code_name;
  int trials = 0;
  int cycles = 0;
  std::uint64_t seed = 0;
  long no_error = 0;
  long single = 0;
  long double_error = 0;
  long uncorrectable = 0;
  long new_error_events = 0;
  long relapse_events = 0;
  long extended_failures = 0;  // extended-protocol logical failures
  long baseline_failures = 0;  // plain single-error decoder on same stream
};

/// Repeated protocol cycles under the noise model, with the tracked qubit
/// following the previous cycle's correction, against a baseline
/// single-error decoder consuming the identical error stream. Per-trial RNG
/// streams are derived from (seed, trial), so results are schedule-independent.
MonteCarloStats monte_carlo(const StabilizerCode& code,
                            const NoiseParams& params, int cycles, int trials,
                            std::uint64_t seed);

std::string render_stats_kv(const MonteCarloStats& stats);
std::string render_stats_table(const MonteCarloStats& stats);

}  // namespace tcsim
