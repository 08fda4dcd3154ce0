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

#include "tcsim/noise.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "tcsim/tcqec.hpp"

namespace tcsim {

CorrelatedProbability correlated_probability(const NoiseParams& params,
                                             double t1, double t2) {
  if (t1 == t2) {
    throw std::invalid_argument("cycle times must differ");
  }
  if (params.delta <= 0.0) {
    throw std::invalid_argument("cycle period must be positive");
  }
  CorrelatedProbability p;
  p.uncorrelated = (params.epsilon / 2.0) * (params.epsilon / 2.0);
  double gap = t1 - t2;
  double ratio = params.lambda * params.delta / gap;
  p.correlated = ratio * ratio * ratio * ratio / 8.0;
  p.total = std::min(params.cap, p.uncorrelated + p.correlated);
  return p;
}

DecoherenceBudget gate_budget(double tau_dch, double tau_gate) {
  if (tau_dch <= 0.0 || tau_gate <= 0.0) {
    throw std::invalid_argument("times must be positive");
  }
  return {tau_dch, tau_gate, tau_dch / tau_gate};
}

namespace {

struct BudgetRow {
  const char* label;
  int dch_exp;
  int gate_exp;
};

constexpr BudgetRow kBudgetRows[] = {
    {"Nuclear spin", 4, -3},
    {"Trapped Indium ion", -1, -14},
    {"Quantum dots/charge", -9, -12},
    {"Quantum dots/spin", -6, -9},
    {"Optical cavity", -5, -14},
};

std::string pow10_str(int exp) { return "10^" + std::to_string(exp); }

}  // namespace

std::string render_budget_table() {
  std::ostringstream out;
  out << "Qubit implementation   tau_dch(sec)  tau_gate(sec)  n_gates\n";
  for (const auto& row : kBudgetRows) {
    auto budget =
        gate_budget(std::pow(10.0, row.dch_exp), std::pow(10.0, row.gate_exp));
    int gates_exp = static_cast<int>(std::lround(std::log10(budget.n_gates)));
    out << row.label;
    for (std::size_t pad = std::string(row.label).size(); pad < 23; ++pad) {
      out << ' ';
    }
    std::string dch = pow10_str(row.dch_exp);
    std::string gate = pow10_str(row.gate_exp);
    out << dch;
    for (std::size_t pad = dch.size(); pad < 14; ++pad) {
      out << ' ';
    }
    out << gate;
    for (std::size_t pad = gate.size(); pad < 15; ++pad) {
      out << ' ';
    }
    out << pow10_str(gates_exp) << '\n';
  }
  return out.str();
}

std::optional<CycleRecord> CycleHistory::corrected_in(int cycle) const {
  for (auto it = records.rbegin(); it != records.rend(); ++it) {
    if (it->cycle == cycle) {
      return *it;
    }
    if (it->cycle < cycle) {
      break;
    }
  }
  return std::nullopt;
}

std::vector<InjectedError> sample_cycle(const NoiseParams& params,
                                        const CycleHistory& history,
                                        std::size_t num_qubits,
                                        int cycle_index,
                                        std::mt19937_64& rng) {
  std::vector<InjectedError> out;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  constexpr PauliKind kTypes[] = {PauliKind::X, PauliKind::Z, PauliKind::Y};
  if (unit(rng) < std::min(params.cap, params.epsilon)) {
    int qubit = 1 + static_cast<int>(rng() % num_qubits);
    PauliKind type = kTypes[rng() % 3];
    out.push_back({qubit, type, false});
  }
  auto previous = history.corrected_in(cycle_index - 1);
  if (previous) {
    double ratio = params.lambda;  // gap of exactly one cycle period
    double relapse_p = std::min(params.cap, ratio * ratio * ratio * ratio / 8.0);
    if (unit(rng) < relapse_p) {
      PauliKind type = params.policy == RelapsePolicy::same_type
                           ? previous->type
                           : kTypes[rng() % 3];
      out.push_back({previous->qubit, type, true});
    }
  }
  return out;
}

namespace {

// SplitMix64 step; decorrelates per-trial streams derived from (seed, trial).
std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

MonteCarloStats monte_carlo(const StabilizerCode& code,
                            const NoiseParams& params, int cycles, int trials,
                            std::uint64_t seed) {
  MonteCarloStats stats;
  stats.code_name = code.name;
  stats.trials = trials;
  stats.cycles = cycles;
  stats.seed = seed;

  std::vector<std::optional<ExtendedProtocol>> protocols(code.n + 1);
  auto protocol_for = [&](int j) -> const ExtendedProtocol& {
    if (!protocols[j]) {
      protocols[j] = build_protocol(code, j);
    }
    return *protocols[j];
  };
  const std::size_t total = code.n + 2 + code.generators.size();
  StabilizerBasis basis(code);
  SingleErrorDecoder baseline(code);

  for (int trial = 0; trial < trials; ++trial) {
    std::mt19937_64 rng(mix(seed ^ mix(static_cast<std::uint64_t>(trial))));
    Tableau state = prepare_codeword(code, total, rng);
    CycleHistory history;
    PauliOp residual(code.n);
    PauliOp baseline_residual(code.n);
    int tracked = 1;
    for (int cycle = 0; cycle < cycles; ++cycle) {
      auto errors = sample_cycle(params, history, code.n, cycle, rng);
      const auto& protocol = protocol_for(tracked);
      std::vector<PauliOp> injected;
      for (const auto& e : errors) {
        injected.push_back(PauliOp::single(code.n + 2, e.qubit, e.type));
        auto data_error = PauliOp::single(code.n, e.qubit, e.type);
        residual = residual * data_error;
        baseline_residual = baseline_residual * data_error;
        (e.relapse ? stats.relapse_events : stats.new_error_events)++;
      }
      auto result = full_cycle(protocol, state, injected, rng);
      switch (result.decision.verdict) {
        case Verdict::no_error:
          stats.no_error++;
          break;
        case Verdict::single:
          stats.single++;
          break;
        case Verdict::double_error:
          stats.double_error++;
          break;
        case Verdict::uncorrectable:
          stats.uncorrectable++;
          break;
      }
      bool extended_failed = result.decision.verdict == Verdict::uncorrectable;
      if (!extended_failed) {
        residual = residual * result.decision.correction;
        extended_failed = !basis.contains(residual);
      }
      // Baseline: plain weight-1 decoding of the same accumulated stream.
      auto s = syndrome_of(code, baseline_residual);
      auto decoded = baseline.decode(s);
      bool baseline_failed;
      if (decoded.status == DecodeStatus::uncorrectable) {
        baseline_failed = true;
      } else {
        if (decoded.status == DecodeStatus::corrected) {
          baseline_residual = baseline_residual * decoded.error;
        }
        baseline_failed = !basis.contains(baseline_residual);
      }
      if (baseline_failed) {
        stats.baseline_failures++;
        baseline_residual = PauliOp(code.n);
      }
      if (extended_failed) {
        stats.extended_failures++;
        state = prepare_codeword(code, total, rng);
        residual = PauliOp(code.n);
        tracked = 1;
        continue;
      }
      // Track whichever qubit the decision corrected for the next cycle;
      // for a double correction the new error is the most recent one.
      const auto& d = result.decision;
      const PauliOp* corrected = nullptr;
      if (d.verdict == Verdict::single) {
        corrected = &d.correction;
      } else if (d.verdict == Verdict::double_error && d.fresh) {
        corrected = &*d.fresh;
      }
      if (corrected != nullptr) {
        for (std::size_t q = 0; q < code.n; ++q) {
          if (corrected->factor(q) != PauliKind::I) {
            history.add(cycle, static_cast<int>(q) + 1, corrected->factor(q));
            tracked = static_cast<int>(q) + 1;
            break;
          }
        }
      }
    }
  }
  return stats;
}

std::string render_stats_kv(const MonteCarloStats& stats) {
  std::ostringstream out;
  out << "code=" << stats.code_name << '\n'
      << "trials=" << stats.trials << '\n'
      << "cycles=" << stats.cycles << '\n'
      << "seed=" << stats.seed << '\n'
      << "no_error=" << stats.no_error << '\n'
      << "single=" << stats.single << '\n'
      << "double=" << stats.double_error << '\n'
      << "uncorrectable=" << stats.uncorrectable << '\n'
      << "new_error_events=" << stats.new_error_events << '\n'
      << "relapse_events=" << stats.relapse_events << '\n'
      << "extended_failures=" << stats.extended_failures << '\n'
      << "baseline_failures=" << stats.baseline_failures << '\n';
  return out.str();
}

std::string render_stats_table(const MonteCarloStats& stats) {
  std::ostringstream out;
  long total_cycles = static_cast<long>(stats.trials) * stats.cycles;
  out << "code " << stats.code_name << ", " << stats.trials << " trials x "
      << stats.cycles << " cycles, seed " << stats.seed << "\n\n";
  out << "verdict        count\n";
  out << "no_error       " << stats.no_error << '\n';
  out << "single         " << stats.single << '\n';
  out << "double         " << stats.double_error << '\n';
  out << "uncorrectable  " << stats.uncorrectable << '\n';
  out << '\n';
  out << "injected: " << stats.new_error_events << " new, "
      << stats.relapse_events << " relapse\n";
  out << "failures: extended " << stats.extended_failures << ", baseline "
      << stats.baseline_failures << " (of " << total_cycles << " cycles)\n";
  return out.str();
}

}  // namespace tcsim
