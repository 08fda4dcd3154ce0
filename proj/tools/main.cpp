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

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tcsim/codes.hpp"
#include "tcsim/noise.hpp"
#include "tcsim/tcqec.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitUncorrectable = 2;
constexpr int kExitUsage = 3;

struct CliError : std::runtime_error {
  int code;
  CliError(int code, const std::string& message)
      : std::runtime_error(message), code(code) {}
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw CliError(kExitValidation, "cannot open " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// Builtin name or a path to a code definition file.
tcsim::StabilizerCode load_code(const std::string& spec) {
  if (std::filesystem::exists(spec)) {
    return tcsim::parse_code_file(read_file(spec));
  }
  try {
    return tcsim::builtin_code(spec);
  } catch (const std::exception&) {
    throw CliError(kExitValidation,
                   "unknown code '" + spec + "' (not a builtin, not a file)");
  }
}

struct ScenarioConfig {
  std::string code = "steane";
  int tracked = 1;
  std::optional<std::uint64_t> seed;
  int verbose = 0;
  std::vector<std::pair<std::string, tcsim::PauliKind>> errors;  // slot, type
};

ScenarioConfig parse_scenario(const std::string& text) {
  ScenarioConfig cfg;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream fields(line);
    std::string key;
    if (!(fields >> key)) {
      continue;
    }
    auto fail = [&](const std::string& what) -> CliError {
      return CliError(kExitValidation,
                      "scenario line " + std::to_string(lineno) + ": " + what);
    };
    if (key == "code:") {
      if (!(fields >> cfg.code)) throw fail("expected a code name");
    } else if (key == "tracked:") {
      if (!(fields >> cfg.tracked)) throw fail("expected a qubit index");
    } else if (key == "seed:") {
      std::uint64_t s;
      if (!(fields >> s)) throw fail("expected an integer seed");
      cfg.seed = s;
    } else if (key == "verbose:") {
      if (!(fields >> cfg.verbose)) throw fail("expected 0 or 1");
    } else if (key == "error:") {
      std::string slot, type;
      if (!(fields >> slot >> type) || type.size() != 1) {
        throw fail("expected: error: <slot> <X|Y|Z>");
      }
      tcsim::PauliKind kind;
      try {
        kind = tcsim::pauli_kind_from_char(type[0]);
      } catch (const std::exception&) {
        throw fail("bad error type '" + type + "'");
      }
      if (kind == tcsim::PauliKind::I) throw fail("error type must not be I");
      cfg.errors.emplace_back(slot, kind);
    } else {
      throw fail("unknown key '" + key + "'");
    }
    std::string extra;
    if (fields >> extra) throw fail("trailing text '" + extra + "'");
  }
  return cfg;
}

int cmd_table(const std::string& code_spec) {
  auto code = load_code(code_spec);
  auto report = tcsim::validate(code);
  if (!report.ok()) {
    throw CliError(kExitValidation, "invalid code: " + report.str());
  }
  std::cout << tcsim::render_syndrome_table(code);
  return kExitOk;
}

int cmd_verify(const std::string& code_spec, std::uint64_t seed) {
  auto code = load_code(code_spec);
  auto report = tcsim::validate(code);
  std::cout << "code " << code.name << " [[" << code.n << "," << code.k
            << "]]\n";
  if (!report.ok()) {
    std::cout << report.str();
    std::cout << "validation: FAIL\n";
    return kExitValidation;
  }
  std::cout << "validation: ok (" << code.generators.size()
            << " commuting independent generators)\n";
  std::mt19937_64 rng(seed);
  auto state = tcsim::prepare_codeword(code, code.n, rng);
  bool all = true;
  for (std::size_t i = 0; i < code.generators.size(); ++i) {
    int e = state.expectation(code.generators[i]);
    std::cout << "M" << (i + 1) << " " << code.generators[i].str()
              << " expectation " << (e > 0 ? "+1" : e < 0 ? "-1" : "0")
              << "\n";
    all = all && e == 1;
  }
  std::cout << "codeword stabilized: " << (all ? "yes" : "NO") << "\n";
  return all ? kExitOk : kExitValidation;
}

int cmd_run(const std::string& path, std::optional<std::uint64_t> seed_flag,
            bool allow_failure, const std::string& format) {
  auto cfg = parse_scenario(read_file(path));
  if (seed_flag) {
    cfg.seed = *seed_flag;
  }
  if (!cfg.seed) {
    throw CliError(kExitUsage, "run is stochastic; give --seed or a seed: line");
  }
  auto code = load_code(cfg.code);
  if (cfg.tracked < 1 || cfg.tracked > static_cast<int>(code.n)) {
    throw CliError(kExitValidation, "tracked qubit out of range for " +
                                        code.name);
  }
  auto protocol = tcsim::build_protocol(code, cfg.tracked);
  std::vector<tcsim::PauliOp> injected;
  for (const auto& [slot, kind] : cfg.errors) {
    try {
      injected.push_back(tcsim::protocol_error(protocol, slot, kind));
    } catch (const std::exception& e) {
      throw CliError(kExitValidation, std::string("bad error spec: ") +
                                          e.what());
    }
  }
  std::mt19937_64 rng(*cfg.seed);
  auto state = tcsim::prepare_codeword(code, protocol.total_qubits(), rng);
  auto result = tcsim::full_cycle(protocol, state, injected, rng);
  bool valid = tcsim::codeword_valid(protocol, state);

  if (format == "kv") {
    std::cout << "code=" << code.name << "\n"
              << "tracked=" << cfg.tracked << "\n"
              << "sigma=" << result.outcome.sigma.str() << "\n"
              << "ancilla_a=" << result.outcome.ancilla_a << "\n"
              << "ancilla_b=" << result.outcome.ancilla_b << "\n"
              << "decision=" << result.decision.describe() << "\n"
              << "codeword_valid=" << (valid ? 1 : 0) << "\n";
  } else {
    std::cout << "code " << code.name << ", tracked qubit " << cfg.tracked
              << "\n";
    if (cfg.verbose) {
      for (const auto& e : injected) {
        std::cout << "inject " << e.str() << "\n";
      }
    }
    std::cout << "extended syndrome " << result.outcome.sigma.str() << "\n"
              << "ancilla readout " << result.outcome.ancilla_a
              << result.outcome.ancilla_b << "\n"
              << result.decision.describe() << "\n"
              << "codeword restored: " << (valid ? "yes" : "NO") << "\n";
  }
  if (result.decision.verdict == tcsim::Verdict::uncorrectable &&
      !allow_failure) {
    return kExitUncorrectable;
  }
  return kExitOk;
}

int cmd_montecarlo(const std::string& code_spec, const tcsim::NoiseParams& p,
                   int cycles, int trials, std::uint64_t seed,
                   const std::string& format) {
  if (cycles < 1 || trials < 1) {
    throw CliError(kExitUsage, "--cycles and --trials must be positive");
  }
  auto code = load_code(code_spec);
  auto stats = tcsim::monte_carlo(code, p, cycles, trials, seed);
  std::cout << (format == "kv" ? tcsim::render_stats_kv(stats)
                               : tcsim::render_stats_table(stats));
  return kExitOk;
}

int cmd_distance(const std::string& code_spec) {
  auto code = load_code(code_spec);
  int d = tcsim::distance(code);
  std::cout << "distance " << d << "\n";
  if (code.declared_distance && *code.declared_distance != d) {
    std::cerr << "declared distance " << *code.declared_distance
              << " does not match\n";
    return kExitValidation;
  }
  return kExitOk;
}

int cmd_sim(const std::string& path, std::uint64_t seed) {
  tcsim::Circuit circuit;
  try {
    circuit = tcsim::parse_circuit(read_file(path));
  } catch (const tcsim::ParseError& e) {
    throw CliError(kExitValidation, path + ": " + e.what());
  }
  std::mt19937_64 rng(seed);
  tcsim::Tableau state(circuit.num_qubits);
  for (const auto& g : circuit.gates) {
    if (g.kind == tcsim::GateKind::Measure) {
      auto m = state.measure(g.q0, rng);
      std::cout << "measure " << (g.q0 + 1) << " -> " << m.outcome
                << (m.deterministic ? " (deterministic)" : " (random)")
                << "\n";
    } else {
      state.apply(g);
    }
  }
  std::cout << state.dump();
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stabilizer-code simulator for time-correlated error "
               "correction"};
  app.require_subcommand(1);

  std::string code_spec, file_path, format = "table";
  std::optional<std::uint64_t> seed;
  bool allow_failure = false;
  tcsim::NoiseParams noise;
  int cycles = 100, trials = 100;
  std::string policy = "same";

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"table", "kv"}));
  };

  auto* table = app.add_subcommand("table", "Weight-1 syndrome table");
  table->add_option("code", code_spec, "Builtin name or code file")->required();

  auto* verify = app.add_subcommand("verify", "Validate a code and check "
                                              "codeword stabilization");
  verify->add_option("code", code_spec)->required();
  verify->add_option("--seed", seed, "RNG seed");

  auto* run = app.add_subcommand("run", "One protocol cycle from a scenario "
                                        "file");
  run->add_option("scenario", file_path, "Scenario file")->required();
  run->add_option("--seed", seed, "RNG seed (overrides the file)");
  run->add_flag("--allow-failure", allow_failure,
                "Exit 0 even on an uncorrectable verdict");
  add_format(run);

  auto* mc = app.add_subcommand("montecarlo", "Repeated noisy cycles");
  mc->add_option("--code", code_spec)->required();
  mc->add_option("--epsilon", noise.epsilon)->required();
  mc->add_option("--lambda", noise.lambda)->required();
  mc->add_option("--delta", noise.delta);
  mc->add_option("--cycles", cycles);
  mc->add_option("--trials", trials);
  mc->add_option("--seed", seed, "RNG seed");
  mc->add_option("--policy", policy, "Relapse type policy")
      ->check(CLI::IsMember({"same", "uniform"}));
  add_format(mc);

  app.add_subcommand("budget", "Decoherence-time gate budgets");

  auto* dist = app.add_subcommand("distance", "Brute-force code distance");
  dist->add_option("code", code_spec)->required();

  auto* sim = app.add_subcommand("sim", "Execute a raw circuit file");
  sim->add_option("circuit", file_path, "Circuit file")->required();
  sim->add_option("--seed", seed, "RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  auto require_seed = [&]() -> std::uint64_t {
    if (!seed) {
      std::cerr << "error: this subcommand is stochastic; --seed is required\n";
      std::exit(kExitUsage);
    }
    return *seed;
  };

  try {
    if (table->parsed()) {
      return cmd_table(code_spec);
    }
    if (verify->parsed()) {
      return cmd_verify(code_spec, require_seed());
    }
    if (run->parsed()) {
      return cmd_run(file_path, seed, allow_failure, format);
    }
    if (mc->parsed()) {
      noise.policy = policy == "uniform" ? tcsim::RelapsePolicy::uniform_xyz
                                         : tcsim::RelapsePolicy::same_type;
      return cmd_montecarlo(code_spec, noise, cycles, trials, require_seed(),
                            format);
    }
    if (app.get_subcommand("budget")->parsed()) {
      std::cout << tcsim::render_budget_table();
      return kExitOk;
    }
    if (dist->parsed()) {
      return cmd_distance(code_spec);
    }
    if (sim->parsed()) {
      return cmd_sim(file_path, require_seed());
    }
  } catch (const CliError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitUsage;
}
