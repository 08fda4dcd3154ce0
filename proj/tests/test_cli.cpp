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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct RunResult {
  int status = -1;
  std::string output;  // stdout and stderr combined
};

RunResult run_cli(const std::string& args) {
  std::string command = std::string(TCSIM_CLI_PATH) + " " + args + " 2>&1";
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  while (std::size_t got = fread(buffer, 1, sizeof(buffer), pipe)) {
    result.output.append(buffer, got);
  }
  int raw = pclose(pipe);
  result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return result;
}

std::filesystem::path write_temp(const std::string& name,
                                 const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("table steane contains the expected rows") {
  auto result = run_cli("table steane");
  CHECK(result.status == 0);
  CHECK(result.output.find("Z3 011000") != std::string::npos);
  CHECK(result.output.find("X1 000001") != std::string::npos);
  CHECK(result.output.find("Y7 111111") != std::string::npos);
}

TEST_CASE("table five_qubit matches the generator sets") {
  auto result = run_cli("table five_qubit");
  CHECK(result.status == 0);
  CHECK(result.output.find("X1 0001 M4") != std::string::npos);
  CHECK(result.output.find("Z1 1010 M1,M3") != std::string::npos);
}

TEST_CASE("budget prints the reference budgets") {
  auto result = run_cli("budget");
  CHECK(result.status == 0);
  CHECK(result.output.find("Nuclear spin") != std::string::npos);
  CHECK(result.output.find("10^7") != std::string::npos);
  CHECK(result.output.find("10^13") != std::string::npos);
}

TEST_CASE("run prints the double-correction decision") {
  auto scenario = write_temp("tcsim_cli_ex3.stab-scn",
                             "code: steane\n"
                             "tracked: 3\n"
                             "seed: 7\n"
                             "error: 3 Z\n"
                             "error: 5 Z\n");
  auto result = run_cli("run " + scenario.string());
  CHECK(result.status == 0);
  CHECK(result.output.find("correct Z on qubit 3 and Z on qubit 5") !=
        std::string::npos);
  CHECK(result.output.find("110000") != std::string::npos);

  auto kv = run_cli("run " + scenario.string() + " --format kv");
  CHECK(kv.status == 0);
  CHECK(kv.output.find("sigma=110000") != std::string::npos);
  CHECK(kv.output.find("codeword_valid=1") != std::string::npos);
}

TEST_CASE("run without a seed is a usage error") {
  auto scenario = write_temp("tcsim_cli_noseed.stab-scn",
                             "code: steane\ntracked: 3\nerror: 3 Z\n");
  auto result = run_cli("run " + scenario.string());
  CHECK(result.status == 3);
  CHECK(result.output.find("seed") != std::string::npos);
}

TEST_CASE("uncorrectable verdicts exit 2 unless allowed") {
  // Two new errors whose combined syndrome is outside the weight-1 table.
  auto scenario = write_temp("tcsim_cli_double.stab-scn",
                             "code: steane\n"
                             "tracked: 1\n"
                             "seed: 9\n"
                             "error: 3 X\n"
                             "error: 2 Z\n");
  auto result = run_cli("run " + scenario.string());
  CHECK(result.status == 2);
  CHECK(result.output.find("uncorrectable") != std::string::npos);
  auto allowed = run_cli("run " + scenario.string() + " --allow-failure");
  CHECK(allowed.status == 0);
}

TEST_CASE("validation failures exit 1") {
  auto result = run_cli("table shor_code");
  CHECK(result.status == 1);

  auto bad = write_temp("tcsim_cli_bad.stab-scn", "code: steane\nwat: 1\n");
  auto run = run_cli("run " + bad.string() + " --seed 1");
  CHECK(run.status == 1);
}

TEST_CASE("usage errors exit 3") {
  CHECK(run_cli("frobnicate").status == 3);
  CHECK(run_cli("table").status == 3);
  CHECK(run_cli("montecarlo --code steane --epsilon 0.1 --lambda 1.0").status ==
        3);  // missing --seed
}

TEST_CASE("verify reports codeword stabilization") {
  auto result = run_cli("verify five_qubit --seed 4");
  CHECK(result.status == 0);
  CHECK(result.output.find("validation: ok") != std::string::npos);
  CHECK(result.output.find("codeword stabilized: yes") != std::string::npos);
}

TEST_CASE("distance on both builtins") {
  auto five = run_cli("distance five_qubit");
  CHECK(five.status == 0);
  CHECK(five.output.find("distance 3") != std::string::npos);
  auto steane = run_cli("distance steane");
  CHECK(steane.status == 0);
  CHECK(steane.output.find("distance 3") != std::string::npos);
}

TEST_CASE("montecarlo output is identical across reruns with one seed") {
  std::string args =
      "montecarlo --code steane --epsilon 0.1 --lambda 1.2 --cycles 20 "
      "--trials 10 --seed 42 --format kv";
  auto a = run_cli(args);
  auto b = run_cli(args);
  CHECK(a.status == 0);
  CHECK(a.output == b.output);
  CHECK(a.output.find("baseline_failures=") != std::string::npos);
}

TEST_CASE("sim executes a circuit file") {
  auto circuit = write_temp("tcsim_cli_bell.stab",
                            "qubits 2\nh 1\ncnot 1 2\nmeasure 1\nmeasure 2\n");
  auto result = run_cli("sim " + circuit.string() + " --seed 3");
  CHECK(result.status == 0);
  CHECK(result.output.find("measure 1 ->") != std::string::npos);
  CHECK(result.output.find("(random)") != std::string::npos);
  CHECK(result.output.find("(deterministic)") != std::string::npos);

  auto broken = write_temp("tcsim_cli_broken.stab", "qubits 2\nfoo 1\n");
  auto bad = run_cli("sim " + broken.string() + " --seed 3");
  CHECK(bad.status == 1);
  CHECK(bad.output.find("line 2") != std::string::npos);

  auto codefile = write_temp("tcsim_cli_code.txt",
                             "name: custom\nn: 5\nk: 1\n"
                             "XZZXI\nIXZZX\nXIXZZ\nZXIXZ\n");
  auto table = run_cli("table " + codefile.string());
  CHECK(table.status == 0);
  CHECK(table.output.find("X1 0001 M4") != std::string::npos);
}
