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

#include "tcsim/codes.hpp"

#include <charconv>
#include <functional>
#include <span>
#include <sstream>
#include <stdexcept>

namespace tcsim {

Syndrome Syndrome::from_string(std::string_view text) {
  Syndrome s;
  s.bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("syndrome strings are binary");
    }
    s.bits.push_back(c == '1');
  }
  return s;
}

bool Syndrome::is_zero() const {
  for (auto b : bits) {
    if (b) {
      return false;
    }
  }
  return true;
}

Syndrome Syndrome::operator^(const Syndrome& other) const {
  if (other.bits.size() != bits.size()) {
    throw std::invalid_argument("syndrome length mismatch");
  }
  Syndrome out = *this;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    out.bits[i] ^= other.bits[i];
  }
  return out;
}

std::string Syndrome::str() const {
  std::string out;
  out.reserve(bits.size());
  for (auto b : bits) {
    out += b ? '1' : '0';
  }
  return out;
}

namespace {

std::vector<PauliOp> generators_from_strings(
    std::initializer_list<const char*> strings) {
  std::vector<PauliOp> out;
  for (const char* s : strings) {
    out.push_back(PauliOp::from_string(s));
  }
  return out;
}

// Logical codewords of the perfect five-qubit code: basis indices (qubit 1
// is the most significant bit) with coefficient +1/4 or -1/4.
constexpr int kFiveQubitZeroPlus[] = {0, 18, 9, 20, 10, 5};
constexpr int kFiveQubitZeroMinus[] = {27, 6, 24, 29, 3, 30, 15, 17, 12, 23};
constexpr int kFiveQubitOnePlus[] = {31, 13, 22, 11, 21, 26};
constexpr int kFiveQubitOneMinus[] = {4, 25, 7, 2, 28, 1, 16, 14, 19, 8};

std::vector<std::complex<double>> five_qubit_amplitudes(bool one) {
  std::vector<std::complex<double>> amps(32, 0.0);
  auto plus = one ? std::span<const int>(kFiveQubitOnePlus)
                  : std::span<const int>(kFiveQubitZeroPlus);
  auto minus = one ? std::span<const int>(kFiveQubitOneMinus)
                   : std::span<const int>(kFiveQubitZeroMinus);
  for (int i : plus) {
    amps[i] = 0.25;
  }
  for (int i : minus) {
    amps[i] = -0.25;
  }
  return amps;
}

Circuit steane_encoding_circuit() {
  Circuit c;
  c.num_qubits = 7;
  // 0-based: Hadamards on qubits 5,6,7 (1-based), then the CNOT fan-out.
  for (auto q : {4, 5, 6}) {
    c.append(Gate::h(static_cast<std::uint32_t>(q)));
  }
  const int pairs[9][2] = {{6, 3}, {6, 1}, {6, 0}, {5, 3}, {5, 2},
                           {5, 0}, {4, 3}, {4, 2}, {4, 1}};
  for (const auto& p : pairs) {
    c.append(Gate::cnot(static_cast<std::uint32_t>(p[0]),
                        static_cast<std::uint32_t>(p[1])));
  }
  return c;
}

std::string error_label(const PauliOp& e) {
  for (std::size_t q = 0; q < e.num_qubits(); ++q) {
    if (e.factor(q) != PauliKind::I) {
      return std::string(1, pauli_kind_char(e.factor(q))) +
             std::to_string(q + 1);
    }
  }
  return "I";
}

}  // namespace

StabilizerCode builtin_code(std::string_view name) {
  if (name == "five_qubit") {
    StabilizerCode code;
    code.name = "five_qubit";
    code.n = 5;
    code.k = 1;
    code.generators =
        generators_from_strings({"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"});
    code.declared_distance = 3;
    code.logical_amplitudes = {five_qubit_amplitudes(false),
                               five_qubit_amplitudes(true)};
    return code;
  }
  if (name == "steane") {
    StabilizerCode code;
    code.name = "steane";
    code.n = 7;
    code.k = 1;
    code.generators = generators_from_strings({"IIIXXXX", "IXXIIXX", "XIXIXIX",
                                               "IIIZZZZ", "IZZIIZZ",
                                               "ZIZIZIZ"});
    code.declared_distance = 3;
    code.encoding_circuit = steane_encoding_circuit();
    return code;
  }
  throw std::invalid_argument("unknown builtin code: " + std::string(name));
}

ValidationReport validate(const StabilizerCode& code) {
  ValidationReport report;
  if (code.generators.size() != code.n - code.k) {
    report.failures.push_back("expected " + std::to_string(code.n - code.k) +
                              " generators, got " +
                              std::to_string(code.generators.size()));
  }
  for (const auto& g : code.generators) {
    if (g.num_qubits() != code.n) {
      report.failures.push_back("generator " + g.str() +
                                " does not act on n qubits");
      return report;
    }
    if (g.phase() & 1) {
      report.failures.push_back("generator " + g.str() + " is not Hermitian");
    }
  }
  for (std::size_t i = 0; i < code.generators.size(); ++i) {
    for (std::size_t j = i + 1; j < code.generators.size(); ++j) {
      if (!code.generators[i].commutes_with(code.generators[j])) {
        report.failures.push_back("generators M" + std::to_string(i + 1) +
                                  " and M" + std::to_string(j + 1) +
                                  " anti-commute");
      }
    }
  }
  // Independence and the -I condition via GF(2) elimination with exact
  // phase tracking: a combination with all-zero bits and sign -1 would put
  // -I in the group.
  std::vector<PauliOp> rows = code.generators;
  std::size_t rank = 0;
  std::size_t n = code.n;
  auto column_bit = [&](const PauliOp& row, std::size_t col) {
    return col < n ? row.x_bit(col) : row.z_bit(col - n);
  };
  for (std::size_t col = 0; col < 2 * n && rank < rows.size(); ++col) {
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
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (column_bit(rows[i], col)) {
        rows[i] = rows[rank] * rows[i];
      }
    }
    ++rank;
  }
  for (std::size_t i = rank; i < rows.size(); ++i) {
    if (rows[i].has_identity_bits()) {
      if (rows[i].phase() == 2) {
        report.failures.push_back("-I is generated");
      } else {
        report.failures.push_back("generators are dependent");
      }
    }
  }
  return report;
}

std::string ValidationReport::str() const {
  if (ok()) {
    return "ok";
  }
  std::string out;
  for (const auto& f : failures) {
    out += f;
    out += '\n';
  }
  return out;
}

Syndrome syndrome_of(const StabilizerCode& code, const PauliOp& e) {
  if (e.num_qubits() != code.n) {
    throw std::invalid_argument("error size mismatch");
  }
  Syndrome s;
  s.bits.reserve(code.generators.size());
  for (const auto& g : code.generators) {
    s.bits.push_back(g.commutes_with(e) ? 0 : 1);
  }
  return s;
}

std::vector<int> anticommuting_generators(const StabilizerCode& code,
                                          const PauliOp& e) {
  std::vector<int> out;
  Syndrome s = syndrome_of(code, e);
  for (std::size_t i = 0; i < s.bits.size(); ++i) {
    if (s.bits[i]) {
      out.push_back(static_cast<int>(i) + 1);
    }
  }
  return out;
}

namespace {

// Enumerates unsigned errors of exactly the given weight, ascending qubit
// tuples, factor order X, Z, Y per qubit.
void enumerate_errors(std::size_t n, int weight, std::size_t next,
                      PauliOp& scratch,
                      const std::function<void(const PauliOp&)>& emit) {
  if (weight == 0) {
    emit(scratch);
    return;
  }
  for (std::size_t q = next; q + weight <= n; ++q) {
    for (PauliKind kind : {PauliKind::X, PauliKind::Z, PauliKind::Y}) {
      scratch.set_factor(q, kind);
      enumerate_errors(n, weight - 1, q + 1, scratch, emit);
    }
    scratch.set_factor(q, PauliKind::I);
  }
}

}  // namespace

SyndromeTable build_syndrome_table(const StabilizerCode& code,
                                   int max_weight) {
  SyndromeTable table;
  PauliOp scratch(code.n);
  std::map<Syndrome, PauliOp> first_seen;
  for (int w = 1; w <= max_weight; ++w) {
    enumerate_errors(code.n, w, 0, scratch, [&](const PauliOp& e) {
      Syndrome s = syndrome_of(code, e);
      auto [it, inserted] = first_seen.emplace(s, e);
      if (inserted) {
        table.entries.emplace(s, e);
      } else {
        table.collisions.emplace_back(it->second, e);
        table.entries.erase(s);
      }
    });
  }
  return table;
}

SingleErrorDecoder::SingleErrorDecoder(const StabilizerCode& code)
    : n_(code.n), table_(build_syndrome_table(code, 1)) {}

DecodeResult SingleErrorDecoder::decode(const Syndrome& s) const {
  if (s.is_zero()) {
    return {DecodeStatus::none, PauliOp(n_)};
  }
  auto it = table_.entries.find(s);
  if (it == table_.entries.end()) {
    return {DecodeStatus::uncorrectable, PauliOp(n_)};
  }
  return {DecodeStatus::corrected, it->second};
}

DecodeResult decode_single(const StabilizerCode& code, const Syndrome& s) {
  return SingleErrorDecoder(code).decode(s);
}

DecodeResult decode_with_prior(const StabilizerCode& code, const Syndrome& s,
                               const PauliOp& prior) {
  return decode_single(code, s ^ syndrome_of(code, prior));
}

StabilizerBasis::StabilizerBasis(const StabilizerCode& code) : n_(code.n) {
  std::vector<PauliOp> rows = code.generators;
  std::size_t rank = 0;
  auto column_bit = [&](const PauliOp& row, std::size_t col) {
    return col < n_ ? row.x_bit(col) : row.z_bit(col - n_);
  };
  for (std::size_t col = 0; col < 2 * n_ && rank < rows.size(); ++col) {
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
  rows.resize(rank);
  basis_ = std::move(rows);
}

bool StabilizerBasis::contains(const PauliOp& p) const {
  PauliOp reduced = p.without_phase();
  for (const auto& row : basis_) {
    // Reduce against the pivot column of each basis row.
    for (std::size_t col = 0; col < 2 * n_; ++col) {
      bool row_bit = col < n_ ? row.x_bit(col) : row.z_bit(col - n_);
      if (!row_bit) {
        continue;
      }
      bool p_bit =
          col < n_ ? reduced.x_bit(col) : reduced.z_bit(col - n_);
      if (p_bit) {
        reduced = (row * reduced).without_phase();
      }
      break;
    }
  }
  return reduced.has_identity_bits();
}

int distance(const StabilizerCode& code) {
  if (code.n > 8) {
    throw std::invalid_argument("distance brute force capped at n = 8");
  }
  StabilizerBasis basis(code);
  std::size_t n = code.n;
  int best = static_cast<int>(n) + 1;
  std::size_t total = std::size_t{1} << (2 * n);
  for (std::size_t word = 1; word < total; ++word) {
    PauliOp p(n);
    for (std::size_t q = 0; q < n; ++q) {
      int bits = static_cast<int>((word >> (2 * q)) & 3);
      p.set_factor(q, static_cast<PauliKind>(bits));
    }
    if (static_cast<int>(p.weight()) >= best) {
      continue;
    }
    bool commutes = true;
    for (const auto& g : code.generators) {
      if (!g.commutes_with(p)) {
        commutes = false;
        break;
      }
    }
    if (!commutes || basis.contains(p)) {
      continue;
    }
    best = static_cast<int>(p.weight());
  }
  return best;
}

int hamming_bound_min_n() {
  for (int n = 1;; ++n) {
    if (2 * (3 * n + 1) <= (1 << n)) {
      return n;
    }
  }
}

StabilizerCode parse_code_file(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  StabilizerCode code;
  bool have_n = false, have_k = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first)) {
      continue;
    }
    auto parse_count = [&](const std::string& value) {
      std::size_t out = 0;
      auto [ptr, ec] =
          std::from_chars(value.data(), value.data() + value.size(), out);
      if (ec != std::errc{} || ptr != value.data() + value.size()) {
        throw ParseError(line_no, "bad count: '" + value + "'");
      }
      return out;
    };
    std::string rest;
    if (first == "name:") {
      fields >> code.name;
    } else if (first == "n:") {
      fields >> rest;
      code.n = parse_count(rest);
      have_n = true;
    } else if (first == "k:") {
      fields >> rest;
      code.k = parse_count(rest);
      have_k = true;
    } else {
      if (!have_n || !have_k) {
        throw ParseError(line_no, "generators before n:/k: headers");
      }
      PauliOp g;
      try {
        g = PauliOp::from_string(first);
      } catch (const std::invalid_argument& err) {
        throw ParseError(line_no, err.what());
      }
      if (g.num_qubits() != code.n) {
        throw ParseError(line_no, "generator length does not match n");
      }
      code.generators.push_back(g);
    }
  }
  if (!have_n || !have_k) {
    throw ParseError(line_no, "missing n:/k: headers");
  }
  return code;
}

DenseState logical_state(const StabilizerCode& code, int which) {
  if (which != 0 && which != 1) {
    throw std::invalid_argument("logical state index must be 0 or 1");
  }
  if (code.logical_amplitudes) {
    return DenseState::from_amplitudes(code.n,
                                       (*code.logical_amplitudes)[which]);
  }
  if (code.encoding_circuit && which == 0) {
    DenseState state(code.n);
    state.run(*code.encoding_circuit);
    return state;
  }
  throw std::invalid_argument(
      "code has neither amplitude tables nor an encoding circuit for the "
      "requested state");
}

Tableau prepare_codeword(const StabilizerCode& code, std::size_t total_qubits,
                         std::mt19937_64& rng) {
  if (total_qubits < code.n) {
    throw std::invalid_argument("tableau smaller than code");
  }
  Tableau t(total_qubits);
  if (code.encoding_circuit) {
    t.apply(*code.encoding_circuit);
  } else {
    for (const auto& g : code.generators) {
      t.force_stabilizer(g.embedded(total_qubits), rng);
    }
  }
  return t;
}

std::string render_syndrome_table(const StabilizerCode& code) {
  std::string out = "Error Syndrome Generators\n";
  for (PauliKind kind : {PauliKind::X, PauliKind::Z, PauliKind::Y}) {
    for (std::size_t q = 1; q <= code.n; ++q) {
      PauliOp e = PauliOp::single(code.n, q, kind);
      out += error_label(e);
      out += ' ';
      out += syndrome_of(code, e).str();
      out += ' ';
      auto gens = anticommuting_generators(code, e);
      for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i) {
          out += ',';
        }
        out += 'M' + std::to_string(gens[i]);
      }
      out += '\n';
    }
  }
  return out;
}

}  // namespace tcsim
